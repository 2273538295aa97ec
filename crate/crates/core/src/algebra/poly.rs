use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use serde_json::{json, Value};

use crate::algebra::{AlgebraError, Monomial, Variable};

/// Sparse multivariate polynomial with arbitrary-precision rational
/// coefficients. Zero coefficients are never stored; equality is structural
/// and therefore decidable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(BigRational::from(BigInt::from(n)))
    }

    pub fn var(v: Variable) -> Self {
        Poly::term(Monomial::var(v), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// `1 - m` for a monomial `m`; the shape of almost every denominator
    /// factor in this library.
    pub fn one_minus(m: Monomial) -> Self {
        &Poly::one() - &Poly::term(m, BigRational::one())
    }

    /// `1 - v` for a single variable.
    pub fn one_minus_var(v: Variable) -> Self {
        Poly::one_minus(Monomial::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Returns the constant value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    /// The single term `(monomial, coefficient)` when there is exactly one.
    pub fn as_single_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn vars(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (v, _) in m.iter() {
                out.insert(*v);
            }
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Leading term under the canonical (lex) monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Exact polynomial division: `Some(q)` with `self = q * d` when `d`
    /// divides `self`, `None` when it does not.
    pub fn exact_div(&self, d: &Poly) -> Result<Option<Poly>, AlgebraError> {
        let (dm, dc) = d.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term().unwrap();
            let qm = match dm.quotient_of(rm) {
                Some(qm) => qm,
                None => return Ok(None),
            };
            let qc = rc / dc;
            let t = Poly::term(qm, qc);
            rem = &rem - &(&t * d);
            quo = &quo + &t;
        }
        Ok(Some(quo))
    }

    /// Applies variable-to-polynomial rules; variables without a rule are
    /// left in place.
    pub fn substitute_poly<F>(&self, rule: F) -> Poly
    where
        F: Fn(Variable) -> Option<Poly>,
    {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for (v, e) in m.iter() {
                match rule(*v) {
                    Some(p) => term = &term * &p.pow(*e),
                    None => term = term.mul_monomial(&Monomial::var_pow(*v, *e)),
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates a polynomial in `tau` only at a rational point.
    pub fn eval_tau(&self, at: &BigRational) -> Result<BigRational, AlgebraError> {
        let tau = Variable::tau();
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (v, e) in m.iter() {
                if *v != tau {
                    return Err(AlgebraError::NotUnivariate(v.to_string()));
                }
                for _ in 0..*e {
                    value *= at;
                }
            }
            acc += value;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = serde_json::Map::new();
                for (v, e) in m.iter() {
                    exps.insert(v.to_string(), json!(e));
                }
                json!({"c": c.to_string(), "m": Value::Object(exps)})
            })
            .collect();
        Value::Array(terms)
    }

    pub fn from_json(value: &Value) -> Result<Poly, AlgebraError> {
        let arr = value
            .as_array()
            .ok_or_else(|| AlgebraError::Parse("polynomial JSON must be an array".into()))?;
        let mut out = Poly::zero();
        for item in arr {
            let c = item
                .get("c")
                .and_then(Value::as_str)
                .ok_or_else(|| AlgebraError::Parse("term missing coefficient".into()))?;
            let coeff: BigRational = c
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("bad coefficient `{c}`")))?;
            let mut mono = Monomial::one();
            if let Some(exps) = item.get("m").and_then(Value::as_object) {
                for (name, e) in exps {
                    let v: Variable = name.parse()?;
                    let e = e
                        .as_u64()
                        .ok_or_else(|| AlgebraError::Parse("bad exponent".into()))?;
                    mono = mono.mul(&Monomial::var_pow(v, e as u32));
                }
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }

    pub fn to_latex(&self) -> String {
        crate::algebra::display::poly_to_string(self, true)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::algebra::display::poly_to_string(self, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::poly as p;

    #[test]
    fn difference_of_squares() {
        let lhs = &p("1 - t1") * &p("1 + t1");
        assert_eq!(lhs, p("1 - t1^2"));
    }

    #[test]
    fn cancellation_to_zero() {
        let sum = &p("1 - t3") + &p("t3 - 1");
        assert!(sum.is_zero());
    }

    #[test]
    fn hand_expansion() {
        let lhs = &p("x1 - q1") * &p("x1 - q2");
        assert_eq!(lhs, p("x1^2 - (q1 + q2)*x1 + q1*q2"));
    }

    #[test]
    fn exact_division_examples() {
        let geo = p("1 - tau^3").exact_div(&p("1 - tau")).unwrap().unwrap();
        assert_eq!(geo, p("1 + tau + tau^2"));

        assert!(p("1 - tau^2").exact_div(&p("1 - tau^3")).unwrap().is_none());

        let q = p("t1^2 - q1*t1").exact_div(&p("t1")).unwrap().unwrap();
        assert_eq!(q, p("t1 - q1"));

        assert!(p("t1").exact_div(&Poly::zero()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let poly = p("3/2*t1^2*q3 - x1 + 1");
        let back = Poly::from_json(&poly.to_json()).unwrap();
        assert_eq!(poly, back);
    }
}
