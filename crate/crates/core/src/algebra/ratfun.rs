use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Zero};
use serde_json::{json, Value};

use crate::algebra::{AlgebraError, Poly, Substitution, Variable};

/// A rational function kept as a polynomial numerator over a multiset of
/// polynomial denominator factors. The factors are never expanded into a
/// single polynomial and no gcd is ever computed: equality is decided by
/// cross-multiplication, and cancellation only happens through exact
/// division by a stored factor.
///
/// All denominators produced by the formulas in this library stay inside a
/// small factor family (rational constants, single variables, `1 - m`, and
/// differences of two monomials).
#[derive(Clone, Debug, Default)]
pub struct RatFun {
    num: Poly,
    den: BTreeMap<Poly, u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LimitPoint {
    Zero,
    One,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun::default()
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        RatFun { num, den: BTreeMap::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        RatFun::from_poly(Poly::int(n))
    }

    pub fn var(v: Variable) -> Self {
        RatFun::from_poly(Poly::var(v))
    }

    pub fn from_num_den<I>(num: Poly, den: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = Poly>,
    {
        let mut factors = BTreeMap::new();
        for f in den {
            if f.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            *factors.entry(f).or_insert(0) += 1;
        }
        let mut out = RatFun { num, den: factors };
        out.normalize();
        Ok(out)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den_factors(&self) -> impl Iterator<Item = (&Poly, u32)> {
        self.den.iter().map(|(f, m)| (f, *m))
    }

    /// The denominator expanded to a single polynomial.
    pub fn den_poly(&self) -> Poly {
        let mut out = Poly::one();
        for (f, m) in &self.den {
            out = &out * &f.pow(*m);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        // Split monomial factors into per-variable powers and fold scalars
        // into the numerator, so that e.g. `3*t1^2` never sits in the
        // denominator as an opaque factor.
        let mut scalar = BigRational::one();
        let mut rebuilt: BTreeMap<Poly, u32> = BTreeMap::new();
        for (f, mult) in std::mem::take(&mut self.den) {
            if let Some(c) = f.as_constant() {
                for _ in 0..mult {
                    scalar *= &c;
                }
                continue;
            }
            if let Some((m, c)) = f.as_single_term() {
                for _ in 0..mult {
                    scalar *= c;
                }
                for (v, e) in m.iter() {
                    *rebuilt.entry(Poly::var(*v)).or_insert(0) += e * mult;
                }
                continue;
            }
            // Scalar-normalize so the smallest monomial has coefficient 1.
            let (_, c) = f.terms().next().unwrap();
            let c = c.clone();
            if c.is_one() {
                *rebuilt.entry(f).or_insert(0) += mult;
            } else {
                for _ in 0..mult {
                    scalar *= &c;
                }
                let inv = BigRational::one() / &c;
                *rebuilt.entry(f.scale(&inv)).or_insert(0) += mult;
            }
        }
        self.num = self.num.scale(&(BigRational::one() / scalar));
        // Greedy cancellation against the numerator.
        let mut den = BTreeMap::new();
        for (f, mut mult) in rebuilt {
            while mult > 0 {
                match self.num.exact_div(&f).expect("nonzero factor") {
                    Some(q) => {
                        self.num = q;
                        mult -= 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                den.insert(f, mult);
            }
        }
        self.den = den;
    }

    pub fn neg_in_place(&mut self) {
        self.num = -&self.num;
    }

    pub fn pow(&self, k: u32) -> RatFun {
        let mut acc = RatFun::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse. The old numerator becomes a denominator
    /// factor; normalization splits off anything monomial.
    pub fn recip(&self) -> Result<RatFun, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut out = RatFun {
            num: self.den_poly(),
            den: BTreeMap::from([(self.num.clone(), 1)]),
        };
        out.normalize();
        Ok(out)
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun, AlgebraError> {
        Ok(self * &other.recip()?)
    }

    /// Divides by a single polynomial factor.
    pub fn div_poly(&self, f: &Poly) -> Result<RatFun, AlgebraError> {
        if f.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut out = self.clone();
        *out.den.entry(f.clone()).or_insert(0) += 1;
        out.normalize();
        Ok(out)
    }

    pub fn substitute(&self, s: &Substitution) -> Result<RatFun, AlgebraError> {
        let mut out = s.apply_poly(&self.num)?;
        for (f, mult) in &self.den {
            let g = s.apply_poly(f)?;
            if g.is_zero() {
                return Err(AlgebraError::ZeroDenominator(f.to_string()));
            }
            out = &out * &g.recip()?.pow(*mult);
        }
        Ok(out)
    }

    /// Exact limit of a function of `tau` alone as `tau` approaches 0 or 1.
    /// Common powers of `tau` (at 0) or `1 - tau` (at 1) are cancelled by
    /// exact division before evaluating.
    pub fn limit_tau(&self, point: LimitPoint) -> Result<RatFun, AlgebraError> {
        let tau = Variable::tau();
        for v in self.num.vars() {
            if v != tau {
                return Err(AlgebraError::NotUnivariate(v.to_string()));
            }
        }
        for f in self.den.keys() {
            for v in f.vars() {
                if v != tau {
                    return Err(AlgebraError::NotUnivariate(v.to_string()));
                }
            }
        }
        if self.num.is_zero() {
            return Ok(RatFun::zero());
        }
        let pivot = match point {
            LimitPoint::Zero => Poly::var(tau),
            LimitPoint::One => Poly::one_minus_var(tau),
        };
        let at = match point {
            LimitPoint::Zero => BigRational::zero(),
            LimitPoint::One => BigRational::one(),
        };
        let (num_red, num_mult) = extract_factor(&self.num, &pivot);
        let mut den_mult: i64 = 0;
        let mut den_value = BigRational::one();
        for (f, mult) in &self.den {
            let (red, k) = extract_factor(f, &pivot);
            den_mult += k * (*mult as i64);
            let v = red.eval_tau(&at)?;
            debug_assert!(!v.is_zero());
            for _ in 0..*mult {
                den_value *= &v;
            }
        }
        let net = num_mult - den_mult;
        if net < 0 {
            return Err(AlgebraError::PoleAtLimit);
        }
        if net > 0 {
            return Ok(RatFun::zero());
        }
        Ok(RatFun::constant(num_red.eval_tau(&at)? / den_value))
    }

    pub fn to_json(&self) -> Value {
        let den: Vec<Value> = self
            .den
            .iter()
            .map(|(f, m)| json!({"factor": f.to_json(), "mult": m}))
            .collect();
        json!({"num": self.num.to_json(), "den": den})
    }

    pub fn from_json(value: &Value) -> Result<RatFun, AlgebraError> {
        let num = Poly::from_json(
            value
                .get("num")
                .ok_or_else(|| AlgebraError::Parse("missing `num`".into()))?,
        )?;
        let mut den = Vec::new();
        if let Some(factors) = value.get("den").and_then(Value::as_array) {
            for item in factors {
                let f = Poly::from_json(
                    item.get("factor")
                        .ok_or_else(|| AlgebraError::Parse("missing `factor`".into()))?,
                )?;
                let mult = item
                    .get("mult")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| AlgebraError::Parse("missing `mult`".into()))?;
                for _ in 0..mult {
                    den.push(f.clone());
                }
            }
        }
        RatFun::from_num_den(num, den)
    }

    pub fn to_latex(&self) -> String {
        crate::algebra::display::ratfun_to_latex(self)
    }
}

/// Splits `p` as `pivot^k * rest` with `pivot` not dividing `rest`.
fn extract_factor(p: &Poly, pivot: &Poly) -> (Poly, i64) {
    let mut rest = p.clone();
    let mut k = 0;
    while let Some(q) = rest.exact_div(pivot).expect("nonzero pivot") {
        rest = q;
        k += 1;
    }
    (rest, k)
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

/// Equality by cross-multiplication: `a/b = c/d` iff `a*d = c*b` as
/// polynomials. No gcd is involved.
impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den_poly() == &other.num * &self.den_poly()
    }
}

impl Eq for RatFun {}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        // Structural lcm of the factor multisets keeps shared factors shared.
        let mut den = self.den.clone();
        for (f, m) in &rhs.den {
            let e = den.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let mut lhs_extra = Poly::one();
        let mut rhs_extra = Poly::one();
        for (f, m) in &den {
            let la = m - self.den.get(f).copied().unwrap_or(0);
            let lb = m - rhs.den.get(f).copied().unwrap_or(0);
            if la > 0 {
                lhs_extra = &lhs_extra * &f.pow(la);
            }
            if lb > 0 {
                rhs_extra = &rhs_extra * &f.pow(lb);
            }
        }
        let num = &(&self.num * &lhs_extra) + &(&rhs.num * &rhs_extra);
        let mut out = RatFun { num, den };
        out.normalize();
        out
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        let mut den = self.den.clone();
        for (f, m) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        let mut out = RatFun { num: &self.num * &rhs.num, den };
        out.normalize();
        out
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul<&Poly> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &Poly) -> RatFun {
        self * &RatFun::from_poly(rhs.clone())
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::algebra::display::ratfun_to_string(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::{poly as p, ratfun as rf};
    use crate::algebra::VarFamily;

    #[test]
    fn cross_multiplication_equality() {
        // t1 / (1 - t1^2) == t1*(1-t1) / ((1-t1)^2 (1+t1)) without gcd.
        let a = RatFun::from_num_den(p("t1"), [p("1 - t1^2")]).unwrap();
        let b = RatFun::from_num_den(
            p("t1*(1 - t1)"),
            [p("1 - t1"), p("1 - t1"), p("1 + t1")],
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn add_negation_cancels() {
        let a = RatFun::from_num_den(p("t1 + q2"), [p("1 - t2"), p("t3")]).unwrap();
        let sum = &a + &(-&a);
        assert!(sum.is_zero());
    }

    #[test]
    fn substitute_geometric() {
        let s = Substitution::new().geometric(VarFamily::T, Variable::tau());
        let f = p("1 - t2");
        let out = s.apply_poly(&f).unwrap();
        assert_eq!(out, RatFun::from_poly(p("1 - tau^2")));
    }

    #[test]
    fn substitute_q_zero() {
        let s = Substitution::new().family_zero(VarFamily::Q);
        let f = p("1 - q1*t1");
        assert_eq!(s.apply_poly(&f).unwrap(), RatFun::one());
    }

    #[test]
    fn substitute_pole_detected() {
        let f = rf("1/(1 - t1)");
        let s = Substitution::new().assign(Variable::t(1), RatFun::one());
        assert_eq!(
            f.substitute(&s),
            Err(AlgebraError::ZeroDenominator("1 - t1".into()))
        );
    }

    #[test]
    fn limit_examples() {
        let f = rf("(1 - tau^3)/(1 - tau)");
        assert_eq!(f.limit_tau(LimitPoint::One).unwrap(), RatFun::int(3));

        let g = rf("tau^2/(1 - tau)");
        assert_eq!(g.limit_tau(LimitPoint::Zero).unwrap(), RatFun::zero());

        let h = rf("(1 - tau^2)/(1 - tau^3)");
        assert_eq!(
            h.limit_tau(LimitPoint::One).unwrap(),
            RatFun::constant(crate::algebra::poly::rat(2, 3))
        );

        let pole = rf("1/(1 - tau)");
        assert_eq!(pole.limit_tau(LimitPoint::One), Err(AlgebraError::PoleAtLimit));
    }

    #[test]
    fn json_round_trip() {
        let f = rf("(t1 - q1)/((1 - t1)^2*(1 - t1*t2))");
        let back = RatFun::from_json(&f.to_json()).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn json_rejects_malformed_input() {
        use serde_json::json;
        assert!(RatFun::from_json(&json!({"den": []})).is_err());
        assert!(RatFun::from_json(&json!({"num": [{"c": "x", "m": {}}]})).is_err());
        assert!(RatFun::from_json(&json!({"num": [{"c": "1", "m": {"zz": 1}}]})).is_err());
        // A zero denominator factor is rejected outright.
        assert!(RatFun::from_json(&json!({"num": [{"c": "1", "m": {}}], "den": [{"factor": [], "mult": 1}]})).is_err());
    }
}
