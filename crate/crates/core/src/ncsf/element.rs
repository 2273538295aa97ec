use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::algebra::{AlgebraError, RatFun, Substitution};
use crate::compositions::Composition;
use crate::ncsf::NcsfError;

/// A homogeneous element of degree `n`, stored as a map from compositions
/// of `n` to coefficients in the ribbon basis. The ribbon basis is the
/// canonical internal basis; the complete (`S`) expansion is derived by
/// inclusion-exclusion when needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcsfElement {
    degree: u32,
    coeffs: BTreeMap<Composition, RatFun>,
}

impl NcsfElement {
    pub fn zero(degree: u32) -> Self {
        assert!(degree >= 1);
        NcsfElement { degree, coeffs: BTreeMap::new() }
    }

    /// The ribbon basis element `R_I`.
    pub fn ribbon(i: &Composition) -> Self {
        let mut out = NcsfElement::zero(i.weight());
        out.add_ribbon(i.clone(), RatFun::one());
        out
    }

    /// The complete basis element `S^I`, i.e. the sum of all ribbons coarser
    /// than or equal to `I`.
    pub fn complete(i: &Composition) -> Self {
        let mut out = NcsfElement::zero(i.weight());
        for j in i.coarsenings() {
            out.add_ribbon(j, RatFun::one());
        }
        out
    }

    pub fn from_ribbon_coeffs(
        degree: u32,
        coeffs: impl IntoIterator<Item = (Composition, RatFun)>,
    ) -> Result<Self, NcsfError> {
        let mut out = NcsfElement::zero(degree);
        for (i, c) in coeffs {
            if i.weight() != degree {
                return Err(NcsfError::DegreeMismatch(i.weight(), degree));
            }
            out.add_ribbon(i, c);
        }
        Ok(out)
    }

    /// Builds an element from its expansion over the complete basis.
    pub fn from_s_coeffs(
        degree: u32,
        coeffs: impl IntoIterator<Item = (Composition, RatFun)>,
    ) -> Result<Self, NcsfError> {
        let mut out = NcsfElement::zero(degree);
        for (j, c) in coeffs {
            if j.weight() != degree {
                return Err(NcsfError::DegreeMismatch(j.weight(), degree));
            }
            if c.is_zero() {
                continue;
            }
            for k in j.coarsenings() {
                out.add_ribbon(k, c.clone());
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_ribbon(&mut self, i: Composition, c: RatFun) {
        debug_assert_eq!(i.weight(), self.degree);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(i) {
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

    pub fn ribbon_coeff(&self, i: &Composition) -> RatFun {
        self.coeffs.get(i).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn ribbon_coeffs(&self) -> impl Iterator<Item = (&Composition, &RatFun)> {
        self.coeffs.iter()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    /// Expansion over the complete basis, by Moebius inversion:
    /// `R_I = sum_{J <= I} (-1)^{l(I)-l(J)} S^J`.
    pub fn to_s_coeffs(&self) -> BTreeMap<Composition, RatFun> {
        let mut out: BTreeMap<Composition, RatFun> = BTreeMap::new();
        for (i, c) in &self.coeffs {
            for j in i.coarsenings() {
                let sign = (i.len() - j.len()) % 2;
                let signed = if sign == 1 { -c } else { c.clone() };
                use std::collections::btree_map::Entry;
                match out.entry(j) {
                    Entry::Vacant(e) => {
                        if !signed.is_zero() {
                            e.insert(signed);
                        }
                    }
                    Entry::Occupied(mut e) => {
                        let sum = e.get() + &signed;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return NcsfElement::zero(self.degree);
        }
        NcsfElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(i, k)| (i.clone(), k * c)).collect(),
        }
    }

    pub fn map_coeffs<F>(&self, mut f: F) -> Result<Self, AlgebraError>
    where
        F: FnMut(&RatFun) -> Result<RatFun, AlgebraError>,
    {
        let mut out = NcsfElement::zero(self.degree);
        for (i, c) in &self.coeffs {
            out.add_ribbon(i.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn substitute(&self, s: &Substitution) -> Result<Self, AlgebraError> {
        self.map_coeffs(|c| c.substitute(s))
    }

    pub fn to_json(&self, basis: &str) -> Value {
        let coeffs: BTreeMap<Composition, RatFun> = match basis {
            "S" => self.to_s_coeffs(),
            _ => self.coeffs.clone(),
        };
        let mut map = serde_json::Map::new();
        for (i, c) in &coeffs {
            map.insert(i.to_string(), c.to_json());
        }
        json!({
            "degree": self.degree,
            "basis": if basis == "S" { "S" } else { "R" },
            "coeffs": Value::Object(map),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self, NcsfError> {
        let degree = value
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| NcsfError::Parse("missing `degree`".into()))? as u32;
        let basis = value.get("basis").and_then(Value::as_str).unwrap_or("R");
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| NcsfError::Parse("missing `coeffs`".into()))?;
        let mut pairs = Vec::new();
        for (name, c) in coeffs {
            let i: Composition = name
                .parse()
                .map_err(|e: crate::compositions::CompositionError| NcsfError::Parse(e.to_string()))?;
            let c = RatFun::from_json(c).map_err(|e| NcsfError::Parse(e.to_string()))?;
            pairs.push((i, c));
        }
        match basis {
            "S" => NcsfElement::from_s_coeffs(degree, pairs),
            _ => NcsfElement::from_ribbon_coeffs(degree, pairs),
        }
    }
}

impl Add for &NcsfElement {
    type Output = NcsfElement;
    fn add(self, rhs: &NcsfElement) -> NcsfElement {
        assert_eq!(self.degree, rhs.degree, "degrees must match");
        let mut out = self.clone();
        for (i, c) in &rhs.coeffs {
            out.add_ribbon(i.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcsfElement {
    type Output = NcsfElement;
    fn sub(self, rhs: &NcsfElement) -> NcsfElement {
        self + &(-rhs)
    }
}

impl Neg for &NcsfElement {
    type Output = NcsfElement;
    fn neg(self) -> NcsfElement {
        NcsfElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(i, c)| (i.clone(), -c)).collect(),
        }
    }
}

/// The ribbon product: `R_I R_J = R_{I > J} + R_{IJ}`, extended bilinearly.
impl Mul for &NcsfElement {
    type Output = NcsfElement;
    fn mul(self, rhs: &NcsfElement) -> NcsfElement {
        let mut out = NcsfElement::zero(self.degree + rhs.degree);
        for (i, a) in &self.coeffs {
            for (j, b) in &rhs.coeffs {
                let c = a * b;
                out.add_ribbon(i.near_concat(j), c.clone());
                out.add_ribbon(i.concat(j), c);
            }
        }
        out
    }
}

impl fmt::Display for NcsfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*R[{i}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::ratfun as rf;
    use crate::compositions::compositions_ordered;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn r(s: &str) -> NcsfElement {
        NcsfElement::ribbon(&c(s))
    }

    #[test]
    fn ribbon_product_rule() {
        let prod = &r("1") * &r("1");
        assert_eq!(prod, &r("2") + &r("11"));

        let prod = &r("21") * &r("1");
        assert_eq!(prod, &r("22") + &r("211"));
    }

    #[test]
    fn complete_is_sum_of_coarser_ribbons() {
        assert_eq!(NcsfElement::complete(&c("2")), r("2"));
        assert_eq!(NcsfElement::complete(&c("11")), &r("2") + &r("11"));
    }

    #[test]
    fn product_of_completes_is_complete() {
        // S^2 * S^1 = S^{21}, checked in the ribbon basis.
        let lhs = &NcsfElement::complete(&c("2")) * &NcsfElement::complete(&c("1"));
        assert_eq!(lhs, NcsfElement::complete(&c("21")));
    }

    #[test]
    fn moebius_inversion_examples() {
        // r_to_s(R_21) = S^21 - S^3.
        let s = r("21").to_s_coeffs();
        assert_eq!(s.get(&c("21")), Some(&RatFun::one()));
        assert_eq!(s.get(&c("3")), Some(&RatFun::int(-1)));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn s_and_r_conversions_invert() {
        for n in 1..=7u32 {
            for i in compositions_ordered(n) {
                let e = NcsfElement::ribbon(&i);
                let back = NcsfElement::from_s_coeffs(n, e.to_s_coeffs()).unwrap();
                assert_eq!(back, e);
            }
        }
    }

    #[test]
    fn product_is_associative_on_random_triples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let random_element = |rng: &mut rand_chacha::ChaCha8Rng, degree: u32| {
            let all = crate::compositions::compositions_ordered(degree);
            let mut e = NcsfElement::zero(degree);
            for i in all {
                let coeff: i64 = rng.gen_range(-2..=2);
                if coeff != 0 {
                    e.add_ribbon(i, RatFun::int(coeff));
                }
            }
            e
        };
        for _ in 0..30 {
            let da = rng.gen_range(1..=2u32);
            let db = rng.gen_range(1..=2u32);
            let dc = rng.gen_range(1..=(6 - da - db).min(2));
            let a = random_element(&mut rng, da);
            let b = random_element(&mut rng, db);
            let cc = random_element(&mut rng, dc);
            assert_eq!(&(&a * &b) * &cc, &a * &(&b * &cc));
        }
    }

    #[test]
    fn json_round_trip_both_bases() {
        let mut e = NcsfElement::zero(3);
        e.add_ribbon(c("21"), rf("t1/(1 - t2)"));
        e.add_ribbon(c("111"), rf("1 - q1"));
        for basis in ["R", "S"] {
            let back = NcsfElement::from_json(&e.to_json(basis)).unwrap();
            assert_eq!(back, e, "basis {basis}");
        }
    }
}
