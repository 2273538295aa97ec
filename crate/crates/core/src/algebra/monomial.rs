use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Variable;

/// A power product of variables. Zero exponents are never stored, so the
/// representation is canonical and structural equality is mathematical
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exponents: BTreeMap<Variable, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Variable, e: u32) -> Self {
        let mut exponents = BTreeMap::new();
        if e > 0 {
            exponents.insert(v, e);
        }
        Monomial { exponents }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.exponents.get(v).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.exponents.values().map(|&e| e as u64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &u32)> {
        self.exponents.iter()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (v, e) in &other.exponents {
            *exponents.entry(*v).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        let exponents = self.exponents.iter().map(|(v, e)| (*v, e * k)).collect();
        Monomial { exponents }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .all(|(v, e)| other.exponent(v) >= *e)
    }

    /// Exact quotient `other / self`, if it exists.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exponents = other.exponents.clone();
        for (v, e) in &self.exponents {
            let cur = exponents.get_mut(v).unwrap();
            *cur -= e;
            if *cur == 0 {
                exponents.remove(v);
            }
        }
        Some(Monomial { exponents })
    }
}

/// Lexicographic order with respect to the canonical variable order. This is
/// a monomial order (compatible with multiplication), which is what the exact
/// division routine relies on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut lhs = self.exponents.iter();
        let mut rhs = other.exponents.iter();
        loop {
            match (lhs.next(), rhs.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => {
                    // The earlier variable (in canonical order) has implicit
                    // exponent zero on the other side.
                    match va.cmp(vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(eb) {
                            Ordering::Equal => continue,
                            ord => return ord,
                        },
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
