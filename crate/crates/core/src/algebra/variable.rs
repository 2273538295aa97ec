use std::fmt;
use std::str::FromStr;

use crate::algebra::AlgebraError;

/// Families of indexed parameters. The declaration order is the canonical
/// variable order (`t1 < t2 < q1 < ... < tau`), which fixes serialization,
/// hashing and the monomial order used for exact division.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarFamily {
    T,
    Q,
    X,
    W,
    A,
    B,
    Tau,
}

impl VarFamily {
    pub fn letter(self) -> &'static str {
        match self {
            VarFamily::T => "t",
            VarFamily::Q => "q",
            VarFamily::X => "x",
            VarFamily::W => "w",
            VarFamily::A => "a",
            VarFamily::B => "b",
            VarFamily::Tau => "tau",
        }
    }
}

/// An indexed indeterminate such as `t3`, `q1`, `a0` or the generic `tau`.
///
/// `tau` is the single variable used for one-parameter specializations and
/// carries no index. The `a` family starts at index 0 (alphabet letters),
/// every other family at index 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable {
    family: VarFamily,
    index: u32,
}

impl Variable {
    pub fn new(family: VarFamily, index: u32) -> Result<Self, AlgebraError> {
        let ok = match family {
            VarFamily::Tau => index == 0,
            VarFamily::A => true,
            _ => index >= 1,
        };
        if ok {
            Ok(Variable { family, index })
        } else {
            Err(AlgebraError::BadVariableIndex {
                family: family.letter(),
                index,
            })
        }
    }

    pub fn t(index: u32) -> Self {
        Variable::new(VarFamily::T, index).expect("t index must be >= 1")
    }

    pub fn q(index: u32) -> Self {
        Variable::new(VarFamily::Q, index).expect("q index must be >= 1")
    }

    pub fn x(index: u32) -> Self {
        Variable::new(VarFamily::X, index).expect("x index must be >= 1")
    }

    pub fn w(index: u32) -> Self {
        Variable::new(VarFamily::W, index).expect("w index must be >= 1")
    }

    pub fn a(index: u32) -> Self {
        Variable { family: VarFamily::A, index }
    }

    pub fn b(index: u32) -> Self {
        Variable::new(VarFamily::B, index).expect("b index must be >= 1")
    }

    pub fn tau() -> Self {
        Variable { family: VarFamily::Tau, index: 0 }
    }

    pub fn family(&self) -> VarFamily {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == VarFamily::Tau {
            write!(f, "tau")
        } else {
            write!(f, "{}{}", self.family.letter(), self.index)
        }
    }
}

impl FromStr for Variable {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "tau" {
            return Ok(Variable::tau());
        }
        let bad = || AlgebraError::Parse(format!("invalid variable name `{s}`"));
        let (letter, digits) = s.split_at(1);
        let family = match letter {
            "t" => VarFamily::T,
            "q" => VarFamily::Q,
            "x" => VarFamily::X,
            "w" => VarFamily::W,
            "a" => VarFamily::A,
            "b" => VarFamily::B,
            _ => return Err(bad()),
        };
        let index: u32 = digits.parse().map_err(|_| bad())?;
        Variable::new(family, index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        for v in [Variable::t(3), Variable::q(1), Variable::a(0), Variable::tau()] {
            let s = v.to_string();
            assert_eq!(s.parse::<Variable>().unwrap(), v);
        }
    }

    #[test]
    fn index_constraints() {
        assert!(Variable::new(VarFamily::T, 0).is_err());
        assert!(Variable::new(VarFamily::Tau, 1).is_err());
        assert!(Variable::new(VarFamily::A, 0).is_ok());
    }

    #[test]
    fn canonical_order_is_family_then_index() {
        assert!(Variable::t(9) < Variable::q(1));
        assert!(Variable::t(1) < Variable::t(2));
        assert!(Variable::b(5) < Variable::tau());
    }
}
