//! Integer compositions: descent sets, the coarsening order, conjugates and
//! mirrors, refinement quotients, meets, ribbon geometry, and the
//! reverse-lexicographic indexing used by every matrix in this library.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CompositionError {
    #[error("a composition needs at least one part")]
    Empty,
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("compositions have different weights ({0} vs {1})")]
    WeightMismatch(u32, u32),
    #[error("composition {fine} is not finer than {coarse}")]
    NotFiner { fine: String, coarse: String },
    #[error("parse error: {0}")]
    Parse(String),
}

/// A composition of a positive integer: a nonempty list of positive parts.
/// Compositions of `n` are in bijection with subsets of `[1, n-1]` through
/// their descent sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Composition {
    parts: Vec<u32>,
}

#[allow(clippy::len_without_is_empty)] // compositions are nonempty by construction
impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if parts.is_empty() {
            return Err(CompositionError::Empty);
        }
        if parts.contains(&0) {
            return Err(CompositionError::ZeroPart);
        }
        Ok(Composition { parts })
    }

    /// Panicking constructor for literals.
    pub fn from_parts(parts: &[u32]) -> Self {
        Composition::new(parts.to_vec()).expect("valid composition literal")
    }

    pub fn single(n: u32) -> Self {
        Composition::from_parts(&[n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, k: usize) -> u32 {
        self.parts[k - 1]
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Des(I) = { i_1, i_1+i_2, ..., i_1+...+i_{r-1} }.
    pub fn descent_set(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        let mut sum = 0;
        for &p in &self.parts[..self.parts.len() - 1] {
            sum += p;
            out.insert(sum);
        }
        out
    }

    pub fn from_descents(n: u32, descents: &BTreeSet<u32>) -> Self {
        debug_assert!(n >= 1);
        debug_assert!(descents.iter().all(|&d| d >= 1 && d < n));
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Composition { parts }
    }

    /// Conjugate: Des(I~) = [1, n-1] minus the reflected descent set.
    pub fn conjugate(&self) -> Self {
        let n = self.weight();
        let des = self.descent_set();
        let new: BTreeSet<u32> = (1..n).filter(|i| !des.contains(&(n - i))).collect();
        Composition::from_descents(n, &new)
    }

    /// Parts reversed.
    pub fn mirror(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Conjugate of the mirror; its descent set is the complement of
    /// Des(I) in [1, n-1].
    pub fn mirror_conjugate(&self) -> Self {
        self.mirror().conjugate()
    }

    /// The coarsening order: `self <= other` iff Des(self) is contained in
    /// Des(other).
    pub fn is_coarser_or_equal(&self, other: &Self) -> bool {
        self.weight() == other.weight()
            && self.descent_set().is_subset(&other.descent_set())
    }

    pub fn refines(&self, other: &Self) -> bool {
        other.is_coarser_or_equal(self)
    }

    /// For `self` finer than `coarse`, the composition of `len(self)` whose
    /// k-th part counts how many parts of `self` build the k-th part of
    /// `coarse`.
    pub fn refinement_quotient(&self, coarse: &Self) -> Result<Self, CompositionError> {
        if self.weight() != coarse.weight() {
            return Err(CompositionError::WeightMismatch(self.weight(), coarse.weight()));
        }
        if !self.refines(coarse) {
            return Err(CompositionError::NotFiner {
                fine: self.to_string(),
                coarse: coarse.to_string(),
            });
        }
        let mut out = Vec::with_capacity(coarse.len());
        let mut i = 0;
        for &target in &coarse.parts {
            let mut sum = 0;
            let mut count = 0;
            while sum < target {
                sum += self.parts[i];
                i += 1;
                count += 1;
            }
            debug_assert_eq!(sum, target);
            out.push(count);
        }
        Ok(Composition { parts: out })
    }

    /// Meet in the coarsening order: Des(I ∧ J) = Des(I) ∩ Des(J).
    pub fn meet(&self, other: &Self) -> Result<Self, CompositionError> {
        if self.weight() != other.weight() {
            return Err(CompositionError::WeightMismatch(self.weight(), other.weight()));
        }
        let des: BTreeSet<u32> = self
            .descent_set()
            .intersection(&other.descent_set())
            .copied()
            .collect();
        Ok(Composition::from_descents(self.weight(), &des))
    }

    /// Row index of each cell of the ribbon diagram: cell `j` sits in row
    /// `1 + #{d in Des(I) : d < j}`.
    pub fn ribbon_rows(&self) -> Vec<u32> {
        let n = self.weight();
        let des = self.descent_set();
        (1..=n)
            .map(|j| 1 + des.iter().filter(|&&d| d < j).count() as u32)
            .collect()
    }

    /// Sum of the descents.
    pub fn maj(&self) -> u64 {
        self.descent_set().iter().map(|&d| d as u64).sum()
    }

    /// Concatenation `IJ`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Near-concatenation `I > J = (i_1, ..., i_r + j_1, ..., j_s)`.
    pub fn near_concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Composition { parts }
    }

    /// Position in `compositions_ordered(weight)`: the descent indicator
    /// word read as a binary number, most significant bit first.
    pub fn ordered_index(&self) -> usize {
        let n = self.weight();
        let mut idx = 0usize;
        for d in self.descent_set() {
            idx |= 1 << (n - 1 - d);
        }
        idx
    }

    /// All compositions coarser than or equal to `self`.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.weight();
        let des: Vec<u32> = self.descent_set().into_iter().collect();
        let mut out = Vec::with_capacity(1 << des.len());
        for mask in 0u32..(1 << des.len()) {
            let subset: BTreeSet<u32> = des
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &d)| d)
                .collect();
            out.push(Composition::from_descents(n, &subset));
        }
        out
    }
}

/// All `2^{n-1}` compositions of `n` in reverse-lexicographic order, i.e.
/// ascending binary order of the descent indicator word: the list for `n`
/// is the list for `n-1` with first parts incremented, followed by the list
/// for `n-1` with a 1 prepended.
pub fn compositions_ordered(n: u32) -> Vec<Composition> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(1 << (n - 1));
    for idx in 0..(1usize << (n - 1)) {
        let des: BTreeSet<u32> = (1..n).filter(|d| idx & (1 << (n - 1 - d)) != 0).collect();
        out.push(Composition::from_descents(n, &des));
    }
    out
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.iter().all(|&p| p <= 9) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", strs.join(","))
        }
    }
}

impl FromStr for Composition {
    type Err = CompositionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CompositionError::Parse(format!("invalid composition `{s}`"));
        if s.is_empty() {
            return Err(CompositionError::Empty);
        }
        let parts: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Composition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn ordered_lists() {
        let names = |n| {
            compositions_ordered(n)
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(1), ["1"]);
        assert_eq!(names(3), ["3", "21", "12", "111"]);
        assert_eq!(
            names(4),
            ["4", "31", "22", "211", "13", "121", "112", "1111"]
        );
    }

    #[test]
    fn ordered_recursion_blocks() {
        // First half: first part incremented; second half: 1 prepended.
        for n in 2..=6u32 {
            let prev = compositions_ordered(n - 1);
            let cur = compositions_ordered(n);
            let half = prev.len();
            for (k, i) in prev.iter().enumerate() {
                let mut inc = i.parts().to_vec();
                inc[0] += 1;
                assert_eq!(cur[k], Composition::from_parts(&inc));
                let mut pre = vec![1];
                pre.extend_from_slice(i.parts());
                assert_eq!(cur[half + k], Composition::from_parts(&pre));
            }
        }
    }

    #[test]
    fn descent_bijection() {
        for n in 1..=8u32 {
            let all = compositions_ordered(n);
            assert_eq!(all.len(), 1 << (n - 1));
            for (k, i) in all.iter().enumerate() {
                assert_eq!(i.ordered_index(), k);
                assert_eq!(Composition::from_descents(n, &i.descent_set()), *i);
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(c("3").conjugate(), c("111"));
        assert_eq!(c("13122").mirror_conjugate(), c("21321"));
        assert_eq!(c("221112").mirror_conjugate(), c("1251"));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(c("21").mirror(), c("12"));
        assert_eq!(c("13122").mirror(), c("22131"));
    }

    #[test]
    fn involutions_and_complement() {
        for n in 1..=6u32 {
            for i in compositions_ordered(n) {
                assert_eq!(i.conjugate().conjugate(), i);
                assert_eq!(i.mirror().mirror(), i);
                assert_eq!(i.conjugate().mirror(), i.mirror().conjugate());
                let comp: BTreeSet<u32> =
                    (1..n).filter(|d| !i.descent_set().contains(d)).collect();
                assert_eq!(i.mirror_conjugate().descent_set(), comp);
            }
        }
    }

    #[test]
    fn refinement_quotient_examples() {
        assert_eq!(
            c("111122311").refinement_quotient(&c("3325")).unwrap(),
            c("3213")
        );
        assert_eq!(c("211").refinement_quotient(&c("211")).unwrap(), c("111"));
        assert_eq!(c("211").refinement_quotient(&c("31")).unwrap(), c("21"));
        assert!(c("31").refinement_quotient(&c("211")).is_err());
        assert!(c("21").refinement_quotient(&c("2")).is_err());
    }

    #[test]
    fn meet_examples() {
        assert_eq!(c("13122").meet(&c("221112")).unwrap(), c("4122"));
        assert_eq!(c("312").meet(&c("312")).unwrap(), c("312"));
        assert_eq!(c("3").meet(&c("111")).unwrap(), c("3"));
        assert!(c("3").meet(&c("11")).is_err());
    }

    #[test]
    fn quotient_by_meet_is_always_defined() {
        for n in 1..=6u32 {
            let all = compositions_ordered(n);
            for i in &all {
                for j in &all {
                    let k = i.meet(j).unwrap();
                    assert!(i.refinement_quotient(&k).is_ok());
                }
            }
        }
    }

    #[test]
    fn ribbon_rows_examples() {
        assert_eq!(c("3122").ribbon_rows(), vec![1, 1, 1, 2, 3, 3, 4, 4]);
        assert_eq!(c("5").ribbon_rows(), vec![1, 1, 1, 1, 1]);
        assert_eq!(c("1111").ribbon_rows(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn maj_examples() {
        assert_eq!(c("4").maj(), 0);
        assert_eq!(c("21").maj(), 2);
        for n in 1..=7u64 {
            let ones = Composition::from_parts(&vec![1; n as usize]);
            assert_eq!(ones.maj(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn concat_and_near_concat() {
        assert_eq!(c("211").near_concat(&c("21")), c("2131"));
        assert_eq!(c("4").near_concat(&c("21")), c("61"));
        assert_eq!(c("4").concat(&c("21")), c("421"));
        assert_eq!(c("1").concat(&c("1")), c("11"));
        assert_eq!(c("1").near_concat(&c("1")), c("2"));
    }

    #[test]
    fn parse_display_round_trip() {
        let long = Composition::from_parts(&[12, 3, 1]);
        assert_eq!(long.to_string(), "12,3,1");
        assert_eq!("12,3,1".parse::<Composition>().unwrap(), long);
        assert_eq!(c("211").to_string(), "211");
    }
}
