//! The Grassmann-algebra encoding of homogeneous noncommutative symmetric
//! functions: degree `n` corresponds to an exterior algebra on `n - 1`
//! anticommuting generators, a ribbon `R_I` to the square-free monomial
//! indexed by the descent set of `I`. Dual functionals live in an exterior
//! algebra on dual generators with `<xi_D, eta_E> = delta_{DE}`.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::RatFun;
use crate::compositions::Composition;
use crate::ncsf::{NcsfElement, NcsfError};

/// A general element of the exterior algebra on `gens` anticommuting
/// generators; keys are bitmasks, bit `i - 1` standing for the generator
/// with index `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrassmannElement {
    gens: u32,
    terms: BTreeMap<u64, RatFun>,
}

/// Sign of `eta_A * eta_B` when both are written in increasing index order:
/// `(-1)^{#{(i, j) in A x B : i > j}}`.
fn reorder_sign(a: u64, b: u64) -> i32 {
    let mut inversions = 0u32;
    let mut bits_b = b;
    while bits_b != 0 {
        let j = bits_b.trailing_zeros();
        let higher = a >> (j + 1);
        inversions += higher.count_ones();
        bits_b &= bits_b - 1;
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl GrassmannElement {
    pub fn one(gens: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(0, RatFun::one());
        GrassmannElement { gens, terms }
    }

    pub fn zero(gens: u32) -> Self {
        GrassmannElement { gens, terms: BTreeMap::new() }
    }

    pub fn gens(&self) -> u32 {
        self.gens
    }

    pub fn add_term(&mut self, mask: u64, c: RatFun) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mask) {
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

    pub fn coeff(&self, mask: u64) -> RatFun {
        self.terms.get(&mask).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn mul(&self, other: &GrassmannElement) -> GrassmannElement {
        let gens = self.gens.max(other.gens);
        let mut out = GrassmannElement::zero(gens);
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &other.terms {
                if ma & mb != 0 {
                    continue; // eta_i^2 = 0
                }
                let sign = reorder_sign(ma, mb);
                let mut c = ca * cb;
                if sign < 0 {
                    c.neg_in_place();
                }
                out.add_term(ma | mb, c);
            }
        }
        out
    }

    /// Shifts every generator index by `offset`.
    pub fn shift(&self, offset: u32) -> GrassmannElement {
        GrassmannElement {
            gens: self.gens + offset,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m << offset, c.clone()))
                .collect(),
        }
    }

    /// Reads a degree-`gens + 1` element off the subset expansion.
    pub fn to_ncsf(&self) -> NcsfElement {
        let n = self.gens + 1;
        let mut out = NcsfElement::zero(n);
        for (&mask, c) in &self.terms {
            out.add_ribbon(composition_of_mask(n, mask), c.clone());
        }
        out
    }

    pub fn from_ncsf(f: &NcsfElement) -> GrassmannElement {
        let gens = f.degree() - 1;
        let mut out = GrassmannElement::zero(gens);
        for (i, c) in f.ribbon_coeffs() {
            out.add_term(mask_of_composition(i), c.clone());
        }
        out
    }
}

pub fn mask_of_composition(i: &Composition) -> u64 {
    let mut mask = 0u64;
    for d in i.descent_set() {
        mask |= 1 << (d - 1);
    }
    mask
}

pub fn composition_of_mask(n: u32, mask: u64) -> Composition {
    let des: BTreeSet<u32> = (1..n).filter(|d| mask & (1 << (d - 1)) != 0).collect();
    Composition::from_descents(n, &des)
}

/// Multiplies two homogeneous elements through the Grassmann encoding:
/// `enc(a) * (1 + eta_m) * shift_m(enc(b))` in degree `m + p`. Agrees with
/// the ribbon product and serves as an independent route to it.
pub fn grassmann_product(a: &NcsfElement, b: &NcsfElement) -> NcsfElement {
    let m = a.degree();
    let mut bridge = GrassmannElement::one(m);
    bridge.add_term(1 << (m - 1), RatFun::one());
    let enc = GrassmannElement::from_ncsf(a)
        .mul(&bridge)
        .mul(&GrassmannElement::from_ncsf(b).shift(m));
    let out = enc.to_ncsf();
    debug_assert_eq!(out.degree(), m + b.degree());
    out
}

/// `K_n(U, V) = (u_1 + v_1 eta_1) ... (u_{n-1} + v_{n-1} eta_{n-1})`,
/// kept in factored form. Expanding over subsets `D` of `[1, n-1]` gives
/// the element with ribbon coefficient `prod_{i in D} v_i prod_{i not in D}
/// u_i`.
#[derive(Clone, Debug)]
pub struct GrassmannFactorList {
    degree: u32,
    factors: Vec<(RatFun, RatFun)>,
}

impl GrassmannFactorList {
    pub fn new(degree: u32, factors: Vec<(RatFun, RatFun)>) -> Result<Self, NcsfError> {
        if factors.len() + 1 != degree as usize {
            return Err(NcsfError::FactorCount {
                degree,
                got: factors.len(),
            });
        }
        Ok(GrassmannFactorList { degree, factors })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn factors(&self) -> &[(RatFun, RatFun)] {
        &self.factors
    }

    /// Subset-product expansion.
    pub fn expand(&self) -> NcsfElement {
        let n = self.degree;
        let mut out = NcsfElement::zero(n);
        for mask in 0u64..(1 << (n - 1)) {
            let mut c = RatFun::one();
            for (k, (u, v)) in self.factors.iter().enumerate() {
                let picked = mask & (1 << k) != 0;
                c = &c * if picked { v } else { u };
                if c.is_zero() {
                    break;
                }
            }
            out.add_ribbon(composition_of_mask(n, mask), c);
        }
        out
    }

    /// Same expansion, but by actually multiplying the linear factors in the
    /// exterior algebra. Used to cross-check [`Self::expand`].
    pub fn expand_via_algebra(&self) -> NcsfElement {
        let gens = self.degree - 1;
        let mut acc = GrassmannElement::one(gens);
        for (k, (u, v)) in self.factors.iter().enumerate() {
            let mut factor = GrassmannElement::zero(gens);
            factor.add_term(0, u.clone());
            factor.add_term(1 << k, v.clone());
            acc = acc.mul(&factor);
        }
        acc.to_ncsf()
    }
}

/// `L_n(X, Y) = (y_1 - x_1 xi_1) ... (y_{n-1} - x_{n-1} xi_{n-1})`, a
/// functional on degree-`n` elements through `<xi_D, eta_E> = delta_{DE}`.
#[derive(Clone, Debug)]
pub struct QsymFunctional {
    degree: u32,
    factors: Vec<(RatFun, RatFun)>,
}

impl QsymFunctional {
    /// `factors[k] = (x_{k+1}, y_{k+1})`.
    pub fn new(degree: u32, factors: Vec<(RatFun, RatFun)>) -> Result<Self, NcsfError> {
        if factors.len() + 1 != degree as usize {
            return Err(NcsfError::FactorCount {
                degree,
                got: factors.len(),
            });
        }
        Ok(QsymFunctional { degree, factors })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn factors(&self) -> &[(RatFun, RatFun)] {
        &self.factors
    }

    /// Coefficients of the xi-monomial expansion, keyed by subset mask.
    pub fn xi_coeffs(&self) -> BTreeMap<u64, RatFun> {
        let mut out = BTreeMap::new();
        for mask in 0u64..(1 << (self.degree - 1)) {
            let mut c = RatFun::one();
            for (k, (x, y)) in self.factors.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    c = &c * &(-x);
                } else {
                    c = &c * y;
                }
                if c.is_zero() {
                    break;
                }
            }
            if !c.is_zero() {
                out.insert(mask, c);
            }
        }
        out
    }

    /// `<L_n(X, Y), K_n(U, V)> = prod_i (u_i y_i - v_i x_i)`: the closed
    /// form of the pairing of two factored elements.
    pub fn pair(&self, k: &GrassmannFactorList) -> Result<RatFun, NcsfError> {
        if self.degree != k.degree() {
            return Err(NcsfError::DegreeMismatch(self.degree, k.degree()));
        }
        let mut out = RatFun::one();
        for ((x, y), (u, v)) in self.factors.iter().zip(k.factors()) {
            out = &out * &(&(u * y) - &(v * x));
            if out.is_zero() {
                break;
            }
        }
        Ok(out)
    }

    /// The individual factors `u_i y_i - v_i x_i` of the closed-form
    /// pairing, in position order.
    pub fn pair_factors(&self, k: &GrassmannFactorList) -> Result<Vec<RatFun>, NcsfError> {
        if self.degree != k.degree() {
            return Err(NcsfError::DegreeMismatch(self.degree, k.degree()));
        }
        Ok(self
            .factors
            .iter()
            .zip(k.factors())
            .map(|((x, y), (u, v))| &(u * y) - &(v * x))
            .collect())
    }

    /// Pairing by expanding both sides over subsets; must agree with
    /// [`Self::pair`].
    pub fn pair_by_expansion(&self, k: &GrassmannFactorList) -> Result<RatFun, NcsfError> {
        self.pair_element(&k.expand())
    }

    /// Pairing against an arbitrary homogeneous element in its ribbon
    /// expansion.
    pub fn pair_element(&self, f: &NcsfElement) -> Result<RatFun, NcsfError> {
        if self.degree != f.degree() {
            return Err(NcsfError::DegreeMismatch(self.degree, f.degree()));
        }
        let mut out = RatFun::zero();
        for (mask, c) in self.xi_coeffs() {
            let i = composition_of_mask(self.degree, mask);
            out = &out + &(&c * &f.ribbon_coeff(&i));
        }
        Ok(out)
    }
}
