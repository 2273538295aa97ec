//! q-integers, q-factorials, finite Pochhammer products and Gaussian
//! binomials, all as exact polynomials in a chosen variable.

use num::{BigRational, One};

use crate::algebra::{Monomial, Poly, Variable};

/// `[n]_v = 1 + v + ... + v^{n-1}`.
pub fn q_int(n: u32, v: Variable) -> Poly {
    let mut out = Poly::zero();
    for k in 0..n {
        out.add_term(Monomial::var_pow(v, k), BigRational::one());
    }
    out
}

/// `[n]_v! = [1]_v [2]_v ... [n]_v`.
pub fn q_factorial(n: u32, v: Variable) -> Poly {
    let mut out = Poly::one();
    for k in 1..=n {
        out = &out * &q_int(k, v);
    }
    out
}

/// `(v; v)_r = (1 - v)(1 - v^2) ... (1 - v^r)`.
pub fn pochhammer(r: u32, v: Variable) -> Poly {
    let mut out = Poly::one();
    for k in 1..=r {
        out = &out * &Poly::one_minus(Monomial::var_pow(v, k));
    }
    out
}

/// Gaussian binomial coefficient, computed by the Pascal-type recurrence
/// `[n k] = [n-1 k-1] + v^k [n-1 k]` (no division involved).
pub fn gaussian_binomial(n: u32, k: u32, v: Variable) -> Poly {
    if k > n {
        return Poly::zero();
    }
    if k == 0 || k == n {
        return Poly::one();
    }
    let upper = gaussian_binomial(n - 1, k - 1, v);
    let lower = gaussian_binomial(n - 1, k, v).mul_monomial(&Monomial::var_pow(v, k));
    &upper + &lower
}
