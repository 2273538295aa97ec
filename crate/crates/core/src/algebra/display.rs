//! Text and LaTeX rendering for polynomials and rational functions.

use num::{BigRational, One, Signed};

use crate::algebra::{Monomial, Poly, RatFun, VarFamily, Variable};

fn variable_latex(v: &Variable) -> String {
    if v.family() == VarFamily::Tau {
        "\\tau".to_string()
    } else {
        format!("{}_{{{}}}", v.family().letter(), v.index())
    }
}

fn monomial_string(m: &Monomial, latex: bool) -> String {
    let mut parts = Vec::new();
    for (v, e) in m.iter() {
        let name = if latex { variable_latex(v) } else { v.to_string() };
        if *e == 1 {
            parts.push(name);
        } else if latex {
            parts.push(format!("{name}^{{{e}}}"));
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join(if latex { " " } else { "*" })
}

fn coeff_string(c: &BigRational, latex: bool) -> String {
    if latex && !c.denom().is_one() {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    } else {
        c.to_string()
    }
}

/// Terms are printed smallest monomial first (constants lead), which keeps
/// the ubiquitous `1 - t1` factors readable.
pub fn poly_to_string(p: &Poly, latex: bool) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let abs = c.abs();
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&coeff_string(&abs, latex));
        } else {
            if !abs.is_one() {
                out.push_str(&coeff_string(&abs, latex));
                out.push_str(if latex { " " } else { "*" });
            }
            out.push_str(&monomial_string(m, latex));
        }
    }
    out
}

fn den_string(f: &RatFun, latex: bool) -> String {
    let mut parts = Vec::new();
    for (factor, mult) in f.den_factors() {
        let inner = poly_to_string(factor, latex);
        let wrapped = if factor.num_terms() > 1 || mult > 1 {
            if latex {
                format!("\\left({inner}\\right)")
            } else {
                format!("({inner})")
            }
        } else {
            inner
        };
        if mult == 1 {
            parts.push(wrapped);
        } else if latex {
            parts.push(format!("{wrapped}^{{{mult}}}"));
        } else {
            parts.push(format!("{wrapped}^{mult}"));
        }
    }
    parts.join(if latex { " " } else { "*" })
}

pub fn ratfun_to_string(f: &RatFun) -> String {
    let num = poly_to_string(f.num(), false);
    if f.is_polynomial() {
        return num;
    }
    let num = if f.num().num_terms() > 1 {
        format!("({num})")
    } else {
        num
    };
    format!("{num}/({})", den_string(f, false))
}

pub fn ratfun_to_latex(f: &RatFun) -> String {
    let num = poly_to_string(f.num(), true);
    if f.is_polynomial() {
        return num;
    }
    format!("\\frac{{{num}}}{{{}}}", den_string(f, true))
}
