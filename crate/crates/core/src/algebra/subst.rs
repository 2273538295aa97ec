use num::BigRational;

use crate::algebra::{AlgebraError, Monomial, Poly, RatFun, VarFamily, Variable};

/// A single substitution rule. Family-level rules act on every index of a
/// family at once.
#[derive(Clone, Debug)]
enum Rule {
    /// `v -> value`
    Assign(Variable, RatFun),
    /// `f_i -> 0` for the whole family
    FamilyZero(VarFamily),
    /// `f_i -> base^i`
    Geometric(VarFamily, Variable),
    /// `f_i -> base^{e_i}` for a finite exponent list (1-indexed)
    Exponents(VarFamily, Variable, Vec<u32>),
    /// `f_i -> g_i`
    Rename(VarFamily, VarFamily),
}

/// An ordered collection of substitution rules; the first matching rule wins
/// and unmatched variables are left alone.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    rules: Vec<Rule>,
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn assign(mut self, v: Variable, value: RatFun) -> Self {
        self.rules.push(Rule::Assign(v, value));
        self
    }

    pub fn assign_rational(self, v: Variable, value: BigRational) -> Self {
        self.assign(v, RatFun::constant(value))
    }

    pub fn family_zero(mut self, family: VarFamily) -> Self {
        self.rules.push(Rule::FamilyZero(family));
        self
    }

    /// `f_i -> base^i` (e.g. `t_i -> tau^i`).
    pub fn geometric(mut self, family: VarFamily, base: Variable) -> Self {
        self.rules.push(Rule::Geometric(family, base));
        self
    }

    /// `f_i -> base^{e_i}` with explicit positive integer exponents.
    pub fn tau_exponents(mut self, family: VarFamily, exponents: Vec<u32>) -> Self {
        self.rules.push(Rule::Exponents(family, Variable::tau(), exponents));
        self
    }

    /// `f_i -> g_i`, e.g. sending every `w_i` to `t_i`.
    pub fn rename(mut self, from: VarFamily, to: VarFamily) -> Self {
        self.rules.push(Rule::Rename(from, to));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rule_for(&self, v: Variable) -> Result<Option<RatFun>, AlgebraError> {
        for rule in &self.rules {
            match rule {
                Rule::Assign(u, value) if *u == v => return Ok(Some(value.clone())),
                Rule::FamilyZero(f) if *f == v.family() => return Ok(Some(RatFun::zero())),
                Rule::Geometric(f, base) if *f == v.family() => {
                    return Ok(Some(RatFun::from_poly(Poly::term(
                        Monomial::var_pow(*base, v.index()),
                        num::One::one(),
                    ))));
                }
                Rule::Exponents(f, base, exps) if *f == v.family() => {
                    let i = v.index();
                    if i == 0 || i as usize > exps.len() {
                        return Err(AlgebraError::IndexOutOfRange(i));
                    }
                    let e = exps[i as usize - 1];
                    return Ok(Some(RatFun::from_poly(Poly::term(
                        Monomial::var_pow(*base, e),
                        num::One::one(),
                    ))));
                }
                Rule::Rename(f, g) if *f == v.family() => {
                    let renamed = Variable::new(*g, v.index())?;
                    return Ok(Some(RatFun::var(renamed)));
                }
                _ => {}
            }
        }
        Ok(None)
    }

    pub fn apply_poly(&self, p: &Poly) -> Result<RatFun, AlgebraError> {
        let mut out = RatFun::zero();
        for (m, c) in p.terms() {
            let mut term = RatFun::constant(c.clone());
            for (v, e) in m.iter() {
                match self.rule_for(*v)? {
                    Some(value) => term = &term * &value.pow(*e),
                    None => {
                        term = &term
                            * &RatFun::from_poly(Poly::term(
                                Monomial::var_pow(*v, *e),
                                num::One::one(),
                            ))
                    }
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn apply(&self, f: &RatFun) -> Result<RatFun, AlgebraError> {
        f.substitute(self)
    }
}
