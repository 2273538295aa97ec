//! The multiparameter analogue of the `(1-t)`-transform: the deformed
//! ribbon and complete bases over the parameter sequence `t_1, t_2, ...`,
//! the algebra morphism sending each complete generator to its deformed
//! version, its inverse (whose value on a generator is the multiparameter
//! Klyachko element), and the two-sequence `(w, x)` generalization.

use num::One;

use crate::algebra::{AlgebraError, Monomial, Poly, RatFun, Substitution, VarFamily, Variable};
use crate::compositions::{compositions_ordered, Composition};
use crate::ncsf::NcsfElement;

/// The comparison set `A(I, J) = { s < l(J) : j_1 + ... + j_s not in
/// Des(I) }` for compositions of the same weight.
pub fn descent_comparison(i: &Composition, j: &Composition) -> Vec<u32> {
    debug_assert_eq!(i.weight(), j.weight());
    let des = i.descent_set();
    let mut out = Vec::new();
    let mut sum = 0;
    for (s, &part) in j.parts()[..j.len() - 1].iter().enumerate() {
        sum += part;
        if !des.contains(&sum) {
            out.push(s as u32 + 1);
        }
    }
    out
}

/// Generic construction behind both parameter versions of the deformed
/// ribbon: coefficient of `S^J` is
/// `(-1)^{l(I)-l(J)} (1 - last(J)) prod_{k in A(I,J)} mid(j_k)`.
fn ribbon_deformed<L, M>(i: &Composition, last: L, mid: M) -> NcsfElement
where
    L: Fn(u32) -> Poly,
    M: Fn(u32) -> Poly,
{
    let n = i.weight();
    let mut s_coeffs = Vec::new();
    for j in compositions_ordered(n) {
        let mut coeff = last(*j.parts().last().unwrap());
        for k in descent_comparison(i, &j) {
            coeff = &coeff * &mid(j.part(k as usize));
        }
        if (i.len() + j.len()) % 2 == 1 {
            coeff = -&coeff;
        }
        s_coeffs.push((j, RatFun::from_poly(coeff)));
    }
    NcsfElement::from_s_coeffs(n, s_coeffs).expect("weights match by construction")
}

/// The deformed ribbon `R_I(t)`: lowering the exponents of the classical
/// `(1-t)`-transform expansion to indices in the sequence `t_1, t_2, ...`.
pub fn ribbon_t(i: &Composition) -> NcsfElement {
    ribbon_deformed(
        i,
        |part| Poly::one_minus_var(Variable::t(part)),
        |part| Poly::var(Variable::t(part)),
    )
}

/// The two-sequence generalization `R_I(w, x)`: the trailing factor is
/// `1 - w_{j_r}` (indexed by the last part of `J`), the interior factors
/// are `x_{j_k}`. Setting `w = x = t` recovers [`ribbon_t`].
pub fn ribbon_wx(i: &Composition) -> NcsfElement {
    ribbon_deformed(
        i,
        |part| Poly::one_minus_var(Variable::w(part)),
        |part| Poly::var(Variable::x(part)),
    )
}

/// The deformed complete function: the sum of deformed ribbons over all
/// coarsenings. Multiplicative by the product theorem for this basis.
pub fn complete_t(i: &Composition) -> NcsfElement {
    let mut out = NcsfElement::zero(i.weight());
    for j in i.coarsenings() {
        out = &out + &ribbon_t(&j);
    }
    out
}

/// The multiparameter Klyachko element
/// `K_n = sum_I (prod_{d in Des(I)} t_d) / ((1-t_1)...(1-t_n)) R_I`,
/// which is the value of the inverse transform on a complete generator.
pub fn klyachko(n: u32) -> NcsfElement {
    let den: Vec<Poly> = (1..=n).map(|k| Poly::one_minus_var(Variable::t(k))).collect();
    let mut out = NcsfElement::zero(n);
    for i in compositions_ordered(n) {
        let mut num = Monomial::one();
        for d in i.descent_set() {
            num = num.mul(&Monomial::var(Variable::t(d)));
        }
        let coeff = RatFun::from_num_den(Poly::term(num, One::one()), den.iter().cloned())
            .expect("denominator factors are nonzero");
        out.add_ribbon(i, coeff);
    }
    out
}

fn apply_on_generators<G>(f: &NcsfElement, generator: G) -> NcsfElement
where
    G: Fn(u32) -> NcsfElement,
{
    let mut out = NcsfElement::zero(f.degree());
    for (k, c) in f.to_s_coeffs() {
        let mut prod: Option<NcsfElement> = None;
        for &part in k.parts() {
            let g = generator(part);
            prod = Some(match prod {
                None => g,
                Some(p) => &p * &g,
            });
        }
        out = &out + &prod.expect("compositions are nonempty").scale(&c);
    }
    out
}

/// The algebra morphism determined by `S_n -> complete_t(n)`, applied
/// through the complete-basis expansion.
pub fn theta(f: &NcsfElement) -> NcsfElement {
    apply_on_generators(f, |n| ribbon_t(&Composition::single(n)))
}

/// The inverse morphism, `S_n -> klyachko(n)`.
pub fn theta_inv(f: &NcsfElement) -> NcsfElement {
    apply_on_generators(f, klyachko)
}

/// Inverse morphism with the Klyachko generators specialized first. `f`
/// itself must already be specialized consistently by the caller. Fails if
/// the substitution sends some `1 - t_k` to zero.
pub fn theta_inv_specialized(
    f: &NcsfElement,
    subst: &Substitution,
) -> Result<NcsfElement, AlgebraError> {
    let mut out = NcsfElement::zero(f.degree());
    let mut cache: Vec<Option<NcsfElement>> = vec![None; f.degree() as usize + 1];
    for (k, c) in f.to_s_coeffs() {
        let mut prod: Option<NcsfElement> = None;
        for &part in k.parts() {
            if cache[part as usize].is_none() {
                cache[part as usize] = Some(klyachko(part).substitute(subst)?);
            }
            let g = cache[part as usize].as_ref().unwrap();
            prod = Some(match prod {
                None => g.clone(),
                Some(p) => &p * g,
            });
        }
        out = &out + &prod.expect("compositions are nonempty").scale(&c);
    }
    Ok(out)
}

/// `ribbon_t` under the one-parameter specialization `t_i -> tau^i`; the
/// multivariate transform collapses to the classical `(1-tau)`-transform
/// of the ribbon.
pub fn ribbon_t_one_parameter(i: &Composition) -> NcsfElement {
    let s = Substitution::new().geometric(VarFamily::T, Variable::tau());
    ribbon_t(i)
        .substitute(&s)
        .expect("polynomial coefficients cannot hit a pole")
}
