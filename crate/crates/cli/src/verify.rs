//! Named verification suites driving the theorem-level identities, with a
//! structured pass/fail report. Results go to stdout (deterministic); wall
//! times go to stderr.

use std::collections::BTreeMap;
use std::time::Instant;

use ncsf_core::algebra::qseries::{gaussian_binomial, pochhammer};
use ncsf_core::algebra::{LimitPoint, Monomial, Poly, RatFun, Substitution, VarFamily, Variable};
use ncsf_core::compositions::{compositions_ordered, Composition};
use ncsf_core::kostka::{blocks_of_a, det, det_a_closed, matrix_a, matrix_b, matrix_t};
use ncsf_core::macdonald::{
    b_limit, dual_g, expand_in_q, j_basis, j_coeff_closed, j_coeff_pairing, j_prime, p_basis,
    p_recurrence_holds, q_basis, q_prime, q_product_closed, q_recurrence_holds, s_b,
};
use ncsf_core::ncsf::{NcsfElement, TransitionMatrix};
use ncsf_core::theta::{complete_t, ribbon_wx, theta, theta_inv};
use ncsf_core::macdonald::b_ratio;
use ncsf_core::words::{bridge_calibrate, bridge_check, complete_alphabet, complete_flagged, d_from_flags, d_matrix, s_flagged, alphabet_flag};

pub struct SuiteOutcome {
    pub name: &'static str,
    pub instances: usize,
    pub failure: Option<String>,
    pub millis: u128,
}

struct Check {
    instances: usize,
    failure: Option<String>,
}

impl Check {
    fn new() -> Self {
        Check { instances: 0, failure: None }
    }

    fn assert(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "theta-inverse",
    "s-mult",
    "a-recursion",
    "det-A",
    "grassmann",
    "j-on-s",
    "hl-recurrence",
    "duality",
    "product-Q",
    "one-param",
    "kostka-bridge",
    "flags",
    "flag-mult",
    "gaussian",
    "limits",
];

pub fn run_suite(name: &str, max_degree: u32) -> Option<SuiteOutcome> {
    let start = Instant::now();
    let mut check = Check::new();
    match name {
        "theta-inverse" => theta_inverse(&mut check, max_degree.min(5)),
        "s-mult" => s_mult(&mut check, max_degree.min(6)),
        "a-recursion" => a_recursion(&mut check, max_degree.min(6)),
        "det-A" => det_a(&mut check, max_degree.min(4)),
        "grassmann" => grassmann(&mut check, max_degree.min(5)),
        "j-on-s" => j_on_s(&mut check, max_degree.min(4)),
        "hl-recurrence" => hl_recurrence(&mut check, max_degree.min(5)),
        "duality" => duality(&mut check, max_degree.min(5)),
        "product-Q" => product_q(&mut check, max_degree.min(6)),
        "one-param" => one_param(&mut check, max_degree.min(5)),
        "kostka-bridge" => kostka_bridge(&mut check, max_degree.min(5)),
        "flags" => flags(&mut check, max_degree.min(5)),
        "flag-mult" => flag_mult(&mut check, max_degree.min(5)),
        "gaussian" => gaussian(&mut check, max_degree.min(6)),
        "limits" => limits(&mut check, max_degree.min(4)),
        _ => return None,
    }
    Some(SuiteOutcome {
        name: SUITE_NAMES.iter().find(|n| **n == name).unwrap(),
        instances: check.instances,
        failure: check.failure,
        millis: start.elapsed().as_millis(),
    })
}

fn theta_inverse(check: &mut Check, max: u32) {
    for n in 1..=max {
        let all = compositions_ordered(n);
        let forward: Vec<NcsfElement> =
            all.iter().map(|i| theta(&NcsfElement::ribbon(i))).collect();
        let backward: Vec<NcsfElement> =
            all.iter().map(|i| theta_inv(&NcsfElement::ribbon(i))).collect();
        let m_theta = TransitionMatrix::expansion_over_ribbon(&forward).unwrap();
        let m_inv = TransitionMatrix::expansion_over_ribbon(&backward).unwrap();
        let ok = m_inv.mul(&m_theta).unwrap() == TransitionMatrix::identity(n)
            && m_theta.mul(&m_inv).unwrap() == TransitionMatrix::identity(n);
        check.assert(ok, || format!("theta matrices at degree {n} do not invert"));
    }
}

fn s_mult(check: &mut Check, max: u32) {
    for total in 2..=max {
        for m in 1..total {
            for i in compositions_ordered(m) {
                for j in compositions_ordered(total - m) {
                    let lhs = &complete_t(&i) * &complete_t(&j);
                    let rhs = complete_t(&i.concat(&j));
                    check.assert(lhs == rhs, || {
                        format!("S^{i} S^{j} != S^{}", i.concat(&j))
                    });
                }
            }
        }
    }
}

fn a_recursion(check: &mut Check, max: u32) {
    for n in 2..=max {
        let [tl, tr, bl, br] = blocks_of_a(n).unwrap();
        let b = matrix_b(n - 1);
        let a = matrix_a(n - 1);
        check.assert(tl == b, || format!("top-left block of A_{n}"));
        check.assert(tr == a.mul(&matrix_t(n - 1)), || format!("top-right block of A_{n}"));
        check.assert(
            bl == b.scale(&Poly::var(Variable::q(1))),
            || format!("bottom-left block of A_{n}"),
        );
        check.assert(br == a, || format!("bottom-right block of A_{n}"));
    }
}

fn det_a(check: &mut Check, max: u32) {
    for n in 1..=max {
        check.assert(det(&matrix_a(n)) == det_a_closed(n), || {
            format!("det A_{n} does not match the closed form")
        });
    }
}

fn grassmann(check: &mut Check, max: u32) {
    for n in 1..=max {
        let a = matrix_a(n);
        for i in compositions_ordered(n) {
            let expanded = j_prime(&i).expand();
            for j in compositions_ordered(n) {
                let got = expanded.ribbon_coeff(&j);
                let want = RatFun::from_poly(a.entry_at(&j, &i).clone());
                check.assert(got == want, || {
                    format!("coefficient of R_{j} in K_n(U,V) at I={i}: {got} vs {want}")
                });
            }
            check.assert(theta(&expanded) == j_basis(&i), || {
                format!("theta(J'_{i}) != J_{i}")
            });
        }
    }
}

fn j_on_s(check: &mut Check, max: u32) {
    let to_t = Substitution::new()
        .rename(VarFamily::W, VarFamily::T)
        .rename(VarFamily::X, VarFamily::T);
    for n in 1..=max {
        let a = matrix_a(n);
        let all = compositions_ordered(n);
        let wx_cols: Vec<NcsfElement> = all
            .iter()
            .map(|j| {
                let mut acc = NcsfElement::zero(n);
                for k in &all {
                    let coeff = RatFun::from_poly(a.entry_at(k, j).clone());
                    acc = &acc + &ribbon_wx(k).scale(&coeff);
                }
                acc
            })
            .collect();
        let brute = TransitionMatrix::expansion_over_complete(&wx_cols).unwrap();
        for (row, i) in all.iter().enumerate() {
            for (col, j) in all.iter().enumerate() {
                let closed = j_coeff_closed(i, j);
                check.assert(&closed == brute.entry(row, col), || {
                    format!(
                        "closed coefficient at I={i} J={j}: {closed} vs {}",
                        brute.entry(row, col)
                    )
                });
                let pairing = j_coeff_pairing(i, j);
                let closed_t = closed.substitute(&to_t).unwrap();
                check.assert(closed_t == pairing, || {
                    format!("pairing route at I={i} J={j}: {closed_t} vs {pairing}")
                });
            }
        }
    }
}

fn hl_recurrence(check: &mut Check, max: u32) {
    for n in 2..=max {
        for i in compositions_ordered(n) {
            check.assert(q_recurrence_holds(&i), || format!("Q recurrence at I={i}"));
            check.assert(p_recurrence_holds(&i), || format!("P recurrence at I={i}"));
        }
    }
}

fn duality(check: &mut Check, max: u32) {
    for n in 1..=max {
        for i in compositions_ordered(n) {
            let g = dual_g(&i);
            for j in compositions_ordered(n) {
                let value = g.pair(&q_prime(&j)).unwrap();
                let expected = if i == j { RatFun::one() } else { RatFun::zero() };
                check.assert(value == expected, || {
                    format!("<G_{i}, Q'_{j}> = {value}, expected {expected}")
                });
            }
        }
    }
}

fn product_q(check: &mut Check, max: u32) {
    let mut cache: BTreeMap<Composition, NcsfElement> = BTreeMap::new();
    for total in 2..=max {
        for m in 1..total {
            for i in compositions_ordered(m) {
                for j in compositions_ordered(total - m) {
                    let qi = cache.entry(i.clone()).or_insert_with(|| q_basis(&i)).clone();
                    let qj = cache.entry(j.clone()).or_insert_with(|| q_basis(&j)).clone();
                    let closed = q_product_closed(&i, &j);
                    let brute = expand_in_q(&(&qi * &qj), None).unwrap();
                    check.assert(closed == brute, || {
                        let keys: std::collections::BTreeSet<&Composition> =
                            closed.keys().chain(brute.keys()).collect();
                        let witness = keys
                            .into_iter()
                            .find(|k| closed.get(k) != brute.get(k))
                            .map(|k| {
                                format!(
                                    "coefficient of Q_{k}: {} vs {}",
                                    closed.get(k).cloned().unwrap_or_else(RatFun::zero),
                                    brute.get(k).cloned().unwrap_or_else(RatFun::zero)
                                )
                            })
                            .unwrap_or_default();
                        format!("closed product vs brute force at I={i} J={j}: {witness}")
                    });
                }
            }
        }
    }
}

fn one_param(check: &mut Check, max: u32) {
    let tau = Variable::tau();
    let geometric = Substitution::new().geometric(VarFamily::T, tau);
    for n in 1..=max {
        for i in compositions_ordered(n) {
            let q_tau = q_basis(&i).substitute(&geometric).unwrap();
            let p_tau = p_basis(&i).substitute(&geometric).unwrap();
            let poch = RatFun::from_poly(pochhammer(i.len() as u32, tau));
            check.assert(q_tau == p_tau.scale(&poch), || {
                format!("Q != (tau;tau)_r P at I={i}")
            });
        }
    }
}

fn kostka_bridge(check: &mut Check, max: u32) {
    match bridge_calibrate() {
        Ok(variant) => {
            for n in 2..=max {
                match bridge_check(n, variant) {
                    Ok(None) => check.assert(true, String::new),
                    Ok(Some(m)) => check.assert(false, || {
                        format!(
                            "bridge mismatch at ({}, {}): {} vs {}",
                            m.row, m.col, m.kostka, m.words
                        )
                    }),
                    Err(e) => check.assert(false, || format!("bridge error: {e}")),
                }
            }
        }
        Err(e) => check.assert(false, || format!("calibration failed: {e}")),
    }
}

fn flags(check: &mut Check, max: u32) {
    let tau = Variable::tau();
    for n in 1..=max {
        let d = d_matrix(n, tau).unwrap();
        let all = compositions_ordered(n);
        for (row, i) in all.iter().enumerate() {
            for (col, j) in all.iter().enumerate() {
                let ok = d_from_flags(i, j, tau).unwrap() == d[row][col];
                check.assert(ok, || format!("flag D vs word D at I={i} J={j}"));
            }
        }
    }
}

fn flag_mult(check: &mut Check, max: u32) {
    for n in 1..=max {
        let all = compositions_ordered(n);
        for i in &all {
            for j in &all {
                let lhs = s_flagged(i, j).unwrap();
                let flag = alphabet_flag(i, j);
                let mut rhs = Poly::one();
                for (l, &part) in j.parts().iter().enumerate() {
                    rhs = &rhs * &complete_alphabet(part, flag.0[l]);
                }
                check.assert(lhs == rhs, || {
                    format!("flagged S^J not multiplicative at I={i} J={j}")
                });
            }
        }
    }
}

fn gaussian(check: &mut Check, max: u32) {
    let tau = Variable::tau();
    for n in 1..=max {
        for s in 0..=max {
            let spec = complete_flagged(n, s).substitute_poly(|v| {
                (v.family() == VarFamily::A)
                    .then(|| Poly::term(Monomial::var_pow(tau, v.index()), num::One::one()))
            });
            check.assert(spec == gaussian_binomial(s + n, n, tau), || {
                format!("Gaussian binomial at n={n} s={s}")
            });
        }
    }
}

fn limits(check: &mut Check, max: u32) {
    let b_vectors: [&[u32]; 2] = [&[1, 2, 3, 4, 5], &[2, 3, 5, 7, 11]];
    for b in b_vectors {
        let mut cache: BTreeMap<Composition, NcsfElement> = BTreeMap::new();
        let mut psi = |i: &Composition| {
            cache
                .entry(i.clone())
                .or_insert_with(|| b_limit(i, b, LimitPoint::One).unwrap())
                .clone()
        };
        for n in 1..=max {
            for i in compositions_ordered(n) {
                let r = i.len();
                let lhs = psi(&i).scale(&b_ratio(b, r));
                let parts = i.parts().to_vec();
                let mut rhs = NcsfElement::zero(n);
                for k in 1..=r {
                    let head = Composition::single(parts[..k].iter().sum());
                    let mut term = psi(&head);
                    if k < r {
                        term = &term * &psi(&Composition::from_parts(&parts[k..]));
                    }
                    if k % 2 == 0 {
                        term = -&term;
                    }
                    rhs = &rhs + &term;
                }
                check.assert(lhs == rhs, || format!("limit recurrence at I={i}, b={b:?}"));
            }
        }
        for total in 2..=max {
            for m in 1..total {
                for i in compositions_ordered(m) {
                    for j in compositions_ordered(total - m) {
                        let lhs = s_b(&i.concat(&j), b).unwrap();
                        let rhs = &s_b(&i, b).unwrap() * &s_b(&j, b).unwrap();
                        check.assert(lhs == rhs, || {
                            format!("S(b) multiplicativity at I={i} J={j}, b={b:?}")
                        });
                    }
                }
            }
        }
    }
}
