//! The specialization mini-language used by `--spec`:
//!
//! - `q=0` (whole family to zero; any of `t q x w a b`)
//! - `t=tau^i` (geometric: `t_i -> tau^i`)
//! - `t=tau^b` (exponent list: `t_i -> tau^{b_i}`, needs `--b`)
//! - `w=t` (family rename: `w_i -> t_i`)
//! - `t3=1/2`, `tau=2/3`, `q1=0` (single-variable assignment; the value may
//!   be any rational-function expression)

use ncsf_core::algebra::parse::parse_ratfun;
use ncsf_core::{Substitution, VarFamily, Variable};

fn family_of(name: &str) -> Option<VarFamily> {
    match name {
        "t" => Some(VarFamily::T),
        "q" => Some(VarFamily::Q),
        "x" => Some(VarFamily::X),
        "w" => Some(VarFamily::W),
        "a" => Some(VarFamily::A),
        "b" => Some(VarFamily::B),
        _ => None,
    }
}

pub fn parse_b_list(spec: &str) -> Result<Vec<u32>, String> {
    let mut out = Vec::new();
    for part in spec.split(',') {
        let v: u32 = part
            .trim()
            .parse()
            .map_err(|_| format!("invalid --b entry `{part}`"))?;
        if v == 0 {
            return Err("--b entries must be positive".into());
        }
        out.push(v);
    }
    if out.is_empty() {
        return Err("--b list is empty".into());
    }
    Ok(out)
}

pub fn parse_specs(tokens: &[String], b: Option<&[u32]>) -> Result<Substitution, String> {
    let mut subst = Substitution::new();
    for token in tokens.iter().flat_map(|t| t.split(';')) {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let (lhs, rhs) = token
            .split_once('=')
            .ok_or_else(|| format!("specialization `{token}` is missing `=`"))?;
        let lhs = lhs.trim();
        let rhs = rhs.trim();
        if let Some(family) = family_of(lhs) {
            subst = match rhs {
                "0" => subst.family_zero(family),
                "tau^i" => subst.geometric(family, Variable::tau()),
                "tau^b" => {
                    let b = b.ok_or_else(|| {
                        "specialization `tau^b` needs a --b list".to_string()
                    })?;
                    subst.tau_exponents(family, b.to_vec())
                }
                other => {
                    let to = family_of(other).ok_or_else(|| {
                        format!("unknown family specialization `{lhs}={other}`")
                    })?;
                    subst.rename(family, to)
                }
            };
        } else {
            let var: Variable = lhs
                .parse()
                .map_err(|_| format!("unknown variable `{lhs}`"))?;
            let value = parse_ratfun(rhs).map_err(|e| format!("bad value `{rhs}`: {e}"))?;
            subst = subst.assign(var, value);
        }
    }
    Ok(subst)
}
