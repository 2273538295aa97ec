//! `ncsf`: compute and print multiparameter Hall-Littlewood and
//! Macdonald-type bases of noncommutative symmetric functions, their
//! transition matrices, products, determinants and word statistics, and run
//! the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 degree
//! cap or pole errors.

mod output;
mod spec_lang;
mod verify;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ncsf_core::compositions::compositions_ordered;
use ncsf_core::kostka::{det, det_a_closed_factors, matrix_kind, MatrixKind};
use ncsf_core::macdonald::{
    expand_in_q, j_basis, p_basis, q_basis, q_product_closed, s_to_q_matrix,
};
use ncsf_core::ncsf::{NcsfElement, TransitionMatrix};
use ncsf_core::theta::{complete_t, klyachko, ribbon_t, ribbon_wx};
use ncsf_core::words::{bridge_calibrate, bridge_check, c_matrix, d_matrix, flag_table_rendered};
use ncsf_core::{Composition, LimitPoint, RatFun, Substitution, Variable};

use output::{coeffs_output, element_output, matrix_output, poly_matrix_output, poly_output, Format};

#[derive(Parser)]
#[command(
    name = "ncsf",
    version,
    about = "Exact computer algebra for noncommutative symmetric functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the transition matrix of a basis family over a target basis
    Matrix {
        /// Source basis: R, S, Rcal, Scal, Rwx, J, Q, P
        #[arg(long)]
        from: String,
        /// Target basis: R, S, Q
        #[arg(long)]
        to: String,
        #[arg(long)]
        degree: u32,
        /// Invert the matrix after computing it
        #[arg(long)]
        inverse: bool,
        /// Specializations, e.g. `q=0`, `t=tau^i`, `t3=1/2` (repeatable)
        #[arg(long)]
        spec: Vec<String>,
        /// Exponent list for `t=tau^b`, e.g. `1,3,4`
        #[arg(long)]
        b: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand one basis element over R or S
    Expand {
        /// Basis name: R, S, Rcal, Scal, Rwx, J, Q, P, K (Klyachko)
        #[arg(long)]
        basis: String,
        /// Composition, e.g. `3,1` or `31`
        #[arg(long)]
        index: String,
        /// Basis of the printed expansion: R or S
        #[arg(long = "in", default_value = "R")]
        in_basis: String,
        #[arg(long)]
        spec: Vec<String>,
        #[arg(long)]
        b: Option<String>,
        /// Take the coefficientwise tau-limit at 0 or 1 after specializing
        #[arg(long)]
        limit: Option<u8>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Multiply two basis elements (closed product rule for Q)
    Product {
        /// Basis name: Q (closed formula) or R (two-term ribbon rule)
        #[arg(long, default_value = "Q")]
        basis: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        spec: Vec<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Determinant of the parameter matrix A_n (computed and factored form)
    Det {
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the parameter matrices A_n, B_n, T_n
    Kostka {
        #[arg(long)]
        degree: u32,
        /// Which matrix: A, B or T
        #[arg(long, default_value = "A")]
        kind: String,
        /// Also print the determinant (degree <= 4)
        #[arg(long)]
        det: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Packed-word statistics matrices C and D
    Words {
        #[arg(long)]
        degree: u32,
        /// Which matrix: C or D
        #[arg(long = "matrix", default_value = "D")]
        which: String,
        /// Print the alphabet-flag table instead
        #[arg(long)]
        flags: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the word-statistics description of the Kostka matrices
    Bridge {
        #[arg(long)]
        degree: u32,
    },
    /// Run verification suites
    Verify {
        /// Suite names (comma separated) or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-degree", default_value_t = 4)]
        max_degree: u32,
    },
}

enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    fn report(&self) -> ExitCode {
        match self {
            CliError::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            CliError::Compute(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

fn general_cap() -> u32 {
    std::env::var("NCSF_MAX_DEGREE")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(6)
}

/// Fully symbolic two-parameter expansions and symbolic determinants stay
/// capped at 4 regardless of the general cap.
fn heavy_cap() -> u32 {
    general_cap().min(4)
}

fn check_cap(degree: u32, cap: u32, what: &str) -> Result<(), CliError> {
    if degree == 0 {
        return Err(CliError::Usage("degree must be positive".into()));
    }
    if degree > cap {
        return Err(CliError::Compute(format!(
            "degree {degree} exceeds the {what} cap {cap} (set NCSF_MAX_DEGREE to raise the general cap)"
        )));
    }
    Ok(())
}

fn parse_composition(s: &str) -> Result<Composition, CliError> {
    s.parse()
        .map_err(|e| CliError::Usage(format!("invalid composition `{s}`: {e}")))
}

fn parse_subst(
    spec: &[String],
    b: &Option<String>,
) -> Result<Substitution, CliError> {
    let b_list = match b {
        Some(raw) => Some(spec_lang::parse_b_list(raw).map_err(CliError::Usage)?),
        None => None,
    };
    spec_lang::parse_specs(spec, b_list.as_deref()).map_err(CliError::Usage)
}

fn basis_element(name: &str, i: &Composition) -> Result<NcsfElement, CliError> {
    Ok(match name {
        "R" => NcsfElement::ribbon(i),
        "S" => NcsfElement::complete(i),
        "Rcal" => ribbon_t(i),
        "Scal" => complete_t(i),
        "Rwx" => ribbon_wx(i),
        "J" => j_basis(i),
        "Q" => q_basis(i),
        "P" => p_basis(i),
        "K" => {
            if i.len() != 1 {
                return Err(CliError::Usage(
                    "the Klyachko element takes a one-part index".into(),
                ));
            }
            klyachko(i.weight())
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown basis `{other}` (expected R, S, Rcal, Scal, Rwx, J, Q, P or K)"
            )))
        }
    })
}

fn is_heavy_symbolic(from: &str, subst: &Substitution) -> bool {
    matches!(from, "J" | "Rwx") && subst.is_empty()
}

fn apply_subst(e: &NcsfElement, subst: &Substitution) -> Result<NcsfElement, CliError> {
    if subst.is_empty() {
        return Ok(e.clone());
    }
    e.substitute(subst)
        .map_err(|err| CliError::Compute(err.to_string()))
}

fn run_matrix(
    from: String,
    to: String,
    degree: u32,
    inverse: bool,
    spec: Vec<String>,
    b: Option<String>,
    format: Format,
) -> Result<String, CliError> {
    let subst = parse_subst(&spec, &b)?;
    let cap = if is_heavy_symbolic(&from, &subst) {
        heavy_cap()
    } else {
        general_cap()
    };
    check_cap(degree, cap, "matrix")?;
    let m = if from == "Scal" && to == "Q" && subst.is_empty() {
        // The closed pairing construction for the deformed complete basis
        // over Q.
        s_to_q_matrix(degree)
    } else {
        let columns: Result<Vec<NcsfElement>, CliError> = compositions_ordered(degree)
            .iter()
            .map(|i| apply_subst(&basis_element(&from, i)?, &subst))
            .collect();
        let columns = columns?;
        match to.as_str() {
            "R" => TransitionMatrix::expansion_over_ribbon(&columns)
                .map_err(|e| CliError::Compute(e.to_string()))?,
            "S" => TransitionMatrix::expansion_over_complete(&columns)
                .map_err(|e| CliError::Compute(e.to_string()))?,
            "Q" => {
                let mut m = TransitionMatrix::zero(degree);
                let subst_opt = if subst.is_empty() { None } else { Some(&subst) };
                for (col, e) in columns.iter().enumerate() {
                    let coeffs = expand_in_q(e, subst_opt)
                        .map_err(|e| CliError::Compute(e.to_string()))?;
                    for (i, c) in coeffs {
                        m.set_entry(i.ordered_index(), col, c);
                    }
                }
                m
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown target basis `{other}` (expected R, S or Q)"
                )))
            }
        }
    };
    let m = if inverse {
        m.invert().map_err(|e| CliError::Compute(e.to_string()))?
    } else {
        m
    };
    Ok(matrix_output(&m, format))
}

fn run_expand(
    basis: String,
    index: String,
    in_basis: String,
    spec: Vec<String>,
    b: Option<String>,
    limit: Option<u8>,
    format: Format,
) -> Result<String, CliError> {
    let i = parse_composition(&index)?;
    let subst = parse_subst(&spec, &b)?;
    let cap = if is_heavy_symbolic(&basis, &subst) {
        heavy_cap()
    } else {
        general_cap()
    };
    check_cap(i.weight(), cap, "expansion")?;
    let mut e = apply_subst(&basis_element(&basis, &i)?, &subst)?;
    if let Some(point) = limit {
        let point = match point {
            0 => LimitPoint::Zero,
            1 => LimitPoint::One,
            other => {
                return Err(CliError::Usage(format!(
                    "limit point must be 0 or 1, got {other}"
                )))
            }
        };
        e = e
            .map_coeffs(|c| c.limit_tau(point))
            .map_err(|err| CliError::Compute(err.to_string()))?;
    }
    match in_basis.as_str() {
        "R" | "S" => Ok(element_output(&e, &in_basis, format)),
        other => Err(CliError::Usage(format!(
            "unknown expansion basis `{other}` (expected R or S)"
        ))),
    }
}

fn run_product(
    basis: String,
    left: String,
    right: String,
    spec: Vec<String>,
    b: Option<String>,
    format: Format,
) -> Result<String, CliError> {
    let i = parse_composition(&left)?;
    let j = parse_composition(&right)?;
    let subst = parse_subst(&spec, &b)?;
    let total = i.weight() + j.weight();
    // The closed rule is cheap; allow slightly beyond the general cap.
    check_cap(total, general_cap() + 2, "product")?;
    match basis.as_str() {
        "Q" => {
            let closed = q_product_closed(&i, &j);
            let mut out: BTreeMap<Composition, RatFun> = BTreeMap::new();
            for (k, c) in closed {
                let c = if subst.is_empty() {
                    c
                } else {
                    c.substitute(&subst)
                        .map_err(|e| CliError::Compute(e.to_string()))?
                };
                if !c.is_zero() {
                    out.insert(k, c);
                }
            }
            Ok(coeffs_output(&out, total, "Q", format))
        }
        "R" => {
            let product = &NcsfElement::ribbon(&i) * &NcsfElement::ribbon(&j);
            let product = apply_subst(&product, &subst)?;
            Ok(element_output(&product, "R", format))
        }
        other => Err(CliError::Usage(format!(
            "unknown product basis `{other}` (expected Q or R)"
        ))),
    }
}

fn run_det(degree: u32, format: Format) -> Result<String, CliError> {
    check_cap(degree, heavy_cap(), "symbolic determinant")?;
    let computed = det(&ncsf_core::kostka::matrix_a(degree));
    let mut out = String::from("det A_n = ");
    out.push_str(&poly_output(&computed, format));
    let factors: Vec<String> = det_a_closed_factors(degree)
        .into_iter()
        .map(|(f, e)| {
            if e == 1 {
                format!("({f})")
            } else {
                format!("({f})^{e}")
            }
        })
        .collect();
    out.push_str("factored form = ");
    if factors.is_empty() {
        out.push_str("1\n");
    } else {
        out.push_str(&factors.join(" "));
        out.push('\n');
    }
    Ok(out)
}

fn run_kostka(
    degree: u32,
    kind: String,
    want_det: bool,
    format: Format,
) -> Result<String, CliError> {
    check_cap(degree, general_cap(), "parameter matrix")?;
    let kind = match kind.as_str() {
        "A" => MatrixKind::A,
        "B" => MatrixKind::B,
        "T" => MatrixKind::T,
        other => {
            return Err(CliError::Usage(format!(
                "unknown matrix kind `{other}` (expected A, B or T)"
            )))
        }
    };
    let m = matrix_kind(degree, kind);
    let mut out = poly_matrix_output(m.rows(), degree, format);
    if want_det {
        check_cap(degree, heavy_cap(), "symbolic determinant")?;
        out.push_str("det = ");
        out.push_str(&poly_output(&det(&m), format));
    }
    Ok(out)
}

fn run_words(degree: u32, which: String, flags: bool, format: Format) -> Result<String, CliError> {
    check_cap(
        degree,
        general_cap().min(ncsf_core::words::WORD_MATRIX_CAP),
        "word matrix",
    )?;
    if flags {
        let table = flag_table_rendered(degree);
        let labels = compositions_ordered(degree);
        let mut out = String::new();
        for (r, row) in table.iter().enumerate() {
            out.push_str(&format!("{}: {}\n", labels[r], row.join(" ")));
        }
        return Ok(out);
    }
    let tau = Variable::tau();
    let m = match which.as_str() {
        "D" => d_matrix(degree, tau),
        "C" => c_matrix(degree, tau),
        other => {
            return Err(CliError::Usage(format!(
                "unknown word matrix `{other}` (expected C or D)"
            )))
        }
    }
    .map_err(|e| CliError::Compute(e.to_string()))?;
    Ok(poly_matrix_output(&m, degree, format))
}

fn run_bridge(degree: u32) -> Result<String, CliError> {
    check_cap(
        degree,
        general_cap().min(ncsf_core::words::WORD_MATRIX_CAP),
        "bridge",
    )?;
    let variant = bridge_calibrate().map_err(|e| CliError::Compute(e.to_string()))?;
    let mut out = format!("calibrated convention: {}\n", variant.describe());
    match bridge_check(degree, variant).map_err(|e| CliError::Compute(e.to_string()))? {
        None => {
            out.push_str(&format!("degree {degree}: identity holds entrywise\n"));
            Ok(out)
        }
        Some(m) => Err(CliError::Compute(format!(
            "bridge mismatch at ({}, {}): Kostka {} vs words {}",
            m.row, m.col, m.kostka, m.words
        ))),
    }
}

fn run_verify(suite: String, max_degree: u32) -> Result<ExitCode, CliError> {
    let names: Vec<&str> = if suite == "all" {
        verify::SUITE_NAMES.to_vec()
    } else {
        suite.split(',').map(str::trim).collect()
    };
    let mut all_pass = true;
    for name in names {
        let outcome = verify::run_suite(name, max_degree).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown suite `{name}` (known: {})",
                verify::SUITE_NAMES.join(", ")
            ))
        })?;
        eprintln!("suite {}: {} ms", outcome.name, outcome.millis);
        match &outcome.failure {
            None => println!(
                "suite {}: PASS ({} instances)",
                outcome.name, outcome.instances
            ),
            Some(detail) => {
                all_pass = false;
                println!(
                    "suite {}: FAIL ({} instances) first failure: {}",
                    outcome.name, outcome.instances, detail
                );
            }
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn dispatch(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Matrix { from, to, degree, inverse, spec, b, format } => {
            print!("{}", run_matrix(from, to, degree, inverse, spec, b, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand { basis, index, in_basis, spec, b, limit, format } => {
            print!("{}", run_expand(basis, index, in_basis, spec, b, limit, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { basis, left, right, spec, b, format } => {
            print!("{}", run_product(basis, left, right, spec, b, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Det { degree, format } => {
            print!("{}", run_det(degree, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Kostka { degree, kind, det, format } => {
            print!("{}", run_kostka(degree, kind, det, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Words { degree, which, flags, format } => {
            print!("{}", run_words(degree, which, flags, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bridge { degree } => {
            print!("{}", run_bridge(degree)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_degree } => run_verify(suite, max_degree),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => e.report(),
    }
}
