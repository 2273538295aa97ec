//! Renderers for elements, coefficient maps, matrices and polynomials in
//! the four output formats. Output is deterministic: iteration follows the
//! reverse-lexicographic composition order everywhere.

use std::collections::BTreeMap;

use clap::ValueEnum;
use serde_json::{json, Value};

use ncsf_core::compositions::compositions_ordered;
use ncsf_core::{Composition, NcsfElement, Poly, RatFun, TransitionMatrix};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

fn ordered_coeffs(
    coeffs: &BTreeMap<Composition, RatFun>,
    degree: u32,
) -> Vec<(Composition, RatFun)> {
    compositions_ordered(degree)
        .into_iter()
        .filter_map(|i| {
            coeffs
                .get(&i)
                .filter(|c| !c.is_zero())
                .map(|c| (i.clone(), c.clone()))
        })
        .collect()
}

pub fn coeffs_output(
    coeffs: &BTreeMap<Composition, RatFun>,
    degree: u32,
    label: &str,
    format: Format,
) -> String {
    let ordered = ordered_coeffs(coeffs, degree);
    match format {
        Format::Text => {
            let mut out = String::new();
            for (i, c) in &ordered {
                out.push_str(&format!("{label}[{i}]: {c}\n"));
            }
            if ordered.is_empty() {
                out.push_str("0\n");
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("composition,coefficient\n");
            for (i, c) in &ordered {
                out.push_str(&format!("{i},\"{c}\"\n"));
            }
            out
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (i, c) in &ordered {
                map.insert(i.to_string(), c.to_json());
            }
            let value = json!({
                "degree": degree,
                "basis": label,
                "coeffs": Value::Object(map),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Latex => {
            if ordered.is_empty() {
                return "0\n".into();
            }
            let terms: Vec<String> = ordered
                .iter()
                .map(|(i, c)| format!("\\left({}\\right) {label}_{{{i}}}", c.to_latex()))
                .collect();
            format!("{}\n", terms.join(" + "))
        }
    }
}

pub fn element_output(e: &NcsfElement, basis: &str, format: Format) -> String {
    let coeffs: BTreeMap<Composition, RatFun> = match basis {
        "S" => e.to_s_coeffs(),
        _ => e
            .ribbon_coeffs()
            .map(|(i, c)| (i.clone(), c.clone()))
            .collect(),
    };
    coeffs_output(&coeffs, e.degree(), basis, format)
}

pub fn matrix_output(m: &TransitionMatrix, format: Format) -> String {
    match format {
        Format::Text => m.to_text(),
        Format::Csv => m.to_csv(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&m.to_json()).unwrap()),
        Format::Latex => m.to_latex(),
    }
}

pub fn poly_output(p: &Poly, format: Format) -> String {
    match format {
        Format::Text | Format::Csv => format!("{p}\n"),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&p.to_json()).unwrap()),
        Format::Latex => format!("{}\n", p.to_latex()),
    }
}

pub fn poly_matrix_output(entries: &[Vec<Poly>], degree: u32, format: Format) -> String {
    let mut m = TransitionMatrix::zero(degree);
    for (i, row) in entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            m.set_entry(i, j, RatFun::from_poly(e.clone()));
        }
    }
    matrix_output(&m, format)
}
