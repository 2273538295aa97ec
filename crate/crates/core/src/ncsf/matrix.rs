use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::algebra::RatFun;
use crate::compositions::{compositions_ordered, Composition};
use crate::ncsf::{NcsfElement, NcsfError};

/// A `2^{n-1} x 2^{n-1}` matrix over rational functions, rows and columns
/// indexed by the compositions of `n` in reverse-lexicographic order.
/// Column `J` holds the expansion of the `J`-th source element over the row
/// basis.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionMatrix {
    degree: u32,
    entries: Vec<Vec<RatFun>>,
}

impl TransitionMatrix {
    pub fn size_for(degree: u32) -> usize {
        1 << (degree - 1)
    }

    pub fn zero(degree: u32) -> Self {
        let size = Self::size_for(degree);
        TransitionMatrix {
            degree,
            entries: vec![vec![RatFun::zero(); size]; size],
        }
    }

    pub fn identity(degree: u32) -> Self {
        let mut out = Self::zero(degree);
        for k in 0..Self::size_for(degree) {
            out.entries[k][k] = RatFun::one();
        }
        out
    }

    pub fn from_entries(degree: u32, entries: Vec<Vec<RatFun>>) -> Result<Self, NcsfError> {
        let size = Self::size_for(degree);
        if entries.len() != size || entries.iter().any(|row| row.len() != size) {
            return Err(NcsfError::Shape(degree));
        }
        Ok(TransitionMatrix { degree, entries })
    }

    /// Column `J` is the ribbon expansion of `elements[J]`.
    pub fn expansion_over_ribbon(elements: &[NcsfElement]) -> Result<Self, NcsfError> {
        Self::from_columns(elements, |e| e.ribbon_coeffs().map(|(i, c)| (i.clone(), c.clone())).collect())
    }

    /// Column `J` is the complete-basis expansion of `elements[J]`.
    pub fn expansion_over_complete(elements: &[NcsfElement]) -> Result<Self, NcsfError> {
        Self::from_columns(elements, |e| e.to_s_coeffs().into_iter().collect())
    }

    fn from_columns<F>(elements: &[NcsfElement], expand: F) -> Result<Self, NcsfError>
    where
        F: Fn(&NcsfElement) -> Vec<(Composition, RatFun)>,
    {
        let degree = elements
            .first()
            .map(|e| e.degree())
            .ok_or(NcsfError::Shape(0))?;
        let size = Self::size_for(degree);
        if elements.len() != size {
            return Err(NcsfError::Shape(degree));
        }
        let mut out = Self::zero(degree);
        for (col, e) in elements.iter().enumerate() {
            if e.degree() != degree {
                return Err(NcsfError::DegreeMismatch(e.degree(), degree));
            }
            for (i, c) in expand(e) {
                out.entries[i.ordered_index()][col] = c;
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn labels(&self) -> Vec<Composition> {
        compositions_ordered(self.degree)
    }

    pub fn entry(&self, row: usize, col: usize) -> &RatFun {
        &self.entries[row][col]
    }

    pub fn entry_at(&self, row: &Composition, col: &Composition) -> &RatFun {
        &self.entries[row.ordered_index()][col.ordered_index()]
    }

    pub fn set_entry(&mut self, row: usize, col: usize, value: RatFun) {
        self.entries[row][col] = value;
    }

    /// The element encoded by column `col`, read in the ribbon basis.
    pub fn column_element(&self, col: usize) -> NcsfElement {
        let labels = self.labels();
        let mut out = NcsfElement::zero(self.degree);
        for (row, label) in labels.iter().enumerate() {
            out.add_ribbon(label.clone(), self.entries[row][col].clone());
        }
        out
    }

    pub fn mul(&self, rhs: &TransitionMatrix) -> Result<TransitionMatrix, NcsfError> {
        if self.degree != rhs.degree {
            return Err(NcsfError::DegreeMismatch(self.degree, rhs.degree));
        }
        let size = self.size();
        let mut out = Self::zero(self.degree);
        for i in 0..size {
            for j in 0..size {
                let mut acc = RatFun::zero();
                for k in 0..size {
                    let a = &self.entries[i][k];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &rhs.entries[k][j];
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    /// Gauss-Jordan inversion over the rational function field. Pivots are
    /// inverted by swapping numerator and denominator, so no gcd is needed;
    /// a missing pivot means the columns were linearly dependent.
    pub fn invert(&self) -> Result<TransitionMatrix, NcsfError> {
        let size = self.size();
        let mut work = self.entries.clone();
        let mut inv = TransitionMatrix::identity(self.degree).entries;
        for col in 0..size {
            let pivot_row = (col..size)
                .find(|&r| !work[r][col].is_zero())
                .ok_or(NcsfError::Singular)?;
            work.swap(col, pivot_row);
            inv.swap(col, pivot_row);
            let pivot_inv = work[col][col]
                .recip()
                .map_err(|_| NcsfError::Singular)?;
            for j in 0..size {
                work[col][j] = &work[col][j] * &pivot_inv;
                inv[col][j] = &inv[col][j] * &pivot_inv;
            }
            for r in 0..size {
                if r == col || work[r][col].is_zero() {
                    continue;
                }
                let factor = work[r][col].clone();
                for j in 0..size {
                    let w = &work[col][j] * &factor;
                    work[r][j] = &work[r][j] - &w;
                    let v = &inv[col][j] * &factor;
                    inv[r][j] = &inv[r][j] - &v;
                }
            }
        }
        Ok(TransitionMatrix { degree: self.degree, entries: inv })
    }

    pub fn to_json(&self) -> Value {
        let labels: Vec<String> = self.labels().iter().map(|c| c.to_string()).collect();
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|row| Value::Array(row.iter().map(|e| e.to_json()).collect()))
            .collect();
        json!({
            "degree": self.degree,
            "rows": labels.clone(),
            "cols": labels,
            "entries": Value::Array(entries),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self, NcsfError> {
        let degree = value
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| NcsfError::Parse("missing `degree`".into()))? as u32;
        let rows = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| NcsfError::Parse("missing `entries`".into()))?;
        let mut entries = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| NcsfError::Parse("row must be an array".into()))?;
            let mut out_row = Vec::with_capacity(row.len());
            for e in row {
                out_row.push(RatFun::from_json(e).map_err(|e| NcsfError::Parse(e.to_string()))?);
            }
            entries.push(out_row);
        }
        Self::from_entries(degree, entries)
    }

    pub fn to_csv(&self) -> String {
        let labels = self.labels();
        let mut out = String::new();
        out.push_str("row\\col");
        for l in &labels {
            let _ = write!(out, ",{l}");
        }
        out.push('\n');
        for (r, row) in self.entries.iter().enumerate() {
            let _ = write!(out, "{}", labels[r]);
            for e in row {
                let _ = write!(out, ",\"{e}\"");
            }
            out.push('\n');
        }
        out
    }

    /// `pmatrix` layout with rows in the same order as the row labels.
    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{pmatrix}\n");
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_latex()).collect();
            out.push_str(&cells.join(" & "));
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{pmatrix}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let labels = self.labels();
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect();
        let mut widths = vec![0usize; self.size() + 1];
        widths[0] = labels.iter().map(|l| l.to_string().len()).max().unwrap_or(0);
        for row in &cells {
            for (j, cell) in row.iter().enumerate() {
                widths[j + 1] = widths[j + 1].max(cell.len()).max(labels[j].to_string().len());
            }
        }
        let mut out = String::new();
        let _ = write!(out, "{:>w$} ", "", w = widths[0]);
        for (j, l) in labels.iter().enumerate() {
            let _ = write!(out, " {:>w$}", l.to_string(), w = widths[j + 1]);
        }
        out.push('\n');
        for (r, row) in cells.iter().enumerate() {
            let _ = write!(out, "{:>w$} ", labels[r].to_string(), w = widths[0]);
            for (j, cell) in row.iter().enumerate() {
                let _ = write!(out, " {:>w$}", cell, w = widths[j + 1]);
            }
            out.push('\n');
        }
        out
    }
}
