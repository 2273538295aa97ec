//! The parameter matrices `A_n`, `B_n`, `T_n`: entries are monomials in the
//! two sequences `q_i`, `t_i`, the block recursion tying `A_n` to `A_{n-1}`,
//! and the factored closed form of `det A_n`.

use num::One;

use crate::algebra::{Monomial, Poly, RatFun, VarFamily, Variable};
use crate::compositions::{compositions_ordered, Composition};
use crate::ncsf::{NcsfError, TransitionMatrix};
use crate::theta::descent_comparison;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixKind {
    A,
    B,
    T,
}

/// A square matrix over polynomials, indexed like [`TransitionMatrix`].
#[derive(Clone, Debug, PartialEq)]
pub struct ParamMatrix {
    degree: u32,
    entries: Vec<Vec<Poly>>,
}

impl ParamMatrix {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn labels(&self) -> Vec<Composition> {
        compositions_ordered(self.degree)
    }

    pub fn entry(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row][col]
    }

    pub fn entry_at(&self, row: &Composition, col: &Composition) -> &Poly {
        &self.entries[row.ordered_index()][col.ordered_index()]
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.entries
    }

    #[allow(clippy::needless_range_loop)]
    pub fn mul(&self, rhs: &ParamMatrix) -> ParamMatrix {
        assert_eq!(self.size(), rhs.size());
        let size = self.size();
        let mut entries = vec![vec![Poly::zero(); size]; size];
        for i in 0..size {
            for j in 0..size {
                let mut acc = Poly::zero();
                for k in 0..size {
                    if self.entries[i][k].is_zero() || rhs.entries[k][j].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&self.entries[i][k] * &rhs.entries[k][j]);
                }
                entries[i][j] = acc;
            }
        }
        ParamMatrix { degree: self.degree, entries }
    }

    pub fn scale(&self, f: &Poly) -> ParamMatrix {
        ParamMatrix {
            degree: self.degree,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|e| e * f).collect())
                .collect(),
        }
    }

    pub fn map_entries<F>(&self, f: F) -> ParamMatrix
    where
        F: Fn(&Poly) -> Poly,
    {
        ParamMatrix {
            degree: self.degree,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn to_transition(&self) -> TransitionMatrix {
        let mut out = TransitionMatrix::zero(self.degree);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                out.set_entry(i, j, RatFun::from_poly(e.clone()));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.to_transition().to_json()
    }

    pub fn to_latex(&self) -> String {
        self.to_transition().to_latex()
    }
}

/// `A_n(I, J) = prod_{k in A(mirror I, mirror J)} t_k *
/// prod_{l in A(mirror-conjugate I, mirror-conjugate J)} q_l`.
/// The factors carry the comparison-set indices themselves.
pub fn matrix_a(n: u32) -> ParamMatrix {
    let all = compositions_ordered(n);
    let mirrors: Vec<Composition> = all.iter().map(Composition::mirror).collect();
    let conj: Vec<Composition> = all.iter().map(Composition::mirror_conjugate).collect();
    let size = all.len();
    let mut entries = vec![vec![Poly::zero(); size]; size];
    for i in 0..size {
        for j in 0..size {
            let mut m = Monomial::one();
            for k in descent_comparison(&mirrors[i], &mirrors[j]) {
                m = m.mul(&Monomial::var(Variable::t(k)));
            }
            for l in descent_comparison(&conj[i], &conj[j]) {
                m = m.mul(&Monomial::var(Variable::q(l)));
            }
            entries[i][j] = Poly::term(m, One::one());
        }
    }
    ParamMatrix { degree: n, entries }
}

/// `B_n` is `A_n` with every `q_i` replaced by `q_{i+1}`.
pub fn matrix_b(n: u32) -> ParamMatrix {
    matrix_a(n).map_entries(shift_q)
}

fn shift_q(p: &Poly) -> Poly {
    p.substitute_poly(|v| {
        (v.family() == VarFamily::Q).then(|| Poly::var(Variable::q(v.index() + 1)))
    })
}

/// `T_n = diag(t_{l(I)})`.
pub fn matrix_t(n: u32) -> ParamMatrix {
    let all = compositions_ordered(n);
    let size = all.len();
    let mut entries = vec![vec![Poly::zero(); size]; size];
    for (k, i) in all.iter().enumerate() {
        entries[k][k] = Poly::var(Variable::t(i.len() as u32));
    }
    ParamMatrix { degree: n, entries }
}

pub fn matrix_kind(n: u32, kind: MatrixKind) -> ParamMatrix {
    match kind {
        MatrixKind::A => matrix_a(n),
        MatrixKind::B => matrix_b(n),
        MatrixKind::T => matrix_t(n),
    }
}

/// The four quadrants of `A_n` under the ordered indexing, as matrices of
/// degree `n - 1`. The recursion states they equal `B_{n-1}`,
/// `A_{n-1} T_{n-1}`, `q_1 B_{n-1}` and `A_{n-1}`.
pub fn blocks_of_a(n: u32) -> Result<[ParamMatrix; 4], NcsfError> {
    if n < 2 {
        return Err(NcsfError::Shape(n));
    }
    let a = matrix_a(n);
    let half = a.size() / 2;
    let slice = |row0: usize, col0: usize| ParamMatrix {
        degree: n - 1,
        entries: (0..half)
            .map(|i| (0..half).map(|j| a.entries[row0 + i][col0 + j].clone()).collect())
            .collect(),
    };
    Ok([slice(0, 0), slice(0, half), slice(half, 0), slice(half, half)])
}

/// Division-free determinant via the Berkowitz algorithm (iterated
/// characteristic-polynomial coefficients; no pivoting, no division).
pub fn det(m: &ParamMatrix) -> Poly {
    let a = &m.entries;
    let n = a.len();
    // coeffs of det(lambda I - A) for the leading principal minors,
    // highest power first.
    let mut coeffs = vec![Poly::one(), -&a[0][0]];
    for i in 1..n {
        // s_j = row_i[0..i] * A_i^j * col_i[0..i]
        let mut s = Vec::with_capacity(i);
        let mut v: Vec<Poly> = (0..i).map(|r| a[r][i].clone()).collect();
        for _ in 0..i {
            let mut dot = Poly::zero();
            for k in 0..i {
                if !a[i][k].is_zero() && !v[k].is_zero() {
                    dot = &dot + &(&a[i][k] * &v[k]);
                }
            }
            s.push(dot);
            let mut next = vec![Poly::zero(); i];
            for r in 0..i {
                for k in 0..i {
                    if !a[r][k].is_zero() && !v[k].is_zero() {
                        next[r] = &next[r] + &(&a[r][k] * &v[k]);
                    }
                }
            }
            v = next;
        }
        // Toeplitz column: [1, -a_ii, -s_0, ..., -s_{i-1}]
        let mut q = Vec::with_capacity(i + 2);
        q.push(Poly::one());
        q.push(-&a[i][i]);
        for x in s {
            q.push(-&x);
        }
        let mut next = vec![Poly::zero(); i + 2];
        for (k, slot) in next.iter_mut().enumerate() {
            for (j, qj) in q.iter().enumerate().take(k + 1) {
                if let Some(old) = coeffs.get(k - j) {
                    if !qj.is_zero() && !old.is_zero() {
                        *slot = &*slot + &(qj * old);
                    }
                }
            }
        }
        coeffs = next;
    }
    let constant = coeffs.pop().unwrap();
    if n % 2 == 1 {
        -&constant
    } else {
        constant
    }
}

/// The factored closed form of `det A_n`:
/// `prod_{k=2}^{n} prod_{i=1}^{k-1} (1 - q_i t_{k-i})^{binom(n-1, k-1)}`,
/// as (factor, multiplicity) pairs. Expanding this for n >= 5 is large;
/// evaluate the factors instead where possible.
pub fn det_a_closed_factors(n: u32) -> Vec<(Poly, u64)> {
    let mut out = Vec::new();
    for k in 2..=n {
        let e = binomial(n - 1, k - 1);
        for i in 1..k {
            let factor = Poly::one_minus(
                Monomial::var(Variable::q(i)).mul(&Monomial::var(Variable::t(k - i))),
            );
            out.push((factor, e));
        }
    }
    out
}

/// The closed form of `det A_n`, expanded.
pub fn det_a_closed(n: u32) -> Poly {
    let mut out = Poly::one();
    for (factor, e) in det_a_closed_factors(n) {
        for _ in 0..e {
            out = &out * &factor;
        }
    }
    out
}

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}
