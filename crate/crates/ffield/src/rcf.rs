//! Rational canonical form with an explicit basis change.
//!
//! `F_p^n` becomes an `F_p[X]`-module through `X v = M v`. The relation
//! module is the column space of `X I - M`; diagonalizing that matrix with
//! elementary row and column operations over the Euclidean ring `F_p[X]`
//! (Smith form) while recording the inverse of the accumulated row
//! operations yields one cyclic generator per nonunit invariant factor. The
//! Krylov bases of those generators form the columns of `T`.

use crate::matrix::{FFMatrix, FFVector};
use crate::poly::FFPolynomial;
use crate::{FfError, Result};

#[derive(Clone, Debug)]
pub struct RcfDecomposition {
    /// Columns are the new basis: `T^{-1} M T` is block-diagonal.
    pub transform: FFMatrix,
    pub transform_inv: FFMatrix,
    /// Monic invariant factors `f_1 | f_2 | ... | f_k`, all of positive degree.
    pub invariant_factors: Vec<FFPolynomial>,
}

impl RcfDecomposition {
    pub fn blocks(&self) -> Vec<FFMatrix> {
        self.invariant_factors.iter().map(FFMatrix::companion).collect()
    }

    pub fn canonical_form(&self) -> FFMatrix {
        FFMatrix::block_diagonal(self.transform.modulus(), &self.blocks())
    }

    /// Offsets of the companion blocks inside the new basis.
    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut off = 0;
        self.invariant_factors
            .iter()
            .map(|f| {
                let d = f.degree().unwrap_or(0);
                let r = off..off + d;
                off += d;
                r
            })
            .collect()
    }

    pub fn minimal_polynomial(&self) -> FFPolynomial {
        self.invariant_factors
            .last()
            .cloned()
            .unwrap_or_else(|| FFPolynomial::one(self.transform.modulus()))
    }
}

type PolyMatrix = Vec<Vec<FFPolynomial>>;

struct SmithState {
    n: usize,
    a: PolyMatrix,
    /// Inverse of the accumulated row operations.
    u_inv: PolyMatrix,
}

impl SmithState {
    fn swap_rows(&mut self, r: usize, s: usize) {
        if r == s {
            return;
        }
        self.a.swap(r, s);
        for row in &mut self.u_inv {
            row.swap(r, s);
        }
    }

    fn swap_cols(&mut self, c: usize, d: usize) {
        if c == d {
            return;
        }
        for row in &mut self.a {
            row.swap(c, d);
        }
    }

    /// `row_dst += q * row_src`; the inverse operation acts on `u_inv` as
    /// `col_src -= q * col_dst`.
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &FFPolynomial) {
        for j in 0..self.n {
            let t = q.mul(&self.a[src][j]);
            self.a[dst][j] = self.a[dst][j].add(&t);
        }
        for row in &mut self.u_inv {
            let t = q.mul(&row[dst]);
            row[src] = row[src].sub(&t);
        }
    }

    /// `col_dst += q * col_src`.
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &FFPolynomial) {
        for row in &mut self.a {
            let t = q.mul(&row[src]);
            row[dst] = row[dst].add(&t);
        }
    }

    fn scale_row(&mut self, r: usize, c: u64, c_inv: u64) {
        for j in 0..self.n {
            self.a[r][j] = self.a[r][j].scale(c);
        }
        for row in &mut self.u_inv {
            row[r] = row[r].scale(c_inv);
        }
    }

    fn min_degree_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in t..self.n {
            for j in t..self.n {
                if let Some(d) = self.a[i][j].degree() {
                    if best.is_none_or(|(bd, _, _)| d < bd) {
                        best = Some((d, i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn diagonalize(&mut self) -> Result<()> {
        let p = self.a[0][0].modulus();
        for t in 0..self.n {
            loop {
                let (i, j) = self.min_degree_entry(t).ok_or(FfError::Singular)?;
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                let pivot = self.a[t][t].clone();
                let mut dirty = false;
                for i in t + 1..self.n {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let (q, r) = self.a[i][t].div_rem(&pivot);
                    self.add_row_multiple(i, t, &q.neg());
                    dirty |= !r.is_zero();
                }
                for j in t + 1..self.n {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let (q, r) = self.a[t][j].div_rem(&pivot);
                    self.add_col_multiple(j, t, &q.neg());
                    dirty |= !r.is_zero();
                }
                if dirty {
                    continue;
                }
                // Enforce the divisibility chain: pull an offending row into row t.
                let offender = (t + 1..self.n)
                    .find(|&i| (t + 1..self.n).any(|j| !pivot.divides(&self.a[i][j])));
                match offender {
                    Some(i) => {
                        let one = FFPolynomial::one(p);
                        self.add_row_multiple(t, i, &one);
                    }
                    None => break,
                }
            }
            let lead = self.a[t][t].lead();
            let inv = crate::arith::inv_mod(lead, p).expect("prime field");
            self.scale_row(t, inv, lead);
        }
        Ok(())
    }
}

/// Rational canonical form of an invertible square matrix.
pub fn rcf(m: &FFMatrix) -> Result<RcfDecomposition> {
    if !m.is_square() {
        return Err(FfError::Dimension("rational canonical form of a non-square matrix".into()));
    }
    if !m.is_invertible() {
        return Err(FfError::Singular);
    }
    let p = m.modulus();
    let n = m.rows();
    if n == 0 {
        return Ok(RcfDecomposition {
            transform: FFMatrix::identity(p, 0),
            transform_inv: FFMatrix::identity(p, 0),
            invariant_factors: Vec::new(),
        });
    }
    let x = FFPolynomial::x(p);
    let a: PolyMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = FFPolynomial::constant(p, m.get(i, j)).neg();
                    if i == j {
                        c.add(&x)
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let u_inv = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { FFPolynomial::one(p) } else { FFPolynomial::zero(p) })
                .collect()
        })
        .collect();
    let mut st = SmithState { n, a, u_inv };
    st.diagonalize()?;

    let mut columns = Vec::with_capacity(n);
    let mut invariant_factors = Vec::new();
    for t in 0..n {
        let f = st.a[t][t].clone();
        let deg = f.degree().expect("nonzero diagonal");
        if deg == 0 {
            continue;
        }
        // generator = sum_j u_inv[j][t](M) e_j
        let mut v = FFVector::zero(p, n);
        for j in 0..n {
            let e = FFVector::unit(p, n, j);
            v = v.add(&m.poly_apply(&st.u_inv[j][t], &e)?);
        }
        for _ in 0..deg {
            let next = m.mul_vec(&v)?;
            columns.push(v);
            v = next;
        }
        invariant_factors.push(f);
    }
    let transform = FFMatrix::from_columns(p, &columns)?;
    let transform_inv = transform.inverse()?;
    Ok(RcfDecomposition {
        transform,
        transform_inv,
        invariant_factors,
    })
}
