//! Dense matrices and vectors over `F_p`. Vectors are columns; matrices act
//! on the left.

use std::fmt;

use num_bigint::BigUint;

use crate::arith::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod};
use crate::poly::FFPolynomial;
use crate::{FfError, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FFVector {
    p: u64,
    data: Vec<u64>,
}

impl FFVector {
    pub fn new(p: u64, data: Vec<u64>) -> Self {
        Self {
            p,
            data: data.into_iter().map(|x| x % p).collect(),
        }
    }

    pub fn zero(p: u64, n: usize) -> Self {
        Self { p, data: vec![0; n] }
    }

    pub fn unit(p: u64, n: usize, i: usize) -> Self {
        let mut v = Self::zero(p, n);
        v.data[i] = 1 % p;
        v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.data
    }

    pub fn get(&self, i: usize) -> u64 {
        self.data[i]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        Self {
            p,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| add_mod(a, b, p)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        Self {
            p,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| sub_mod(a, b, p)).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        Self {
            p,
            data: self.data.iter().map(|&a| mul_mod(a, c, p)).collect(),
        }
    }
}

impl fmt::Debug for FFVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FFVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} {:?}", self.p, self.data)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FFMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FFMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        Self {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(FfError::Dimension("ragged matrix rows".into()));
        }
        let data = rows.iter().flatten().map(|&x| x % p).collect();
        Ok(Self {
            p,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_i64_rows(p: u64, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| crate::arith::reduce_i64(x, p)).collect())
            .collect();
        Self::from_rows(p, &rows)
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(p: u64, cols: &[FFVector]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, FFVector::len);
        if cols.iter().any(|v| v.len() != r) {
            return Err(FfError::Dimension("columns of unequal length".into()));
        }
        let mut m = Self::zero(p, r, c);
        for (j, v) in cols.iter().enumerate() {
            for i in 0..r {
                m.set(i, j, v.get(i));
            }
        }
        Ok(m)
    }

    /// Companion matrix of a monic polynomial `f = X^m + c_{m-1}X^{m-1} + ... + c_0`:
    /// ones on the subdiagonal, last column `-c_0, ..., -c_{m-1}`. It is the
    /// matrix of multiplication by `X` on `F_p[X]/(f)` in the basis
    /// `1, X, ..., X^{m-1}`.
    pub fn companion(f: &FFPolynomial) -> Self {
        let p = f.modulus();
        let m = f.degree().expect("companion of zero polynomial");
        debug_assert!(f.is_monic());
        let mut c = Self::zero(p, m, m);
        for k in 0..m {
            if k + 1 < m {
                c.set(k + 1, k, 1);
            }
            c.set(k, m - 1, neg_mod(f.coeff(k), p));
        }
        c
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diagonal(p: u64, blocks: &[FFMatrix]) -> Self {
        let n = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zero(p, n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        out
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> FFVector {
        FFVector::new(self.p, (0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(FfError::ModulusMismatch(self.p, other.p));
        }
        if self.cols != other.rows {
            return Err(FfError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p;
        let mut out = Self::zero(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = add_mod(out.data[idx], mul_mod(a, other.get(k, j), p), p);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &FFVector) -> Result<FFVector> {
        if self.cols != v.len() {
            return Err(FfError::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let p = self.p;
        let data = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.as_slice())
                    .fold(0, |acc, (&a, &b)| add_mod(acc, mul_mod(a, b, p), p))
            })
            .collect();
        Ok(FFVector::new(p, data))
    }

    pub fn pow(&self, e: &BigUint) -> Result<Self> {
        if !self.is_square() {
            return Err(FfError::Dimension("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(self.p, self.rows);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc)?;
            if e.bit(i) {
                acc = acc.mul(self)?;
            }
        }
        Ok(acc)
    }

    /// Row echelon reduction; returns (reduced matrix, pivot columns, determinant
    /// when square).
    fn echelon(&self) -> (Self, Vec<usize>, u64) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det = 1u64;
        let mut r = 0;
        for c in 0..m.cols {
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                det = 0;
                continue;
            };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
                det = neg_mod(det, p);
            }
            let lead = m.get(r, c);
            det = mul_mod(det, lead, p);
            let inv = inv_mod(lead, p).expect("prime field");
            for j in 0..m.cols {
                let v = mul_mod(m.get(r, j), inv, p);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = sub_mod(m.get(i, j), mul_mod(f, m.get(r, j), p), p);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        if !self.is_square() || pivots.len() < self.rows {
            det = 0;
        }
        (m, pivots, det)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn determinant(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(FfError::Dimension("determinant of a non-square matrix".into()));
        }
        Ok(self.echelon().2)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(FfError::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zero(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (red, pivots, _) = aug.echelon();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(FfError::Singular);
        }
        let mut inv = Self::zero(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// Basis of the right null space `{ v : self * v = 0 }`.
    pub fn null_space(&self) -> Vec<FFVector> {
        let p = self.p;
        let (red, pivots, _) = self.echelon();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = neg_mod(red.get(r, free), p);
            }
            basis.push(FFVector::new(p, v));
        }
        basis
    }

    /// `f(self) * v` by Horner's rule.
    pub fn poly_apply(&self, f: &FFPolynomial, v: &FFVector) -> Result<FFVector> {
        let mut acc = FFVector::zero(self.p, v.len());
        for &c in f.coeffs().iter().rev() {
            acc = self.mul_vec(&acc)?.add(&v.scale(c));
        }
        Ok(acc)
    }
}

impl fmt::Debug for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `p=<prime>` header followed by bracketed rows.
impl fmt::Display for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} [", self.p)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let m = FFMatrix::from_i64_rows(5, &[&[1, 2, 0], &[0, 1, 3], &[4, 0, 2]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn singular_is_rejected() {
        let m = FFMatrix::from_i64_rows(3, &[&[1, 2], &[2, 1]]).unwrap();
        assert_eq!(m.determinant().unwrap(), 0);
        assert_eq!(m.inverse(), Err(FfError::Singular));
    }

    #[test]
    fn determinant_sign() {
        let m = FFMatrix::from_i64_rows(7, &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(m.determinant().unwrap(), 6);
    }

    #[test]
    fn null_space_is_annihilated() {
        let m = FFMatrix::from_i64_rows(3, &[&[1, 1, 2, 0], &[2, 2, 1, 0]]).unwrap();
        let ns = m.null_space();
        assert_eq!(ns.len(), 4 - m.rank());
        for v in ns {
            assert!(m.mul_vec(&v).unwrap().is_zero());
        }
    }

    #[test]
    fn companion_acts_as_multiplication_by_x() {
        // f = X^3 + 2X + 1 over F_3; C * e_2 = X^3 = -2X - 1 = X + 2
        let f = FFPolynomial::from_i64(3, &[1, 2, 0, 1]);
        let c = FFMatrix::companion(&f);
        let v = c.mul_vec(&FFVector::unit(3, 3, 2)).unwrap();
        assert_eq!(v.as_slice(), &[2, 1, 0]);
        assert!(c.poly_apply(&f, &FFVector::unit(3, 3, 0)).unwrap().is_zero());
    }
}
