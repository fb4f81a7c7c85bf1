//! Dense univariate polynomials over `F_p`, coefficients low degree first.

use std::fmt;

use num_bigint::BigUint;

use crate::arith::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FFPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

impl FFPolynomial {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = Self {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        f.trim();
        f
    }

    pub fn from_i64(p: u64, coeffs: &[i64]) -> Self {
        Self::new(p, coeffs.iter().map(|&c| crate::arith::reduce_i64(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    /// The monomial `X`.
    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    /// `X - a`.
    pub fn linear_root(p: u64, a: u64) -> Self {
        Self::new(p, vec![neg_mod(a % p, p), 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lead(), self.p).expect("nonzero lead in a prime field");
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| add_mod(self.coeff(i), other.coeff(i), self.p)).collect();
        Self::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| sub_mod(self.coeff(i), other.coeff(i), self.p)).collect();
        Self::new(self.p, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| neg_mod(a, self.p)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        Self::new(p, out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.p);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let inv_lead = inv_mod(divisor.lead(), p).expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = mul_mod(rem[i + dd], inv_lead, p);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = sub_mod(rem[i + j], mul_mod(c, d, p), p);
            }
        }
        rem.truncate(dd);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; debug-asserts that the remainder vanishes.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect();
        Self::new(p, coeffs)
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(modulus);
        let base = self.rem(modulus);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn pow_mod_u64(&self, e: u64, modulus: &Self) -> Self {
        self.pow_mod(&BigUint::from(e), modulus)
    }

    /// Largest `v` with `factor^v | self`; `None` for the zero polynomial.
    pub fn valuation(&self, factor: &Self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(factor);
            if !r.is_zero() {
                return Some(v);
            }
            cur = q;
            v += 1;
        }
    }

    /// Evaluates at a scalar.
    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
    }
}

impl fmt::Debug for FFPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Coefficient list, low degree first, e.g. `p=2 [1,1,1]` for `X^2+X+1`.
impl fmt::Display for FFPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} [", self.p)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let a = FFPolynomial::from_i64(7, &[3, 0, 5, 1, 6]);
        let b = FFPolynomial::from_i64(7, &[1, 2, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn gcd_and_valuation() {
        let p = 5;
        let xm1 = FFPolynomial::linear_root(p, 1);
        let xp1 = FFPolynomial::linear_root(p, 4);
        let f = xm1.pow(3).mul(&xp1);
        assert_eq!(f.valuation(&xm1), Some(3));
        assert_eq!(f.gcd(&xp1.pow(2)), xp1);
        assert_eq!(FFPolynomial::zero(p).valuation(&xm1), None);
    }

    #[test]
    fn derivative_in_char_p() {
        // d/dX (X^3 + X) = 3X^2 + 1 = X^2 + 1 over F_2
        let f = FFPolynomial::from_i64(2, &[0, 1, 0, 1]);
        assert_eq!(f.derivative(), FFPolynomial::from_i64(2, &[1, 0, 1]));
        assert!(FFPolynomial::from_i64(3, &[1, 0, 0, 1]).derivative().is_zero());
    }

    #[test]
    fn powmod_matches_naive() {
        let m = FFPolynomial::from_i64(3, &[2, 1, 0, 1]);
        let x = FFPolynomial::x(3);
        let mut naive = FFPolynomial::one(3);
        for e in 0..30u64 {
            assert_eq!(x.pow_mod_u64(e, &m), naive, "e = {e}");
            naive = naive.mul(&x).rem(&m);
        }
    }
}
