//! Polynomial factorization over `F_p`.
//!
//! Squarefree decomposition first, then a Rabin irreducibility test on each
//! squarefree part; parts that fail it are split with the deterministic
//! Berlekamp algorithm (kernel of `Q - I`, then gcds against `v - s` for
//! every constant `s`). The deterministic splitting loop is linear in `p`,
//! so it is meant for small primes.

use num_bigint::BigUint;

use crate::intfact::factor_integer;
use crate::matrix::FFMatrix;
use crate::poly::FFPolynomial;
use crate::{FfError, Result};

/// `unit * prod factor_i^{mult_i}` with monic irreducible factors sorted by
/// (degree, coefficients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFactorization {
    pub unit: u64,
    pub factors: Vec<(FFPolynomial, u32)>,
}

impl PolyFactorization {
    pub fn reconstruct(&self, p: u64) -> FFPolynomial {
        let mut acc = FFPolynomial::constant(p, self.unit);
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(u64::from(*m)));
        }
        acc
    }
}

/// `g` with `g(X^p) = f(X)`; requires `f' = 0`.
fn pth_root(f: &FFPolynomial) -> FFPolynomial {
    let p = f.modulus() as usize;
    let coeffs = f.coeffs().iter().step_by(p).copied().collect();
    FFPolynomial::new(f.modulus(), coeffs)
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, m)` with each
/// `g` squarefree, pairwise coprime, and `f = prod g^m`.
pub fn squarefree_decomposition(f: &FFPolynomial) -> Vec<(FFPolynomial, u32)> {
    let p = f.modulus();
    let f = f.monic();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_decomposition(&pth_root(&f)) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_one() {
        for (g, m) in squarefree_decomposition(&pth_root(&c)) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// `X^(p^k) mod f`.
fn frobenius_power(f: &FFPolynomial, k: usize) -> FFPolynomial {
    let p = BigUint::from(f.modulus());
    let mut h = FFPolynomial::x(f.modulus()).rem(f);
    for _ in 0..k {
        h = h.pow_mod(&p, f);
    }
    h
}

/// Rabin's irreducibility test: `f` of degree `n` is irreducible iff
/// `X^(p^n) = X mod f` and `gcd(X^(p^(n/q)) - X, f) = 1` for each prime `q | n`.
pub fn is_irreducible(f: &FFPolynomial) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = f.monic();
    let x = FFPolynomial::x(f.modulus());
    if frobenius_power(&f, n) != x.rem(&f) {
        return false;
    }
    factor_integer(n as u64).primes().into_iter().all(|q| {
        let h = frobenius_power(&f, n / q as usize).sub(&x);
        f.gcd(&h).is_one()
    })
}

/// Splits a monic squarefree polynomial into its irreducible factors.
fn berlekamp_split(f: &FFPolynomial) -> Vec<FFPolynomial> {
    let p = f.modulus();
    let n = f.degree().expect("nonzero");
    if n <= 1 {
        return vec![f.clone()];
    }
    // Row i of Q holds X^(i p) mod f; kernel of (Q - I)^T gives the
    // Berlekamp subalgebra { g : g^p = g mod f }.
    let xp = FFPolynomial::x(p).pow_mod_u64(p, f);
    let mut q = FFMatrix::zero(p, n, n);
    let mut row = FFPolynomial::one(p);
    for i in 0..n {
        for j in 0..n {
            q.set(i, j, row.coeff(j));
        }
        row = row.mul(&xp).rem(f);
    }
    let q_minus_i = {
        let mut m = q;
        for i in 0..n {
            let v = crate::arith::sub_mod(m.get(i, i), 1, p);
            m.set(i, i, v);
        }
        m.transpose()
    };
    let kernel = q_minus_i.null_space();
    let k = kernel.len();
    let mut factors = vec![f.clone()];
    if k == 1 {
        return factors;
    }
    for v in &kernel {
        let g = FFPolynomial::new(p, v.as_slice().to_vec());
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(factors.len());
        for h in factors {
            if h.degree() == Some(1) {
                next.push(h);
                continue;
            }
            let mut rest = h;
            for s in 0..p {
                if rest.degree() == Some(1) {
                    break;
                }
                let d = rest.gcd(&g.sub(&FFPolynomial::constant(p, s)));
                if !d.is_one() && d.degree() < rest.degree() {
                    rest = rest.div_exact(&d);
                    next.push(d);
                }
            }
            if !rest.is_one() {
                next.push(rest);
            }
        }
        factors = next;
        if factors.len() == k {
            break;
        }
    }
    debug_assert_eq!(factors.len(), k);
    factors
}

/// Complete factorization into monic irreducibles with multiplicities.
pub fn berlekamp_factor(f: &FFPolynomial) -> Result<PolyFactorization> {
    if f.is_zero() {
        return Err(FfError::ZeroPolynomial);
    }
    let unit = f.lead();
    let mut factors = Vec::new();
    for (part, m) in squarefree_decomposition(f) {
        if is_irreducible(&part) {
            factors.push((part, m));
            continue;
        }
        for g in berlekamp_split(&part) {
            debug_assert!(is_irreducible(&g));
            factors.push((g, m));
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(PolyFactorization { unit, factors })
}
