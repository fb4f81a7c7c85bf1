//! Orders of polynomials and matrices, and cycle lengths of the zero vector
//! under affine maps `v -> Mv + t` over `F_p`.
//!
//! Every result is certified before it is returned: the value `n` satisfies
//! the defining identity and `n / q` fails it for each prime `q | n`.

use num_bigint::BigUint;

use crate::factor::berlekamp_factor;
use crate::intfact::{factor_integer, IntFactorization};
use crate::matrix::{FFMatrix, FFVector};
use crate::poly::FFPolynomial;
use crate::rcf::rcf;
use crate::{FfError, Result};

/// Order of `X` modulo `q^m` for a monic irreducible `q != X`: `ord(q)` is
/// the least divisor of `p^deg(q) - 1` that works, and
/// `ord(q^m) = ord(q) * p^t` with `t` minimal such that `p^t >= m`.
pub fn poly_order_of_irreducible_power(q: &FFPolynomial, m: u32) -> Result<IntFactorization> {
    let p = q.modulus();
    let e = q.degree().ok_or(FfError::ZeroPolynomial)?;
    if q.coeff(0) == 0 {
        return Err(FfError::DivisibleByX);
    }
    let q = q.monic();
    let x = FFPolynomial::x(p);
    let group_order = u32::try_from(e)
        .ok()
        .and_then(|e| p.checked_pow(e))
        .ok_or_else(|| FfError::Overflow(format!("{p}^{e}")))?
        - 1;
    let mut ord = factor_integer(group_order);
    for r in ord.primes() {
        while let Some(smaller) = ord.div_prime(r) {
            if x.pow_mod(&smaller.value(), &q).is_one() {
                ord = smaller;
            } else {
                break;
            }
        }
    }
    let mut t = 0u32;
    let mut pt = 1u64;
    while pt < u64::from(m) {
        pt = pt.saturating_mul(p);
        t += 1;
    }
    Ok(ord.mul(&IntFactorization::prime_power(p, t)))
}

fn certify_poly_order(f: &FFPolynomial, n: &IntFactorization) -> Result<()> {
    let x = FFPolynomial::x(f.modulus());
    if !x.pow_mod(&n.value(), f).is_one() {
        return Err(FfError::Certificate(format!("X^{n} != 1 mod {f}")));
    }
    for q in n.primes() {
        let smaller = n.div_prime(q).expect("q divides n");
        if x.pow_mod(&smaller.value(), f).is_one() {
            return Err(FfError::Certificate(format!("X^{smaller} = 1 mod {f}")));
        }
    }
    Ok(())
}

/// Smallest `n >= 1` with `X^n = 1 mod f`, for `f` with nonzero constant term.
pub fn poly_order(f: &FFPolynomial) -> Result<IntFactorization> {
    if f.is_zero() {
        return Err(FfError::ZeroPolynomial);
    }
    if f.coeff(0) == 0 {
        return Err(FfError::DivisibleByX);
    }
    let f = f.monic();
    let mut ord = IntFactorization::one();
    for (q, m) in berlekamp_factor(&f)?.factors {
        ord = ord.lcm(&poly_order_of_irreducible_power(&q, m)?);
    }
    certify_poly_order(&f, &ord)?;
    Ok(ord)
}

/// Multiplicative order of an invertible matrix: the order of its minimal
/// polynomial.
pub fn matrix_order(m: &FFMatrix) -> Result<IntFactorization> {
    let decomposition = rcf(m)?;
    let ord = poly_order(&decomposition.minimal_polynomial())?;
    let n = m.rows();
    if !m.pow(&ord.value())?.is_identity() {
        return Err(FfError::Certificate(format!("M^{ord} != I")));
    }
    for q in ord.primes() {
        let smaller = ord.div_prime(q).expect("q divides ord");
        if n > 0 && m.pow(&smaller.value())?.is_identity() {
            return Err(FfError::Certificate(format!("M^{smaller} = I")));
        }
    }
    Ok(ord)
}

/// The `n`-fold composite of `v -> Mv + t`, returned as its linear part and
/// translation.
pub fn affine_power(m: &FFMatrix, t: &FFVector, n: &BigUint) -> Result<(FFMatrix, FFVector)> {
    let p = m.modulus();
    let mut acc_m = FFMatrix::identity(p, m.rows());
    let mut acc_t = FFVector::zero(p, t.len());
    for i in (0..n.bits()).rev() {
        // acc <- acc o acc
        acc_t = acc_m.mul_vec(&acc_t)?.add(&acc_t);
        acc_m = acc_m.mul(&acc_m)?;
        if n.bit(i) {
            // acc <- (M, t) o acc
            acc_t = m.mul_vec(&acc_t)?.add(t);
            acc_m = m.mul(&acc_m)?;
        }
    }
    Ok((acc_m, acc_t))
}

/// Cycle length of `0` under `v -> Mv + t`.
///
/// After moving to rational canonical form each companion block is the
/// multiplication-by-`X` map on `F_p[X]/(f)`, where the orbit of `0` is
/// `S (1 + X + ... + X^{n-1})`. Splitting `f` into prime powers `Q^m` and
/// setting `v = val_Q(S mod Q^m)`, the block contributes the order of
/// `Q^{m - v + [Q = X - 1]}`.
pub fn affine_cycle_length_zero(m: &FFMatrix, t: &FFVector) -> Result<IntFactorization> {
    if !m.is_square() || m.rows() != t.len() {
        return Err(FfError::Dimension(format!(
            "{}x{} matrix with vector of length {}",
            m.rows(),
            m.cols(),
            t.len()
        )));
    }
    if m.modulus() != t.modulus() {
        return Err(FfError::ModulusMismatch(m.modulus(), t.modulus()));
    }
    let p = m.modulus();
    if t.is_zero() {
        if !m.is_invertible() {
            return Err(FfError::Singular);
        }
        return Ok(IntFactorization::one());
    }
    let decomposition = rcf(m)?;
    let t_new = decomposition.transform_inv.mul_vec(t)?;
    let x_minus_one = FFPolynomial::linear_root(p, 1);
    let mut length = IntFactorization::one();
    for (f, range) in decomposition
        .invariant_factors
        .iter()
        .zip(decomposition.block_ranges())
    {
        let s = FFPolynomial::new(p, t_new.as_slice()[range].to_vec());
        if s.is_zero() {
            continue;
        }
        for (q, mult) in berlekamp_factor(f)?.factors {
            let s_local = s.rem(&q.pow(u64::from(mult)));
            let Some(v) = s_local.valuation(&q) else { continue };
            let bump = u32::from(q == x_minus_one);
            let e = mult - v as u32 + bump;
            length = length.lcm(&poly_order_of_irreducible_power(&q, e)?);
        }
    }
    let (_, image) = affine_power(m, t, &length.value())?;
    if !image.is_zero() {
        return Err(FfError::Certificate(format!("A^{length}(0) != 0")));
    }
    for q in length.primes() {
        let smaller = length.div_prime(q).expect("q divides length");
        if affine_power(m, t, &smaller.value())?.1.is_zero() {
            return Err(FfError::Certificate(format!("A^{smaller}(0) = 0")));
        }
    }
    Ok(length)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(f: &IntFactorization) -> u64 {
        f.to_u64().unwrap()
    }

    #[test]
    fn poly_order_examples() {
        assert_eq!(val(&poly_order(&FFPolynomial::linear_root(7, 1)).unwrap()), 1);
        assert_eq!(val(&poly_order(&FFPolynomial::from_i64(2, &[1, 1, 1])).unwrap()), 3);
        assert_eq!(val(&poly_order(&FFPolynomial::from_i64(2, &[1, 0, 1])).unwrap()), 2);
        assert_eq!(
            poly_order(&FFPolynomial::from_i64(3, &[0, 1, 1])),
            Err(FfError::DivisibleByX)
        );
    }

    #[test]
    fn matrix_order_examples() {
        assert_eq!(val(&matrix_order(&FFMatrix::identity(3, 2)).unwrap()), 1);
        let j = FFMatrix::from_i64_rows(5, &[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(val(&matrix_order(&j).unwrap()), 5);
        let c = FFMatrix::companion(&FFPolynomial::from_i64(2, &[1, 1, 1]));
        assert_eq!(val(&matrix_order(&c).unwrap()), 3);
        let sing = FFMatrix::from_i64_rows(2, &[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(matrix_order(&sing), Err(FfError::Singular));
    }

    #[test]
    fn affine_examples() {
        let id = FFMatrix::identity(3, 2);
        assert_eq!(val(&affine_cycle_length_zero(&id, &FFVector::zero(3, 2)).unwrap()), 1);
        let one = FFMatrix::identity(3, 1);
        assert_eq!(val(&affine_cycle_length_zero(&one, &FFVector::new(3, vec![1])).unwrap()), 3);
        let j = FFMatrix::from_i64_rows(2, &[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(val(&affine_cycle_length_zero(&j, &FFVector::new(2, vec![0, 1])).unwrap()), 4);
    }
}
