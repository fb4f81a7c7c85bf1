//! Group arithmetic on normal forms.
//!
//! Everything is built on one primitive, `multiply`, so that the counter
//! sees every product regardless of which backend performs it.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};

use crate::counter::OpCounter;
use crate::element::{ExponentVector, Word};
use crate::presentation::PcPresentation;

pub trait PcArith {
    /// The presentation whose normal forms this backend multiplies.
    fn presentation(&self) -> &PcPresentation;

    /// Normal form of `a * b`; counts exactly one multiplication.
    fn multiply(&self, a: &ExponentVector, b: &ExponentVector, ctr: &OpCounter) -> ExponentVector;

    fn identity(&self) -> ExponentVector {
        self.presentation().identity()
    }

    /// Inverse by clearing the leading coordinate one depth at a time:
    /// `r <- r * x_d^{p_d - e_d}` pushes the depth of `r` up, and the
    /// accumulated factors form `a^{-1}` already in normal form.
    fn inverse(&self, a: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        let pres = self.presentation();
        let n = pres.n();
        let mut r = a.clone();
        let mut h = pres.identity();
        while let Some((d, e)) = r.leading() {
            let f = ExponentVector::generator_power(n, d, pres.relative_order(d) - e);
            r = self.multiply(&r, &f, ctr);
            h = self.multiply(&h, &f, ctr);
        }
        h
    }

    fn power_u64(&self, a: &ExponentVector, e: u64, ctr: &OpCounter) -> ExponentVector {
        self.power_big(a, &BigUint::from(e), ctr)
    }

    /// Square-and-multiply, most significant bit first.
    fn power_big(&self, a: &ExponentVector, e: &BigUint, ctr: &OpCounter) -> ExponentVector {
        let mut acc = self.identity();
        if e.is_zero() || a.is_identity() {
            return acc;
        }
        for i in (0..e.bits()).rev() {
            if !acc.is_identity() {
                acc = self.multiply(&acc, &acc, ctr);
            }
            if e.bit(i) {
                acc = self.multiply(&acc, a, ctr);
            }
        }
        ctr.add_bit_ops(e.bits());
        acc
    }

    fn power(&self, a: &ExponentVector, e: &BigInt, ctr: &OpCounter) -> ExponentVector {
        match e.sign() {
            Sign::Minus => self.power_big(&self.inverse(a, ctr), e.magnitude(), ctr),
            _ => self.power_big(a, e.magnitude(), ctr),
        }
    }

    fn power_i64(&self, a: &ExponentVector, e: i64, ctr: &OpCounter) -> ExponentVector {
        self.power(a, &BigInt::from(e), ctr)
    }

    /// `a^b = b^{-1} a b`.
    fn conjugate(&self, a: &ExponentVector, b: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        let bi = self.inverse(b, ctr);
        let t = self.multiply(&bi, a, ctr);
        self.multiply(&t, b, ctr)
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    fn commutator(&self, a: &ExponentVector, b: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        let ba = self.multiply(b, a, ctr);
        let ab = self.multiply(a, b, ctr);
        let inv = self.inverse(&ba, ctr);
        self.multiply(&inv, &ab, ctr)
    }

    /// Folds a word with arbitrary integer exponents.
    fn evaluate_word(&self, w: &Word, ctr: &OpCounter) -> ExponentVector {
        let pres = self.presentation();
        let mut acc = self.identity();
        for &(i, e) in w.letters() {
            let p = i64::from(pres.relative_order(i));
            let f = if (0..p).contains(&e) {
                ExponentVector::generator_power(pres.n(), i, e.to_u32().unwrap())
            } else {
                self.power_i64(&pres.generator(i), e, ctr)
            };
            acc = self.multiply(&acc, &f, ctr);
        }
        acc
    }

    /// `prod_k imgs[k]^{v_k}`: substitution of a normal form into images.
    fn substitute(&self, imgs: &[ExponentVector], v: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        let mut acc = self.identity();
        for (k, &e) in v.as_slice().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let f = if e == 1 { imgs[k].clone() } else { self.power_u64(&imgs[k], u64::from(e), ctr) };
            acc = self.multiply(&acc, &f, ctr);
        }
        acc
    }
}

impl PcArith for PcPresentation {
    fn presentation(&self) -> &PcPresentation {
        self
    }

    fn multiply(&self, a: &ExponentVector, b: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        ctr.bump_multiplications();
        let mut steps = 0;
        let r = self.collect_product(a, b, &mut steps);
        ctr.add_bit_ops(steps);
        r
    }
}
