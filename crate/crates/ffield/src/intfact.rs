//! Integer primality and factorization for 64-bit inputs.
//!
//! Deterministic Miller-Rabin (a witness set that is exact below 2^64),
//! trial division by small primes, and Brent's variant of Pollard rho for
//! whatever is left over.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{add_mod, mul_mod, pow_mod};

const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const TRIAL_BOUND: u64 = 1000;

/// A positive integer stored as its prime factorization.
///
/// Orders computed in this workspace are kept in this form so that the
/// primes dividing them are available for minimality checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntFactorization {
    factors: BTreeMap<u64, u32>,
}

impl IntFactorization {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn prime_power(p: u64, e: u32) -> Self {
        let mut f = Self::one();
        if e > 0 {
            f.factors.insert(p, e);
        }
        f
    }

    /// Builds a factorization from `(prime, multiplicity)` pairs, merging
    /// repeated primes. The caller is responsible for primality.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u32)>>(pairs: I) -> Self {
        let mut f = Self::one();
        for (p, e) in pairs {
            if e > 0 {
                *f.factors.entry(p).or_insert(0) += e;
            }
        }
        f
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn primes(&self) -> Vec<u64> {
        self.factors.keys().copied().collect()
    }

    pub fn multiplicity(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn value(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&p, &e) in &self.factors {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    /// The value as a `u64`, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for (&p, &e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p)?;
            }
        }
        Some(acc)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&p, &e) in &other.factors {
            *out.factors.entry(p).or_insert(0) += e;
        }
        out
    }

    pub fn mul_prime(&self, p: u64) -> Self {
        self.mul(&Self::prime_power(p, 1))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&p, &e) in &other.factors {
            let slot = out.factors.entry(p).or_insert(0);
            *slot = (*slot).max(e);
        }
        out
    }

    /// `self / q`; `None` if `q` does not divide `self`.
    pub fn div_prime(&self, q: u64) -> Option<Self> {
        let mut out = self.clone();
        let e = out.factors.get_mut(&q)?;
        *e -= 1;
        if *e == 0 {
            out.factors.remove(&q);
        }
        Some(out)
    }
}

impl fmt::Display for IntFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Deterministic primality test for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's cycle-finding Pollard rho. `n` must be composite and odd.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| add_mod(mul_mod(x, x, n), c, n);
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_into(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_rho(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Full prime factorization of `n >= 1` (`1` gives the empty product).
pub fn factor_integer(mut n: u64) -> IntFactorization {
    assert!(n >= 1, "factor_integer expects a positive integer");
    let mut factors = BTreeMap::new();
    let mut p = 2u64;
    while p <= TRIAL_BOUND && p * p <= n {
        while n.is_multiple_of(p) {
            *factors.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split_into(n, &mut factors);
    IntFactorization { factors }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(mut n: u64) -> BTreeMap<u64, u32> {
        let mut out = BTreeMap::new();
        let mut p = 2;
        while p * p <= n {
            while n.is_multiple_of(p) {
                *out.entry(p).or_insert(0) += 1;
                n /= p;
            }
            p += 1;
        }
        if n > 1 {
            *out.entry(n).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn small_examples() {
        assert!(factor_integer(1).is_one());
        assert_eq!(factor_integer(15).pairs().collect::<Vec<_>>(), vec![(3, 1), (5, 1)]);
        assert_eq!(
            factor_integer(624).pairs().collect::<Vec<_>>(),
            vec![(2, 4), (3, 1), (13, 1)]
        );
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 1..5000u64 {
            assert_eq!(factor_integer(n).factors, trial_division(n), "n = {n}");
        }
        for n in [10006u64, 3u64.pow(20) - 1, 2u64.pow(31) - 1, 1_000_000_007 * 998_244_353] {
            let f = factor_integer(n);
            assert_eq!(f.to_u64(), Some(n));
            assert!(f.primes().into_iter().all(is_prime));
        }
    }

    #[test]
    fn primality() {
        let sieve: Vec<bool> = {
            let mut s = vec![true; 10_000];
            s[0] = false;
            s[1] = false;
            for i in 2..100 {
                if s[i] {
                    for j in (i * i..10_000).step_by(i) {
                        s[j] = false;
                    }
                }
            }
            s
        };
        for (n, &expected) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), expected, "n = {n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn factorization_arithmetic() {
        let a = IntFactorization::from_pairs([(2, 3), (3, 1)]);
        let b = IntFactorization::from_pairs([(2, 1), (5, 2)]);
        assert_eq!(a.lcm(&b).to_u64(), Some(8 * 3 * 25));
        assert_eq!(a.mul(&b).to_u64(), Some(24 * 50));
        assert_eq!(a.div_prime(3).unwrap().to_u64(), Some(8));
        assert!(a.div_prime(5).is_none());
    }
}
