//! Scalar arithmetic modulo a prime `p < 2^63`.

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

#[inline]
pub fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm, `None`
/// when `gcd(a, m) != 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i128) as u64)
}

/// Reduce a signed integer into `[0, p)`.
#[inline]
pub fn reduce_i64(a: i64, p: u64) -> u64 {
    (a as i128).rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        assert_eq!(inv_mod(2, 5), Some(3));
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(0, 7), None);
        assert_eq!(inv_mod(4, 8), None);
        for a in 1..101 {
            assert_eq!(mul_mod(a, inv_mod(a, 101).unwrap(), 101), 1);
        }
    }

    #[test]
    fn signed_reduction() {
        assert_eq!(reduce_i64(-1, 5), 4);
        assert_eq!(reduce_i64(7, 5), 2);
        assert_eq!(sub_mod(1, 3, 5), 3);
        assert_eq!(pow_mod(3, 4, 5), 1);
    }
}
