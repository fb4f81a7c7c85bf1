use pcdyn_ffield::{
    affine_cycle_length_zero, berlekamp_factor, is_irreducible, matrix_order, poly_order, rcf,
    FFMatrix, FFPolynomial, FFVector,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_invertible(rng: &mut ChaCha8Rng, p: u64, d: usize) -> FFMatrix {
    loop {
        let rows: Vec<Vec<u64>> = (0..d).map(|_| (0..d).map(|_| rng.gen_range(0..p)).collect()).collect();
        let m = FFMatrix::from_rows(p, &rows).unwrap();
        if m.is_invertible() {
            return m;
        }
    }
}

fn brute_matrix_order(m: &FFMatrix) -> u64 {
    let mut acc = m.clone();
    let mut k = 1;
    while !acc.is_identity() {
        acc = acc.mul(m).unwrap();
        k += 1;
    }
    k
}

fn brute_affine_zero(m: &FFMatrix, t: &FFVector) -> u64 {
    let mut v = t.clone();
    let mut k = 1;
    while !v.is_zero() {
        v = m.mul_vec(&v).unwrap().add(t);
        k += 1;
    }
    k
}

fn brute_poly_order(f: &FFPolynomial) -> u64 {
    let x = FFPolynomial::x(f.modulus());
    let mut acc = x.rem(f);
    let mut n = 1;
    while !acc.is_one() {
        acc = acc.mul(&x).rem(f);
        n += 1;
    }
    n
}

#[test]
fn random_matrices_match_iteration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for p in [2u64, 3, 5, 7] {
        for _ in 0..100 {
            let d = rng.gen_range(1..=5);
            let m = random_invertible(&mut rng, p, d);
            let t = FFVector::new(p, (0..d).map(|_| rng.gen_range(0..p)).collect());
            assert_eq!(matrix_order(&m).unwrap().to_u64().unwrap(), brute_matrix_order(&m), "{m}");
            assert_eq!(
                affine_cycle_length_zero(&m, &t).unwrap().to_u64().unwrap(),
                brute_affine_zero(&m, &t),
                "{m} {t}"
            );
        }
    }
}

#[test]
fn unipotent_translations_hit_the_x_minus_one_branch() {
    // Jordan blocks for eigenvalue 1 make every factor equal to X - 1.
    for p in [2u64, 3, 5] {
        for d in 1..=5 {
            let mut m = FFMatrix::identity(p, d);
            for i in 0..d - 1 {
                m.set(i, i + 1, 1);
            }
            for last in 0..p {
                let mut data = vec![0; d];
                data[d - 1] = last;
                let t = FFVector::new(p, data);
                assert_eq!(
                    affine_cycle_length_zero(&m, &t).unwrap().to_u64().unwrap(),
                    brute_affine_zero(&m, &t)
                );
            }
        }
    }
}

#[test]
fn poly_order_exhaustive_small() {
    for p in [2u64, 3, 5] {
        for deg in 1..=4usize {
            let count = p.pow(deg as u32);
            for code in 0..count {
                let mut coeffs = Vec::with_capacity(deg + 1);
                let mut c = code;
                for _ in 0..deg {
                    coeffs.push(c % p);
                    c /= p;
                }
                coeffs.push(1);
                if coeffs[0] == 0 {
                    continue;
                }
                let f = FFPolynomial::new(p, coeffs);
                assert_eq!(poly_order(&f).unwrap().to_u64().unwrap(), brute_poly_order(&f), "{f}");
            }
        }
    }
}

fn poly_strategy(p: u64) -> impl Strategy<Value = FFPolynomial> {
    prop::collection::vec(0..p, 1..9).prop_map(move |c| FFPolynomial::new(p, c))
}

proptest! {
    #[test]
    fn factorization_reconstructs(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let deg = rng.gen_range(0..10usize);
        let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
        coeffs.push(rng.gen_range(1..p));
        let f = FFPolynomial::new(p, coeffs);
        let fact = berlekamp_factor(&f).unwrap();
        prop_assert_eq!(fact.reconstruct(p), f);
        for (g, m) in &fact.factors {
            prop_assert!(is_irreducible(g));
            prop_assert!(g.is_monic());
            prop_assert!(*m >= 1);
        }
    }

    #[test]
    fn rcf_similarity(p in prop::sample::select(vec![2u64, 3, 5, 7]), d in 1usize..7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_invertible(&mut rng, p, d);
        let dec = rcf(&m).unwrap();
        let conj = dec.transform_inv.mul(&m).unwrap().mul(&dec.transform).unwrap();
        prop_assert_eq!(conj, dec.canonical_form());
        for w in dec.invariant_factors.windows(2) {
            prop_assert!(w[0].divides(&w[1]));
        }
        let mut charpoly = FFPolynomial::one(p);
        for f in &dec.invariant_factors {
            charpoly = charpoly.mul(f);
        }
        prop_assert_eq!(charpoly.degree(), Some(d));
    }

    #[test]
    fn gcd_divides_both(a in poly_strategy(5), b in poly_strategy(5)) {
        let g = a.gcd(&b);
        if !g.is_zero() {
            prop_assert!(g.divides(&a));
            prop_assert!(g.divides(&b));
        }
    }
}

#[test]
fn thousand_random_factorizations_per_field() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xfac7);
    for p in [2u64, 3, 5, 7, 11] {
        for _ in 0..1000 {
            let deg = rng.gen_range(1..=10usize);
            let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
            coeffs.push(rng.gen_range(1..p));
            let f = FFPolynomial::new(p, coeffs);
            let fact = berlekamp_factor(&f).unwrap();
            assert_eq!(fact.reconstruct(p), f);
            assert!(fact.factors.iter().all(|(g, m)| is_irreducible(g) && g.is_monic() && *m >= 1), "{f}");
        }
    }
}
