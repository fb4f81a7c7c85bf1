mod common;

use common::*;
use num_bigint::BigUint;
use pcdyn_core::*;
use proptest::prelude::*;

/// S4 on the pcgs ((0 1), (0 1 2), (0 1)(2 3), (0 2)(1 3)).
const S4: &str = "pcpres 1\nn 4\norders 2 3 2 2\nconj 2 1 = 2^2\nconj 4 1 = 3 4\nconj 3 2 = 3 4\nconj 4 2 = 3\n";

fn s4_element() -> impl Strategy<Value = ExponentVector> {
    (0u32..2, 0u32..3, 0u32..2, 0u32..2).prop_map(|(a, b, c, d)| ev(&[a, b, c, d]))
}

proptest! {
    #[test]
    fn group_laws(a in s4_element(), b in s4_element(), c in s4_element(), e in -30i64..30) {
        let p = pres(S4);
        let ctr = OpCounter::new();
        let ab = p.multiply(&a, &b, &ctr);
        prop_assert_eq!(p.multiply(&ab, &c, &ctr), p.multiply(&a, &p.multiply(&b, &c, &ctr), &ctr));
        prop_assert!(p.multiply(&a, &p.inverse(&a, &ctr), &ctr).is_identity());
        let pe = p.power_i64(&a, e, &ctr);
        let mut acc = p.identity();
        let step = if e >= 0 { a.clone() } else { p.inverse(&a, &ctr) };
        for _ in 0..e.unsigned_abs() {
            acc = p.multiply(&acc, &step, &ctr);
        }
        prop_assert_eq!(pe, acc);
        let c1 = p.commutator(&a, &b, &ctr);
        prop_assert_eq!(p.multiply(&p.inverse(&a, &ctr), &p.conjugate(&a, &b, &ctr), &ctr), c1);
    }

    #[test]
    fn transforms_preserve_products(g in s4_element(), a in s4_element(), b in s4_element()) {
        prop_assume!(!g.is_identity());
        let p = pres(S4);
        let ctr = OpCounter::new();
        let (q, iso) = elementary_transform(&p, &g, &ctr).unwrap();
        let fa = iso.map_forward(&a, &ctr);
        let fb = iso.map_forward(&b, &ctr);
        prop_assert_eq!(q.multiply(&fa, &fb, &ctr), iso.map_forward(&p.multiply(&a, &b, &ctr), &ctr));
        prop_assert_eq!(emulated_multiply(&iso, &fa, &fb, &ctr).unwrap(), q.multiply(&fa, &fb, &ctr));
        prop_assert_eq!(iso.map_backward(&fa, &ctr), a);
    }

    #[test]
    fn inner_orders(h in s4_element()) {
        let p = pres(S4);
        let ctr = OpCounter::new();
        let alpha = PcAutomorphism::inner(p.clone(), &h, &ctr).unwrap();
        let o = automorphism_order(&alpha, DynOptions { debug_invariants: true, ..Default::default() }, &ctr).unwrap();
        prop_assert_eq!(o.value.to_u64(), Some(brute_order(&alpha)));
        prop_assert!(alpha.power(&o.value.value(), &ctr).is_identity());
        for q in o.value.primes() {
            prop_assert!(!alpha.power(&(o.value.value() / BigUint::from(q)), &ctr).is_identity());
        }
    }
}
