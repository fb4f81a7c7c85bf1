mod common;

use common::*;
use num_bigint::{BigInt, BigUint};
use pcdyn_core::*;

#[test]
fn arithmetic() {
    let ctr = OpCounter::new();
    let (c5, d4) = (pres(C5), pres(D4));
    assert_eq!(d4.multiply(&ev(&[0, 1, 0]), &ev(&[1, 0, 0]), &ctr), ev(&[1, 1, 1]));
    assert_eq!(c5.multiply(&ev(&[3]), &ev(&[4]), &ctr), ev(&[2]));
    for a in elements(&d4) {
        assert_eq!(d4.multiply(&a, &d4.identity(), &ctr), a);
        assert_eq!(d4.multiply(&a, &d4.inverse(&a, &ctr), &ctr), d4.identity());
    }
    assert_eq!(c5.inverse(&ev(&[2]), &ctr), ev(&[3]));
    assert_eq!(d4.inverse(&ev(&[1, 1, 0]), &ctr), ev(&[1, 1, 0]));
    assert_eq!(d4.power_i64(&ev(&[0, 1, 0]), 2, &ctr), ev(&[0, 0, 1]));
    assert_eq!(d4.power(&ev(&[1, 1, 1]), &BigInt::from(0), &ctr), d4.identity());
    assert_eq!(c5.power_i64(&ev(&[2]), -1, &ctr), ev(&[3]));
    assert_eq!(d4.depth(&ev(&[0, 0, 1])), 3);
    assert_eq!(d4.commutator(&ev(&[1, 0, 0]), &ev(&[0, 1, 0]), &ctr), ev(&[0, 0, 1]));
    assert_eq!(c5.evaluate_word(&Word(vec![(0, 7)]), &ctr), ev(&[2]));
    assert!(ctr.multiplications() > 0);
}

#[test]
fn maps() {
    let ctr = OpCounter::new();
    let (c5, d4) = (pres(C5), pres(D4));
    let r = ev(&[0, 1, 0]);
    let conj_r = PcAutomorphism::inner(d4.clone(), &r, &ctr).unwrap();
    assert_eq!(conj_r.images(), &[ev(&[1, 0, 1]), ev(&[0, 1, 0]), ev(&[0, 0, 1])]);
    assert_eq!(conj_r.apply(&ev(&[1, 0, 0]), &ctr), ev(&[1, 0, 1]));
    assert!(PcAutomorphism::inner(d4.clone(), &d4.identity(), &ctr).unwrap().is_identity());
    assert!(PcAutomorphism::inner(c5.clone(), &ev(&[3]), &ctr).unwrap().is_identity());

    let sq = PcAutomorphism::new(c5.clone(), vec![ev(&[2])]).unwrap();
    assert_eq!(sq.apply(&ev(&[3]), &ctr), ev(&[1]));
    assert_eq!(sq.compose(&sq, &ctr).images(), &[ev(&[4])]);
    assert_eq!(sq.compose(&PcAutomorphism::identity(c5.clone()), &ctr).images(), sq.images());
    assert!(sq.power(&BigUint::from(4u32), &ctr).is_identity());
    assert_eq!(sq.power(&BigUint::from(1u32), &ctr).images(), sq.images());

    let conj_r2 = PcAutomorphism::inner(d4.clone(), &ev(&[0, 0, 1]), &ctr).unwrap();
    let twice = conj_r.compose(&conj_r, &ctr);
    let squared = conj_r.power(&BigUint::from(2u32), &ctr);
    assert!(same_map(&d4, |x| twice.apply(x, &ctr), |x| conj_r2.apply(x, &ctr)));
    assert!(same_map(&d4, |x| squared.apply(x, &ctr), |x| conj_r2.apply(x, &ctr)));

    let tr = AffineMap::new(ev(&[1]), PcAutomorphism::identity(c5.clone())).unwrap();
    assert_eq!(tr.power(&BigUint::from(3u32), &ctr).unwrap().t, ev(&[3]));
    let id = AffineMap::identity(d4.clone());
    assert_eq!(id.power(&BigUint::from(7u32), &ctr).unwrap().t, d4.identity());
    assert!(matches!(id.power(&BigUint::from(0u32), &ctr), Err(PcError::ZeroPower)));
    let a1 = AffineMap::new(ev(&[0, 0, 1]), PcAutomorphism::identity(d4.clone())).unwrap();
    let a2 = AffineMap::new(d4.identity(), conj_r.clone()).unwrap();
    let c = a1.compose(&a2, &ctr);
    assert_eq!(c.t, ev(&[0, 0, 1]));
    assert_eq!(c.alpha.images(), conj_r.images());

    // x1 -> x1^2 does not respect x1^2 = x2 in C4 when x2 -> x2.
    let c4 = pres(C4);
    assert!(PcEndomorphism::new(c4.clone(), vec![ev(&[0, 1]), ev(&[0, 1])]).is_err());
    assert!(PcAutomorphism::new(d4.clone(), vec![ev(&[0, 0, 1]), ev(&[0, 1, 0]), ev(&[0, 0, 1])]).is_err());
}

#[test]
fn map_files_roundtrip() {
    let d4 = pres(D4);
    let imgs = vec![ev(&[1, 0, 1]), ev(&[0, 1, 0]), ev(&[0, 0, 1])];
    let text = format_map_file(&imgs, Some(&ev(&[0, 0, 1])));
    let mf = parse_map_file(&text, &d4).unwrap();
    assert_eq!(mf.images, imgs);
    assert_eq!(mf.t, Some(ev(&[0, 0, 1])));
}

#[test]
fn elementary_transforms() {
    let ctr = OpCounter::new();
    let (c5, d4) = (pres(C5), pres(D4));

    let (p, iso) = elementary_transform(&d4, &ev(&[0, 1, 0]), &ctr).unwrap();
    assert_eq!(*p, *d4);
    assert!(iso.is_identity());

    let (p, iso) = elementary_transform(&c5, &ev(&[2]), &ctr).unwrap();
    assert_eq!(*p, *c5);
    assert_eq!(iso.forward(), &[ev(&[3])]);
    assert_eq!(iso.backward(), &[ev(&[2])]);

    let (p, iso) = elementary_transform(&d4, &ev(&[0, 1, 1]), &ctr).unwrap();
    assert_eq!(p.order(), BigUint::from(8u32));
    iso.verify(&ctr).unwrap();
    for x in elements(&d4) {
        assert_eq!(iso.map_backward(&iso.map_forward(&x, &ctr), &ctr), x);
    }
    assert!(mult_table_ok(&p, &EmulatedArith::from_iso(&iso, &ctr).unwrap()));
    for a in elements(&p) {
        for b in elements(&p) {
            assert_eq!(emulated_multiply(&iso, &a, &b, &ctr).unwrap(), p.multiply(&a, &b, &ctr));
        }
    }
    let id = PcIsomorphism::identity(d4.clone());
    assert_eq!(emulated_multiply(&id, &ev(&[1, 1, 0]), &ev(&[0, 1, 1]), &ctr).unwrap(), d4.multiply(&ev(&[1, 1, 0]), &ev(&[0, 1, 1]), &ctr));

    assert!(matches!(elementary_transform(&d4, &d4.identity(), &ctr), Err(PcError::IdentityElement)));

    assert_eq!(reexpress(&*c5, &ev(&[2]), &ev(&[1]), &ctr).unwrap(), ev(&[3]));
    assert_eq!(reexpress(&*d4, &ev(&[0, 1, 1]), &ev(&[0, 1, 1]), &ctr).unwrap(), ev(&[0, 1, 0]));
    assert_eq!(reexpress(&*d4, &ev(&[0, 1, 1]), &d4.identity(), &ctr).unwrap(), d4.identity());
}

#[test]
fn modification_and_series() {
    let ctr = OpCounter::new();
    let d4 = pres(D4);
    let st = modify_by_element(Rebased::start(d4.clone()), &ev(&[0, 0, 1]), 2, MultMode::Direct, &ctr).unwrap();
    assert_eq!(st.weights, vec![1, 1, 2]);
    assert_eq!(*st.presentation, *d4);

    let st = modify_by_element(Rebased::start(d4.clone()), &d4.identity(), 3, MultMode::Direct, &ctr).unwrap();
    assert_eq!(st.weights, vec![1, 1, 1]);

    let st = exhibit_series(&d4, &[], MultMode::Direct, &ctr).unwrap();
    assert_eq!(st.weights, vec![1, 1, 1]);
    let center = induced_pcgs(&*d4, &[ev(&[0, 0, 1])], &ctr);
    for mode in [MultMode::Direct, MultMode::Emulate] {
        let st = exhibit_series(&d4, std::slice::from_ref(&center), mode, &ctr).unwrap();
        assert_eq!(st.weights, vec![1, 1, 2]);
        assert_eq!(*st.presentation, *d4);
    }

    let q8 = pres(Q8);
    let z = induced_pcgs(&*q8, &[ev(&[0, 0, 1])], &ctr);
    let st = exhibit_series(&q8, std::slice::from_ref(&z), MultMode::Direct, &ctr).unwrap();
    for (k, &w) in st.weights.iter().enumerate() {
        if w >= 2 {
            assert!(z.contains(&*q8, &st.iso.map_backward(&st.presentation.generator(k), &ctr), &ctr));
        }
    }
}

#[test]
fn lg_series_examples() {
    let ctr = OpCounter::new();
    let lg = lg_series(&*pres(C3XC3), &ctr).unwrap();
    assert_eq!((lg.r, lg.level_dims.clone(), lg.level_primes.clone()), (1, vec![2], vec![3]));

    for text in [D4, Q8] {
        let p = pres(text);
        let lg = lg_series(&*p, &ctr).unwrap();
        assert_eq!(lg.r, 2);
        let orders: Vec<u32> = lg.term_orders(&p).iter().map(|o| u32::try_from(o).unwrap()).collect();
        assert_eq!(orders, vec![8, 2, 1]);
        assert_eq!(lg.level_dims, vec![2, 1]);
        assert_eq!(lg.level_primes, vec![2, 2]);
    }

    let c33 = pres(C3XC3);
    let n = lg_normalize(&c33, MultMode::Direct, &ctr).unwrap();
    assert_eq!(*n.presentation, *c33);
    assert!(n.iso.is_identity());
    assert_eq!(n.lg.final_weights, vec![1, 1]);

    let d4 = pres(D4);
    let n = lg_normalize(&d4, MultMode::Direct, &ctr).unwrap();
    assert_eq!(n.lg.final_weights, vec![1, 1, 2]);
    assert!(n.to_text().contains("weights 1 1 2"));

    let sc = pres(D4_SCRAMBLED);
    for mode in [MultMode::Direct, MultMode::Emulate] {
        let n = lg_normalize(&sc, mode, &ctr).unwrap();
        n.iso.verify(&ctr).unwrap();
        assert!(n.lg.final_weights.windows(2).all(|w| w[0] <= w[1]));
        for x in elements(&sc) {
            assert_eq!(n.iso.map_backward(&n.iso.map_forward(&x, &ctr), &ctr), x);
        }
    }
}

#[test]
fn dynamics_examples() {
    let ctr = OpCounter::new();
    let opts = DynOptions { debug_invariants: true, ..Default::default() };
    let (c5, d4) = (pres(C5), pres(D4));
    let conj_r = PcAutomorphism::inner(d4.clone(), &ev(&[0, 1, 0]), &ctr).unwrap();

    let la = LeveledAutomorphism::new(&conj_r, Some(&d4.identity()), Some(&ev(&[1, 0, 0])), MultMode::Direct, &ctr).unwrap();
    la.check_filtration().unwrap();
    assert!(la.level_matrix(1).unwrap().is_identity());
    assert!(la.level_matrix(2).unwrap().is_identity());
    assert!(la.level_vector(1, &ctr).unwrap().is_zero());

    let ident = automorphism_order(&PcAutomorphism::identity(d4.clone()), opts, &ctr).unwrap();
    assert!(ident.value.is_one());
    let sq = PcAutomorphism::new(c5.clone(), vec![ev(&[2])]).unwrap();
    assert_eq!(automorphism_order(&sq, opts, &ctr).unwrap().value.to_u64(), Some(4));
    for mode in [MultMode::Direct, MultMode::Emulate] {
        let res = automorphism_order(&conj_r, DynOptions { mode, ..opts }, &ctr).unwrap();
        assert_eq!(res.value.to_u64(), Some(2));
        assert!(res.levels.iter().all(|l| l.value.is_one()));
        certify_automorphism_order(&conj_r, &res.value, &ctr).unwrap();
    }

    let one = automorphism_order(&PcAutomorphism::identity(c5.clone()), opts, &ctr).unwrap();
    assert!(one.value.is_one());
    let res = affine_cycle_length(&PcAutomorphism::identity(c5.clone()), &ev(&[1]), &c5.identity(), opts, &ctr).unwrap();
    assert_eq!(res.value.to_u64(), Some(5));
    let res = affine_cycle_length(&PcAutomorphism::identity(d4.clone()), &d4.identity(), &ev(&[1, 1, 0]), opts, &ctr).unwrap();
    assert!(res.value.is_one());
    let res = affine_cycle_length(&conj_r, &d4.identity(), &ev(&[1, 0, 0]), opts, &ctr).unwrap();
    assert_eq!(res.value.to_u64(), Some(2));
    let lam: Vec<u64> = res.levels.iter().map(|l| l.value.to_u64().unwrap()).collect();
    assert_eq!(lam, vec![1, 2]);
}

#[test]
fn preperiods() {
    let ctr = OpCounter::new();
    let c4 = pres(C4);
    let sq = PcEndomorphism::new(c4.clone(), vec![ev(&[0, 1]), ev(&[0, 0])]).unwrap();
    assert_eq!(endo_preperiod(&sq, &ev(&[1, 0]), &ctr).unwrap(), 2);
    assert_eq!(periodic_subgroup(&sq, &ctr).len(), 0);
    let triv = PcEndomorphism::new(c4.clone(), vec![ev(&[0, 0]), ev(&[0, 0])]).unwrap();
    assert_eq!(endo_preperiod(&triv, &c4.identity(), &ctr).unwrap(), 0);
    assert_eq!(endo_preperiod(&triv, &ev(&[0, 1]), &ctr).unwrap(), 1);
    let d4 = pres(D4);
    let conj_r = PcAutomorphism::inner(d4.clone(), &ev(&[0, 1, 0]), &ctr).unwrap();
    assert_eq!(periodic_subgroup(conj_r.as_endomorphism(), &ctr).len(), 3);
    for g in elements(&d4) {
        assert_eq!(endo_preperiod(conj_r.as_endomorphism(), &g, &ctr).unwrap(), 0);
    }
}

#[test]
fn orders_match_iteration() {
    let ctr = OpCounter::new();
    for text in [D4, Q8, D4_SCRAMBLED, C3XC3] {
        let p = pres(text);
        for h in elements(&p) {
            let a = PcAutomorphism::inner(p.clone(), &h, &ctr).unwrap();
            let res = automorphism_order(&a, DynOptions { debug_invariants: true, ..Default::default() }, &ctr).unwrap();
            assert_eq!(res.value.to_u64(), Some(brute_order(&a)), "{text} h={h}");
        }
    }
}

#[test]
fn normalize_sorts_weights() {
    // C4 x C2 on the pcgs (a, a^2, b): the Frattini generator sits between
    // two weight-1 generators.
    let ctr = OpCounter::new();
    let p = pres("pcpres 1\nn 3\norders 2 2 2\npow 1 = 2\n");
    for mode in [MultMode::Direct, MultMode::Emulate] {
        let n = lg_normalize(&p, mode, &ctr).unwrap();
        assert_eq!(n.lg.final_weights, vec![1, 1, 2]);
        assert_eq!(n.lg.level_dims, vec![2, 1]);
        n.iso.verify(&ctr).unwrap();
        for x in elements(&p) {
            assert_eq!(n.iso.map_backward(&n.iso.map_forward(&x, &ctr), &ctr), x);
        }
        let a = PcAutomorphism::new(p.clone(), vec![ev(&[1, 0, 1]), ev(&[0, 1, 0]), ev(&[0, 1, 1])]).unwrap();
        assert_eq!(automorphism_order(&a, DynOptions { mode, debug_invariants: true }, &ctr).unwrap().value.to_u64(), Some(brute_order(&a)));
    }
}
