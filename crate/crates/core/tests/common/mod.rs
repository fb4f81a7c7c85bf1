#![allow(dead_code)]

use std::sync::Arc;

use pcdyn_core::{parse_presentation, ExponentVector, OpCounter, PcArith, PcAutomorphism, PcPresentation};

pub const C5: &str = "pcpres 1\nn 1\norders 5\n";
pub const D4: &str = "pcpres 1\nn 3\norders 2 2 2\npow 2 = 3\nconj 2 1 = 2 3\n";
pub const Q8: &str = "pcpres 1\nn 3\norders 2 2 2\npow 1 = 3\npow 2 = 3\nconj 2 1 = 2 3\n";
pub const C3XC3: &str = "pcpres 1\nn 2\norders 3 3\n";
pub const C4: &str = "pcpres 1\nn 2\norders 2 2\npow 1 = 2\n";
/// D4 on the pcgs (s, sr, r^2).
pub const D4_SCRAMBLED: &str = "pcpres 1\nn 3\norders 2 2 2\nconj 2 1 = 2 3\n";

pub fn pres(text: &str) -> Arc<PcPresentation> {
    Arc::new(parse_presentation(text).unwrap())
}

pub fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

/// Every normal form of the presentation.
pub fn elements(p: &PcPresentation) -> Vec<ExponentVector> {
    let mut out = vec![Vec::new()];
    for &o in p.relative_orders() {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..o).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(ExponentVector::new).collect()
}

pub fn brute_order(alpha: &PcAutomorphism) -> u64 {
    let ctr = OpCounter::new();
    let mut acc = 1u64;
    for g in elements(alpha.presentation()) {
        let mut cur = alpha.apply(&g, &ctr);
        let mut k = 1;
        while cur != g {
            cur = alpha.apply(&cur, &ctr);
            k += 1;
        }
        acc = num_lcm(acc, k);
    }
    acc
}

fn num_lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

pub fn same_map(p: &PcPresentation, f: impl Fn(&ExponentVector) -> ExponentVector, g: impl Fn(&ExponentVector) -> ExponentVector) -> bool {
    elements(p).iter().all(|x| f(x) == g(x))
}

pub fn mult_table_ok(p: &PcPresentation, arith: &dyn PcArith) -> bool {
    let ctr = OpCounter::new();
    let els = elements(p);
    els.iter().all(|a| els.iter().all(|b| arith.multiply(a, b, &ctr) == p.multiply(a, b, &ctr)))
}
