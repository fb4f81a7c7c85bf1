#![allow(dead_code)]

use std::collections::HashSet;

use pcdyn_core::{ExponentVector, InducedPcgs, OpCounter, PcArith, PcPresentation};
use pcdyn_harness::{bundled_corpus_dir, load_corpus, CorpusEntry};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn corpus() -> Vec<CorpusEntry> {
    load_corpus(&bundled_corpus_dir()).expect("bundled corpus loads")
}

pub fn small_corpus(max_order: u64) -> Vec<CorpusEntry> {
    corpus().into_iter().filter(|e| e.order() <= max_order.into()).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

/// All elements of the subgroup with the given induced pcgs.
pub fn subgroup_elements(pres: &PcPresentation, h: &InducedPcgs) -> HashSet<ExponentVector> {
    let ctr = OpCounter::new();
    let mut out = vec![pres.identity()];
    for (y, d) in h.entries().iter().zip(h.depths()).rev() {
        let p = pres.relative_order(d);
        let mut next = Vec::with_capacity(out.len() * p as usize);
        let mut pw = pres.identity();
        for _ in 0..p {
            next.extend(out.iter().map(|x| pres.multiply(&pw, x, &ctr)));
            pw = pres.multiply(&pw, y, &ctr);
        }
        out = next;
    }
    out.into_iter().collect()
}

/// The subgroup generated by `gens`, by closing under multiplication.
pub fn closure(arith: &dyn PcArith, gens: &[ExponentVector]) -> HashSet<ExponentVector> {
    let ctr = OpCounter::new();
    let mut seen: HashSet<ExponentVector> = HashSet::from([arith.identity()]);
    let mut frontier = vec![arith.identity()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = arith.multiply(&x, g, &ctr);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}
