//! Random elements and automorphisms: products of inner automorphisms and
//! the catalogued ones.

use num_bigint::BigUint;
use pcdyn_core::{ExponentVector, OpCounter, PcAutomorphism, PcPresentation, Result};
use rand::Rng;
use std::sync::Arc;

use crate::corpus::CorpusEntry;

pub fn random_element(pres: &PcPresentation, rng: &mut impl Rng) -> ExponentVector {
    ExponentVector::new(pres.relative_orders().iter().map(|&p| rng.gen_range(0..p)).collect())
}

fn random_inner(pres: &Arc<PcPresentation>, rng: &mut impl Rng, ctr: &OpCounter) -> Result<PcAutomorphism> {
    PcAutomorphism::inner(pres.clone(), &random_element(pres, rng), ctr)
}

/// `count` automorphisms: the catalogue first, then random compositions of
/// an inner automorphism with a random power of a catalogued one.
pub fn sample_automorphisms(entry: &CorpusEntry, count: usize, rng: &mut impl Rng, ctr: &OpCounter) -> Result<Vec<PcAutomorphism>> {
    let mut out: Vec<PcAutomorphism> = entry.automorphisms.iter().take(count).map(|a| a.map.clone()).collect();
    while out.len() < count {
        let inner = random_inner(&entry.pres, rng, ctr)?;
        let a = if entry.automorphisms.is_empty() || rng.gen_bool(0.25) {
            inner
        } else {
            let base = &entry.automorphisms[rng.gen_range(0..entry.automorphisms.len())].map;
            let e = BigUint::from(rng.gen_range(1u32..6));
            inner.compose(&base.power(&e, ctr), ctr)
        };
        out.push(a);
    }
    Ok(out)
}
