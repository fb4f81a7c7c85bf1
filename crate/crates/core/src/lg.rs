//! The LG-series (elementary abelian nilpotent-central series) and
//! normalization of a presentation so that its pcgs refines it.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::arith::PcArith;
use crate::coords::presentation_from_pcgs;
use crate::counter::OpCounter;
use crate::element::ExponentVector;
use crate::error::{PcError, Result};
use crate::iso::PcIsomorphism;
use crate::maps::format_map_file;
use crate::modify::exhibit_series;
use crate::pcgs::{commutator_subgroup, induced_pcgs, normal_closure, InducedPcgs};
use crate::presentation::PcPresentation;
use crate::rebase::MultMode;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LgSeriesData {
    pub r: usize,
    pub level_primes: Vec<u32>,
    pub level_dims: Vec<usize>,
    /// Induced pcgs of `G_1, ..., G_{r+1}` (the last one trivial).
    pub term_pcgs: Vec<InducedPcgs>,
    /// Per generator: the largest `i` with the generator in `G_i`.
    pub final_weights: Vec<usize>,
}

impl LgSeriesData {
    /// `L(i) = l_1 + ... + l_i`, for `i = 0..=r`.
    pub fn offset(&self, i: usize) -> usize {
        self.level_dims[..i].iter().sum()
    }

    pub fn term_orders(&self, pres: &PcPresentation) -> Vec<num_bigint::BigUint> {
        self.term_pcgs.iter().map(|t| t.order(pres)).collect()
    }
}

fn order_of(h: &InducedPcgs, pres: &PcPresentation) -> num_bigint::BigUint {
    h.order(pres)
}

/// `G = L_1 > L_2 > ... > 1` with `L_{k+1}` the nilpotent residual of `L_k`.
fn lower_nilpotent_series<A: PcArith + ?Sized>(arith: &A, gens: &[ExponentVector], ctr: &OpCounter) -> Vec<InducedPcgs> {
    let pres = arith.presentation();
    let mut series = vec![InducedPcgs::full(pres)];
    loop {
        let top = series.last().unwrap().clone();
        if top.is_empty() {
            return series;
        }
        // lower central series of `top` until it stabilizes
        let mut cur = top.clone();
        loop {
            let next = commutator_subgroup(arith, top.entries(), cur.entries(), ctr);
            let next = normal_closure(arith, gens, &next, ctr);
            if order_of(&next, pres) == order_of(&cur, pres) {
                break;
            }
            cur = next;
        }
        assert!(cur.len() < top.len(), "a finite solvable group has no perfect nontrivial subgroup");
        series.push(cur);
    }
}

/// Terms of `y^{p} ` for `y` in `h`, `p` the relative order at its depth.
fn pth_powers<A: PcArith + ?Sized>(arith: &A, h: &InducedPcgs, ctr: &OpCounter) -> Vec<ExponentVector> {
    let pres = arith.presentation();
    h.entries()
        .iter()
        .map(|y| {
            let d = y.leading().unwrap().0;
            arith.power_u64(y, u64::from(pres.relative_order(d)), ctr)
        })
        .collect()
}

/// The LG-series of the group, each term as an induced pcgs in the
/// coordinates of the presentation.
pub fn lg_series<A: PcArith + ?Sized>(arith: &A, ctr: &OpCounter) -> Result<LgSeriesData> {
    let pres = arith.presentation();
    let gens: Vec<ExponentVector> = (0..pres.n()).map(|i| pres.generator(i)).collect();
    let lower = lower_nilpotent_series(arith, &gens, ctr);

    // elementary central refinement of each nilpotent factor
    let mut central = vec![lower[0].clone()];
    for w in lower.windows(2) {
        let (top, z) = (&w[0], &w[1]);
        let mut cur = top.clone();
        while cur.len() > z.len() {
            let mut g = commutator_subgroup(arith, top.entries(), cur.entries(), ctr).entries().to_vec();
            g.extend(pth_powers(arith, &cur, ctr));
            g.extend(z.entries().iter().cloned());
            let next = normal_closure(arith, &gens, &induced_pcgs(arith, &g, ctr), ctr);
            if next.len() >= cur.len() {
                return Err(PcError::Invariant("elementary central refinement does not descend".into()));
            }
            central.push(next.clone());
            cur = next;
        }
    }

    // Sylow refinement of each elementary factor
    let mut terms = vec![central[0].clone()];
    let mut primes = Vec::new();
    let mut dims = Vec::new();
    for w in central.windows(2) {
        let (top, z) = (&w[0], &w[1]);
        let zd: BTreeSet<usize> = z.depths().into_iter().collect();
        let factor_primes: BTreeSet<u32> = top
            .depths()
            .into_iter()
            .filter(|d| !zd.contains(d))
            .map(|d| pres.relative_order(d))
            .collect();
        let mut cur = top.clone();
        for q in factor_primes {
            let mut g: Vec<ExponentVector> = cur
                .entries()
                .iter()
                .map(|y| arith.power_u64(y, u64::from(q), ctr))
                .collect();
            g.extend(z.entries().iter().cloned());
            let next = normal_closure(arith, &gens, &induced_pcgs(arith, &g, ctr), ctr);
            if next.len() >= cur.len() {
                return Err(PcError::Invariant(format!("Sylow refinement for prime {q} does not descend")));
            }
            primes.push(q);
            dims.push(cur.len() - next.len());
            terms.push(next.clone());
            cur = next;
        }
        if cur != *z {
            return Err(PcError::Invariant("Sylow refinement does not end at the next term".into()));
        }
    }
    for (i, w) in terms.windows(2).enumerate() {
        let lower: BTreeSet<usize> = w[1].depths().into_iter().collect();
        for d in w[0].depths().into_iter().filter(|d| !lower.contains(d)) {
            if pres.relative_order(d) != primes[i] {
                return Err(PcError::Invariant(format!("level {} mixes primes", i + 1)));
            }
        }
    }
    let final_weights = (0..pres.n())
        .map(|k| final_weight(arith, &terms, &pres.generator(k), ctr))
        .collect();
    Ok(LgSeriesData { r: primes.len(), level_primes: primes, level_dims: dims, term_pcgs: terms, final_weights })
}

/// Largest `i` (1-based) with `y in G_i`.
fn final_weight<A: PcArith + ?Sized>(arith: &A, terms: &[InducedPcgs], y: &ExponentVector, ctr: &OpCounter) -> usize {
    (0..terms.len()).rev().find(|&i| terms[i].contains(arith, y, ctr)).map_or(1, |i| i + 1)
}

/// Output of [`lg_normalize`]: the new presentation, the isomorphism from the
/// input to it, and the series in the coordinates of the new presentation
/// (where every term is generated by a suffix of the pcgs).
#[derive(Clone, Debug)]
pub struct Normalized {
    pub presentation: Arc<PcPresentation>,
    pub iso: PcIsomorphism,
    pub lg: LgSeriesData,
}

impl Normalized {
    /// `.pcp` text, a `weights` line, then the forward and backward image
    /// tables.
    pub fn to_text(&self) -> String {
        let mut out = self.presentation.to_pcp();
        let w: Vec<String> = self.lg.final_weights.iter().map(usize::to_string).collect();
        writeln!(out, "weights {}", w.join(" ")).unwrap();
        writeln!(out, "# forward: images of the input generators").unwrap();
        out.push_str(&format_map_file(self.iso.forward(), None));
        writeln!(out, "# backward: preimages of the new generators").unwrap();
        out.push_str(&format_map_file(self.iso.backward(), None));
        out
    }
}

/// A presentation whose pcgs refines the LG-series, sorted by final weight.
pub fn lg_normalize(pres: &Arc<PcPresentation>, mode: MultMode, ctr: &OpCounter) -> Result<Normalized> {
    let lg = lg_series(&**pres, ctr)?;
    let n = pres.n();
    let exhibited = exhibit_series(pres, &lg.term_pcgs[1..lg.r], mode, ctr)?;
    let ys = exhibited.iso.backward().to_vec();
    let weights: Vec<usize> = ys.iter().map(|y| final_weight(&**pres, &lg.term_pcgs, y, ctr)).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&k| weights[k]);
    let sorted_weights: Vec<usize> = perm.iter().map(|&k| weights[k]).collect();

    let (presentation, iso) = if perm.iter().enumerate().all(|(a, &b)| a == b) {
        (exhibited.presentation.clone(), exhibited.iso.clone())
    } else {
        let sorted: Vec<ExponentVector> = perm.iter().map(|&k| ys[k].clone()).collect();
        let (p, coords) = presentation_from_pcgs(&**pres, &sorted, ctr)?;
        let p = Arc::new(p);
        let forward = (0..n)
            .map(|i| {
                coords
                    .coordinates(&**pres, &pres.generator(i), ctr)
                    .ok_or_else(|| PcError::Invariant("generator outside a full pcgs".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        (p.clone(), PcIsomorphism::new_unchecked(pres.clone(), p, forward, sorted))
    };

    // terms in the new coordinates are suffixes of the pcgs
    let mut term_pcgs = Vec::with_capacity(lg.r + 1);
    let mut off = 0;
    for i in 0..=lg.r {
        if sorted_weights[off..].iter().any(|&w| w < i + 1) {
            return Err(PcError::Invariant("weights are not sorted".into()));
        }
        term_pcgs.push(InducedPcgs::from_entries((off..n).map(|k| presentation.generator(k)).collect()));
        if i < lg.r {
            let dim = sorted_weights.iter().filter(|&&w| w == i + 1).count();
            if dim != lg.level_dims[i] {
                return Err(PcError::Invariant(format!(
                    "level {} has {dim} generators of final weight {}, expected {}",
                    i + 1,
                    i + 1,
                    lg.level_dims[i]
                )));
            }
            off += dim;
        }
    }
    for (k, &w) in sorted_weights.iter().enumerate() {
        if presentation.relative_order(k) != lg.level_primes[w - 1] {
            return Err(PcError::Invariant(format!("generator {} has the wrong relative order for its level", k + 1)));
        }
    }
    let lg = LgSeriesData { term_pcgs, final_weights: sorted_weights, ..lg };
    Ok(Normalized { presentation, iso, lg })
}
