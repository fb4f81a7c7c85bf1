//! Induced pcgs of subgroups: sifting, saturation and membership.

use num_bigint::BigUint;
use pcdyn_ffield::arith::inv_mod;

use crate::arith::PcArith;
use crate::counter::OpCounter;
use crate::element::ExponentVector;
use crate::presentation::PcPresentation;

/// Entries with strictly increasing depths and leading coefficient 1,
/// reduced so that each entry has coordinate 0 at the depths of the other
/// entries. That canonical form makes equal subgroups compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct InducedPcgs {
    entries: Vec<ExponentVector>,
}

impl InducedPcgs {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// The full pcgs `x_1, ..., x_n`.
    pub fn full(pres: &PcPresentation) -> Self {
        Self { entries: (0..pres.n()).map(|i| pres.generator(i)).collect() }
    }

    /// Wraps entries already known to be an induced pcgs (depths increasing,
    /// leading coefficients 1). Panics otherwise.
    pub fn from_entries(entries: Vec<ExponentVector>) -> Self {
        let depths: Vec<_> = entries.iter().map(|e| e.leading()).collect();
        assert!(depths.iter().all(|d| matches!(d, Some((_, 1)))), "leading coefficients must be 1");
        assert!(depths.windows(2).all(|w| w[0] < w[1]), "depths must increase");
        Self { entries }
    }

    pub fn entries(&self) -> &[ExponentVector] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 0-based depths of the entries.
    pub fn depths(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.leading().expect("nontrivial entry").0).collect()
    }

    fn index_at_depth(&self, d: usize) -> Option<usize> {
        self.entries
            .binary_search_by(|e| e.leading().expect("nontrivial entry").0.cmp(&d))
            .ok()
    }

    pub fn entry_at_depth(&self, d: usize) -> Option<&ExponentVector> {
        self.index_at_depth(d).map(|k| &self.entries[k])
    }

    /// `|H| = prod of the relative orders at the entry depths`.
    pub fn order(&self, pres: &PcPresentation) -> BigUint {
        self.depths()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, d| acc * pres.relative_order(d))
    }

    pub fn contains<A: PcArith + ?Sized>(&self, arith: &A, g: &ExponentVector, ctr: &OpCounter) -> bool {
        sift(arith, self, g, ctr).is_identity()
    }
}

fn lookup(table: &[Option<ExponentVector>], d: usize) -> Option<&ExponentVector> {
    table[d].as_ref()
}

fn sift_table<A: PcArith + ?Sized>(
    arith: &A,
    table: &[Option<ExponentVector>],
    g: &ExponentVector,
    ctr: &OpCounter,
) -> ExponentVector {
    let pres = arith.presentation();
    let mut g = g.clone();
    while let Some((d, e)) = g.leading() {
        let Some(z) = lookup(table, d) else { break };
        // z^{p-e} has leading coefficient -e at depth d.
        let f = arith.power_u64(z, u64::from(pres.relative_order(d) - e), ctr);
        g = arith.multiply(&f, &g, ctr);
    }
    g
}

/// Reduces `g` against `h` from the left. The result is the identity iff
/// `g` lies in the subgroup; otherwise its depth is not among the entry
/// depths.
pub fn sift<A: PcArith + ?Sized>(arith: &A, h: &InducedPcgs, g: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
    let table = as_table(arith.presentation().n(), h);
    sift_table(arith, &table, g, ctr)
}

fn as_table(n: usize, h: &InducedPcgs) -> Vec<Option<ExponentVector>> {
    let mut table = vec![None; n];
    for (e, d) in h.entries.iter().zip(h.depths()) {
        table[d] = Some(e.clone());
    }
    table
}

/// Scales `r` so its leading coefficient is 1.
fn normalize_leading<A: PcArith + ?Sized>(arith: &A, r: ExponentVector, ctr: &OpCounter) -> ExponentVector {
    let (d, e) = r.leading().expect("nontrivial");
    if e == 1 {
        return r;
    }
    let p = u64::from(arith.presentation().relative_order(d));
    let l = inv_mod(u64::from(e), p).expect("prime relative order");
    arith.power_u64(&r, l, ctr)
}

/// Induced pcgs of the subgroup generated by `gens`: sift each candidate,
/// and whenever a new depth appears queue its `p`-th power and its
/// commutators with all current entries.
pub fn induced_pcgs<A: PcArith + ?Sized>(arith: &A, gens: &[ExponentVector], ctr: &OpCounter) -> InducedPcgs {
    let pres = arith.presentation();
    let n = pres.n();
    let mut table: Vec<Option<ExponentVector>> = vec![None; n];
    let mut queue: Vec<ExponentVector> = gens.iter().filter(|g| !g.is_identity()).rev().cloned().collect();
    while let Some(g) = queue.pop() {
        let r = sift_table(arith, &table, &g, ctr);
        if r.is_identity() {
            continue;
        }
        let r = normalize_leading(arith, r, ctr);
        let d = r.leading().unwrap().0;
        let pw = arith.power_u64(&r, u64::from(pres.relative_order(d)), ctr);
        if !pw.is_identity() {
            queue.push(pw);
        }
        for z in table.iter().flatten() {
            let c = arith.commutator(&r, z, ctr);
            if !c.is_identity() {
                queue.push(c);
            }
        }
        table[d] = Some(r);
    }
    canonicalize(arith, table.into_iter().flatten().collect(), ctr)
}

/// Clears each entry's coordinates at the depths of deeper entries by
/// multiplying from the right, shallowest depth first.
fn canonicalize<A: PcArith + ?Sized>(arith: &A, mut entries: Vec<ExponentVector>, ctr: &OpCounter) -> InducedPcgs {
    let depths: Vec<usize> = entries.iter().map(|e| e.leading().unwrap().0).collect();
    for a in 0..entries.len() {
        for b in a + 1..entries.len() {
            let c = entries[a].get(depths[b]);
            if c == 0 {
                continue;
            }
            let f = arith.power_i64(&entries[b], -i64::from(c), ctr);
            entries[a] = arith.multiply(&entries[a], &f, ctr);
        }
    }
    InducedPcgs { entries }
}

/// Exponents `a_k` with `g = z_1^{a_1} ... z_m^{a_m}` over the entries of
/// `h`, or `None` if `g` is not in the subgroup.
pub fn constructive_membership<A: PcArith + ?Sized>(
    arith: &A,
    h: &InducedPcgs,
    g: &ExponentVector,
    ctr: &OpCounter,
) -> Option<Vec<u32>> {
    let mut exps = vec![0u32; h.len()];
    let mut g = g.clone();
    while let Some((d, e)) = g.leading() {
        let k = h.index_at_depth(d)?;
        exps[k] = e;
        let f = arith.power_i64(&h.entries[k], -i64::from(e), ctr);
        g = arith.multiply(&f, &g, ctr);
    }
    Some(exps)
}

/// Smallest subgroup containing `h` and normalized by `normalizers`.
pub fn normal_closure<A: PcArith + ?Sized>(
    arith: &A,
    normalizers: &[ExponentVector],
    h: &InducedPcgs,
    ctr: &OpCounter,
) -> InducedPcgs {
    let mut cur = h.clone();
    loop {
        let mut gens = cur.entries.clone();
        for x in normalizers {
            for y in &cur.entries {
                let c = arith.conjugate(y, x, ctr);
                if !cur.contains(arith, &c, ctr) {
                    gens.push(c);
                }
            }
        }
        if gens.len() == cur.len() {
            return cur;
        }
        cur = induced_pcgs(arith, &gens, ctr);
    }
}

/// Induced pcgs of `<[x, y] | x in xs, y in ys>`.
pub fn commutator_subgroup<A: PcArith + ?Sized>(
    arith: &A,
    xs: &[ExponentVector],
    ys: &[ExponentVector],
    ctr: &OpCounter,
) -> InducedPcgs {
    let gens: Vec<ExponentVector> = xs
        .iter()
        .flat_map(|x| ys.iter().map(move |y| (x, y)))
        .map(|(x, y)| arith.commutator(x, y, ctr))
        .collect();
    induced_pcgs(arith, &gens, ctr)
}
