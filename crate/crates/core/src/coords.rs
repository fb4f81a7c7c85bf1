//! Exponent vectors with respect to an arbitrary pcgs, and the presentation
//! such a pcgs defines.
//!
//! For a pcgs `y_1, ..., y_m` (given in base coordinates) of a subgroup `H`
//! let `H_k = <y_k, ..., y_m>` and `Z_k` an induced pcgs of `H_k`. The
//! depths of `Z_k` are those of `Z_{k+1}` plus one new depth `delta_k`.
//! Sifting `c in H_k` against `Z_{k+1}` leaves a residue whose coordinate at
//! `delta_k` is a fixed multiple of the `y_k` exponent of `c`.

use pcdyn_ffield::arith::{inv_mod, mul_mod};

use crate::arith::PcArith;
use crate::counter::OpCounter;
use crate::element::ExponentVector;
use crate::error::{PcError, Result};
use crate::pcgs::{induced_pcgs, sift, InducedPcgs};
use crate::presentation::PcPresentation;

#[derive(Clone, Debug)]
pub struct PcgsCoordinates {
    elements: Vec<ExponentVector>,
    inverses: Vec<ExponentVector>,
    /// `suffix[k]` is an induced pcgs of `<y_k, ..., y_m>`; `suffix[m]` is trivial.
    suffix: Vec<InducedPcgs>,
    lead_depth: Vec<usize>,
    lead_inv: Vec<u32>,
    orders: Vec<u32>,
    /// `delta_k` lies above every depth of `suffix[k + 1]`, so no sifting is needed.
    shallow: Vec<bool>,
}

impl PcgsCoordinates {
    pub fn new<A: PcArith + ?Sized>(arith: &A, ys: &[ExponentVector], ctr: &OpCounter) -> Result<Self> {
        let pres = arith.presentation();
        let m = ys.len();
        let mut suffix = vec![InducedPcgs::trivial(); m + 1];
        let mut lead_depth = vec![0; m];
        let mut lead_inv = vec![0; m];
        let mut orders = vec![0; m];
        let mut shallow = vec![false; m];
        for k in (0..m).rev() {
            pres.validate(&ys[k])?;
            let mut gens = suffix[k + 1].entries().to_vec();
            gens.push(ys[k].clone());
            let z = induced_pcgs(arith, &gens, ctr);
            if z.len() != suffix[k + 1].len() + 1 {
                return Err(PcError::NotAPcgs(format!(
                    "element {} ({}) does not extend the subgroup generated by the later ones by a prime factor",
                    k + 1,
                    ys[k]
                )));
            }
            let r = sift(arith, &suffix[k + 1], &ys[k], ctr);
            let (d, e) = r.leading().expect("residue of a new generator is nontrivial");
            let p = pres.relative_order(d);
            lead_depth[k] = d;
            lead_inv[k] = inv_mod(u64::from(e), u64::from(p)).expect("prime") as u32;
            orders[k] = p;
            shallow[k] = suffix[k + 1].depths().first().is_none_or(|&d0| d < d0);
            suffix[k] = z;
        }
        let inverses = ys.iter().map(|y| arith.inverse(y, ctr)).collect();
        Ok(Self { elements: ys.to_vec(), inverses, suffix, lead_depth, lead_inv, orders, shallow })
    }

    pub fn elements(&self) -> &[ExponentVector] {
        &self.elements
    }

    /// Relative orders of the pcgs entries.
    pub fn relative_orders(&self) -> &[u32] {
        &self.orders
    }

    /// Induced pcgs of the whole subgroup.
    pub fn subgroup(&self) -> &InducedPcgs {
        &self.suffix[0]
    }

    /// Exponents of `g` over the pcgs, or `None` when `g` is not in the
    /// subgroup it generates.
    #[allow(clippy::needless_range_loop)]
    pub fn coordinates<A: PcArith + ?Sized>(&self, arith: &A, g: &ExponentVector, ctr: &OpCounter) -> Option<ExponentVector> {
        let m = self.elements.len();
        let mut c = g.clone();
        let mut out = vec![0u32; m];
        for k in 0..m {
            if c.is_identity() {
                break;
            }
            let d = self.lead_depth[k];
            let lc = if self.shallow[k] {
                match c.leading() {
                    Some((dc, _)) if dc < d => return None,
                    _ => c.get(d),
                }
            } else {
                let r = sift(arith, &self.suffix[k + 1], &c, ctr);
                match r.leading() {
                    None => 0,
                    Some((dr, e)) if dr == d => e,
                    Some(_) => return None,
                }
            };
            let p = u64::from(self.orders[k]);
            let f = mul_mod(u64::from(lc), u64::from(self.lead_inv[k]), p) as u32;
            if f == 0 {
                continue;
            }
            out[k] = f;
            let y = arith.power_u64(&self.inverses[k], u64::from(f), ctr);
            c = arith.multiply(&y, &c, ctr);
        }
        c.is_identity().then(|| ExponentVector::new(out))
    }
}

/// The presentation defined by a pcgs `ys` of the whole group, together
/// with the coordinate map for it.
pub fn presentation_from_pcgs<A: PcArith + ?Sized>(
    arith: &A,
    ys: &[ExponentVector],
    ctr: &OpCounter,
) -> Result<(PcPresentation, PcgsCoordinates)> {
    let pres = arith.presentation();
    let n = pres.n();
    if ys.len() != n {
        return Err(PcError::NotAPcgs(format!("{} elements for composition length {n}", ys.len())));
    }
    let coords = PcgsCoordinates::new(arith, ys, ctr)?;
    let orders = coords.relative_orders().to_vec();
    let express = |v: &ExponentVector| {
        coords
            .coordinates(arith, v, ctr)
            .ok_or_else(|| PcError::Invariant(format!("{v} has no coordinates over a full pcgs")))
    };
    let mut powers = Vec::new();
    let mut conjugates = Vec::new();
    for i in 0..n {
        let w = arith.power_u64(&ys[i], u64::from(orders[i]), ctr);
        let w = express(&w)?;
        if !w.is_identity() {
            powers.push((i, w));
        }
        for j in i + 1..n {
            let c = arith.conjugate(&ys[j], &ys[i], ctr);
            let c = express(&c)?;
            if c != ExponentVector::generator_power(n, j, 1) {
                conjugates.push((j, i, c));
            }
        }
    }
    let out = PcPresentation::from_relations(orders, &powers, &conjugates)
        .map_err(|e| PcError::NotAPcgs(e.to_string()))?;
    Ok((out, coords))
}
