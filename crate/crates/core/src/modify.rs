//! Modifying a pcgs by elements with weights, and exhibiting a normal
//! series.

use std::sync::Arc;

use crate::arith::PcArith;
use crate::counter::OpCounter;
use crate::element::ExponentVector;
use crate::error::Result;
use crate::iso::PcIsomorphism;
use crate::pcgs::InducedPcgs;
use crate::presentation::PcPresentation;
use crate::rebase::{elementary_transform_with, EmulatedArith, MultMode};

/// A presentation derived from a base one, with weights for its generators.
#[derive(Clone, Debug)]
pub struct Rebased {
    pub presentation: Arc<PcPresentation>,
    pub weights: Vec<usize>,
    /// From the base presentation to `presentation`.
    pub iso: PcIsomorphism,
}

impl Rebased {
    pub fn start(base: Arc<PcPresentation>) -> Self {
        Self { weights: vec![1; base.n()], iso: PcIsomorphism::identity(base.clone()), presentation: base }
    }
}

enum Backend {
    Direct(Arc<PcPresentation>),
    Emulated(EmulatedArith),
}

impl Backend {
    fn new(st: &Rebased, mode: MultMode, ctr: &OpCounter) -> Result<Self> {
        Ok(match mode {
            MultMode::Direct => Self::Direct(st.presentation.clone()),
            MultMode::Emulate if st.iso.is_identity() => Self::Direct(st.presentation.clone()),
            MultMode::Emulate => Self::Emulated(EmulatedArith::from_iso(&st.iso, ctr)?),
        })
    }

    fn arith(&self) -> &dyn PcArith {
        match self {
            Self::Direct(p) => &**p,
            Self::Emulated(e) => e,
        }
    }
}

/// One modification by `g` (in the coordinates of `st.presentation`) with
/// admissible weight `u`. Writing `g = x_d^{e} k`: if `w_d < u` the pcgs
/// entry at depth `d` is replaced by `g` and gets weight `u`; the process
/// continues with `k` and weight `min(u, w_d)`.
pub fn modify_by_element(st: Rebased, g: &ExponentVector, u: usize, mode: MultMode, ctr: &OpCounter) -> Result<Rebased> {
    let mut st = st;
    let mut g = g.clone();
    let mut u = u;
    let n = st.presentation.n();
    while let Some((d, e)) = g.leading() {
        let backend = Backend::new(&st, mode, ctr)?;
        let arith = backend.arith();
        let xe_inv = arith.inverse(&ExponentVector::generator_power(n, d, e), ctr);
        let k = arith.multiply(&xe_inv, &g, ctr);
        let wd = st.weights[d];
        if wd < u {
            let (next, step) = elementary_transform_with(&st.presentation, arith, &g, ctr)?;
            if !step.is_identity() {
                st.iso = match mode {
                    MultMode::Direct => st.iso.then(&step, ctr)?,
                    MultMode::Emulate => {
                        let backward: Vec<_> = step.backward().iter().map(|v| st.iso.map_backward(v, ctr)).collect();
                        let emu = EmulatedArith::new(st.iso.source().clone(), next.clone(), backward, ctr)?;
                        st.iso.then_with(&step, &emu, ctr)?
                    }
                };
                st.presentation = next;
            }
            st.weights[d] = u;
        }
        g = k;
        u = u.min(wd);
    }
    Ok(st)
}

/// Successively modifies by the entries of `series[j]` (an induced pcgs of
/// `N_{j+2}` in base coordinates) with weight `j + 2`.
pub fn exhibit_series(base: &Arc<PcPresentation>, series: &[InducedPcgs], mode: MultMode, ctr: &OpCounter) -> Result<Rebased> {
    let mut st = Rebased::start(base.clone());
    for (j, term) in series.iter().enumerate() {
        for y in term.entries() {
            let g = {
                let backend = Backend::new(&st, mode, ctr)?;
                st.iso.map_forward_with(backend.arith(), y, ctr)
            };
            st = modify_by_element(st, &g, j + 2, mode, ctr)?;
        }
    }
    Ok(st)
}
