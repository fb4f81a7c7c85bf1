//! Orders of automorphisms, cycle lengths of bijective affine maps, and
//! preperiods of endomorphisms.
//!
//! Orders and cycle lengths are computed level by level along the
//! LG-series: each factor `V_i = G_i / G_{i+1}` is an `F_{p_i}`-vector space
//! on which the map induces a linear (or affine) map.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use pcdyn_ffield::{affine_cycle_length_zero, matrix_order, FFMatrix, FFVector, IntFactorization};

use crate::arith::PcArith;
use crate::counter::OpCounter;
use crate::element::ExponentVector;
use crate::error::{PcError, Result};
use crate::lg::{lg_normalize, LgSeriesData, Normalized};
use crate::maps::{AffineMap, PcAutomorphism, PcEndomorphism};
use crate::pcgs::{induced_pcgs, InducedPcgs};
use crate::presentation::PcPresentation;
use crate::rebase::{EmulatedArith, MultMode};

/// Runtime options shared by the algorithms below.
#[derive(Clone, Copy, Debug, Default)]
pub struct DynOptions {
    pub mode: MultMode,
    /// Check the per-level invariants while running.
    pub debug_invariants: bool,
}

/// An automorphism carried over to a normalized presentation.
#[derive(Clone, Debug)]
pub struct LeveledAutomorphism {
    pub normalized: Normalized,
    pub alpha: PcAutomorphism,
    pub t: Option<ExponentVector>,
    pub g: Option<ExponentVector>,
}

enum Backend {
    Direct(Arc<PcPresentation>),
    Emulated(Box<EmulatedArith>),
}

impl Backend {
    fn arith(&self) -> &dyn PcArith {
        match self {
            Self::Direct(p) => &**p,
            Self::Emulated(e) => &**e,
        }
    }
}

impl LeveledAutomorphism {
    /// Normalizes the presentation and pushes `alpha` (and optionally `t`,
    /// `g`) through the resulting isomorphism.
    pub fn new(
        alpha: &PcAutomorphism,
        t: Option<&ExponentVector>,
        g: Option<&ExponentVector>,
        mode: MultMode,
        ctr: &OpCounter,
    ) -> Result<Self> {
        let pres = alpha.presentation();
        let normalized = lg_normalize(pres, mode, ctr)?;
        let iso = &normalized.iso;
        let fwd = |v: &ExponentVector| iso.map_forward(v, ctr);
        let images = iso
            .backward()
            .iter()
            .map(|y| fwd(&alpha.apply(y, ctr)))
            .collect();
        let alpha_plus = PcAutomorphism::new_unchecked(normalized.presentation.clone(), images);
        Ok(Self { t: t.map(fwd), g: g.map(fwd), alpha: alpha_plus, normalized })
    }

    pub fn presentation(&self) -> &Arc<PcPresentation> {
        &self.normalized.presentation
    }

    pub fn lg(&self) -> &LgSeriesData {
        &self.normalized.lg
    }

    fn backend(&self, mode: MultMode, ctr: &OpCounter) -> Result<Backend> {
        Ok(match mode {
            MultMode::Direct => Backend::Direct(self.presentation().clone()),
            MultMode::Emulate => Backend::Emulated(Box::new(EmulatedArith::from_iso(&self.normalized.iso, ctr)?)),
        })
    }

    /// The filtration is respected: level-`i` generators map into `G_i`.
    pub fn check_filtration(&self) -> Result<()> {
        for (k, img) in self.alpha.images().iter().enumerate() {
            let w = self.lg().final_weights[k];
            let off = self.lg().offset(w - 1);
            if img.as_slice()[..off].iter().any(|&e| e != 0) {
                return Err(PcError::Invariant(format!("image of generator {} leaves its LG term", k + 1)));
            }
        }
        Ok(())
    }

    /// Matrix of the action on `V_i` (1-based level), columns are images.
    pub fn level_matrix(&self, i: usize) -> Result<FFMatrix> {
        level_matrix(self.lg(), &self.alpha, i)
    }

    /// Coordinates at level `i` of `g^{-1} t alpha(g)`.
    pub fn level_vector(&self, i: usize, ctr: &OpCounter) -> Result<FFVector> {
        let pres = self.presentation();
        let t = self.t.clone().unwrap_or_else(|| pres.identity());
        let g = self.g.clone().unwrap_or_else(|| pres.identity());
        let a = AffineMap { t, alpha: self.alpha.clone() };
        level_vector(&**pres, self.lg(), &a, &g, i, ctr)
    }
}

fn level_matrix(lg: &LgSeriesData, alpha: &PcAutomorphism, i: usize) -> Result<FFMatrix> {
    if i == 0 || i > lg.r {
        return Err(PcError::Invariant(format!("level {i} out of range 1..{}", lg.r)));
    }
    let off = lg.offset(i - 1);
    let l = lg.level_dims[i - 1];
    let p = u64::from(lg.level_primes[i - 1]);
    let mut m = FFMatrix::zero(p, l, l);
    for k in 0..l {
        let img = alpha.image(off + k);
        for j in 0..l {
            m.set(j, k, u64::from(img.get(off + j)));
        }
    }
    if !m.is_invertible() {
        return Err(PcError::Invariant(format!("level {i} matrix is singular: the map is not an automorphism")));
    }
    Ok(m)
}

fn level_vector<A: PcArith + ?Sized>(
    arith: &A,
    lg: &LgSeriesData,
    a: &AffineMap,
    g: &ExponentVector,
    i: usize,
    ctr: &OpCounter,
) -> Result<FFVector> {
    let off = lg.offset(i - 1);
    let l = lg.level_dims[i - 1];
    let p = u64::from(lg.level_primes[i - 1]);
    let ag = a.apply_with(arith, g, ctr);
    let gi = arith.inverse(g, ctr);
    let h = arith.multiply(&gi, &ag, ctr);
    if h.as_slice()[..off].iter().any(|&e| e != 0) {
        return Err(PcError::Invariant(format!("g^-1 A(g) = {h} is not in G_{i}")));
    }
    Ok(FFVector::new(p, (0..l).map(|j| u64::from(h.get(off + j))).collect()))
}

/// Per-level data of a run: `(p_i, l_i, o_i or lambda_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelData {
    pub prime: u32,
    pub dim: usize,
    pub value: IntFactorization,
}

#[derive(Clone, Debug)]
pub struct DynResult {
    pub value: IntFactorization,
    pub levels: Vec<LevelData>,
    pub multiplications: u64,
}

impl fmt::Display for DynResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} levels=[", self.value)?;
        for (k, l) in self.levels.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{},{})", l.prime, l.dim, l.value)?;
        }
        write!(f, "] mults={}", self.multiplications)
    }
}

fn big(f: &IntFactorization) -> BigUint {
    f.value()
}

/// Order of an automorphism.
pub fn automorphism_order(alpha: &PcAutomorphism, opts: DynOptions, ctr: &OpCounter) -> Result<DynResult> {
    let start = ctr.multiplications();
    let la = LeveledAutomorphism::new(alpha, None, None, opts.mode, ctr)?;
    if opts.debug_invariants {
        la.check_filtration()?;
    }
    let lg = la.lg().clone();
    let backend = la.backend(opts.mode, ctr)?;
    let arith = backend.arith();

    let mut levels = Vec::with_capacity(lg.r);
    let mut o = IntFactorization::one();
    for i in 1..=lg.r {
        let oi = matrix_order(&la.level_matrix(i)?)?;
        o = o.lcm(&oi);
        levels.push(LevelData { prime: lg.level_primes[i - 1], dim: lg.level_dims[i - 1], value: oi });
    }
    let mut beta = la.alpha.power_with(arith, &big(&o), ctr);
    if opts.debug_invariants {
        for i in 1..=lg.r {
            if !level_matrix(&lg, &beta, i)?.is_identity() {
                return Err(PcError::Invariant(format!("alpha^o acts nontrivially on level {i}")));
            }
        }
    }
    for i in 1..lg.r {
        let (lo, mid, hi) = (0, lg.offset(i), lg.offset(i + 1));
        let moved = (lo..mid).any(|j| beta.image(j).as_slice()[mid..hi].iter().any(|&e| e != 0));
        if moved {
            let p = lg.level_primes[i];
            o = o.mul_prime(u64::from(p));
            beta = beta.power_with(arith, &BigUint::from(p), ctr);
        }
    }
    if !beta.is_identity() {
        return Err(PcError::Invariant("alpha^o is not the identity".into()));
    }
    Ok(DynResult { value: o, levels, multiplications: ctr.multiplications() - start })
}

/// Length of the cycle through `g` under `x -> t alpha(x)`.
pub fn affine_cycle_length(
    alpha: &PcAutomorphism,
    t: &ExponentVector,
    g: &ExponentVector,
    opts: DynOptions,
    ctr: &OpCounter,
) -> Result<DynResult> {
    let start = ctr.multiplications();
    let pres = alpha.presentation();
    pres.validate(t)?;
    pres.validate(g)?;
    let la = LeveledAutomorphism::new(alpha, Some(t), Some(g), opts.mode, ctr)?;
    if opts.debug_invariants {
        la.check_filtration()?;
    }
    let lg = la.lg().clone();
    let backend = la.backend(opts.mode, ctr)?;
    let arith = backend.arith();
    let g_plus = la.g.clone().unwrap();
    let mut a = AffineMap { t: la.t.clone().unwrap(), alpha: la.alpha.clone() };
    let mut lambda = IntFactorization::one();
    let mut levels = Vec::with_capacity(lg.r);
    for i in 1..=lg.r {
        let m = level_matrix(&lg, &a.alpha, i)?;
        let u = level_vector(arith, &lg, &a, &g_plus, i, ctr)?;
        let li = affine_cycle_length_zero(&m, &u)?;
        if !li.is_one() {
            a = a.power_with(arith, &big(&li), ctr)?;
            lambda = lambda.mul(&li);
        }
        levels.push(LevelData { prime: lg.level_primes[i - 1], dim: lg.level_dims[i - 1], value: li });
    }
    if a.apply_with(arith, &g_plus, ctr) != g_plus {
        return Err(PcError::Invariant("A^lambda does not fix g".into()));
    }
    Ok(DynResult { value: lambda, levels, multiplications: ctr.multiplications() - start })
}

/// `alpha^o = id` and `alpha^{o/q} != id` for every prime `q | o`.
pub fn certify_automorphism_order(alpha: &PcAutomorphism, o: &IntFactorization, ctr: &OpCounter) -> Result<()> {
    if !alpha.power(&o.value(), ctr).is_identity() {
        return Err(PcError::Invariant(format!("alpha^{o} is not the identity")));
    }
    for q in o.primes() {
        let sub = o.div_prime(q).expect("q divides o");
        if alpha.power(&sub.value(), ctr).is_identity() {
            return Err(PcError::Invariant(format!("alpha^({o}/{q}) is already the identity")));
        }
    }
    Ok(())
}

/// `A^lambda(g) = g` and `A^{lambda/q}(g) != g` for every prime `q | lambda`.
pub fn certify_cycle_length(a: &AffineMap, g: &ExponentVector, lambda: &IntFactorization, ctr: &OpCounter) -> Result<()> {
    if a.power(&lambda.value(), ctr)?.apply(g, ctr) != *g {
        return Err(PcError::Invariant(format!("A^{lambda} does not fix g")));
    }
    for q in lambda.primes() {
        let sub = lambda.div_prime(q).expect("q divides lambda");
        if a.power(&sub.value(), ctr)?.apply(g, ctr) == *g {
            return Err(PcError::Invariant(format!("A^({lambda}/{q}) already fixes g")));
        }
    }
    Ok(())
}

/// `floor(log2 |G|)`.
pub fn log2_order(pres: &PcPresentation) -> u64 {
    pres.order().bits() - 1
}

/// Induced pcgs of `phi^m(G)` with `m = floor(log2 |G|)`: the set of
/// periodic points of `phi`.
pub fn periodic_subgroup(phi: &PcEndomorphism, ctr: &OpCounter) -> InducedPcgs {
    let pres = phi.presentation();
    let m = phi.power(&BigUint::from(log2_order(pres)), ctr);
    induced_pcgs(&**pres, m.images(), ctr)
}

/// Smallest `t` with `phi^t(g)` periodic.
pub fn endo_preperiod(phi: &PcEndomorphism, g: &ExponentVector, ctr: &OpCounter) -> Result<u64> {
    let pres = phi.presentation();
    pres.validate(g)?;
    let periodic = periodic_subgroup(phi, ctr);
    let bound = log2_order(pres);
    let mut cur = g.clone();
    let mut t = 0;
    while !periodic.contains(&**pres, &cur, ctr) {
        cur = phi.apply(&cur, ctr);
        t += 1;
        if t > bound {
            return Err(PcError::Invariant(format!("preperiod exceeds floor(log2 |G|) = {bound}")));
        }
    }
    Ok(t)
}
