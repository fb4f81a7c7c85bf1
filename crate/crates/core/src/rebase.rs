//! Elementary pcgs transformations `X -> X_g` (replace `x_d` by `g`, where
//! `d` is the depth of `g`) and emulated multiplication in derived
//! presentations.

use std::sync::Arc;

use pcdyn_ffield::arith::inv_mod;

use crate::arith::PcArith;
use crate::coords::PcgsCoordinates;
use crate::counter::OpCounter;
use crate::element::ExponentVector;
use crate::error::{PcError, Result};
use crate::iso::PcIsomorphism;
use crate::presentation::PcPresentation;

/// How products in a derived presentation are formed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MultMode {
    /// Collection in the derived presentation itself.
    #[default]
    Direct,
    /// Pull back to the base presentation, multiply there, push forward by
    /// constructive membership.
    Emulate,
}

impl std::str::FromStr for MultMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "direct" => Ok(Self::Direct),
            "emulate" => Ok(Self::Emulate),
            _ => Err(format!("unknown mode '{s}', expected direct or emulate")),
        }
    }
}

/// Arithmetic for `target`, carried out in `base` through the preimages of
/// the target generators.
#[derive(Clone, Debug)]
pub struct EmulatedArith {
    base: Arc<PcPresentation>,
    target: Arc<PcPresentation>,
    backward: Vec<ExponentVector>,
    coords: PcgsCoordinates,
}

impl EmulatedArith {
    pub fn new(base: Arc<PcPresentation>, target: Arc<PcPresentation>, backward: Vec<ExponentVector>, ctr: &OpCounter) -> Result<Self> {
        let coords = PcgsCoordinates::new(&*base, &backward, ctr)?;
        Ok(Self { base, target, backward, coords })
    }

    pub fn from_iso(iso: &PcIsomorphism, ctr: &OpCounter) -> Result<Self> {
        Self::new(iso.source().clone(), iso.target().clone(), iso.backward().to_vec(), ctr)
    }

    pub fn pull_back(&self, v: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        self.base.substitute(&self.backward, v, ctr)
    }

    pub fn push_forward(&self, v: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        self.coords
            .coordinates(&*self.base, v, ctr)
            .expect("the preimages of the target generators form a pcgs of the base")
    }
}

impl PcArith for EmulatedArith {
    fn presentation(&self) -> &PcPresentation {
        &self.target
    }

    fn multiply(&self, a: &ExponentVector, b: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        if a.is_identity() {
            return b.clone();
        }
        if b.is_identity() {
            return a.clone();
        }
        let a0 = self.pull_back(a, ctr);
        let b0 = self.pull_back(b, ctr);
        let c = self.base.multiply(&a0, &b0, ctr);
        self.push_forward(&c, ctr)
    }
}

/// Emulated product `a' b'` in the target of `iso`.
pub fn emulated_multiply(iso: &PcIsomorphism, a: &ExponentVector, b: &ExponentVector, ctr: &OpCounter) -> Result<ExponentVector> {
    Ok(EmulatedArith::from_iso(iso, ctr)?.multiply(a, b, ctr))
}

/// Data for rewriting elements over `X_g`. Elements of
/// `<g, x_{d+1}, ..., x_n>` are handled as pairs `(f, k)` meaning `g^f k`
/// with `k` in `U = <x_{d+1}, ..., x_n>`, kept in `X`-normal form (which
/// agrees with the `X_g`-normal form on `U`).
struct Rebase<'a, A: PcArith + ?Sized> {
    arith: &'a A,
    g: ExponentVector,
    d: usize,
    p: u32,
    /// `u = g^p`, an element of `U`.
    u: ExponentVector,
    /// `x_d = g^l t_d`.
    l: u32,
    t_d: ExponentVector,
}

impl<'a, A: PcArith + ?Sized> Rebase<'a, A> {
    fn new(arith: &'a A, g: &ExponentVector, ctr: &OpCounter) -> Result<Self> {
        let pres = arith.presentation();
        let (d, e) = g.leading().ok_or(PcError::IdentityElement)?;
        let p = pres.relative_order(d);
        let l = inv_mod(u64::from(e), u64::from(p)).expect("prime relative order") as u32;
        let u = arith.power_u64(g, u64::from(p), ctr);
        let g_neg_l = arith.power_i64(g, -i64::from(l), ctr);
        let t_d = arith.multiply(&g_neg_l, &pres.generator(d), ctr);
        debug_assert!(t_d.as_slice()[..=d].iter().all(|&e| e == 0));
        Ok(Self { arith, g: g.clone(), d, p, u, l, t_d })
    }

    /// `(g^a A)(g^b B) = g^{(a+b) mod p} u^{floor((a+b)/p)} (g^{-b} A g^b) B`.
    fn mul(&self, (a, ka): (u32, &ExponentVector), (b, kb): (u32, &ExponentVector), ctr: &OpCounter) -> (u32, ExponentVector) {
        let s = a + b;
        let conj = if b == 0 || ka.is_identity() {
            ka.clone()
        } else {
            let gb = self.arith.power_u64(&self.g, u64::from(b), ctr);
            self.arith.conjugate(ka, &gb, ctr)
        };
        let mut w = if s >= self.p { self.arith.multiply(&self.u, &conj, ctr) } else { conj };
        w = self.arith.multiply(&w, kb, ctr);
        (s % self.p, w)
    }

    /// `x_d^f` as a pair, by square-and-multiply.
    fn xd_power(&self, f: u32, ctr: &OpCounter) -> (u32, ExponentVector) {
        let mut acc = (0, self.arith.identity());
        for i in (0..32 - f.leading_zeros()).rev() {
            acc = self.mul((acc.0, &acc.1), (acc.0, &acc.1), ctr);
            if (f >> i) & 1 == 1 {
                acc = self.mul((acc.0, &acc.1), (self.l, &self.t_d), ctr);
            }
        }
        acc
    }

    /// Exponent vector of `h` over `X_g`.
    fn reexpress(&self, h: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        let d = self.d;
        let mut tail = h.clone().into_vec();
        let f = tail[d];
        tail[..=d].iter_mut().for_each(|e| *e = 0);
        let tail = ExponentVector::new(tail);
        let (a, k) = if f == 0 { (0, tail) } else {
            let xf = self.xd_power(f, ctr);
            self.mul((xf.0, &xf.1), (0, &tail), ctr)
        };
        debug_assert!(k.as_slice()[..=d].iter().all(|&e| e == 0));
        let mut out = k.into_vec();
        out[..d].copy_from_slice(&h.as_slice()[..d]);
        out[d] = a;
        ExponentVector::new(out)
    }
}

/// Exponent vector of `h` with respect to `X_g`.
pub fn reexpress<A: PcArith + ?Sized>(arith: &A, g: &ExponentVector, h: &ExponentVector, ctr: &OpCounter) -> Result<ExponentVector> {
    Ok(Rebase::new(arith, g, ctr)?.reexpress(h, ctr))
}

/// The presentation of `X_g` and the isomorphism `P -> P'`.
pub fn elementary_transform(pres: &Arc<PcPresentation>, g: &ExponentVector, ctr: &OpCounter) -> Result<(Arc<PcPresentation>, PcIsomorphism)> {
    elementary_transform_with(pres, &**pres, g, ctr)
}

/// As [`elementary_transform`], multiplying in `pres` through `arith`.
pub fn elementary_transform_with<A: PcArith + ?Sized>(
    pres: &Arc<PcPresentation>,
    arith: &A,
    g: &ExponentVector,
    ctr: &OpCounter,
) -> Result<(Arc<PcPresentation>, PcIsomorphism)> {
    pres.validate(g)?;
    let (d, _) = g.leading().ok_or(PcError::IdentityElement)?;
    let n = pres.n();
    if *g == pres.generator(d) {
        return Ok((pres.clone(), PcIsomorphism::identity(pres.clone())));
    }
    let rb = Rebase::new(arith, g, ctr)?;
    let ys: Vec<ExponentVector> = (0..n).map(|i| if i == d { g.clone() } else { pres.generator(i) }).collect();
    let mut powers = Vec::new();
    let mut conjugates = Vec::new();
    for i in 0..n {
        let lhs = arith.power_u64(&ys[i], u64::from(pres.relative_order(i)), ctr);
        let rhs = rb.reexpress(&lhs, ctr);
        if !rhs.is_identity() {
            powers.push((i, rhs));
        }
        for j in i + 1..n {
            let lhs = arith.conjugate(&ys[j], &ys[i], ctr);
            let rhs = rb.reexpress(&lhs, ctr);
            if rhs != ExponentVector::generator_power(n, j, 1) {
                conjugates.push((j, i, rhs));
            }
        }
    }
    let target = Arc::new(PcPresentation::from_relations(pres.relative_orders().to_vec(), &powers, &conjugates)?);
    let forward = (0..n)
        .map(|i| if i == d { rb.reexpress(&pres.generator(d), ctr) } else { target.generator(i) })
        .collect();
    let iso = PcIsomorphism::new_unchecked(pres.clone(), target.clone(), forward, ys);
    Ok((target, iso))
}
