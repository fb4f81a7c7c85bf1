//! Endomorphisms, automorphisms and bijective affine maps, given by the
//! images of the presentation generators.

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::PcArith;
use crate::counter::OpCounter;
use crate::element::ExponentVector;
use crate::error::{PcError, Result};
use crate::pcgs::induced_pcgs;
use crate::presentation::PcPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcEndomorphism {
    pres: Arc<PcPresentation>,
    images: Vec<ExponentVector>,
}

/// Checks that the images satisfy every defining relation.
fn check_relations(pres: &PcPresentation, images: &[ExponentVector]) -> Result<()> {
    let n = pres.n();
    if images.len() != n {
        return Err(PcError::InvalidVector(format!("{} images for {n} generators", images.len())));
    }
    for v in images {
        pres.validate(v)?;
    }
    let ctr = OpCounter::new();
    for i in 0..n {
        let lhs = pres.power_u64(&images[i], u64::from(pres.relative_order(i)), &ctr);
        let rhs = pres.substitute(images, pres.power_rhs(i), &ctr);
        if lhs != rhs {
            return Err(PcError::RelationViolated(format!(
                "x{}^{}: {lhs} != {rhs}",
                i + 1,
                pres.relative_order(i)
            )));
        }
        for j in i + 1..n {
            let lhs = pres.conjugate(&images[j], &images[i], &ctr);
            let rhs = pres.substitute(images, pres.conjugate_rhs(j, i), &ctr);
            if lhs != rhs {
                return Err(PcError::RelationViolated(format!("x{}^x{}: {lhs} != {rhs}", j + 1, i + 1)));
            }
        }
    }
    Ok(())
}

impl PcEndomorphism {
    /// Validates relation preservation eagerly.
    pub fn new(pres: Arc<PcPresentation>, images: Vec<ExponentVector>) -> Result<Self> {
        check_relations(&pres, &images)?;
        Ok(Self { pres, images })
    }

    pub(crate) fn new_unchecked(pres: Arc<PcPresentation>, images: Vec<ExponentVector>) -> Self {
        Self { pres, images }
    }

    pub fn identity(pres: Arc<PcPresentation>) -> Self {
        let images = (0..pres.n()).map(|i| pres.generator(i)).collect();
        Self { pres, images }
    }

    pub fn presentation(&self) -> &Arc<PcPresentation> {
        &self.pres
    }

    pub fn images(&self) -> &[ExponentVector] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &ExponentVector {
        &self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, v)| *v == self.pres.generator(i))
    }

    pub fn apply(&self, g: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        self.apply_with(&*self.pres, g, ctr)
    }

    /// Application with an explicit multiplication backend for the same
    /// presentation.
    pub fn apply_with<A: PcArith + ?Sized>(&self, arith: &A, g: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        arith.substitute(&self.images, g, ctr)
    }

    /// `self o other`.
    pub fn compose(&self, other: &Self, ctr: &OpCounter) -> Self {
        self.compose_with(&*self.pres, other, ctr)
    }

    pub fn compose_with<A: PcArith + ?Sized>(&self, arith: &A, other: &Self, ctr: &OpCounter) -> Self {
        let images = other.images.iter().map(|v| self.apply_with(arith, v, ctr)).collect();
        Self { pres: self.pres.clone(), images }
    }

    pub fn power(&self, e: &BigUint, ctr: &OpCounter) -> Self {
        self.power_with(&*self.pres, e, ctr)
    }

    /// `self^e` by square-and-multiply; `e = 0` gives the identity.
    pub fn power_with<A: PcArith + ?Sized>(&self, arith: &A, e: &BigUint, ctr: &OpCounter) -> Self {
        let mut acc = Self::identity(self.pres.clone());
        for i in (0..e.bits()).rev() {
            if !acc.is_identity() {
                acc = acc.compose_with(arith, &acc, ctr);
            }
            if e.bit(i) {
                acc = acc.compose_with(arith, self, ctr);
            }
        }
        acc
    }

    /// Whether the images generate the whole group.
    pub fn is_bijective(&self) -> bool {
        let ctr = OpCounter::new();
        induced_pcgs(&*self.pres, &self.images, &ctr).len() == self.pres.n()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcAutomorphism(PcEndomorphism);

impl PcAutomorphism {
    pub fn new(pres: Arc<PcPresentation>, images: Vec<ExponentVector>) -> Result<Self> {
        Self::from_endomorphism(PcEndomorphism::new(pres, images)?)
    }

    pub fn from_endomorphism(m: PcEndomorphism) -> Result<Self> {
        if !m.is_bijective() {
            return Err(PcError::NotBijective);
        }
        Ok(Self(m))
    }

    pub(crate) fn new_unchecked(pres: Arc<PcPresentation>, images: Vec<ExponentVector>) -> Self {
        Self(PcEndomorphism::new_unchecked(pres, images))
    }

    pub fn identity(pres: Arc<PcPresentation>) -> Self {
        Self(PcEndomorphism::identity(pres))
    }

    /// `x -> h x h^{-1}`.
    pub fn inner(pres: Arc<PcPresentation>, h: &ExponentVector, ctr: &OpCounter) -> Result<Self> {
        pres.validate(h)?;
        let hi = pres.inverse(h, ctr);
        let images = (0..pres.n())
            .map(|i| {
                let t = pres.multiply(h, &pres.generator(i), ctr);
                pres.multiply(&t, &hi, ctr)
            })
            .collect();
        Ok(Self::new_unchecked(pres, images))
    }

    pub fn as_endomorphism(&self) -> &PcEndomorphism {
        &self.0
    }

    pub fn presentation(&self) -> &Arc<PcPresentation> {
        self.0.presentation()
    }

    pub fn images(&self) -> &[ExponentVector] {
        self.0.images()
    }

    pub fn image(&self, i: usize) -> &ExponentVector {
        self.0.image(i)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn apply(&self, g: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        self.0.apply(g, ctr)
    }

    pub fn apply_with<A: PcArith + ?Sized>(&self, arith: &A, g: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        self.0.apply_with(arith, g, ctr)
    }

    pub fn compose(&self, other: &Self, ctr: &OpCounter) -> Self {
        Self(self.0.compose(&other.0, ctr))
    }

    pub fn compose_with<A: PcArith + ?Sized>(&self, arith: &A, other: &Self, ctr: &OpCounter) -> Self {
        Self(self.0.compose_with(arith, &other.0, ctr))
    }

    pub fn power(&self, e: &BigUint, ctr: &OpCounter) -> Self {
        Self(self.0.power(e, ctr))
    }

    pub fn power_with<A: PcArith + ?Sized>(&self, arith: &A, e: &BigUint, ctr: &OpCounter) -> Self {
        Self(self.0.power_with(arith, e, ctr))
    }
}

/// `A_{t, alpha}: x -> t alpha(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub t: ExponentVector,
    pub alpha: PcAutomorphism,
}

impl AffineMap {
    pub fn new(t: ExponentVector, alpha: PcAutomorphism) -> Result<Self> {
        alpha.presentation().validate(&t)?;
        Ok(Self { t, alpha })
    }

    pub fn identity(pres: Arc<PcPresentation>) -> Self {
        Self { t: pres.identity(), alpha: PcAutomorphism::identity(pres) }
    }

    pub fn presentation(&self) -> &Arc<PcPresentation> {
        self.alpha.presentation()
    }

    pub fn apply(&self, g: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        self.apply_with(&**self.presentation(), g, ctr)
    }

    pub fn apply_with<A: PcArith + ?Sized>(&self, arith: &A, g: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        let a = self.alpha.apply_with(arith, g, ctr);
        arith.multiply(&self.t, &a, ctr)
    }

    /// `A_{t1,a1} o A_{t2,a2} = A_{t1 a1(t2), a1 o a2}`.
    pub fn compose(&self, other: &Self, ctr: &OpCounter) -> Self {
        self.compose_with(&**self.presentation(), other, ctr)
    }

    pub fn compose_with<A: PcArith + ?Sized>(&self, arith: &A, other: &Self, ctr: &OpCounter) -> Self {
        Self {
            t: self.apply_with(arith, &other.t, ctr),
            alpha: self.alpha.compose_with(arith, &other.alpha, ctr),
        }
    }

    pub fn power(&self, e: &BigUint, ctr: &OpCounter) -> Result<Self> {
        self.power_with(&**self.presentation(), e, ctr)
    }

    /// Square-and-multiply over the composition formula; `e >= 1`.
    pub fn power_with<A: PcArith + ?Sized>(&self, arith: &A, e: &BigUint, ctr: &OpCounter) -> Result<Self> {
        if e.is_zero() {
            return Err(PcError::ZeroPower);
        }
        let mut acc = self.clone();
        for i in (0..e.bits() - 1).rev() {
            acc = acc.compose_with(arith, &acc, ctr);
            if e.bit(i) {
                acc = acc.compose_with(arith, self, ctr);
            }
        }
        debug_assert!(e >= &BigUint::one());
        Ok(acc)
    }
}

/// Contents of a `.aut` file: `img <i> = [..]` lines and an optional
/// `t = [..]` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFile {
    pub images: Vec<ExponentVector>,
    pub t: Option<ExponentVector>,
}

pub fn parse_map_file(text: &str, pres: &PcPresentation) -> Result<MapFile> {
    let n = pres.n();
    let err = |line: usize, msg: String| PcError::Parse { line, msg };
    let mut images: Vec<Option<ExponentVector>> = vec![None; n];
    let mut t = None;
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| err(ln, "expected '='".into()))?;
        let v: ExponentVector = rhs.trim().parse().map_err(|e: PcError| err(ln, e.to_string()))?;
        pres.validate(&v).map_err(|e| err(ln, e.to_string()))?;
        match lhs.split_whitespace().collect::<Vec<_>>()[..] {
            ["img", i] => {
                let i: usize = i.parse().map_err(|_| err(ln, format!("bad generator index '{i}'")))?;
                if i == 0 || i > n {
                    return Err(err(ln, format!("generator index {i} out of range 1..{n}")));
                }
                if images[i - 1].replace(v).is_some() {
                    return Err(err(ln, format!("duplicate image for generator {i}")));
                }
            }
            ["t"] => {
                if t.replace(v).is_some() {
                    return Err(err(ln, "duplicate 't' line".into()));
                }
            }
            _ => return Err(err(ln, format!("unrecognised line '{line}'"))),
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| err(0, format!("missing image of generator {}", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(MapFile { images, t })
}

pub fn format_map_file(images: &[ExponentVector], t: Option<&ExponentVector>) -> String {
    let mut out = String::new();
    for (i, v) in images.iter().enumerate() {
        writeln!(out, "img {} = {v}", i + 1).unwrap();
    }
    if let Some(t) = t {
        writeln!(out, "t = {t}").unwrap();
    }
    out
}
