//! Pc group isomorphisms between two presentations of the same group.

use std::sync::Arc;

use crate::arith::PcArith;
use crate::counter::OpCounter;
use crate::element::ExponentVector;
use crate::error::{PcError, Result};
use crate::presentation::PcPresentation;

/// `forward[i]`: target normal form of the image of source generator `i`;
/// `backward[j]`: source normal form of the preimage of target generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcIsomorphism {
    source: Arc<PcPresentation>,
    target: Arc<PcPresentation>,
    forward: Vec<ExponentVector>,
    backward: Vec<ExponentVector>,
}

impl PcIsomorphism {
    /// Checks that the tables are mutually inverse on generators.
    pub fn new(
        source: Arc<PcPresentation>,
        target: Arc<PcPresentation>,
        forward: Vec<ExponentVector>,
        backward: Vec<ExponentVector>,
    ) -> Result<Self> {
        let iso = Self::new_unchecked(source, target, forward, backward);
        iso.verify(&OpCounter::new())?;
        Ok(iso)
    }

    pub fn new_unchecked(
        source: Arc<PcPresentation>,
        target: Arc<PcPresentation>,
        forward: Vec<ExponentVector>,
        backward: Vec<ExponentVector>,
    ) -> Self {
        Self { source, target, forward, backward }
    }

    pub fn identity(pres: Arc<PcPresentation>) -> Self {
        let gens: Vec<_> = (0..pres.n()).map(|i| pres.generator(i)).collect();
        Self { source: pres.clone(), target: pres, forward: gens.clone(), backward: gens }
    }

    pub fn source(&self) -> &Arc<PcPresentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PcPresentation> {
        &self.target
    }

    pub fn forward(&self) -> &[ExponentVector] {
        &self.forward
    }

    pub fn backward(&self) -> &[ExponentVector] {
        &self.backward
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.forward == self.backward && self.forward.iter().enumerate().all(|(i, v)| *v == self.source.generator(i))
    }

    pub fn inverse(&self) -> Self {
        Self {
            source: self.target.clone(),
            target: self.source.clone(),
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    pub fn map_forward(&self, v: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        self.target.substitute(&self.forward, v, ctr)
    }

    /// Forward map with an explicit backend for the target.
    pub fn map_forward_with<A: PcArith + ?Sized>(&self, target: &A, v: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        target.substitute(&self.forward, v, ctr)
    }

    pub fn map_backward(&self, v: &ExponentVector, ctr: &OpCounter) -> ExponentVector {
        self.source.substitute(&self.backward, v, ctr)
    }

    /// `other o self` (`self: A -> B`, `other: B -> C`), multiplying in `C`
    /// with the given backend.
    pub fn then_with<C: PcArith + ?Sized>(&self, other: &Self, c_arith: &C, ctr: &OpCounter) -> Result<Self> {
        if *self.target != *other.source {
            return Err(PcError::PresentationMismatch);
        }
        let backward = other.backward.iter().map(|v| self.map_backward(v, ctr)).collect();
        let forward = self.forward.iter().map(|v| other.map_forward_with(c_arith, v, ctr)).collect();
        Ok(Self { source: self.source.clone(), target: other.target.clone(), forward, backward })
    }

    pub fn then(&self, other: &Self, ctr: &OpCounter) -> Result<Self> {
        let c = other.target.clone();
        self.then_with(other, &*c, ctr)
    }

    /// `backward(forward(x_i)) = x_i` and `forward(backward(y_j)) = y_j`.
    pub fn verify(&self, ctr: &OpCounter) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if s.n() != t.n() || self.forward.len() != s.n() || self.backward.len() != t.n() {
            return Err(PcError::Invariant("isomorphism tables have the wrong length".into()));
        }
        for v in &self.forward {
            t.validate(v)?;
        }
        for v in &self.backward {
            s.validate(v)?;
        }
        for i in 0..s.n() {
            if self.map_backward(&self.forward[i], ctr) != s.generator(i) {
                return Err(PcError::Invariant(format!("backward(forward(x{})) != x{}", i + 1, i + 1)));
            }
        }
        for j in 0..t.n() {
            if self.map_forward(&self.backward[j], ctr) != t.generator(j) {
                return Err(PcError::Invariant(format!("forward(backward(y{})) != y{}", j + 1, j + 1)));
            }
        }
        Ok(())
    }
}
