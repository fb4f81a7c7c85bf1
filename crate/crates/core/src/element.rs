use std::fmt;
use std::str::FromStr;

use crate::error::PcError;

/// Normal-form coordinates `(e_1, ..., e_n)` of a group element with respect
/// to a pcgs, `0 <= e_k < p_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        Self(coords)
    }

    pub fn identity(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `x_i^e` for a 0-based generator index.
    pub fn generator_power(n: usize, i: usize, e: u32) -> Self {
        let mut v = Self::identity(n);
        v.0[i] = e;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [u32] {
        &mut self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Coordinate at a 0-based position.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// 0-based position and value of the first nonzero coordinate.
    pub fn leading(&self) -> Option<(usize, u32)> {
        self.0.iter().enumerate().find(|(_, &e)| e != 0).map(|(i, &e)| (i, e))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Bracketed, comma separated: `[1,1,0]`.
impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for ExponentVector {
    type Err = PcError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PcError::InvalidVector(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Self(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }
}

/// A word `x_{i_1}^{e_1} ... x_{i_k}^{e_k}` with 0-based generator indices
/// and arbitrary integer exponents.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    pub fn new(letters: Vec<(usize, i64)>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.0
    }

    /// The word spelled by a normal form.
    pub fn from_normal_form(v: &ExponentVector) -> Self {
        Self(
            v.as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| (i, i64::from(e)))
                .collect(),
        )
    }
}
