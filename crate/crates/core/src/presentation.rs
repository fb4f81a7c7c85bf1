//! Refined polycyclic presentations and collection from the left.

use std::fmt::Write as _;

use num_bigint::BigUint;
use pcdyn_ffield::is_prime;

use crate::element::{ExponentVector, Word};
use crate::error::{PcError, Result};

/// `<x_1, ..., x_n | x_i^{p_i} = w_i, x_j^{x_i} = c_{ij}>` with prime `p_i`.
///
/// Indices are 0-based throughout the API; only the text format and
/// [`PcPresentation::depth`] / [`PcPresentation::coeff`] use 1-based
/// positions. Right-hand sides are stored as normal forms: `w_i` has support
/// in `(i, n)`, `c_{ij}` (for `i < j`) has support in `(i, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcPresentation {
    orders: Vec<u32>,
    powers: Vec<ExponentVector>,
    /// `conj[i][j - i - 1] = x_j^{x_i}` for `i < j`.
    conj: Vec<Vec<ExponentVector>>,
    /// `trivial[i][j - i - 1]` iff `x_j^{x_i} = x_j`.
    trivial: Vec<Vec<bool>>,
}

impl PcPresentation {
    /// Builds a presentation from explicit non-trivial relations. Unlisted
    /// relations are trivial. Consistency is not checked here.
    pub fn from_relations(
        orders: Vec<u32>,
        powers: &[(usize, ExponentVector)],
        conjugates: &[(usize, usize, ExponentVector)],
    ) -> Result<Self> {
        let n = orders.len();
        for (i, &p) in orders.iter().enumerate() {
            if !is_prime(u64::from(p)) {
                return Err(PcError::NotPrime(u64::from(p), i + 1));
            }
        }
        let mut pres = Self {
            powers: vec![ExponentVector::identity(n); n],
            conj: (0..n)
                .map(|i| {
                    (i + 1..n)
                        .map(|j| ExponentVector::generator_power(n, j, 1))
                        .collect()
                })
                .collect(),
            trivial: (0..n).map(|i| vec![true; n - i - 1]).collect(),
            orders,
        };
        for (i, rhs) in powers {
            let i = *i;
            if i >= n {
                return Err(PcError::InvalidVector(format!("power relation for generator {}", i + 1)));
            }
            pres.check_rhs(rhs, i + 1)?;
            pres.powers[i] = rhs.clone();
        }
        for (j, i, rhs) in conjugates {
            let (i, j) = (*i, *j);
            if !(i < j && j < n) {
                return Err(PcError::InvalidVector(format!(
                    "conjugate relation x{}^x{} needs 1 <= i < j <= n",
                    j + 1,
                    i + 1
                )));
            }
            pres.check_rhs(rhs, i + 1)?;
            pres.trivial[i][j - i - 1] = *rhs == ExponentVector::generator_power(n, j, 1);
            pres.conj[i][j - i - 1] = rhs.clone();
        }
        Ok(pres)
    }

    fn check_rhs(&self, rhs: &ExponentVector, first: usize) -> Result<()> {
        self.validate(rhs)?;
        if rhs.as_slice()[..first].iter().any(|&e| e != 0) {
            return Err(PcError::InvalidVector(format!(
                "relation right-hand side {rhs} uses a generator of index <= {first}"
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.orders.len()
    }

    pub fn relative_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn relative_order(&self, i: usize) -> u32 {
        self.orders[i]
    }

    /// Normal form of `x_i^{p_i}`.
    pub fn power_rhs(&self, i: usize) -> &ExponentVector {
        &self.powers[i]
    }

    /// Normal form of `x_j^{x_i} = x_i^{-1} x_j x_i`, `i < j`.
    pub fn conjugate_rhs(&self, j: usize, i: usize) -> &ExponentVector {
        &self.conj[i][j - i - 1]
    }

    pub fn is_trivial_conjugate(&self, j: usize, i: usize) -> bool {
        self.trivial[i][j - i - 1]
    }

    /// `|G| = prod p_i` (for a consistent presentation).
    pub fn order(&self) -> BigUint {
        self.orders.iter().fold(BigUint::from(1u32), |acc, &p| acc * p)
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.orders
            .iter()
            .try_fold(1u64, |acc, &p| acc.checked_mul(u64::from(p)))
    }

    /// Largest bit length of a relative order.
    pub fn max_prime_bits(&self) -> u32 {
        self.orders.iter().map(|p| 32 - p.leading_zeros()).max().unwrap_or(0)
    }

    pub fn identity(&self) -> ExponentVector {
        ExponentVector::identity(self.n())
    }

    pub fn generator(&self, i: usize) -> ExponentVector {
        ExponentVector::generator_power(self.n(), i, 1)
    }

    pub fn validate(&self, v: &ExponentVector) -> Result<()> {
        if v.len() != self.n() {
            return Err(PcError::InvalidVector(format!("{v} has length {}, expected {}", v.len(), self.n())));
        }
        if let Some(k) = (0..self.n()).find(|&k| v.get(k) >= self.orders[k]) {
            return Err(PcError::InvalidVector(format!(
                "{v}: coordinate {} is not below its relative order {}",
                k + 1,
                self.orders[k]
            )));
        }
        Ok(())
    }

    pub fn is_valid(&self, v: &ExponentVector) -> bool {
        self.validate(v).is_ok()
    }

    /// Least `k` (1-based) with `e_k != 0`, `n + 1` for the identity.
    pub fn depth(&self, v: &ExponentVector) -> usize {
        v.leading().map_or(self.n() + 1, |(i, _)| i + 1)
    }

    /// The `k`-th (1-based) coordinate.
    pub fn coeff(&self, v: &ExponentVector, k: usize) -> u32 {
        v.get(k - 1)
    }

    /// Total length of the relation tables in the text format, a stand-in
    /// for the input length.
    pub fn serialized_len(&self) -> usize {
        self.to_pcp().len()
    }

    /// The `.pcp` text of this presentation; trivial relations are omitted.
    pub fn to_pcp(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        writeln!(out, "pcpres 1").unwrap();
        writeln!(out, "n {n}").unwrap();
        let orders: Vec<String> = self.orders.iter().map(u32::to_string).collect();
        writeln!(out, "orders {}", orders.join(" ")).unwrap();
        for i in 0..n {
            if !self.powers[i].is_identity() {
                writeln!(out, "pow {} = {}", i + 1, format_word(&self.powers[i])).unwrap();
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if !self.is_trivial_conjugate(j, i) {
                    writeln!(out, "conj {} {} = {}", j + 1, i + 1, format_word(self.conjugate_rhs(j, i))).unwrap();
                }
            }
        }
        out
    }

    // ---- collection -------------------------------------------------------

    /// `v <- v * x_j^e` for `0 <= e < p_j`.
    fn collect_gen(&self, v: &mut [u32], j: usize, e: u32, steps: &mut u64) {
        if e == 0 {
            return;
        }
        *steps += 1;
        let n = self.n();
        let tail = if v[j + 1..].iter().any(|&x| x != 0) {
            let mut t = vec![0; n];
            t[j + 1..].copy_from_slice(&v[j + 1..]);
            v[j + 1..].iter_mut().for_each(|x| *x = 0);
            Some(t)
        } else {
            None
        };
        let s = v[j] + e;
        let p = self.orders[j];
        if s < p {
            v[j] = s;
        } else {
            // x_j^s = x_j^{s-p} w_j, and the tail is empty here.
            v[j] = s - p;
            v[j + 1..].copy_from_slice(&self.powers[j].as_slice()[j + 1..]);
        }
        if let Some(mut t) = tail {
            for _ in 0..e {
                t = self.conjugate_by_generator(&t, j, steps);
            }
            self.collect_vec(v, &t, steps);
        }
    }

    /// `t^{x_j}` for `t` supported in `(j, n)`.
    fn conjugate_by_generator(&self, t: &[u32], j: usize, steps: &mut u64) -> Vec<u32> {
        let n = self.n();
        let row = &self.trivial[j];
        if (j + 1..n).all(|k| t[k] == 0 || row[k - j - 1]) {
            return t.to_vec();
        }
        let mut u = vec![0; n];
        for k in j + 1..n {
            if t[k] == 0 {
                continue;
            }
            if row[k - j - 1] {
                self.collect_gen(&mut u, k, t[k], steps);
            } else {
                let c = self.conj[j][k - j - 1].as_slice();
                for _ in 0..t[k] {
                    self.collect_vec(&mut u, c, steps);
                }
            }
        }
        u
    }

    /// `v <- v * w` for a normal form `w`.
    fn collect_vec(&self, v: &mut [u32], w: &[u32], steps: &mut u64) {
        let n = self.n();
        let mut last = v.iter().rposition(|&x| x != 0);
        for k in 0..n {
            if w[k] == 0 {
                continue;
            }
            if last.is_none_or(|l| l < k) {
                // Nothing to move past: concatenate.
                v[k..].copy_from_slice(&w[k..]);
                return;
            }
            self.collect_gen(v, k, w[k], steps);
            last = v.iter().rposition(|&x| x != 0);
        }
    }

    /// Collection without touching a counter; callers count.
    pub(crate) fn collect_product(&self, a: &ExponentVector, b: &ExponentVector, steps: &mut u64) -> ExponentVector {
        debug_assert!(self.is_valid(a) && self.is_valid(b), "{a} * {b}");
        let mut v = a.clone();
        self.collect_vec(v.as_mut_slice(), b.as_slice(), steps);
        v
    }

    /// Right action of a single generator, `a * x_j`.
    pub(crate) fn act_generator(&self, a: &ExponentVector, j: usize, steps: &mut u64) -> ExponentVector {
        let mut v = a.clone();
        self.collect_gen(v.as_mut_slice(), j, 1, steps);
        v
    }
}

fn format_word(v: &ExponentVector) -> String {
    let atoms: Vec<String> = Word::from_normal_form(v)
        .letters()
        .iter()
        .map(|&(i, e)| if e == 1 { format!("{}", i + 1) } else { format!("{}^{}", i + 1, e) })
        .collect();
    atoms.join(" ")
}
