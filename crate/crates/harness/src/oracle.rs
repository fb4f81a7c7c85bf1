//! Answers by literal enumeration and iteration.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use pcdyn_core::{AffineMap, ExponentVector, OpCounter, PcAutomorphism, PcEndomorphism, PcError, PcPresentation};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

fn check_budget(pres: &PcPresentation, budget: u64) -> Result<u64, PcError> {
    match pres.order().to_u64() {
        Some(o) if o <= budget => Ok(o),
        _ => Err(PcError::BudgetExceeded { budget, order: pres.order().to_string() }),
    }
}

/// Every normal form, in lexicographic order of the exponent vectors.
pub fn enumerate_group(pres: &PcPresentation, budget: u64) -> Result<Vec<ExponentVector>, PcError> {
    let total = check_budget(pres, budget)?;
    let orders = pres.relative_orders();
    let mut out = Vec::with_capacity(total as usize);
    let mut cur = vec![0u32; orders.len()];
    loop {
        out.push(ExponentVector::new(cur.clone()));
        let mut k = orders.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < orders[k] {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Smallest `k >= 1` with `f^k(g) = g`; `None` if `g` is not periodic
/// within `limit` steps.
pub fn brute_cycle_length(mut f: impl FnMut(&ExponentVector) -> ExponentVector, g: &ExponentVector, limit: u64) -> Option<u64> {
    let mut cur = f(g);
    let mut k = 1;
    while cur != *g {
        if k >= limit {
            return None;
        }
        cur = f(&cur);
        k += 1;
    }
    Some(k)
}

/// lcm of the cycle lengths of `alpha` on all of `G`.
pub fn brute_automorphism_order(alpha: &PcAutomorphism, budget: u64, ctr: &OpCounter) -> Result<BigUint, PcError> {
    let els = enumerate_group(alpha.presentation(), budget)?;
    let mut seen = HashSet::with_capacity(els.len());
    let mut acc = BigUint::one();
    for g in &els {
        if seen.contains(g) {
            continue;
        }
        let mut len = 0u64;
        let mut cur = g.clone();
        loop {
            seen.insert(cur.clone());
            cur = alpha.apply(&cur, ctr);
            len += 1;
            if cur == *g {
                break;
            }
        }
        acc = acc.lcm(&BigUint::from(len));
    }
    Ok(acc)
}

/// Orbit length of `g` under `x -> t alpha(x)`, by iteration.
pub fn brute_affine_cycle_length(a: &AffineMap, g: &ExponentVector, budget: u64, ctr: &OpCounter) -> Result<u64, PcError> {
    let order = check_budget(a.presentation(), budget)?;
    brute_cycle_length(|x| a.apply(x, ctr), g, order)
        .ok_or_else(|| PcError::Invariant("affine map is not a permutation".into()))
}

/// The eventual image of `phi`, which is its set of periodic points.
pub fn brute_periodic_points(phi: &PcEndomorphism, budget: u64, ctr: &OpCounter) -> Result<HashSet<ExponentVector>, PcError> {
    let mut cur: HashSet<ExponentVector> = enumerate_group(phi.presentation(), budget)?.into_iter().collect();
    loop {
        let next: HashSet<ExponentVector> = cur.iter().map(|x| phi.apply(x, ctr)).collect();
        if next.len() == cur.len() {
            return Ok(next);
        }
        cur = next;
    }
}

/// Steps until `g` lands on a cycle of `phi`.
pub fn brute_preperiod(phi: &PcEndomorphism, periodic: &HashSet<ExponentVector>, g: &ExponentVector, ctr: &OpCounter) -> u64 {
    let mut cur = g.clone();
    let mut t = 0;
    while !periodic.contains(&cur) {
        cur = phi.apply(&cur, ctr);
        t += 1;
    }
    t
}
