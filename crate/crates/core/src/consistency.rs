//! Consistency by enumeration.
//!
//! Let `rho_i` be the map `a -> a * x_i` on the `prod p_i` normal forms,
//! computed by collection. If every defining relation holds for the maps
//! `rho_i`, they generate a group acting on the normal forms that satisfies
//! the relations and moves the identity to every normal form, so the
//! presented group has at least `prod p_i` elements. Collection shows it has
//! at most that many, hence the presentation is consistent.

use std::fmt;

use crate::element::ExponentVector;
use crate::presentation::PcPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    Unchecked { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub verdict: Verdict,
    /// Number of distinct normal forms enumerated, when enumeration ran.
    pub elements: Option<u64>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Pass => write!(f, "consistent: {} elements", self.elements.unwrap_or(0)),
            Verdict::Fail { witness } => write!(f, "inconsistent: {witness}"),
            Verdict::Unchecked { reason } => write!(f, "unchecked: {reason}"),
        }
    }
}

struct Indexer {
    orders: Vec<u32>,
}

impl Indexer {
    fn encode(&self, v: &[u32]) -> usize {
        v.iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&e, &p)| acc * p as usize + e as usize)
    }

    fn decode(&self, mut idx: usize) -> Vec<u32> {
        let mut v = vec![0; self.orders.len()];
        for k in (0..self.orders.len()).rev() {
            let p = self.orders[k] as usize;
            v[k] = (idx % p) as u32;
            idx /= p;
        }
        v
    }
}

#[allow(clippy::needless_range_loop)]
pub fn check_consistency(pres: &PcPresentation, budget: u64) -> ConsistencyReport {
    let size = match pres.order_u64() {
        Some(s) if s <= budget => s as usize,
        _ => {
            return ConsistencyReport {
                verdict: Verdict::Unchecked {
                    reason: format!("group order {} exceeds the enumeration budget {budget}", pres.order()),
                },
                elements: None,
            }
        }
    };
    let n = pres.n();
    let ix = Indexer { orders: pres.relative_orders().to_vec() };
    let mut steps = 0u64;
    // rho[i][a] = index of a * x_i
    let rho: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            (0..size)
                .map(|a| {
                    let v = ExponentVector::new(ix.decode(a));
                    ix.encode(pres.act_generator(&v, i, &mut steps).as_slice()) as u32
                })
                .collect()
        })
        .collect();
    let apply_word = |a: usize, w: &ExponentVector| -> usize {
        let mut a = a;
        for (k, &e) in w.as_slice().iter().enumerate() {
            for _ in 0..e {
                a = rho[k][a] as usize;
            }
        }
        a
    };
    let show = |a: usize| ExponentVector::new(ix.decode(a));
    for a in 0..size {
        for i in 0..n {
            let mut lhs = a;
            for _ in 0..pres.relative_order(i) {
                lhs = rho[i][lhs] as usize;
            }
            let rhs = apply_word(a, pres.power_rhs(i));
            if lhs != rhs {
                return fail(format!(
                    "x{}^{} acts as {} but {} on {}",
                    i + 1,
                    pres.relative_order(i),
                    show(lhs),
                    show(rhs),
                    show(a)
                ));
            }
            for j in i + 1..n {
                let lhs = rho[i][rho[j][a] as usize] as usize;
                let rhs = apply_word(rho[i][a] as usize, pres.conjugate_rhs(j, i));
                if lhs != rhs {
                    return fail(format!(
                        "x{j1} x{i1} = x{i1} x{j1}^x{i1} fails on {}: {} vs {}",
                        show(a),
                        show(lhs),
                        show(rhs),
                        j1 = j + 1,
                        i1 = i + 1
                    ));
                }
            }
        }
    }
    // The orbit of the identity reaches every normal form; the relations
    // already force each rho_i to be a permutation, but recheck cheaply.
    for (i, r) in rho.iter().enumerate() {
        let mut hit = vec![false; size];
        for &b in r {
            if std::mem::replace(&mut hit[b as usize], true) {
                return fail(format!("right multiplication by x{} is not injective", i + 1));
            }
        }
    }
    ConsistencyReport { verdict: Verdict::Pass, elements: Some(size as u64) }
}

fn fail(witness: String) -> ConsistencyReport {
    ConsistencyReport { verdict: Verdict::Fail { witness }, elements: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_presentation;

    #[test]
    fn d4_passes() {
        let p = parse_presentation("pcpres 1\nn 3\norders 2 2 2\npow 2 = 3\nconj 2 1 = 2 3\n").unwrap();
        let r = check_consistency(&p, 1000);
        assert!(r.passed());
        assert_eq!(r.elements, Some(8));
    }

    #[test]
    fn direct_product_passes() {
        let p = parse_presentation("pcpres 1\nn 2\norders 2 3\n").unwrap();
        assert_eq!(check_consistency(&p, 1000).elements, Some(6));
    }

    #[test]
    fn inconsistent_is_caught() {
        // x1 would centralize x1^2 = x2 while inverting it.
        let p = parse_presentation("pcpres 1\nn 2\norders 2 3\npow 1 = 2\nconj 2 1 = 2^2\n").unwrap();
        assert!(matches!(check_consistency(&p, 1000).verdict, Verdict::Fail { .. }));
    }

    #[test]
    fn budget_gives_unchecked() {
        let p = parse_presentation("pcpres 1\nn 4\norders 2 2 2 2\n").unwrap();
        assert!(matches!(check_consistency(&p, 10).verdict, Verdict::Unchecked { .. }));
    }
}
