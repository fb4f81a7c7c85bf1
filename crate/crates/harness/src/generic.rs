//! The iterate-on-generators order algorithm: with `K_1 = 1`, iterate
//! `alpha^{K_i}` on the `i`-th generator until it returns after `k_i`
//! steps, and set `K_{i+1} = K_i k_i`. The final `K` is the order.

use num_bigint::BigUint;
use num_traits::One;
use pcdyn_core::{OpCounter, PcAutomorphism};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericOrder {
    pub order: BigUint,
    /// Applications of a power of `alpha` to a generator.
    pub iterations: u64,
}

pub fn generic_order(alpha: &PcAutomorphism, ctr: &OpCounter) -> GenericOrder {
    let pres = alpha.presentation();
    let mut k_acc = BigUint::one();
    let mut beta = alpha.clone();
    let mut iterations = 0;
    for i in 0..pres.n() {
        let g = pres.generator(i);
        let mut cur = beta.apply(&g, ctr);
        let mut k = 1u64;
        iterations += 1;
        while cur != g {
            cur = beta.apply(&cur, ctr);
            k += 1;
            iterations += 1;
        }
        if k > 1 {
            k_acc *= k;
            beta = beta.power(&BigUint::from(k), ctr);
        }
    }
    GenericOrder { order: k_acc, iterations }
}
