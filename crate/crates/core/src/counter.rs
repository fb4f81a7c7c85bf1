use std::cell::Cell;

/// Per-computation operation counter.
///
/// `multiplications` counts calls of the group multiplication on normal
/// forms (including those issued by powering, inversion and map
/// application); `bit_ops_estimate` is a coarse tally of auxiliary work.
/// The counter is owned by one computation context and is deliberately not
/// `Sync`.
#[derive(Debug, Default)]
pub struct OpCounter {
    multiplications: Cell<u64>,
    bit_ops: Cell<u64>,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn multiplications(&self) -> u64 {
        self.multiplications.get()
    }

    pub fn bit_ops_estimate(&self) -> u64 {
        self.bit_ops.get()
    }

    pub(crate) fn bump_multiplications(&self) {
        self.multiplications.set(self.multiplications.get() + 1);
    }

    pub(crate) fn add_bit_ops(&self, n: u64) {
        self.bit_ops.set(self.bit_ops.get() + n);
    }
}
