//! Test and benchmark plumbing around `pcdyn-core`: brute-force oracles, the
//! iterate-on-generators baseline for automorphism orders, the bundled
//! corpus of presentations and maps, and CSV benchmarking.

pub mod bench;
pub mod corpus;
pub mod error;
pub mod generic;
pub mod oracle;
pub mod sample;

pub use bench::{run_bench, Algorithm, BenchRecord, BenchReport};
pub use corpus::{bundled_corpus_dir, load_corpus, load_entry, CorpusEntry, NamedMap};
pub use error::{HarnessError, Result};
pub use generic::{generic_order, GenericOrder};
pub use oracle::{
    brute_affine_cycle_length, brute_automorphism_order, brute_cycle_length, brute_periodic_points, brute_preperiod,
    enumerate_group, DEFAULT_BUDGET,
};
pub use sample::{random_element, sample_automorphisms};
