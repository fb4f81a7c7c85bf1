//! Finite solvable groups given by refined polycyclic presentations:
//! collection, pcgs rebasing, LG-series normalization, and the order of
//! automorphisms and cycle lengths of affine maps.

pub mod arith;
pub mod consistency;
pub mod counter;
pub mod element;
pub mod error;
pub mod maps;
pub mod parse;
pub mod pcgs;
pub mod presentation;

pub use arith::PcArith;
pub use consistency::{check_consistency, ConsistencyReport, Verdict};
pub use counter::OpCounter;
pub use element::{ExponentVector, Word};
pub use error::{PcError, Result};
pub use maps::{format_map_file, parse_map_file, AffineMap, MapFile, PcAutomorphism, PcEndomorphism};
pub use parse::parse_presentation;
pub use pcgs::{commutator_subgroup, constructive_membership, induced_pcgs, normal_closure, sift, InducedPcgs};
pub use presentation::PcPresentation;
pub mod coords;
pub mod iso;
pub mod lg;
pub mod modify;
pub mod rebase;

pub use coords::{presentation_from_pcgs, PcgsCoordinates};
pub use iso::PcIsomorphism;
pub use lg::{lg_normalize, lg_series, LgSeriesData, Normalized};
pub use modify::{exhibit_series, modify_by_element, Rebased};
pub use rebase::{elementary_transform, elementary_transform_with, emulated_multiply, reexpress, EmulatedArith, MultMode};
pub mod dynamics;

pub use dynamics::{
    affine_cycle_length, automorphism_order, certify_automorphism_order, certify_cycle_length, endo_preperiod,
    periodic_subgroup, DynOptions, DynResult, LevelData, LeveledAutomorphism,
};
