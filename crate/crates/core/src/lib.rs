//! Permutation groups, their 2-orbits and 2-closures, and an inductive
//! test of 2-closedness for abelian groups with cyclic transitive
//! constituents.
//!
//! Permutations compose left to right: `p.compose(&q)` applies `p` first.

pub mod arith;
pub mod decider;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod reduction;
pub mod two_orbit;

pub use decider::{
    decide_2_closed, decide_with_oracle_check, OracleReport, ReductionTrace, Step, StepKind,
};
pub use error::{GroupError, Result};
pub use format::{parse_group, serialize_group, FormatError};
pub use group::{enumerate_elements, OrbitPartition, PermGroup, DEFAULT_ELEMENT_CAP};
pub use oracle::{is_2_closed_oracle, two_closure, OracleLimits};
pub use perm::Permutation;
pub use reduction::{
    has_unessential_witness, remove_orbit, sylow_decomposition, zel, zel_condition,
    SylowDecomposition,
};
pub use two_orbit::TwoOrbitColoring;
