//! Permutation-group analysis toolkit.
//!
//! Computes with permutation groups given by generators: Schreier–Sims
//! stabilizer chains, block systems and quotient actions, the
//! primitive/quasiprimitive/semiprimitive classification, and distinguishing
//! numbers with machine-checkable coloring certificates.

pub mod blocks;
pub mod bounds;
pub mod catalog;
pub mod chain;
pub mod classify;
pub mod coloring;
pub mod construct;
pub mod cycles;
pub mod error;
pub mod gf;
pub mod golay;
pub mod group;
pub mod orbit;
pub mod perm;
pub mod quotient;
pub mod reduce;
pub mod rng;
pub mod search;

pub use blocks::{minimal_block_system, orbit_partition, some_maximal_block_system, BlockSystem};
pub use chain::StabilizerChain;
pub use classify::{
    is_primitive, is_quasiprimitive, is_semiprimitive, is_semiregular, normal_closure,
    prime_order_elements,
};
pub use coloring::{stabilizer_is_trivial, Coloring};
pub use cycles::{format_cycles, parse_cycles};
pub use error::{Error, Result};
pub use group::{is_transitive, PermutationGroup};
pub use perm::Permutation;
pub use quotient::{kernel_of_block_action, quotient_action, QuotientAction};
pub use search::{distinguishing_number, DNumberResult, SearchLimits};
