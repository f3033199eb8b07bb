//! Finite permutation groups, their commuting graphs, and structural checks
//! for solvable A-groups.

pub mod abelian;
pub mod arith;
pub mod classify;
pub mod cli;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod families;
pub mod file;
pub mod graph;
pub mod group;
pub mod linalg;
pub mod perm;
pub mod structure;
pub mod verify;
pub mod witness;

pub use error::{GroupError, Result};
pub use graph::{build_commuting_graph, CommutingGraph, DiameterResult, GraphStatus};
pub use group::{FiniteGroup, Subgroup};
pub use perm::Permutation;
