//! Generation, counting and cross-validation of binary trees that avoid
//! mixed tree patterns: per-edge annotations decide whether a pattern edge
//! must be realized as a direct child, a descendant, or a descendant along a
//! single branch.
//!
//! The crate provides
//!
//! * search-tree labeled binary trees with rotations and slides ([`tree`]),
//! * tree patterns with a containment DP and a friendliness test
//!   ([`pattern`]),
//! * the compiler from tree patterns to mesh permutation patterns and the
//!   greedy jump generator on permutation languages ([`mesh`], [`perm`]),
//! * Gray-code generation of avoider classes by minimal slides
//!   ([`generate`]),
//! * bijections onto bitstrings, Motzkin-type paths and non-crossing set
//!   partitions, plus Wilf-equivalence transforms ([`bijections`]),
//! * counting, sequence matching and classification tables ([`counting`]),
//!   and the cross-validation batteries ([`verify`]).

pub mod bijections;
pub mod counting;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod mesh;
pub mod pattern;
pub mod perm;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use mesh::MeshPattern;
pub use pattern::{EdgeType, TreePattern};
pub use perm::Permutation;
pub use tree::BinaryTree;
