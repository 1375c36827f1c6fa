//! Bijections between pattern-avoiding binary trees and other combinatorial
//! families (bitstrings, Motzkin-type paths, set partitions), and the
//! Wilf-equivalence transforms between tree-pattern classes.

pub mod bits;
pub mod motzkin;
pub mod partition;
pub mod wilf;
