//! Minimum edge completions for (k,l)-clique covers.
//!
//! A graph has a (k,l)-cover when every edge lies in at least `l` cliques of
//! order `k`. This crate computes sets of non-edges whose addition produces
//! such a cover:
//!
//! * [`tree::optimal_tree_31`] and [`chordal_cover::optimal_chordal_31`] solve
//!   the (3,1) case exactly on trees and chordal graphs.
//! * [`tree::approx_tree_k`] and [`tree::approx_tree_4`] approximate the (k,1)
//!   case on trees.
//! * [`reductions`] builds the SET-COVER and 3-PARTITION gadget graphs and
//!   converts completion sets back into covers and partitions.
//! * [`oracle`] holds exact brute-force solvers and seeded instance
//!   generators used to certify everything else.

pub mod chordal_cover;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod reductions;
pub mod tree;

pub use error::{CoverError, Result};
pub use graph::{CompletionSet, CoverSpec, CoverVerdict, Edge, Graph};
