//! Completion algorithms for trees.

mod approx4;
mod depth_index;
mod partition;
mod rooted;
mod spider;
mod subforest;

pub use approx4::{approx_tree_4, approx_tree_4_report, Approx4Report};
pub use depth_index::DepthIndex;
pub use partition::{optimal_tree_31, p3_partition, EdgeGroup};
pub use rooted::RootedTree;
pub use spider::worst_case_spider;
pub use subforest::{
    approx_tree_k, approx_tree_k_report, extract_maximal_k_subforest, ApproxKReport, SubforestCut,
};

/// `⌈(n-1)(k-2)/2⌉`: additions any (k,1)-completion of an `n`-vertex tree needs.
pub fn tree_lower_bound(n: usize, k: usize) -> usize {
    (n.saturating_sub(1) * k.saturating_sub(2)).div_ceil(2)
}
