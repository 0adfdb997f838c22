//! Seeded inputs shared by the criterion benches.

use kcover::oracle::{gen_random_chordal, gen_random_tree};
use kcover::tree::RootedTree;
use kcover::Graph;

pub const SEED: u64 = 0x6b63_6f76;

pub fn random_tree(n: usize) -> RootedTree {
    RootedTree::from_graph(gen_random_tree(n, SEED)).expect("generator yields trees")
}

pub fn path_tree(n: usize) -> RootedTree {
    RootedTree::from_graph(Graph::path(n)).expect("paths are trees")
}

pub fn random_chordal(n: usize) -> Graph {
    gen_random_chordal(n, 3, SEED).expect("n exceeds the width")
}
