//! Exact brute-force solvers and seeded generators for certifying the
//! solvers and reductions on small instances.

mod generate;
mod search;

pub use generate::{
    enumerate_labeled_trees, gen_random_3partition, gen_random_chordal, gen_random_setcover,
    gen_random_tree, random_tree_with, rng, GeneratedPartition, PartitionMode,
};
pub use search::{
    brute_min_completion, brute_min_setcover, OracleOutcome, ORACLE_MAX_N, SETCOVER_MAX_SETS,
};

/// Caps on the completion search. Running into either cap yields
/// [`OracleOutcome::Inconclusive`], never a wrong answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_additions: usize,
    pub max_nodes: u64,
    pub seed: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_additions: 8,
            max_nodes: 10_000_000,
            seed: 0,
        }
    }
}
