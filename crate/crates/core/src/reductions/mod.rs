//! Gadget graphs that encode SET-COVER and 3-PARTITION as completion
//! problems, and the maps between their solutions.

mod instance;
mod labeled;
mod setcover3;
mod setcoverk;
mod spider;

pub use instance::{SetCoverInstance, ThreePartitionInstance};
pub use labeled::{roles_from_json, roles_to_json, LabeledReductionGraph, Role};
pub use setcover3::{build_setcover_k3, goodify_3};
pub use setcoverk::{build_setcover_k, goodify_k};
pub use spider::{
    build_spider, completion_from_partition, partition_edge_groups, partition_from_edge_partition,
    spider_legs,
};

use crate::error::{CoverError, Result};
use crate::graph::{validate_completion, CompletionSet, Edge};

/// Universe `{0,1,2}` with sets `{0,1}`, `{1,2}`, `{2}`.
pub fn three_set_example() -> SetCoverInstance {
    SetCoverInstance::new(3, vec![vec![0, 1], vec![1, 2], vec![2]], None).expect("valid instance")
}

/// Builds the gadget matching `k`: the triangle construction for 3, the
/// clique construction otherwise.
pub fn build_setcover(inst: &SetCoverInstance, k: usize) -> Result<LabeledReductionGraph> {
    if k == 3 {
        build_setcover_k3(inst)
    } else {
        build_setcover_k(inst, k)
    }
}

/// Dispatches to [`goodify_3`] or [`goodify_k`] by the graph's `k`.
pub fn goodify(rg: &LabeledReductionGraph, c: &CompletionSet) -> Result<CompletionSet> {
    match rg.k() {
        3 => goodify_3(rg, c),
        k => goodify_k(rg, c, k),
    }
}

pub(crate) fn require_completion(rg: &LabeledReductionGraph, c: &CompletionSet) -> Result<()> {
    let verdict = validate_completion(rg.graph(), c, rg.spec())?;
    if !verdict.is_ok() {
        return Err(CoverError::NotACompletion(format!(
            "{} edges stay unsaturated, first {}",
            verdict.unsaturated.len(),
            verdict
                .unsaturated
                .first()
                .map_or("-".to_string(), |e| e.to_string())
        )));
    }
    Ok(())
}

pub(crate) fn check_good_output(
    rg: &LabeledReductionGraph,
    input: &CompletionSet,
    out: Vec<Edge>,
) -> Result<CompletionSet> {
    let out = CompletionSet::from_unique(out);
    if !rg.is_good(&out) {
        return Err(CoverError::Invariant(
            "goodified set contains a non-anchor edge".into(),
        ));
    }
    if out.len() > input.len() {
        return Err(CoverError::Invariant(format!(
            "goodified set grew from {} to {} edges",
            input.len(),
            out.len()
        )));
    }
    require_completion(rg, &out)
        .map_err(|e| CoverError::Invariant(format!("goodified set is not a completion: {e}")))?;
    Ok(out)
}

/// Indices of the sets whose anchor edge is in `good`, ascending.
pub fn extract_set_cover(rg: &LabeledReductionGraph, good: &CompletionSet) -> Result<Vec<usize>> {
    let mut chosen = Vec::with_capacity(good.len());
    for e in good.iter() {
        match rg.anchor_set(e) {
            Some(j) => chosen.push(j),
            None => {
                return Err(CoverError::invalid(format!(
                    "edge {e} is not an anchor edge"
                )))
            }
        }
    }
    chosen.sort_unstable();
    let missing = rg.instance().uncovered(&chosen);
    if !missing.is_empty() {
        return Err(CoverError::invalid(format!(
            "sets {chosen:?} leave items {missing:?} uncovered"
        )));
    }
    Ok(chosen)
}

/// Anchor edges of the chosen sets, in the given order.
pub fn completion_from_cover(rg: &LabeledReductionGraph, cover: &[usize]) -> Result<CompletionSet> {
    let inst = rg.instance();
    let mut seen = vec![false; inst.num_sets()];
    for &j in cover {
        if j >= seen.len() {
            return Err(CoverError::invalid(format!(
                "set index {j} out of range 0..{}",
                seen.len()
            )));
        }
        if std::mem::replace(&mut seen[j], true) {
            return Err(CoverError::invalid(format!("set {j} chosen twice")));
        }
    }
    let missing = inst.uncovered(cover);
    if !missing.is_empty() {
        return Err(CoverError::invalid(format!(
            "items {missing:?} are uncovered"
        )));
    }
    Ok(CompletionSet::from_unique(
        cover.iter().map(|&j| rg.anchor(j)).collect(),
    ))
}
