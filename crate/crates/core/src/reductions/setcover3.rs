//! SET-COVER gadget for the (3,1)-cover.

use std::collections::HashSet;

use super::{require_completion, LabeledReductionGraph, Role, SetCoverInstance};
use crate::error::{CoverError, Result};
use crate::graph::{edge_clique_count, CompletionSet, Edge, Graph};

/// Set vertices first, then `2|X|` vertices per item, one triangle apex per
/// membership edge, and the common vertex `P` last. Only the edges at `P`
/// lie in no triangle.
pub fn build_setcover_k3(inst: &SetCoverInstance) -> Result<LabeledReductionGraph> {
    inst.validate()?;
    let nx = inst.universe;
    let nf = inst.num_sets();
    let mut roles: Vec<Role> = (0..nf).map(Role::SetVertex).collect();
    let mut items = Vec::with_capacity(nx);
    for i in 0..nx {
        let start = roles.len();
        roles.extend(std::iter::repeat_n(Role::ItemVertex(i), 2 * nx));
        items.push((start..roles.len()).collect::<Vec<_>>());
    }

    let mut edges = Vec::new();
    for (i, item) in items.iter().enumerate() {
        for j in inst.sets_containing(i) {
            edges.extend(item.iter().map(|&v| (j, v)));
        }
    }
    for idx in 0..edges.len() {
        let (s, v) = edges[idx];
        let w = roles.len();
        roles.push(Role::Auxiliary);
        edges.push((s, w));
        edges.push((v, w));
    }
    let p = roles.len();
    roles.push(Role::Common);
    for item in &items {
        edges.extend(item.iter().map(|&v| (v, p)));
    }

    let graph = Graph::from_edges(roles.len(), edges)?;
    let sets = (0..nf).map(|j| vec![j]).collect();
    Ok(LabeledReductionGraph::assemble(
        graph,
        3,
        roles,
        inst.clone(),
        items,
        sets,
        p,
    ))
}

/// Turns any (3,1)-completion set of the k=3 gadget into one made only of
/// `(S_j, P)` edges and no larger. Sets are chosen by lowest index.
pub fn goodify_3(rg: &LabeledReductionGraph, c: &CompletionSet) -> Result<CompletionSet> {
    if rg.k() != 3 {
        return Err(CoverError::invalid(format!(
            "expected a k=3 reduction graph, got k={}",
            rg.k()
        )));
    }
    require_completion(rg, c)?;
    let inst = rg.instance();
    let first_set = |i: usize| inst.sets_containing(i)[0];
    let mut out = Vec::new();
    let mut taken = HashSet::new();
    let mut add = |e: Edge, out: &mut Vec<Edge>| {
        if taken.insert(e) {
            out.push(e);
        }
    };

    for i in 0..inst.universe {
        let members: HashSet<usize> = rg.item_vertices(i).iter().copied().collect();
        if c.iter()
            .any(|e| members.contains(&e.u()) && members.contains(&e.v()))
        {
            add(rg.anchor(first_set(i)), &mut out);
        }
    }
    for e in c.iter().filter(|&e| rg.anchor_set(e).is_some()) {
        add(e, &mut out);
    }
    let p = rg.common();
    for i in 0..inst.universe {
        let h = rg.graph().with_added(&out);
        let unsaturated = rg
            .item_vertices(i)
            .iter()
            .any(|&u| edge_clique_count(&h, Edge::new(u, p), 3, 1) == 0);
        if unsaturated {
            add(rg.anchor(first_set(i)), &mut out);
        }
    }

    super::check_good_output(rg, c, out)
}
