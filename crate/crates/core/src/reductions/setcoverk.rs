//! SET-COVER gadget for the (k,1)-cover, `k >= 4`.

use std::collections::{BTreeSet, HashSet};

use super::{require_completion, LabeledReductionGraph, Role, SetCoverInstance};
use crate::error::{CoverError, Result};
use crate::graph::{edge_clique_count, triangle_vertices, CompletionSet, Edge, Graph};

/// Item endpoints `x_i, x'_i` first, then one `K_{k-2}` minus the edge
/// `(S_j, S'_j)` per set, joins from member items to their set subgraphs,
/// a fresh `k`-clique around every edge so far except the item edges, and
/// finally `P` with a fresh `k`-clique around each `(S_j, P)`. Only the item
/// edges lie in no `k`-clique.
pub fn build_setcover_k(inst: &SetCoverInstance, k: usize) -> Result<LabeledReductionGraph> {
    if k < 4 {
        return Err(CoverError::invalid(format!(
            "this construction needs k >= 4, got {k}"
        )));
    }
    inst.validate()?;
    let nx = inst.universe;
    let nf = inst.num_sets();
    let mut roles = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut items = Vec::with_capacity(nx);
    for i in 0..nx {
        let x = roles.len();
        roles.extend([Role::ItemEndpoint(i), Role::ItemEndpoint(i)]);
        items.push(vec![x, x + 1]);
        edges.push((x, x + 1));
    }
    let item_edges = edges.len();

    let mut sets = Vec::with_capacity(nf);
    for j in 0..nf {
        let start = roles.len();
        roles.extend(std::iter::repeat_n(Role::SetSubgraph(j), k - 2));
        let members: Vec<usize> = (start..roles.len()).collect();
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                if (a, b) != (0, 1) {
                    edges.push((members[a], members[b]));
                }
            }
        }
        sets.push(members);
    }
    for (i, item) in items.iter().enumerate() {
        for j in inst.sets_containing(i) {
            for &x in item {
                edges.extend(sets[j].iter().map(|&v| (x, v)));
            }
        }
    }

    let wrap = |a: usize, b: usize, roles: &mut Vec<Role>, edges: &mut Vec<(usize, usize)>| {
        let start = roles.len();
        roles.extend(std::iter::repeat_n(Role::Auxiliary, k - 2));
        let mut clique = vec![a, b];
        clique.extend(start..roles.len());
        for x in 0..clique.len() {
            for y in x + 1..clique.len() {
                if (x, y) != (0, 1) {
                    edges.push((clique[x], clique[y]));
                }
            }
        }
    };
    let wrapped = edges.len();
    for idx in item_edges..wrapped {
        let (a, b) = edges[idx];
        wrap(a, b, &mut roles, &mut edges);
    }
    let p = roles.len();
    roles.push(Role::Common);
    for set in &sets {
        edges.push((set[0], p));
        wrap(set[0], p, &mut roles, &mut edges);
    }

    let graph = Graph::from_edges(roles.len(), edges)?;
    Ok(LabeledReductionGraph::assemble(
        graph,
        k,
        roles,
        inst.clone(),
        items,
        sets,
        p,
    ))
}

/// Turns any (k,1)-completion set of the k>=4 gadget into one made only of
/// `(S_j, S'_j)` edges and no larger. Sets are chosen by lowest index and
/// the triangle vertex `v` by lowest id.
pub fn goodify_k(rg: &LabeledReductionGraph, c: &CompletionSet, k: usize) -> Result<CompletionSet> {
    if rg.k() != k || k < 4 {
        return Err(CoverError::invalid(format!(
            "expected a k={k} reduction graph with k >= 4, got k={}",
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

    for e in c.iter().filter(|&e| rg.anchor_set(e).is_some()) {
        add(e, &mut out);
    }

    let owner = |v: usize| match rg.role(v) {
        Role::SetSubgraph(j) => Some(j),
        _ => None,
    };
    let crossing: BTreeSet<(usize, usize)> = c
        .iter()
        .filter_map(|e| match (owner(e.u()), owner(e.v())) {
            (Some(a), Some(b)) if a != b => Some((a.min(b), a.max(b))),
            _ => None,
        })
        .collect();
    for &(j, _) in &crossing {
        add(rg.anchor(j), &mut out);
    }

    let g = rg.graph();
    let with_c = g.with_added(c.edges());
    let item_edge = |i: usize| Edge::new(rg.item_vertices(i)[0], rg.item_vertices(i)[1]);
    loop {
        let h = g.with_added(&out);
        let unsaturated: Vec<usize> = (0..inst.universe)
            .filter(|&i| edge_clique_count(&h, item_edge(i), k, 1) == 0)
            .collect();
        let Some(&i) = unsaturated.first() else { break };
        let (x, x2) = (rg.item_vertices(i)[0], rg.item_vertices(i)[1]);
        let v = triangle_vertices(&with_c, item_edge(i))?
            .into_iter()
            .find(|&v| usize::from(g.has_edge(x, v)) + usize::from(g.has_edge(x2, v)) <= 1)
            .ok_or_else(|| {
                CoverError::Invariant(format!(
                    "item edge {} has no triangle vertex created by the input set",
                    item_edge(i)
                ))
            })?;
        add(rg.anchor(first_set(i)), &mut out);
        if let Role::ItemEndpoint(l) = rg.role(v) {
            if l != i && unsaturated.contains(&l) {
                add(rg.anchor(first_set(l)), &mut out);
            }
        }
    }

    super::check_good_output(rg, c, out)
}
