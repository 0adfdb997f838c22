//! Edge partition of a tree into paths on three vertices and the optimal
//! (3,1)-completion built from it.

use super::RootedTree;
use crate::error::{CoverError, Result};
use crate::graph::{CompletionSet, Edge};

/// One part of the partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeGroup {
    /// Two edges `center-ends[0]` and `center-ends[1]`.
    Path { center: usize, ends: [usize; 2] },
    /// The leftover edge when the edge count is odd.
    Single(Edge),
}

impl EdgeGroup {
    pub fn edges(&self) -> Vec<Edge> {
        match *self {
            EdgeGroup::Path { center, ends } => {
                vec![Edge::new(center, ends[0]), Edge::new(center, ends[1])]
            }
            EdgeGroup::Single(e) => vec![e],
        }
    }
}

/// Partitions the edges of `t` into `⌈(n-1)/2⌉` groups, all two-edge paths
/// except one single edge when `n-1` is odd.
///
/// Repeatedly takes the deepest leaf `v` (lowest id among equals) with parent
/// `u`: if `v` has a sibling the group is `v-u-sibling`, otherwise `v-u-w`
/// with `w` the parent of `u`. Vertices left without edges are flagged and
/// skipped lazily when they surface in the depth buckets.
pub fn p3_partition(t: &RootedTree) -> Result<Vec<EdgeGroup>> {
    let n = t.n();
    if n < 3 {
        return Err(CoverError::invalid(format!(
            "edge partition needs n >= 3, got {n}"
        )));
    }
    let root = t.root();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); t.max_depth() + 1];
    for v in (0..n).rev() {
        buckets[t.depth(v)].push(v);
    }
    let mut deleted = vec![false; n];
    let mut live_children: Vec<usize> = (0..n).map(|v| t.children(v).len()).collect();
    let mut cursor = vec![0usize; n];
    let mut remaining = n - 1;
    let mut top = buckets.len() - 1;
    let mut groups = Vec::with_capacity(n / 2 + 1);

    while remaining > 0 {
        let v = loop {
            match buckets[top].pop() {
                Some(x) if !deleted[x] => break x,
                Some(_) => {}
                None => top -= 1,
            }
        };
        let u = t.parent(v);
        deleted[v] = true;
        live_children[u] -= 1;
        if remaining == 1 {
            groups.push(EdgeGroup::Single(Edge::new(u, v)));
            break;
        }

        let kids = t.children(u);
        while cursor[u] < kids.len() && deleted[kids[cursor[u]]] {
            cursor[u] += 1;
        }
        if let Some(&sibling) = kids.get(cursor[u]) {
            groups.push(EdgeGroup::Path {
                center: u,
                ends: [v, sibling],
            });
            deleted[sibling] = true;
            live_children[u] -= 1;
            if live_children[u] == 0 && u == root {
                deleted[u] = true;
            }
        } else {
            if u == root {
                return Err(CoverError::Invariant(format!(
                    "leaf {v} has no sibling and no grandparent with {remaining} edges left"
                )));
            }
            let w = t.parent(u);
            groups.push(EdgeGroup::Path {
                center: u,
                ends: [v, w],
            });
            deleted[u] = true;
            live_children[w] -= 1;
            if live_children[w] == 0 && w == root {
                deleted[w] = true;
            }
        }
        remaining -= 2;
    }
    Ok(groups)
}

/// Minimum (3,1)-completion of a tree on `n >= 3` vertices: `⌈(n-1)/2⌉` pairs.
pub fn optimal_tree_31(t: &RootedTree) -> Result<CompletionSet> {
    let groups = p3_partition(t)?;
    let g = t.base();
    let additions = groups
        .iter()
        .map(|group| match *group {
            EdgeGroup::Path { ends, .. } => Edge::new(ends[0], ends[1]),
            EdgeGroup::Single(e) => {
                let (a, b) = e.endpoints();
                let via_a = g
                    .neighbors(a)
                    .iter()
                    .filter(|&&w| w != b)
                    .map(|&w| Edge::new(b, w));
                let via_b = g
                    .neighbors(b)
                    .iter()
                    .filter(|&&w| w != a)
                    .map(|&w| Edge::new(a, w));
                via_a
                    .chain(via_b)
                    .min()
                    .expect("a tree on three or more vertices has an edge next to every edge")
            }
        })
        .collect();
    Ok(CompletionSet::from_unique(additions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{validate_completion, CoverSpec, Graph};
    use std::collections::HashSet;

    fn rooted(g: Graph) -> RootedTree {
        RootedTree::from_graph(g).unwrap()
    }

    /// Groups are edge-disjoint, cover the tree, and two-edge groups share a vertex.
    fn assert_valid_partition(t: &RootedTree, groups: &[EdgeGroup]) {
        let mut seen = HashSet::new();
        let mut singles = 0;
        for g in groups {
            for e in g.edges() {
                assert!(t.base().contains_edge(e), "{e} not a tree edge");
                assert!(seen.insert(e), "{e} in two groups");
            }
            match *g {
                EdgeGroup::Path { center, ends } => assert_ne!(ends[0], ends[1], "{center}"),
                EdgeGroup::Single(_) => singles += 1,
            }
        }
        assert_eq!(seen.len(), t.n() - 1);
        assert_eq!(singles, (t.n() - 1) % 2);
        assert_eq!(groups.len(), t.n() / 2);
    }

    #[test]
    fn path_of_five() {
        let t = rooted(Graph::path(5));
        let groups = p3_partition(&t).unwrap();
        assert_valid_partition(&t, &groups);
        assert_eq!(groups.len(), 2);
    }

    #[test]
    fn star_has_one_single() {
        let t = rooted(Graph::star(3));
        let groups = p3_partition(&t).unwrap();
        assert_valid_partition(&t, &groups);
        assert_eq!(
            groups
                .iter()
                .filter(|g| matches!(g, EdgeGroup::Single(_)))
                .count(),
            1
        );
    }

    #[test]
    fn p3_is_one_group() {
        let t = rooted(Graph::path(3));
        let groups = p3_partition(&t).unwrap();
        assert_eq!(
            groups,
            vec![EdgeGroup::Path {
                center: 1,
                ends: [2, 0]
            }]
        );
        let c = optimal_tree_31(&t).unwrap();
        assert_eq!(c.edges(), &[Edge::new(0, 2)]);
    }

    #[test]
    fn rejects_small_trees() {
        assert!(p3_partition(&rooted(Graph::path(2))).is_err());
        assert!(optimal_tree_31(&rooted(Graph::path(1))).is_err());
    }

    #[test]
    fn optimal_sizes_and_validity() {
        let spec = CoverSpec::new(3, 1).unwrap();
        for g in [
            Graph::path(5),
            Graph::star(3),
            Graph::star(6),
            Graph::path(10),
        ] {
            let t = rooted(g.clone());
            let c = optimal_tree_31(&t).unwrap();
            assert_eq!(c.len(), g.n() / 2);
            assert!(validate_completion(&g, &c, spec).unwrap().is_ok());
        }
    }

    #[test]
    fn nonzero_root() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        for root in 0..6 {
            let t = RootedTree::new(g.clone(), root).unwrap();
            assert_valid_partition(&t, &p3_partition(&t).unwrap());
        }
    }
}
