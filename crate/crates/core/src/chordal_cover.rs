//! Optimal (3,1)-completion of connected chordal graphs.
//!
//! In a chordal graph every non-bridge lies in a triangle, so only bridges
//! need attention. The bridges form vertex-disjoint trees; each tree with
//! three or more vertices is completed on its own, and a tree that is a
//! single edge borrows a neighbour of its endpoint that touches the rest of
//! the graph.

use crate::error::{CoverError, Result};
use crate::graph::{
    check_chordal, find_bridges, unsaturated_edges, Chordality, CompletionSet, CoverSpec, Edge,
    Graph,
};
use crate::tree::{optimal_tree_31, RootedTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexRole {
    /// In no bridge tree.
    Outer,
    /// In a bridge tree and incident to at least one non-bridge.
    Boundary,
    /// In a bridge tree, all incident edges are bridges.
    Interior,
}

/// A maximal connected subgraph made of bridges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeTree {
    /// Ascending.
    pub vertices: Vec<usize>,
    /// Lexicographic.
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordalDecomposition {
    /// Ordered by lowest vertex.
    pub trees: Vec<BridgeTree>,
    pub roles: Vec<VertexRole>,
}

impl ChordalDecomposition {
    pub fn role(&self, v: usize) -> VertexRole {
        self.roles[v]
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 3 {
        return Err(CoverError::invalid(format!(
            "graph needs n >= 3, got {}",
            g.n()
        )));
    }
    if !g.is_connected() {
        return Err(CoverError::NotConnected);
    }
    Ok(())
}

/// Splits the bridges of a connected graph into trees and classifies vertices.
pub fn decompose_trees(g: &Graph) -> Result<ChordalDecomposition> {
    require_connected(g)?;
    let bridges = find_bridges(g);
    let bridge_graph = Graph::from_simple_edges(g.n(), bridges.iter().copied());
    let mut roles = vec![VertexRole::Outer; g.n()];
    let mut trees = Vec::new();
    for comp in bridge_graph.components() {
        if comp.len() < 2 {
            continue;
        }
        for &v in &comp {
            roles[v] = if g.degree(v) > bridge_graph.degree(v) {
                VertexRole::Boundary
            } else {
                VertexRole::Interior
            };
        }
        let edges = comp
            .iter()
            .flat_map(|&v| {
                bridge_graph
                    .neighbors(v)
                    .iter()
                    .filter(move |&&w| w > v)
                    .map(move |&w| Edge::new(v, w))
            })
            .collect();
        trees.push(BridgeTree {
            vertices: comp,
            edges,
        });
    }
    Ok(ChordalDecomposition { trees, roles })
}

/// Minimum (3,1)-completion of a connected chordal graph on `n >= 3` vertices.
/// Non-chordal input is rejected with the failing vertex.
pub fn optimal_chordal_31(g: &Graph) -> Result<CompletionSet> {
    require_connected(g)?;
    if let Chordality::NotChordal { witness } = check_chordal(g) {
        return Err(CoverError::NotChordal { witness });
    }
    Ok(CompletionSet::from_unique(complete_bridge_trees(
        g,
        &decompose_trees(g)?,
    )?))
}

/// The same construction on an arbitrary connected graph, followed by a
/// greedy pass over whatever edges are still outside every triangle. The
/// result is a valid completion but carries no optimality guarantee.
pub fn heuristic_31(g: &Graph) -> Result<CompletionSet> {
    require_connected(g)?;
    let mut additions = complete_bridge_trees(g, &decompose_trees(g)?)?;
    let spec = CoverSpec::new(3, 1)?;
    let mut h = g.with_added(&additions);
    while let Some(&e) = unsaturated_edges(&h, spec).first() {
        let (a, b) = e.endpoints();
        let pick = |x: usize, y: usize| {
            h.neighbors(x)
                .iter()
                .copied()
                .find(|&w| w != y && !h.has_edge(y, w))
                .map(|w| Edge::new(y, w))
        };
        let add = pick(a, b).or_else(|| pick(b, a)).ok_or_else(|| {
            CoverError::Invariant(format!("edge {e} cannot be put in a triangle"))
        })?;
        additions.push(add);
        h = h.with_added(&[add]);
    }
    Ok(CompletionSet::from_unique(additions))
}

fn complete_bridge_trees(g: &Graph, dec: &ChordalDecomposition) -> Result<Vec<Edge>> {
    let mut additions = Vec::new();
    for tree in &dec.trees {
        if tree.vertices.len() == 2 {
            let (a, b) = (tree.vertices[0], tree.vertices[1]);
            let (u, v) = if dec.role(a) == VertexRole::Boundary {
                (a, b)
            } else {
                (b, a)
            };
            let w = g
                .neighbors(u)
                .iter()
                .copied()
                .find(|&w| w != v)
                .ok_or_else(|| {
                    CoverError::Invariant(format!("bridge ({a},{b}) is the whole graph"))
                })?;
            additions.push(Edge::new(v, w));
            continue;
        }
        let local = |x: usize| {
            tree.vertices
                .binary_search(&x)
                .expect("tree edge leaves its tree")
        };
        let sub = Graph::from_simple_edges(
            tree.vertices.len(),
            tree.edges
                .iter()
                .map(|e| Edge::new(local(e.u()), local(e.v()))),
        );
        let solved = optimal_tree_31(&RootedTree::from_graph(sub)?)?;
        additions.extend(
            solved
                .iter()
                .map(|e| Edge::new(tree.vertices[e.u()], tree.vertices[e.v()])),
        );
    }
    Ok(additions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_completion;

    fn spec() -> CoverSpec {
        CoverSpec::new(3, 1).unwrap()
    }

    fn triangle_with_pendant() -> Graph {
        // triangle {0,1,2}, pendant 3 on 0
        Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let d = decompose_trees(&tree).unwrap();
        assert_eq!(d.trees.len(), 1);
        assert_eq!(d.trees[0].edges, tree.edge_list());
        assert!(d.roles.iter().all(|&r| r == VertexRole::Interior));

        let d = decompose_trees(&Graph::complete(4)).unwrap();
        assert!(d.trees.is_empty());
        assert!(d.roles.iter().all(|&r| r == VertexRole::Outer));

        let d = decompose_trees(&triangle_with_pendant()).unwrap();
        assert_eq!(
            d.trees,
            vec![BridgeTree {
                vertices: vec![0, 3],
                edges: vec![Edge::new(0, 3)]
            }]
        );
        assert_eq!(
            d.roles,
            vec![
                VertexRole::Boundary,
                VertexRole::Outer,
                VertexRole::Outer,
                VertexRole::Interior
            ]
        );

        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            decompose_trees(&disconnected).unwrap_err(),
            CoverError::NotConnected
        );
    }

    #[test]
    fn solver_examples() {
        assert!(optimal_chordal_31(&Graph::complete(3)).unwrap().is_empty());

        let g = triangle_with_pendant();
        let c = optimal_chordal_31(&g).unwrap();
        assert_eq!(c.edges(), &[Edge::new(1, 3)]);
        assert!(validate_completion(&g, &c, spec()).unwrap().is_ok());

        let p6 = Graph::path(6);
        assert_eq!(optimal_chordal_31(&p6).unwrap().len(), 3);
    }

    #[test]
    fn mixed_trees() {
        // triangle 0-1-2; path 2-3-4-5 hanging off 2; single bridge 1-6; edge 0-7
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (1, 6),
                (0, 7),
            ],
        )
        .unwrap();
        let c = optimal_chordal_31(&g).unwrap();
        assert_eq!(c.len(), 2 + 1 + 1);
        assert!(validate_completion(&g, &c, spec()).unwrap().is_ok());
    }

    #[test]
    fn non_chordal_input() {
        let c4 = Graph::cycle(4);
        assert!(matches!(
            optimal_chordal_31(&c4),
            Err(CoverError::NotChordal { .. })
        ));
        let c = heuristic_31(&c4).unwrap();
        assert!(validate_completion(&c4, &c, spec()).unwrap().is_ok());

        let g =
            Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)]).unwrap();
        let c = heuristic_31(&g).unwrap();
        assert!(validate_completion(&g, &c, spec()).unwrap().is_ok());
    }
}
