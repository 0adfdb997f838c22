//! Four-vertex subtree cutting for the (4,1)-cover of a tree.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use super::subforest::{pack_cliques, CliqueBuilder, ResidualForest};
use super::{DepthIndex, RootedTree};
use crate::error::{CoverError, Result};
use crate::graph::{CompletionSet, Edge, Graph};

/// Child count, then lowest child id (reversed so the max-heap prefers it).
type Key = (usize, Reverse<usize>);

/// Subtree vertices, its `(parent, child)` edges, and its top vertex.
type Cut = ([usize; 4], Vec<(usize, usize)>, usize);

/// Result of [`approx_tree_4_report`].
#[derive(Clone, Debug)]
pub struct Approx4Report {
    pub completion: CompletionSet,
    /// Vertex sets of the 4-vertex subtrees cut in the first phase, selected
    /// leaf first.
    pub cuts: Vec<[usize; 4]>,
    /// Edges banked for the second phase.
    pub leftover: Vec<Edge>,
    /// `(|V_j|, |E_j|)` per second-phase iteration.
    pub second_phase: Vec<(usize, usize)>,
    /// Shape violations seen when checks are enabled: more than two
    /// non-trivial pieces after a cut, a second piece that is not a single
    /// edge, or a leftover forest that is not single edges plus at most one
    /// two-edge path. Always empty for a correct implementation.
    pub violations: Vec<String>,
}

/// Completion set for the (4,1)-cover (equivalently the (3,2)-cover) of a
/// tree on at least four vertices, at most twice the optimum.
pub fn approx_tree_4(t: &RootedTree) -> Result<CompletionSet> {
    approx_tree_4_report(t, false).map(|r| r.completion)
}

/// Same as [`approx_tree_4`], with the per-iteration trace. `check_shapes`
/// recomputes the residual components after every cut (quadratic time).
pub fn approx_tree_4_report(t: &RootedTree, check_shapes: bool) -> Result<Approx4Report> {
    let n = t.n();
    if n < 4 {
        return Err(CoverError::invalid(format!(
            "the k=4 algorithm needs n >= 4, got {n}"
        )));
    }
    let mut state = Residual::new(t);
    let mut builder = CliqueBuilder::new(t.base());
    let mut cuts = Vec::new();
    let mut leftover = Vec::new();
    let mut violations = Vec::new();

    loop {
        let (vertices, tree_edges, cut_top) = state.select()?;
        builder.complete(&vertices);
        cuts.push(vertices);
        for &(p, c) in &tree_edges {
            state.children[p].remove(&c);
        }

        let mut pieces: Vec<Piece> = vertices
            .iter()
            .filter(|&&x| x != cut_top)
            .map(|&x| state.collect(x))
            .collect();
        let top_size = state.size - pieces.iter().map(|p| p.vertices.len()).sum::<usize>();
        if check_shapes {
            let actual = state.collect(state.top).vertices.len();
            if actual != top_size {
                return Err(CoverError::Invariant(format!(
                    "residual size bookkeeping drifted: {top_size} recorded, {actual} found"
                )));
            }
            let mut nontrivial: Vec<usize> = pieces
                .iter()
                .map(|p| p.vertices.len())
                .filter(|&s| s >= 2)
                .collect();
            if top_size >= 2 {
                nontrivial.push(top_size);
            }
            nontrivial.sort_unstable();
            if nontrivial.len() > 2 || (nontrivial.len() == 2 && nontrivial[0] != 2) {
                violations.push(format!(
                    "cut {} left non-trivial pieces of sizes {nontrivial:?}",
                    cuts.len()
                ));
            }
        }

        let main = state.pick_main(&pieces, top_size);
        let main_size = match main {
            None => top_size,
            Some(i) => pieces[i].vertices.len(),
        };
        if main_size < 4 {
            let top = state.top;
            let rest = state.collect(top);
            state.retire(&rest, &mut leftover);
            for p in &pieces {
                state.retire(p, &mut leftover);
            }
            break;
        }
        if let Some(i) = main {
            let old_top = state.collect(state.top);
            state.retire(&old_top, &mut leftover);
            let chosen = pieces.swap_remove(i);
            state.top = chosen.root;
        }
        for p in &pieces {
            state.retire(p, &mut leftover);
        }
        state.size = main_size;
        for &x in &vertices {
            state.refresh(x);
        }
    }

    if check_shapes {
        let f = Graph::from_edges(n, leftover.iter().map(|e| e.endpoints()))?;
        let sizes: Vec<usize> = f
            .components()
            .iter()
            .map(Vec::len)
            .filter(|&s| s >= 2)
            .collect();
        let paths = sizes.iter().filter(|&&s| s == 3).count();
        if sizes.iter().any(|&s| s > 3) || paths > 1 {
            violations.push(format!("leftover forest has components of sizes {sizes:?}"));
        }
    }

    let mut forest = ResidualForest::new(n, leftover.iter().copied());
    let second_phase = pack_cliques(&mut forest, 4, &mut builder);
    Ok(Approx4Report {
        completion: builder.into_completion(),
        cuts,
        leftover,
        second_phase,
        violations,
    })
}

/// A piece of the residual tree hanging below `root`.
struct Piece {
    root: usize,
    vertices: Vec<usize>,
    edges: Vec<Edge>,
}

struct Residual<'a> {
    t: &'a RootedTree,
    children: Vec<BTreeSet<usize>>,
    index: DepthIndex<Key>,
    top: usize,
    size: usize,
}

impl<'a> Residual<'a> {
    fn new(t: &'a RootedTree) -> Self {
        let n = t.n();
        let children: Vec<BTreeSet<usize>> = (0..n)
            .map(|v| t.children(v).iter().copied().collect())
            .collect();
        let mut state = Residual {
            t,
            children,
            index: DepthIndex::new(t.depths().to_vec()),
            top: t.root(),
            size: n,
        };
        for v in 0..n {
            state.refresh(v);
        }
        state
    }

    fn key(&self, v: usize) -> Option<Key> {
        let kids = &self.children[v];
        kids.first().map(|&c| (kids.len(), Reverse(c)))
    }

    fn refresh(&mut self, v: usize) {
        let key = self.key(v);
        self.index.set(v, key);
    }

    fn parent_in(&self, v: usize) -> Result<usize> {
        let p = self.t.parent(v);
        if p != v && self.children[p].contains(&v) {
            Ok(p)
        } else {
            Err(CoverError::Invariant(format!(
                "vertex {v} needs a parent inside a residual tree of {} vertices",
                self.size
            )))
        }
    }

    /// Picks the deepest leaf with the most siblings and the 4-vertex subtree
    /// around it. Returns its vertices (leaf first), its edges as
    /// `(parent, child)`, and its topmost vertex.
    fn select(&mut self) -> Result<Cut> {
        let (u, _) = self
            .index
            .peek_deepest()
            .ok_or_else(|| CoverError::Invariant("residual tree has no internal vertex".into()))?;
        let mut kids = self.children[u].iter().copied();
        let v = kids.next().expect("indexed vertex has children");
        let sibs: Vec<usize> = kids.take(2).collect();
        Ok(match sibs[..] {
            [s1, s2] => ([v, s1, s2, u], vec![(u, v), (u, s1), (u, s2)], u),
            [s1] => {
                let w = self.parent_in(u)?;
                ([v, s1, u, w], vec![(u, v), (u, s1), (w, u)], w)
            }
            _ => {
                let w = self.parent_in(u)?;
                let uncle = self.children[w].iter().copied().find(|&c| c != u);
                match uncle {
                    Some(u1) => ([v, u, u1, w], vec![(u, v), (w, u), (w, u1)], w),
                    None => {
                        let x = self.parent_in(w)?;
                        ([v, u, w, x], vec![(u, v), (w, u), (x, w)], x)
                    }
                }
            }
        })
    }

    fn collect(&self, root: usize) -> Piece {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            vertices.push(x);
            for &c in &self.children[x] {
                edges.push(Edge::new(x, c));
                stack.push(c);
            }
        }
        Piece {
            root,
            vertices,
            edges,
        }
    }

    /// Index of the non-top piece that should become the new tree, or `None`
    /// for the piece containing the current top. Largest wins; equal sizes
    /// go to the piece holding the lowest vertex.
    fn pick_main(&self, pieces: &[Piece], top_size: usize) -> Option<usize> {
        let best = pieces.iter().map(|p| p.vertices.len()).max().unwrap_or(0);
        if best < top_size {
            return None;
        }
        let lowest = |p: &Piece| p.vertices.iter().copied().min().unwrap_or(usize::MAX);
        let (i, piece) = pieces
            .iter()
            .enumerate()
            .filter(|(_, p)| p.vertices.len() == best)
            .min_by_key(|(_, p)| lowest(p))?;
        if best > top_size || lowest(piece) < lowest(&self.collect(self.top)) {
            Some(i)
        } else {
            None
        }
    }

    /// Moves a piece out of the tree, banking its edges.
    fn retire(&mut self, piece: &Piece, bank: &mut Vec<Edge>) {
        bank.extend_from_slice(&piece.edges);
        for &x in &piece.vertices {
            self.children[x].clear();
            self.index.remove(x);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{validate_completion, CoverSpec};
    use crate::tree::worst_case_spider;

    fn run(g: Graph) -> Approx4Report {
        let t = RootedTree::from_graph(g.clone()).unwrap();
        let r = approx_tree_4_report(&t, true).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        for spec in [CoverSpec::new(4, 1).unwrap(), CoverSpec::new(3, 2).unwrap()] {
            assert!(validate_completion(&g, &r.completion, spec)
                .unwrap()
                .is_ok());
        }
        r
    }

    #[test]
    fn star_and_path() {
        assert_eq!(run(Graph::star(3)).completion.len(), 3);
        assert_eq!(run(Graph::path(4)).completion.len(), 3);
    }

    #[test]
    fn spider_fifteen() {
        let r = run(worst_case_spider(15).unwrap());
        assert!(r.completion.len() <= 28);
        assert_eq!(r.completion.len(), 19);
    }

    #[test]
    fn rejects_tiny_trees() {
        let t = RootedTree::from_graph(Graph::path(3)).unwrap();
        assert!(approx_tree_4(&t).is_err());
    }

    #[test]
    fn longer_paths_and_caterpillars() {
        for n in 4..40 {
            let r = run(Graph::path(n));
            assert!(r.completion.len() <= 2 * (n - 1));
        }
        let mut edges = Vec::new();
        for i in 0..10 {
            edges.push((i, i + 1));
            edges.push((i, 11 + i));
        }
        let g = Graph::from_edges(21, edges).unwrap();
        assert!(run(g).completion.len() <= 40);
    }
}
