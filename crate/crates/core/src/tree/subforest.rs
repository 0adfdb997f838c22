//! Maximal k-subforest extraction and the clique-packing approximation for
//! (k,1)-covers of trees.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use super::RootedTree;
use crate::error::{CoverError, Result};
use crate::graph::{CompletionSet, Edge, Graph};

/// One extracted forest `F_j = (V_j, E_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubforestCut {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

/// A forest from which edges are progressively removed.
///
/// Non-trivial components are tracked by a representative vertex and their
/// size; vertex lists are never stored, so a split only pays for walking
/// the pieces that end up smaller than the largest one.
pub(crate) struct ResidualForest {
    adj: Vec<BTreeSet<usize>>,
    size_of: BTreeMap<usize, usize>,
    by_size: BTreeMap<usize, BTreeSet<usize>>,
    edges_left: usize,
}

impl ResidualForest {
    pub(crate) fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut adj = vec![BTreeSet::new(); n];
        let mut edges_left = 0;
        for e in edges {
            adj[e.u()].insert(e.v());
            adj[e.v()].insert(e.u());
            edges_left += 1;
        }
        let mut forest = ResidualForest {
            adj,
            size_of: BTreeMap::new(),
            by_size: BTreeMap::new(),
            edges_left,
        };
        let mut seen = vec![false; n];
        for v in 0..n {
            if seen[v] || forest.adj[v].is_empty() {
                continue;
            }
            seen[v] = true;
            let mut stack = vec![v];
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for &y in &forest.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            forest.insert_component(v, size);
        }
        forest
    }

    pub(crate) fn edges_left(&self) -> usize {
        self.edges_left
    }

    fn insert_component(&mut self, rep: usize, size: usize) {
        if size >= 2 {
            self.size_of.insert(rep, size);
            self.by_size.entry(size).or_default().insert(rep);
        }
    }

    fn remove_component(&mut self, rep: usize) {
        let size = self.size_of.remove(&rep).expect("unknown component");
        let reps = self.by_size.get_mut(&size).expect("size index out of sync");
        reps.remove(&rep);
        if reps.is_empty() {
            self.by_size.remove(&size);
        }
    }

    /// Largest component, lowest representative among equals.
    fn largest(&self) -> Option<(usize, usize)> {
        let (&size, reps) = self.by_size.iter().next_back()?;
        Some((*reps.first().expect("empty size class"), size))
    }

    fn drop_edge(&mut self, e: Edge) {
        self.adj[e.u()].remove(&e.v());
        self.adj[e.v()].remove(&e.u());
        self.edges_left -= 1;
    }

    /// Cuts a maximal subforest with at most `k` vertices and no singleton
    /// components, removing its edges.
    ///
    /// Repeatedly looks at the largest remaining component: if it has at
    /// least as many vertices as the budget left, a breadth-first subtree of
    /// exactly that many vertices is taken and the extraction ends; otherwise
    /// the whole component is taken. Stops once fewer than two vertices of
    /// budget remain or the forest is exhausted.
    pub(crate) fn extract(&mut self, k: usize) -> SubforestCut {
        let mut cut = SubforestCut {
            vertices: Vec::new(),
            edges: Vec::new(),
        };
        let mut budget = k;
        while budget >= 2 {
            let Some((rep, size)) = self.largest() else {
                break;
            };
            self.remove_component(rep);
            if size <= budget {
                self.take_whole(rep, &mut cut);
                budget -= size;
            } else {
                self.take_partial(rep, size, budget, &mut cut);
                budget = 0;
            }
        }
        cut
    }

    fn take_whole(&mut self, rep: usize, cut: &mut SubforestCut) {
        let mut queue = VecDeque::from([(rep, usize::MAX)]);
        let mut edges = Vec::new();
        while let Some((x, parent)) = queue.pop_front() {
            cut.vertices.push(x);
            for &y in &self.adj[x] {
                if y != parent {
                    edges.push(Edge::new(x, y));
                    queue.push_back((y, x));
                }
            }
        }
        for &e in &edges {
            self.drop_edge(e);
        }
        cut.edges.extend(edges);
    }

    fn take_partial(&mut self, rep: usize, size: usize, take: usize, cut: &mut SubforestCut) {
        let mut chosen = Vec::with_capacity(take);
        let mut edges = Vec::with_capacity(take - 1);
        let mut queue = VecDeque::from([(rep, usize::MAX)]);
        'bfs: while let Some((x, parent)) = queue.pop_front() {
            if parent != usize::MAX {
                edges.push(Edge::new(parent, x));
            }
            chosen.push(x);
            if chosen.len() == take {
                break;
            }
            for &y in &self.adj[x] {
                if y != parent {
                    queue.push_back((y, x));
                    if chosen.len() + queue.len() > take {
                        continue 'bfs;
                    }
                }
            }
        }
        for &e in &edges {
            self.drop_edge(e);
        }
        self.split_pieces(&chosen, size);
        cut.vertices.extend(chosen);
        cut.edges.extend(edges);
    }

    /// After removing a subtree's edges from a component of `total` vertices,
    /// each chosen vertex roots one piece. All pieces are walked in lockstep
    /// until at most one is still growing; that one's size is the remainder.
    fn split_pieces(&mut self, roots: &[usize], total: usize) {
        struct Walk {
            root: usize,
            queue: VecDeque<(usize, usize)>,
            size: usize,
        }
        let mut walks: Vec<Walk> = roots
            .iter()
            .map(|&r| Walk {
                root: r,
                queue: VecDeque::from([(r, usize::MAX)]),
                size: 0,
            })
            .collect();
        let mut finished_total = 0;
        let mut running: Vec<usize> = (0..walks.len()).collect();
        while running.len() > 1 {
            running.retain(|&i| {
                let w = &mut walks[i];
                let (x, parent) = w.queue.pop_front().expect("running walk has a frontier");
                w.size += 1;
                for &y in &self.adj[x] {
                    if y != parent {
                        w.queue.push_back((y, x));
                    }
                }
                if w.queue.is_empty() {
                    finished_total += w.size;
                    false
                } else {
                    true
                }
            });
        }
        if let Some(&i) = running.first() {
            walks[i].size = total - finished_total;
        }
        for w in &walks {
            self.insert_component(w.root, w.size);
        }
    }
}

/// Adds the missing pairs of cliques to a graph, never repeating a pair.
pub(crate) struct CliqueBuilder {
    n: usize,
    present: HashSet<Edge>,
    added: Vec<Edge>,
}

impl CliqueBuilder {
    pub(crate) fn new(g: &Graph) -> Self {
        CliqueBuilder {
            n: g.n(),
            present: g.edges().collect(),
            added: Vec::new(),
        }
    }

    /// Completes `vertices` plus `k - |vertices|` padding vertices (lowest
    /// ids outside the set) to a clique of order `k`.
    pub(crate) fn complete_padded(&mut self, vertices: &[usize], k: usize) {
        let mut all = vertices.to_vec();
        let mut next = 0;
        while all.len() < k && next < self.n {
            if !vertices.contains(&next) {
                all.push(next);
            }
            next += 1;
        }
        self.complete(&all);
    }

    pub(crate) fn complete(&mut self, vertices: &[usize]) {
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                let e = Edge::new(a, b);
                if self.present.insert(e) {
                    self.added.push(e);
                }
            }
        }
    }

    pub(crate) fn into_completion(self) -> CompletionSet {
        CompletionSet::from_unique(self.added)
    }
}

/// Runs the extract-and-complete loop until the forest has no edges.
/// Returns `(|V_j|, |E_j|)` per iteration.
pub(crate) fn pack_cliques(
    forest: &mut ResidualForest,
    k: usize,
    builder: &mut CliqueBuilder,
) -> Vec<(usize, usize)> {
    let mut rounds = Vec::new();
    while forest.edges_left() > 0 {
        let cut = forest.extract(k);
        builder.complete_padded(&cut.vertices, k);
        rounds.push((cut.vertices.len(), cut.edges.len()));
    }
    rounds
}

/// A maximal subforest of `f` with at most `k` vertices and no singleton
/// components.
pub fn extract_maximal_k_subforest(f: &Graph, k: usize) -> Result<SubforestCut> {
    if k < 2 {
        return Err(CoverError::invalid(format!(
            "subforest order k={k} must be at least 2"
        )));
    }
    if f.m() == 0 {
        return Err(CoverError::invalid("forest has no edges"));
    }
    if !f.is_forest() {
        return Err(CoverError::invalid("input graph contains a cycle"));
    }
    let mut forest = ResidualForest::new(f.n(), f.edges());
    Ok(forest.extract(k))
}

/// Result of [`approx_tree_k_report`].
#[derive(Clone, Debug)]
pub struct ApproxKReport {
    pub completion: CompletionSet,
    /// `(|V_j|, |E_j|)` for every iteration, in order.
    pub rounds: Vec<(usize, usize)>,
}

/// Clique-packing completion for the (k,1)-cover of a tree, `k >= 5`.
pub fn approx_tree_k(t: &RootedTree, k: usize) -> Result<CompletionSet> {
    approx_tree_k_report(t, k).map(|r| r.completion)
}

pub fn approx_tree_k_report(t: &RootedTree, k: usize) -> Result<ApproxKReport> {
    if k < 5 {
        return Err(CoverError::invalid(format!(
            "clique packing needs k >= 5, got {k} (use the k=4 algorithm)"
        )));
    }
    if t.n() < k {
        return Err(CoverError::invalid(format!(
            "tree has {} vertices, fewer than k={k}",
            t.n()
        )));
    }
    let g = t.base();
    let mut forest = ResidualForest::new(g.n(), g.edges());
    let mut builder = CliqueBuilder::new(g);
    let rounds = pack_cliques(&mut forest, k, &mut builder);
    Ok(ApproxKReport {
        completion: builder.into_completion(),
        rounds,
    })
}
