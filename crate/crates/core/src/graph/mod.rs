//! Simple undirected graphs on dense vertex ids `0..n`.

mod bridges;
mod chordal;
mod cover;
pub mod io;

pub use bridges::find_bridges;
pub use chordal::{check_chordal, Chordality};
pub(crate) use cover::edge_clique_count;
pub use cover::{
    apply_completion, count_k_cliques_on_edge, triangle_vertices, unsaturated_edges,
    validate_completion, CompletionSet, CoverSpec, CoverVerdict,
};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{CoverError, Result};

/// Unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes the endpoint order. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop ({a},{b}) is not an edge");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            Err(CoverError::SelfLoop(a))
        } else {
            Ok(Edge::new(a, b))
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.0
    }

    #[inline]
    pub fn v(self) -> usize {
        self.1
    }

    #[inline]
    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(self, x: usize) -> usize {
        debug_assert!(self.contains(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        e.endpoints()
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// Immutable simple undirected graph. Adjacency is stored compressed: the
/// sorted neighbours of `v` are `targets[offsets[v]..offsets[v + 1]]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edge_list())
            .finish()
    }
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Counting-sort construction from both orientations of every pair.
    /// Lists come out sorted because pairs are scattered in source order.
    fn from_pairs_unchecked(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(a, b) in pairs {
            offsets[a + 1] += 1;
            offsets[b + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        // first pass by target, second by source, gives sorted lists
        let mut by_target = vec![(0usize, 0usize); 2 * pairs.len()];
        let mut fill = offsets.clone();
        for &(a, b) in pairs {
            for (x, y) in [(a, b), (b, a)] {
                by_target[fill[y]] = (x, y);
                fill[y] += 1;
            }
        }
        let mut targets = vec![0usize; 2 * pairs.len()];
        let mut fill = offsets.clone();
        for &(x, y) in &by_target {
            targets[fill[x]] = y;
            fill[x] += 1;
        }
        Graph { offsets, targets }
    }

    /// Builds a graph, rejecting self-loops, repeated pairs and out-of-range ids.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut pairs = Vec::new();
        for e in edges {
            let (a, b) = e.into();
            for x in [a, b] {
                if x >= n {
                    return Err(CoverError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(CoverError::SelfLoop(a));
            }
            pairs.push((a, b));
        }
        let g = Graph::from_pairs_unchecked(n, &pairs);
        for u in 0..n {
            if let Some(w) = g.neighbors(u).windows(2).find(|w| w[0] == w[1]) {
                return Err(CoverError::DuplicatePair(Edge::new(u, w[0])));
            }
        }
        Ok(g)
    }

    /// Internal constructor for edge sets already known to be simple.
    pub(crate) fn from_simple_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let pairs: Vec<(usize, usize)> = edges.into_iter().map(Edge::endpoints).collect();
        Graph::from_pairs_unchecked(n, &pairs)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_simple_edges(n, (1..n).map(|i| Edge::new(i - 1, i)))
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::from_simple_edges(n, (0..n).map(|i| Edge::new(i, (i + 1) % n)))
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        Graph::from_simple_edges(
            n,
            (0..n).flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b))),
        )
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::from_simple_edges(leaves + 1, (1..=leaves).map(|i| Edge::new(0, i)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a >= self.n() || b >= self.n() || a == b {
            return false;
        }
        let (x, y) = if self.degree(a) <= self.degree(b) {
            (a, b)
        } else {
            (b, a)
        };
        self.neighbors(x).binary_search(&y).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |u| {
            let list = self.neighbors(u);
            let start = list.partition_point(|&v| v <= u);
            list[start..].iter().map(move |&v| Edge(u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for the empty graph and for any graph with a single component.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected()
    }

    /// New graph with `extra` added; every pair must be a non-edge.
    pub(crate) fn with_added(&self, extra: &[Edge]) -> Graph {
        Graph::from_simple_edges(self.n(), self.edges().chain(extra.iter().copied()))
    }

    /// New graph with the given edges removed.
    pub fn without_edges(&self, removed: &[Edge]) -> Result<Graph> {
        let mut gone = std::collections::HashSet::with_capacity(removed.len());
        for &e in removed {
            if !self.contains_edge(e) {
                return Err(CoverError::NotAnEdge(e));
            }
            if !gone.insert(e) {
                return Err(CoverError::DuplicatePair(e));
            }
        }
        Ok(Graph::from_simple_edges(
            self.n(),
            self.edges().filter(|e| !gone.contains(e)),
        ))
    }

    /// Subgraph induced on `vertices` (relabelled `0..len` in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let local = &local;
            self.neighbors(v)
                .iter()
                .filter(move |&&w| local[w] != usize::MAX && local[w] > i)
                .map(move |&w| Edge(i, local[w]))
        });
        Graph::from_simple_edges(vertices.len(), edges.collect::<Vec<_>>())
    }
}

/// Intersection of two ascending slices.
pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len() * 8 < large.len() {
        return small
            .iter()
            .copied()
            .filter(|x| large.binary_search(x).is_ok())
            .collect();
    }
    let mut out = Vec::with_capacity(small.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
