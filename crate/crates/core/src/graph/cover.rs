//! (k,l)-cover predicates and completion sets.

use std::collections::HashSet;
use std::fmt;

use super::{intersect_sorted, Edge, Graph};
use crate::error::{CoverError, Result};

/// Target cover: every edge must lie in at least `l` cliques of order `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverSpec {
    k: usize,
    l: usize,
}

impl CoverSpec {
    pub fn new(k: usize, l: usize) -> Result<Self> {
        if k < 3 {
            return Err(CoverError::invalid(format!(
                "clique order k={k} must be at least 3"
            )));
        }
        if l < 1 {
            return Err(CoverError::invalid("multiplicity l must be at least 1"));
        }
        Ok(CoverSpec { k, l })
    }

    /// `(k, 1)`.
    pub fn k_cover(k: usize) -> Result<Self> {
        CoverSpec::new(k, 1)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }
}

impl fmt::Display for CoverSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

/// Ordered list of distinct vertex pairs to add to a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompletionSet {
    additions: Vec<Edge>,
}

impl CompletionSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Rejects repeated pairs; whether the pairs are non-edges is checked
    /// against a concrete graph by [`apply_completion`].
    pub fn from_edges(additions: Vec<Edge>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(additions.len());
        for &e in &additions {
            if !seen.insert(e) {
                return Err(CoverError::DuplicatePair(e));
            }
        }
        Ok(CompletionSet { additions })
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let edges = pairs
            .into_iter()
            .map(|(a, b)| Edge::try_new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(edges)
    }

    /// Trusted constructor for solver outputs.
    pub(crate) fn from_unique(additions: Vec<Edge>) -> Self {
        debug_assert_eq!(
            additions.iter().collect::<HashSet<_>>().len(),
            additions.len(),
            "solver produced a repeated pair"
        );
        CompletionSet { additions }
    }

    pub fn len(&self) -> usize {
        self.additions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.additions.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.additions
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.additions.iter().copied()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.additions.contains(&e)
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.additions
    }

    /// Pairs in lexicographic order.
    pub fn sorted(&self) -> Vec<Edge> {
        let mut v = self.additions.clone();
        v.sort_unstable();
        v
    }
}

impl<'a> IntoIterator for &'a CompletionSet {
    type Item = Edge;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Edge>>;

    fn into_iter(self) -> Self::IntoIter {
        self.additions.iter().copied()
    }
}

fn require_edge(g: &Graph, e: Edge) -> Result<()> {
    if e.v() >= g.n() {
        return Err(CoverError::VertexOutOfRange {
            vertex: e.v(),
            n: g.n(),
        });
    }
    if !g.contains_edge(e) {
        return Err(CoverError::NotAnEdge(e));
    }
    Ok(())
}

/// Vertices adjacent to both endpoints of `e`, ascending.
pub fn triangle_vertices(g: &Graph, e: Edge) -> Result<Vec<usize>> {
    require_edge(g, e)?;
    Ok(intersect_sorted(g.neighbors(e.u()), g.neighbors(e.v())))
}

/// Number of `k`-cliques containing `e`, saturating at `cap`.
///
/// Searches for `(k-2)`-cliques inside the common neighbourhood of the
/// endpoints and stops as soon as `cap` of them are found.
pub fn count_k_cliques_on_edge(g: &Graph, e: Edge, k: usize, cap: usize) -> Result<usize> {
    require_edge(g, e)?;
    if k < 3 {
        return Err(CoverError::invalid(format!(
            "clique order k={k} must be at least 3"
        )));
    }
    if cap == 0 {
        return Err(CoverError::invalid("cap must be at least 1"));
    }
    Ok(edge_clique_count(g, e, k, cap))
}

pub(crate) fn edge_clique_count(g: &Graph, e: Edge, k: usize, cap: usize) -> usize {
    let common = intersect_sorted(g.neighbors(e.u()), g.neighbors(e.v()));
    count_cliques_within(g, &common, k - 2, cap)
}

fn count_cliques_within(g: &Graph, cand: &[usize], r: usize, cap: usize) -> usize {
    if r == 0 {
        return 1;
    }
    if cand.len() < r {
        return 0;
    }
    if r == 1 {
        return cand.len().min(cap);
    }
    let mut total = 0;
    for (i, &x) in cand.iter().enumerate() {
        if cand.len() - i < r {
            break;
        }
        let next = intersect_sorted(&cand[i + 1..], g.neighbors(x));
        if next.len() + 1 < r {
            continue;
        }
        total += count_cliques_within(g, &next, r - 1, cap - total);
        if total >= cap {
            return cap;
        }
    }
    total
}

/// Edges lying in fewer than `spec.l()` cliques of order `spec.k()`, sorted.
pub fn unsaturated_edges(g: &Graph, spec: CoverSpec) -> Vec<Edge> {
    g.edges()
        .filter(|&e| edge_clique_count(g, e, spec.k(), spec.l()) < spec.l())
        .collect()
}

/// `g` plus the pairs of `c`.
pub fn apply_completion(g: &Graph, c: &CompletionSet) -> Result<Graph> {
    let mut seen = HashSet::with_capacity(c.len());
    for e in c {
        if e.v() >= g.n() {
            return Err(CoverError::VertexOutOfRange {
                vertex: e.v(),
                n: g.n(),
            });
        }
        if g.contains_edge(e) {
            return Err(CoverError::AlreadyAnEdge(e));
        }
        if !seen.insert(e) {
            return Err(CoverError::DuplicatePair(e));
        }
    }
    Ok(g.with_added(c.edges()))
}

/// Outcome of checking a completion set against a cover target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverVerdict {
    /// Edges of `g ∪ c` still short of the required clique count.
    pub unsaturated: Vec<Edge>,
    pub connected: bool,
}

impl CoverVerdict {
    pub fn is_ok(&self) -> bool {
        self.unsaturated.is_empty() && self.connected
    }
}

pub fn validate_completion(g: &Graph, c: &CompletionSet, spec: CoverSpec) -> Result<CoverVerdict> {
    let h = apply_completion(g, c)?;
    Ok(CoverVerdict {
        unsaturated: unsaturated_edges(&h, spec),
        connected: h.is_connected(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn triangle_vertices_examples() {
        assert_eq!(
            triangle_vertices(&Graph::complete(3), e(0, 1)).unwrap(),
            vec![2]
        );
        assert_eq!(
            triangle_vertices(&Graph::path(3), e(0, 1)).unwrap(),
            Vec::<usize>::new()
        );
        assert_eq!(
            triangle_vertices(&Graph::complete(4), e(0, 1)).unwrap(),
            vec![2, 3]
        );
        assert_eq!(
            triangle_vertices(&Graph::path(3), e(0, 2)).unwrap_err(),
            CoverError::NotAnEdge(e(0, 2))
        );
    }

    #[test]
    fn clique_count_examples() {
        assert_eq!(
            count_k_cliques_on_edge(&Graph::complete(3), e(0, 1), 3, 2).unwrap(),
            1
        );
        assert_eq!(
            count_k_cliques_on_edge(&Graph::complete(4), e(1, 3), 3, 5).unwrap(),
            2
        );
        assert_eq!(
            count_k_cliques_on_edge(&Graph::path(3), e(1, 2), 3, 1).unwrap(),
            0
        );
        // K6: an edge lies in C(4,2) = 6 four-cliques; the cap stops early.
        assert_eq!(
            count_k_cliques_on_edge(&Graph::complete(6), e(0, 5), 4, 100).unwrap(),
            6
        );
        assert_eq!(
            count_k_cliques_on_edge(&Graph::complete(6), e(0, 5), 4, 4).unwrap(),
            4
        );
        assert_eq!(
            count_k_cliques_on_edge(&Graph::complete(6), e(0, 5), 6, 9).unwrap(),
            1
        );
        assert!(count_k_cliques_on_edge(&Graph::complete(3), e(0, 1), 3, 0).is_err());
    }

    #[test]
    fn unsaturated_examples() {
        let spec32 = CoverSpec::new(3, 2).unwrap();
        let spec31 = CoverSpec::new(3, 1).unwrap();
        assert!(unsaturated_edges(&Graph::complete(4), spec32).is_empty());
        assert_eq!(unsaturated_edges(&Graph::star(3), spec31).len(), 3);
        assert!(unsaturated_edges(&Graph::empty(4), spec31).is_empty());
    }

    #[test]
    fn apply_examples() {
        let p3 = Graph::path(3);
        let k3 = apply_completion(&p3, &CompletionSet::from_pairs([(0, 2)]).unwrap()).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(apply_completion(&p3, &CompletionSet::new()).unwrap(), p3);

        let p5 = Graph::path(5);
        let c = CompletionSet::from_pairs([(0, 2), (2, 4)]).unwrap();
        let h = apply_completion(&p5, &c).unwrap();
        assert!(unsaturated_edges(&h, CoverSpec::new(3, 1).unwrap()).is_empty());

        let err = apply_completion(&p3, &CompletionSet::from_pairs([(0, 1)]).unwrap()).unwrap_err();
        assert_eq!(err, CoverError::AlreadyAnEdge(e(0, 1)));
        assert_eq!(
            CompletionSet::from_pairs([(0, 2), (2, 0)]).unwrap_err(),
            CoverError::DuplicatePair(e(0, 2))
        );
    }

    #[test]
    fn validate_examples() {
        let spec = CoverSpec::new(3, 1).unwrap();
        let p3 = Graph::path(3);
        assert!(
            validate_completion(&p3, &CompletionSet::from_pairs([(0, 2)]).unwrap(), spec)
                .unwrap()
                .is_ok()
        );
        let v = validate_completion(&p3, &CompletionSet::new(), spec).unwrap();
        assert_eq!(v.unsaturated, vec![e(0, 1), e(1, 2)]);
        let star = Graph::star(3);
        let c = CompletionSet::from_pairs([(1, 2), (3, 1)]).unwrap();
        assert!(validate_completion(&star, &c, spec).unwrap().is_ok());
    }

    #[test]
    fn validate_flags_disconnected_results() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let c = CompletionSet::from_pairs([(0, 2), (3, 5)]).unwrap();
        let v = validate_completion(&g, &c, CoverSpec::new(3, 1).unwrap()).unwrap();
        assert!(v.unsaturated.is_empty());
        assert!(!v.connected && !v.is_ok());
    }

    #[test]
    fn spec_bounds() {
        assert!(CoverSpec::new(2, 1).is_err());
        assert!(CoverSpec::new(3, 0).is_err());
    }
}
