use crate::error::{CoverError, Result};
use crate::graph::Graph;

/// Spider with centre 0 and two-edge legs, plus one single-edge leg when
/// `n - 1` is odd. Legs use consecutive ids.
pub fn worst_case_spider(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(CoverError::invalid(format!("spider needs n >= 4, got {n}")));
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    while next + 1 < n {
        edges.push((0, next));
        edges.push((next, next + 1));
        next += 2;
    }
    if next < n {
        edges.push((0, next));
    }
    Graph::from_edges(n, edges)
}
