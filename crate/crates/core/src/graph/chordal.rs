use super::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// Perfect elimination ordering: each vertex's later neighbours form a clique.
    Chordal { peo: Vec<usize> },
    /// Under the maximum-cardinality-search ordering, the later neighbours of
    /// `witness` are not pairwise adjacent.
    NotChordal { witness: usize },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn check_chordal(g: &Graph) -> Chordality {
    let n = g.n();
    let order = mcs_order(g);
    // elimination order is the reverse of the search order
    let peo: Vec<usize> = order.into_iter().rev().collect();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]);
        let Some(parent) = later.clone().min_by_key(|&w| pos[w]) else {
            continue;
        };
        if later
            .filter(|&w| w != parent)
            .any(|w| !g.has_edge(parent, w))
        {
            return Chordality::NotChordal { witness: v };
        }
    }
    Chordality::Chordal { peo }
}

/// Vertices in the order maximum cardinality search numbers them.
/// Buckets are LIFO; the first pick is vertex 0.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n.max(1)];
    buckets[0] = (0..n).rev().collect();
    let mut top = 0usize;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !numbered[v] && weight[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        numbered[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                top = top.max(weight[w]);
            }
        }
    }
    order
}
