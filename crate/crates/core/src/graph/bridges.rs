use super::{Edge, Graph};

/// Bridges of `g` in lexicographic order.
///
/// Iterative low-link DFS, linear in `n + m`. Works on disconnected graphs.
pub fn find_bridges(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut bridges = Vec::new();
    let mut clock = 0;
    // (vertex, parent, next neighbour index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if let Some(&w) = g.neighbors(v).get(idx) {
                top.2 += 1;
                if w == parent {
                    // simple graph: exactly one parallel link to the parent
                    continue;
                }
                if order[w] == usize::MAX {
                    order[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > order[parent] {
                        bridges.push(Edge::new(parent, v));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}
