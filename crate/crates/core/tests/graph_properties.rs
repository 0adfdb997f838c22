use kcover::graph::{
    apply_completion, check_chordal, count_k_cliques_on_edge, find_bridges, triangle_vertices,
    unsaturated_edges,
};
use kcover::{CompletionSet, CoverSpec, Edge, Graph};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges(n, all.zip(bits).filter(|(_, keep)| *keep).map(|(p, _)| p)).unwrap()
        })
    })
}

fn non_edges(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b)))
        .filter(|e| !g.contains_edge(*e))
        .collect()
}

fn component_count(g: &Graph) -> usize {
    g.components().len()
}

/// Chordless cycle of length >= 4 by trying every vertex sequence.
fn has_long_hole(g: &Graph) -> bool {
    fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if used[w] || w < path[0] {
                continue;
            }
            // w may only touch the path at `last` and, to close, at path[0]
            let inner = if path.len() > 2 {
                &path[1..path.len() - 1]
            } else {
                &[][..]
            };
            if inner.iter().any(|&x| g.has_edge(x, w)) {
                continue;
            }
            if path.len() > 1 && g.has_edge(path[0], w) {
                if path.len() >= 3 {
                    return true;
                }
                continue;
            }
            path.push(w);
            used[w] = true;
            if extend(g, path, used) {
                return true;
            }
            used[w] = false;
            path.pop();
        }
        false
    }
    let n = g.n();
    (0..n).any(|s| {
        let mut used = vec![false; n];
        used[s] = true;
        extend(g, &mut vec![s], &mut used)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn triangle_count_matches_triangle_vertices(g in graph_strategy(10)) {
        for e in g.edges() {
            let count = count_k_cliques_on_edge(&g, e, 3, usize::MAX).unwrap();
            prop_assert_eq!(count, triangle_vertices(&g, e).unwrap().len());
        }
    }

    #[test]
    fn clique_counts_respect_the_cap(g in graph_strategy(9), cap in 1usize..4) {
        for e in g.edges() {
            for k in 3..=5 {
                let full = count_k_cliques_on_edge(&g, e, k, usize::MAX).unwrap();
                prop_assert_eq!(count_k_cliques_on_edge(&g, e, k, cap).unwrap(), full.min(cap));
            }
        }
    }

    #[test]
    fn apply_then_remove_round_trips(g in graph_strategy(9), pick in any::<u64>()) {
        let free = non_edges(&g);
        let chosen: Vec<Edge> =
            free.iter().enumerate().filter(|(i, _)| pick >> (i % 64) & 1 == 1).map(|(_, &e)| e).collect();
        let c = CompletionSet::from_edges(chosen.clone()).unwrap();
        let h = apply_completion(&g, &c).unwrap();
        prop_assert_eq!(h.m(), g.m() + chosen.len());
        prop_assert_eq!(h.without_edges(&chosen).unwrap(), g);
    }

    #[test]
    fn bridges_match_brute_force(g in graph_strategy(10)) {
        let base = component_count(&g);
        let brute: Vec<Edge> = g
            .edges()
            .filter(|&e| component_count(&g.without_edges(&[e]).unwrap()) > base)
            .collect();
        let mut fast = find_bridges(&g);
        fast.sort_unstable();
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn chordality_matches_hole_search(g in graph_strategy(7)) {
        prop_assert_eq!(check_chordal(&g).is_chordal(), !has_long_hole(&g));
    }

    #[test]
    fn adding_edges_never_unsaturates(g in graph_strategy(9), k in 3usize..=5, which in any::<prop::sample::Index>()) {
        let free = non_edges(&g);
        prop_assume!(!free.is_empty());
        let e = free[which.index(free.len())];
        let spec = CoverSpec::k_cover(k).unwrap();
        let before = unsaturated_edges(&g, spec);
        let h = apply_completion(&g, &CompletionSet::from_edges(vec![e]).unwrap()).unwrap();
        let after = unsaturated_edges(&h, spec);
        for x in &after {
            prop_assert!(*x == e || before.contains(x), "{} became unsaturated", x);
        }
    }
}

#[test]
fn hole_search_sanity() {
    assert!(has_long_hole(&Graph::cycle(4)));
    assert!(has_long_hole(&Graph::cycle(7)));
    assert!(!has_long_hole(&Graph::complete(5)));
    assert!(!has_long_hole(&Graph::path(6)));
}
