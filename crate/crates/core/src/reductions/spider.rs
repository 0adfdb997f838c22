//! 3-PARTITION spider and the correspondences between partitions, cliques
//! and edge partitions.

use std::collections::HashMap;

use super::ThreePartitionInstance;
use crate::error::{CoverError, Result};
use crate::graph::{CompletionSet, Edge, Graph};

/// Centre 0 and one leg of `a_i` edges per value, legs on consecutive ids.
pub fn build_spider(inst: &ThreePartitionInstance) -> Result<Graph> {
    inst.validate()?;
    let n = inst.s * inst.p() + 1;
    let mut edges = Vec::with_capacity(n - 1);
    for leg in spider_legs(inst) {
        let mut prev = 0;
        for v in leg {
            edges.push((prev, v));
            prev = v;
        }
    }
    Graph::from_edges(n, edges)
}

/// Vertices of each leg from the centre outward, centre excluded.
pub fn spider_legs(inst: &ThreePartitionInstance) -> Vec<Vec<usize>> {
    let mut next = 1;
    inst.values
        .iter()
        .map(|&a| {
            let leg = (next..next + a).collect();
            next += a;
            leg
        })
        .collect()
}

fn require_spider(inst: &ThreePartitionInstance, spider: &Graph) -> Result<()> {
    if *spider != build_spider(inst)? {
        return Err(CoverError::invalid(
            "graph is not the spider built from this instance",
        ));
    }
    Ok(())
}

fn check_triples(inst: &ThreePartitionInstance, triples: &[[usize; 3]]) -> Result<()> {
    let mut used = vec![false; inst.values.len()];
    for t in triples {
        for &i in t {
            if i >= used.len() {
                return Err(CoverError::invalid(format!("value index {i} out of range")));
            }
            if used[i] {
                return Err(CoverError::invalid(format!("value index {i} used twice")));
            }
            used[i] = true;
        }
        let sum: usize = t.iter().map(|&i| inst.values[i]).sum();
        if sum != inst.s {
            return Err(CoverError::invalid(format!(
                "triple {t:?} sums to {sum}, expected {}",
                inst.s
            )));
        }
    }
    if let Some(i) = used.iter().position(|&u| !u) {
        return Err(CoverError::invalid(format!(
            "value index {i} is in no triple"
        )));
    }
    Ok(())
}

/// The edges of each triple's three legs.
pub fn partition_edge_groups(
    inst: &ThreePartitionInstance,
    triples: &[[usize; 3]],
) -> Result<Vec<Vec<Edge>>> {
    check_triples(inst, triples)?;
    let legs = spider_legs(inst);
    Ok(triples
        .iter()
        .map(|t| {
            t.iter()
                .flat_map(|&i| {
                    let leg = &legs[i];
                    std::iter::once(Edge::new(0, leg[0]))
                        .chain(leg.windows(2).map(|w| Edge::new(w[0], w[1])))
                })
                .collect()
        })
        .collect())
}

/// Completes the three legs of every triple, with the centre, into a clique
/// on `s + 1` vertices: `p·s(s-1)/2` additions in total.
pub fn completion_from_partition(
    inst: &ThreePartitionInstance,
    spider: &Graph,
    triples: &[[usize; 3]],
) -> Result<CompletionSet> {
    require_spider(inst, spider)?;
    check_triples(inst, triples)?;
    let legs = spider_legs(inst);
    let mut additions = Vec::new();
    for t in triples {
        let mut clique = vec![0];
        for &i in t {
            clique.extend_from_slice(&legs[i]);
        }
        for (a, &x) in clique.iter().enumerate() {
            for &y in &clique[a + 1..] {
                if !spider.has_edge(x, y) {
                    additions.push(Edge::new(x, y));
                }
            }
        }
    }
    Ok(CompletionSet::from_unique(additions))
}

/// Reads the 3-partition off an edge partition of the spider into subtrees
/// of `s` edges. Each group must hold exactly three whole legs.
pub fn partition_from_edge_partition(
    inst: &ThreePartitionInstance,
    spider: &Graph,
    groups: &[Vec<Edge>],
) -> Result<Vec<[usize; 3]>> {
    require_spider(inst, spider)?;
    let legs = spider_legs(inst);
    let mut leg_of = vec![usize::MAX; spider.n()];
    for (i, leg) in legs.iter().enumerate() {
        for &v in leg {
            leg_of[v] = i;
        }
    }
    let mut group_of: HashMap<Edge, usize> = HashMap::with_capacity(spider.m());
    for (gi, group) in groups.iter().enumerate() {
        for &e in group {
            if e.v() >= spider.n() || !spider.contains_edge(e) {
                return Err(CoverError::NotAnEdge(e));
            }
            if let Some(prev) = group_of.insert(e, gi) {
                return Err(CoverError::invalid(format!(
                    "edge {e} is in groups {prev} and {gi}"
                )));
            }
        }
    }
    if let Some(e) = spider.edges().find(|e| !group_of.contains_key(e)) {
        return Err(CoverError::invalid(format!("edge {e} is in no group")));
    }

    let mut leg_group = vec![usize::MAX; legs.len()];
    let mut triples = Vec::with_capacity(groups.len());
    for (gi, group) in groups.iter().enumerate() {
        if group.len() != inst.s {
            return Err(CoverError::invalid(format!(
                "group {gi} has {} edges, expected {}",
                group.len(),
                inst.s
            )));
        }
        let sub = Graph::from_edges(spider.n(), group.iter().map(|e| e.endpoints()))?;
        let touched = sub.components().into_iter().filter(|c| c.len() > 1).count();
        if touched != 1 {
            return Err(CoverError::invalid(format!("group {gi} is not connected")));
        }
        let mut members = Vec::new();
        for &e in group {
            let i = leg_of[e.v()];
            match leg_group[i] {
                usize::MAX => {
                    leg_group[i] = gi;
                    members.push(i);
                }
                g if g == gi => {}
                g => {
                    return Err(CoverError::invalid(format!(
                        "leg {i} is split between groups {g} and {gi}"
                    )))
                }
            }
        }
        members.sort_unstable();
        let triple: [usize; 3] = members.as_slice().try_into().map_err(|_| {
            CoverError::invalid(format!(
                "group {gi} holds {} legs, expected 3",
                members.len()
            ))
        })?;
        triples.push(triple);
    }
    check_triples(inst, &triples)?;
    Ok(triples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{validate_completion, CoverSpec};

    fn nines() -> ThreePartitionInstance {
        ThreePartitionInstance::new(9, vec![3; 6]).unwrap()
    }

    #[test]
    fn spider_sizes() {
        let g = build_spider(&nines()).unwrap();
        assert_eq!((g.n(), g.m()), (19, 18));
        assert_eq!(g.degree(0), 6);
        let g = build_spider(&ThreePartitionInstance::new(6, vec![2, 2, 2]).unwrap()).unwrap();
        assert_eq!(g.n(), 7);
        assert!(ThreePartitionInstance::new(6, vec![]).is_err());
    }

    #[test]
    fn partition_to_cliques_and_back() {
        let inst = nines();
        let g = build_spider(&inst).unwrap();
        let triples = [[0, 1, 2], [3, 4, 5]];
        let c = completion_from_partition(&inst, &g, &triples).unwrap();
        assert_eq!(c.len(), 72);
        assert!(validate_completion(&g, &c, CoverSpec::k_cover(10).unwrap())
            .unwrap()
            .is_ok());
        let groups = partition_edge_groups(&inst, &triples).unwrap();
        assert_eq!(
            partition_from_edge_partition(&inst, &g, &groups).unwrap(),
            triples.to_vec()
        );
    }

    #[test]
    fn bad_triples_and_groups() {
        let inst = ThreePartitionInstance::new(10, vec![3, 3, 4, 3, 3, 4]).unwrap();
        let g = build_spider(&inst).unwrap();
        assert!(completion_from_partition(&inst, &g, &[[0, 1, 3], [2, 4, 5]]).is_err());
        assert!(completion_from_partition(&inst, &g, &[[0, 1, 2], [0, 4, 5]]).is_err());

        let ok = [[0, 1, 2], [3, 4, 5]];
        let groups = partition_edge_groups(&inst, &ok).unwrap();
        let mut moved = groups.clone();
        let tip = *moved[1].last().unwrap();
        moved[1].pop();
        moved[0].push(tip);
        assert!(partition_from_edge_partition(&inst, &g, &moved).is_err());

        let mut swapped = groups.clone();
        let (a, b) = (swapped[0].pop().unwrap(), swapped[1].pop().unwrap());
        swapped[0].push(b);
        swapped[1].push(a);
        assert!(partition_from_edge_partition(&inst, &g, &swapped).is_err());

        let mut missing = groups;
        missing[0].pop();
        assert!(partition_from_edge_partition(&inst, &g, &missing).is_err());
    }
}
