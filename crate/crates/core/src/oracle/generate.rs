//! Seeded instance generators and exhaustive tree enumeration. Every
//! generator is a pure function of its parameters and seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CoverError, Result};
use crate::graph::Graph;
use crate::reductions::{SetCoverInstance, ThreePartitionInstance};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // linear-time decoding with a moving pointer to the smallest leaf
    let mut ptr = degree
        .iter()
        .position(|&d| d == 1)
        .expect("a tree has a leaf");
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a simple tree")
}

/// All `n^(n-2)` labelled trees on `n` vertices, in lexicographic order of
/// their Prüfer sequences.
pub fn enumerate_labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(3..=8).contains(&n) {
        return Err(CoverError::invalid(format!(
            "tree enumeration needs 3 <= n <= 8, got {n}"
        )));
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    Ok((0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        prufer_decode(n, &seq)
    }))
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn gen_random_tree(n: usize, seed: u64) -> Graph {
    random_tree_with(n, &mut rng(seed))
}

pub fn random_tree_with(n: usize, rng: &mut impl Rng) -> Graph {
    match n {
        0 | 1 => Graph::empty(n),
        2 => Graph::path(2),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq)
        }
    }
}

/// Connected chordal graph grown one vertex at a time: each new vertex joins
/// a random non-empty subset (at most `width` vertices) of a clique recorded
/// earlier, so the insertion order reversed is a perfect elimination
/// ordering. Subsets of size one leave bridges behind.
pub fn gen_random_chordal(n: usize, width: usize, seed: u64) -> Result<Graph> {
    if width < 1 || n < width + 1 {
        return Err(CoverError::invalid(format!(
            "chordal generator needs n >= width + 1 >= 2, got n={n}, width={width}"
        )));
    }
    let mut rng = rng(seed);
    let start = width + 1;
    let mut edges = Vec::new();
    for a in 0..start {
        for b in a + 1..start {
            edges.push((a, b));
        }
    }
    let mut cliques: Vec<Vec<usize>> = vec![(0..start).collect()];
    for v in start..n {
        let base = &cliques[rng.gen_range(0..cliques.len())];
        let size = rng.gen_range(1..=base.len().min(width));
        let mut pick: Vec<usize> = base.choose_multiple(&mut rng, size).copied().collect();
        pick.sort_unstable();
        edges.extend(pick.iter().map(|&u| (u, v)));
        pick.push(v);
        cliques.push(pick);
    }
    Graph::from_edges(n, edges)
}

/// Each item joins each set with probability `density`; empty sets then get
/// one random item and uncovered items one random set.
pub fn gen_random_setcover(
    nx: usize,
    nf: usize,
    density: f64,
    seed: u64,
) -> Result<SetCoverInstance> {
    if nx == 0 || nf == 0 {
        return Err(CoverError::invalid(
            "set-cover generator needs at least one item and one set",
        ));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(CoverError::invalid(format!(
            "density {density} is outside [0, 1]"
        )));
    }
    let mut rng = rng(seed);
    let mut member = vec![vec![false; nx]; nf];
    for row in member.iter_mut() {
        for cell in row.iter_mut() {
            *cell = rng.gen_bool(density);
        }
    }
    for row in member.iter_mut() {
        if !row.contains(&true) {
            row[rng.gen_range(0..nx)] = true;
        }
    }
    for x in 0..nx {
        if !member.iter().any(|row| row[x]) {
            member[rng.gen_range(0..nf)][x] = true;
        }
    }
    let sets = member
        .iter()
        .map(|row| (0..nx).filter(|&x| row[x]).collect())
        .collect();
    SetCoverInstance::new(nx, sets, None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionMode {
    /// Values built from `p` triples that each sum to `s`.
    Yes,
    /// Values drawn freely under the sum constraint; usually unsolvable but
    /// never certified so.
    LikelyNo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedPartition {
    pub instance: ThreePartitionInstance,
    /// The partition the values were built from, in `Yes` mode.
    pub triples: Option<Vec<[usize; 3]>>,
}

fn value_window(s: usize) -> Result<(usize, usize)> {
    let lo = s / 4 + 1;
    let hi = s.saturating_sub(1) / 2;
    if lo > hi || 3 * lo > s || 3 * hi < s {
        return Err(CoverError::invalid(format!(
            "no three integers strictly between s/4 and s/2 sum to s={s}"
        )));
    }
    Ok((lo, hi))
}

pub fn gen_random_3partition(
    p: usize,
    s: usize,
    mode: PartitionMode,
    seed: u64,
) -> Result<GeneratedPartition> {
    if p == 0 {
        return Err(CoverError::invalid("need at least one triple"));
    }
    let (lo, hi) = value_window(s)?;
    let mut rng = rng(seed);
    match mode {
        PartitionMode::Yes => {
            let mut shapes = Vec::new();
            for a in lo..=hi {
                for b in lo..=hi {
                    if let Some(c) = s.checked_sub(a + b).filter(|c| (lo..=hi).contains(c)) {
                        shapes.push([a, b, c]);
                    }
                }
            }
            let mut values = Vec::with_capacity(3 * p);
            for _ in 0..p {
                values.extend_from_slice(shapes.choose(&mut rng).expect("window checked"));
            }
            let mut order: Vec<usize> = (0..3 * p).collect();
            order.shuffle(&mut rng);
            // value at position order[i] is the i-th generated one
            let mut shuffled = vec![0; 3 * p];
            for (i, &pos) in order.iter().enumerate() {
                shuffled[pos] = values[i];
            }
            let triples = order
                .chunks(3)
                .map(|c| {
                    let mut t = [c[0], c[1], c[2]];
                    t.sort_unstable();
                    t
                })
                .collect();
            let instance = ThreePartitionInstance::new(s, shuffled)?;
            Ok(GeneratedPartition {
                instance,
                triples: Some(triples),
            })
        }
        PartitionMode::LikelyNo => {
            let mut values = vec![lo; 3 * p];
            let mut spare = s * p - 3 * p * lo;
            while spare > 0 {
                let i = rng.gen_range(0..3 * p);
                if values[i] < hi {
                    values[i] += 1;
                    spare -= 1;
                }
            }
            let instance = ThreePartitionInstance::new(s, values)?;
            Ok(GeneratedPartition {
                instance,
                triples: None,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_chordal;

    #[test]
    fn tree_counts() {
        for (n, count) in [(3, 3), (4, 16), (5, 125), (6, 1296)] {
            let trees: Vec<Graph> = enumerate_labeled_trees(n).unwrap().collect();
            assert_eq!(trees.len(), count);
            assert!(trees.iter().all(Graph::is_tree));
            let mut lists: Vec<_> = trees.iter().map(Graph::edge_list).collect();
            lists.sort();
            lists.dedup();
            assert_eq!(lists.len(), count, "n={n} trees are distinct");
        }
        assert!(enumerate_labeled_trees(2).is_err());
        assert!(enumerate_labeled_trees(9).is_err());
    }

    #[test]
    fn random_trees() {
        assert_eq!(gen_random_tree(1, 3).n(), 1);
        for n in [2, 5, 40] {
            let t = gen_random_tree(n, 11);
            assert!(t.is_tree());
            assert_eq!(t.m(), n - 1);
            assert!(t == gen_random_tree(n, 11));
        }
    }

    #[test]
    fn random_chordal() {
        assert!(gen_random_chordal(12, 1, 5).unwrap().is_tree());
        for seed in 0..20 {
            let g = gen_random_chordal(15, 3, seed).unwrap();
            assert!(g.is_connected());
            assert!(check_chordal(&g).is_chordal());
            assert!(g == gen_random_chordal(15, 3, seed).unwrap());
        }
        assert!(gen_random_chordal(2, 2, 0).is_err());
        assert!(gen_random_chordal(3, 0, 0).is_err());
    }

    #[test]
    fn random_setcover() {
        for seed in 0..10 {
            let inst = gen_random_setcover(4, 3, 0.2, seed).unwrap();
            assert!(inst.validate().is_ok());
            assert_eq!(inst, gen_random_setcover(4, 3, 0.2, seed).unwrap());
        }
        assert!(gen_random_setcover(0, 3, 0.5, 0).is_err());
        assert!(gen_random_setcover(2, 3, 1.5, 0).is_err());
    }

    #[test]
    fn random_three_partition() {
        let g = gen_random_3partition(2, 9, PartitionMode::Yes, 4).unwrap();
        let triples = g.triples.unwrap();
        for t in &triples {
            assert_eq!(t.iter().map(|&i| g.instance.values[i]).sum::<usize>(), 9);
        }
        for seed in 0..10 {
            let g = gen_random_3partition(3, 12, PartitionMode::LikelyNo, seed).unwrap();
            assert!(g.triples.is_none());
            assert!(g.instance.validate().is_ok());
        }
        assert!(gen_random_3partition(2, 8, PartitionMode::Yes, 0).is_err());
        assert!(gen_random_3partition(0, 9, PartitionMode::Yes, 0).is_err());
        assert!(gen_random_3partition(1, 0, PartitionMode::Yes, 0).is_err());
    }
}
