//! Exhaustive solvers. These deliberately share no code with the solvers they
//! certify: adjacency is a bitset per vertex and clique counting is a plain
//! recursive scan.

use std::collections::HashSet;

use super::OracleBudget;
use crate::error::{CoverError, Result};
use crate::graph::{CompletionSet, CoverSpec, Edge, Graph};
use crate::reductions::SetCoverInstance;

/// Largest vertex count the completion search accepts.
pub const ORACLE_MAX_N: usize = 128;

/// Largest family the set-cover search accepts.
pub const SETCOVER_MAX_SETS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Optimal(CompletionSet),
    /// Even the complete graph on these vertices lacks the cover.
    Infeasible,
    /// No completion with fewer than `lower_bound` additions exists; the
    /// search ran out of budget before settling larger sizes.
    Inconclusive {
        lower_bound: usize,
    },
}

impl OracleOutcome {
    pub fn optimal(&self) -> Option<&CompletionSet> {
        match self {
            OracleOutcome::Optimal(c) => Some(c),
            _ => None,
        }
    }

    pub fn size(&self) -> Option<usize> {
        self.optimal().map(CompletionSet::len)
    }
}

type Mask = u128;

struct Search {
    n: usize,
    k: usize,
    l: usize,
    adj: Vec<Mask>,
    base_edges: Vec<(usize, usize)>,
    added: Vec<(usize, usize)>,
    seen: HashSet<Vec<(usize, usize)>>,
    nodes: u64,
    max_nodes: u64,
}

fn count_cliques(adj: &[Mask], cand: Mask, need: usize, cap: usize) -> usize {
    if need == 0 {
        return 1;
    }
    if (cand.count_ones() as usize) < need {
        return 0;
    }
    let mut total = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += count_cliques(adj, rest & adj[v], need - 1, cap - total);
        if total >= cap {
            return total;
        }
    }
    total
}

enum Step {
    Found,
    Exhausted,
    OutOfNodes,
}

impl Search {
    fn has(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    fn toggle(&mut self, a: usize, b: usize) {
        self.adj[a] ^= 1 << b;
        self.adj[b] ^= 1 << a;
    }

    fn first_short_edge(&self) -> Option<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> =
            self.base_edges.iter().chain(&self.added).copied().collect();
        edges.sort_unstable();
        edges.into_iter().find(|&(u, v)| {
            count_cliques(&self.adj, self.adj[u] & self.adj[v], self.k - 2, self.l) < self.l
        })
    }

    /// Vertex sets of size `k` through `(u, v)` whose missing pairs number at
    /// most `room`, each with its (non-empty) list of missing pairs.
    fn clique_options(&self, u: usize, v: usize, room: usize) -> Vec<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        let mut chosen = vec![u, v];
        self.grow(&mut chosen, 0, Vec::new(), room, &mut out);
        out
    }

    fn grow(
        &self,
        chosen: &mut Vec<usize>,
        from: usize,
        missing: Vec<(usize, usize)>,
        room: usize,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if chosen.len() == self.k {
            if !missing.is_empty() {
                out.push(missing);
            }
            return;
        }
        for w in from..self.n {
            if w == chosen[0] || w == chosen[1] {
                continue;
            }
            let mut next = missing.clone();
            for &x in chosen.iter() {
                if !self.has(x, w) {
                    next.push((x.min(w), x.max(w)));
                }
            }
            if next.len() > room {
                continue;
            }
            chosen.push(w);
            self.grow(chosen, w + 1, next, room, out);
            chosen.pop();
        }
    }

    fn dfs(&mut self, limit: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Step::OutOfNodes;
        }
        let Some((u, v)) = self.first_short_edge() else {
            return Step::Found;
        };
        let room = limit - self.added.len();
        if room == 0 {
            return Step::Exhausted;
        }
        for option in self.clique_options(u, v, room) {
            let mut key = self.added.clone();
            key.extend_from_slice(&option);
            key.sort_unstable();
            if !self.seen.insert(key) {
                continue;
            }
            for &(a, b) in &option {
                self.toggle(a, b);
                self.added.push((a, b));
            }
            match self.dfs(limit) {
                Step::Exhausted => {}
                done => return done,
            }
            for &(a, b) in &option {
                self.toggle(a, b);
                self.added.pop();
            }
        }
        Step::Exhausted
    }
}

/// Minimum completion set by iterative deepening on the number of additions.
///
/// At each node the lexicographically first edge short of `l` cliques is
/// picked; every solution extending the current additions contains all
/// missing pairs of some `k`-set through that edge, so branching over those
/// sets is exhaustive.
pub fn brute_min_completion(
    g: &Graph,
    spec: CoverSpec,
    budget: &OracleBudget,
) -> Result<OracleOutcome> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(CoverError::invalid(format!(
            "oracle handles at most {ORACLE_MAX_N} vertices, got {n}"
        )));
    }
    if n < spec.k() {
        return Err(CoverError::invalid(format!(
            "need n >= k, got n={n}, k={}",
            spec.k()
        )));
    }
    if !g.is_connected() {
        return Err(CoverError::NotConnected);
    }
    let full: Mask = if n == 128 { !0 } else { (1 << n) - 1 };
    let complete: Vec<Mask> = (0..n).map(|v| full & !(1 << v)).collect();
    if n >= 2
        && count_cliques(&complete, complete[0] & complete[1], spec.k() - 2, spec.l()) < spec.l()
    {
        return Ok(OracleOutcome::Infeasible);
    }
    let mut adj = vec![0 as Mask; n];
    let base_edges: Vec<(usize, usize)> = g.edges().map(Edge::endpoints).collect();
    for &(a, b) in &base_edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut search = Search {
        n,
        k: spec.k(),
        l: spec.l(),
        adj,
        base_edges,
        added: Vec::new(),
        seen: HashSet::new(),
        nodes: 0,
        max_nodes: budget.max_nodes,
    };
    for limit in 0..=budget.max_additions {
        search.seen.clear();
        match search.dfs(limit) {
            Step::Found => {
                let mut edges: Vec<Edge> =
                    search.added.iter().map(|&(a, b)| Edge::new(a, b)).collect();
                edges.sort_unstable();
                return Ok(OracleOutcome::Optimal(CompletionSet::from_unique(edges)));
            }
            Step::Exhausted => {}
            Step::OutOfNodes => return Ok(OracleOutcome::Inconclusive { lower_bound: limit }),
        }
    }
    Ok(OracleOutcome::Inconclusive {
        lower_bound: budget.max_additions + 1,
    })
}

/// Smallest covering sub-family, lexicographically least among the
/// smallest. `None` when the family exceeds [`SETCOVER_MAX_SETS`].
pub fn brute_min_setcover(inst: &SetCoverInstance) -> Result<Option<Vec<usize>>> {
    inst.validate()?;
    let nf = inst.num_sets();
    if nf > SETCOVER_MAX_SETS {
        return Ok(None);
    }
    let masks: Vec<u128> = if inst.universe <= 128 {
        inst.sets
            .iter()
            .map(|s| s.iter().fold(0, |m, &x| m | 1 << x))
            .collect()
    } else {
        return Err(CoverError::invalid(
            "set-cover oracle handles at most 128 items",
        ));
    };
    let full: u128 = if inst.universe == 128 {
        !0
    } else {
        (1 << inst.universe) - 1
    };
    for size in 1..=nf {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            if pick.iter().fold(0, |m, &j| m | masks[j]) == full {
                return Ok(Some(pick));
            }
            // next combination in lexicographic order
            let Some(pos) = (0..size).rev().find(|&i| pick[i] < nf - size + i) else {
                break;
            };
            pick[pos] += 1;
            for i in pos + 1..size {
                pick[i] = pick[i - 1] + 1;
            }
        }
    }
    unreachable!("a validated instance is covered by its whole family")
}
