use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::SetCoverInstance;
use crate::error::{CoverError, Result};
use crate::graph::{CompletionSet, CoverSpec, Edge, Graph};

/// What a vertex of a reduction graph stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// `S_j` in the k=3 construction.
    SetVertex(usize),
    /// A vertex of the item subgraph `I_i` (k=3).
    ItemVertex(usize),
    /// Triangle apex or clique filler added to cover an edge.
    Auxiliary,
    /// The common vertex `P`.
    Common,
    /// A vertex of the set subgraph of set `j` (k>=4).
    SetSubgraph(usize),
    /// `x_i` or `x'_i` (k>=4).
    ItemEndpoint(usize),
}

#[derive(Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum RoleTag {
    SetVertex,
    ItemVertex,
    Auxiliary,
    Common,
    SetSubgraph,
    ItemEndpoint,
}

#[derive(Serialize, Deserialize)]
struct RoleEntry {
    role: RoleTag,
    index: Option<usize>,
}

impl From<Role> for RoleEntry {
    fn from(r: Role) -> Self {
        let (role, index) = match r {
            Role::SetVertex(j) => (RoleTag::SetVertex, Some(j)),
            Role::ItemVertex(i) => (RoleTag::ItemVertex, Some(i)),
            Role::Auxiliary => (RoleTag::Auxiliary, None),
            Role::Common => (RoleTag::Common, None),
            Role::SetSubgraph(j) => (RoleTag::SetSubgraph, Some(j)),
            Role::ItemEndpoint(i) => (RoleTag::ItemEndpoint, Some(i)),
        };
        RoleEntry { role, index }
    }
}

impl TryFrom<RoleEntry> for Role {
    type Error = CoverError;

    fn try_from(e: RoleEntry) -> Result<Role> {
        let need = |idx: Option<usize>| {
            idx.ok_or_else(|| CoverError::invalid("indexed role is missing its index"))
        };
        Ok(match e.role {
            RoleTag::SetVertex => Role::SetVertex(need(e.index)?),
            RoleTag::ItemVertex => Role::ItemVertex(need(e.index)?),
            RoleTag::Auxiliary => Role::Auxiliary,
            RoleTag::Common => Role::Common,
            RoleTag::SetSubgraph => Role::SetSubgraph(need(e.index)?),
            RoleTag::ItemEndpoint => Role::ItemEndpoint(need(e.index)?),
        })
    }
}

/// Role sidecar: one JSON object keyed by vertex id, in id order.
pub fn roles_to_json(roles: &[Role]) -> String {
    let mut out = String::from("{\n");
    for (v, &r) in roles.iter().enumerate() {
        let entry = serde_json::to_string(&RoleEntry::from(r)).expect("plain data serializes");
        let sep = if v + 1 == roles.len() { "" } else { "," };
        out.push_str(&format!("  \"{v}\": {entry}{sep}\n"));
    }
    out.push_str("}\n");
    out
}

pub fn roles_from_json(text: &str, n: usize) -> Result<Vec<Role>> {
    let raw: BTreeMap<String, RoleEntry> = serde_json::from_str(text)
        .map_err(|e| CoverError::invalid(format!("role sidecar JSON: {e}")))?;
    let mut roles = vec![None; n];
    for (key, entry) in raw {
        let v: usize = key.parse().map_err(|_| {
            CoverError::invalid(format!("role sidecar key {key:?} is not a vertex id"))
        })?;
        if v >= n {
            return Err(CoverError::VertexOutOfRange { vertex: v, n });
        }
        roles[v] = Some(Role::try_from(entry)?);
    }
    roles
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| CoverError::invalid(format!("vertex {v} has no role"))))
        .collect()
}

/// A SET-COVER reduction graph together with the meaning of its vertices.
#[derive(Clone, Debug)]
pub struct LabeledReductionGraph {
    graph: Graph,
    k: usize,
    roles: Vec<Role>,
    instance: SetCoverInstance,
    items: Vec<Vec<usize>>,
    sets: Vec<Vec<usize>>,
    common: usize,
    anchors: Vec<Edge>,
    anchor_index: HashMap<Edge, usize>,
}

impl LabeledReductionGraph {
    /// Rebuilds the labelled view from a graph and its role sidecar; the
    /// SET-COVER instance is read back off the membership edges.
    pub fn from_parts(graph: Graph, roles: Vec<Role>, k: usize) -> Result<Self> {
        if k < 3 {
            return Err(CoverError::invalid(format!(
                "clique order k={k} must be at least 3"
            )));
        }
        if roles.len() != graph.n() {
            return Err(CoverError::invalid(format!(
                "{} roles for {} vertices",
                roles.len(),
                graph.n()
            )));
        }
        let mut items: Vec<Vec<usize>> = Vec::new();
        let mut sets: Vec<Vec<usize>> = Vec::new();
        let mut common = None;
        let push = |groups: &mut Vec<Vec<usize>>, idx: usize, v: usize| {
            if groups.len() <= idx {
                groups.resize(idx + 1, Vec::new());
            }
            groups[idx].push(v);
        };
        for (v, &r) in roles.iter().enumerate() {
            match (r, k == 3) {
                (Role::SetVertex(j), true) | (Role::SetSubgraph(j), false) => push(&mut sets, j, v),
                (Role::ItemVertex(i), true) | (Role::ItemEndpoint(i), false) => {
                    push(&mut items, i, v)
                }
                (Role::Auxiliary, _) => {}
                (Role::Common, _) if common.is_none() => common = Some(v),
                (Role::Common, _) => {
                    return Err(CoverError::invalid("more than one common vertex"));
                }
                (other, _) => {
                    return Err(CoverError::invalid(format!(
                        "role {other:?} of vertex {v} does not belong to a k={k} reduction"
                    )));
                }
            }
        }
        let common = common.ok_or_else(|| CoverError::invalid("no common vertex"))?;
        let (item_size, set_size) = if k == 3 {
            (2 * items.len(), 1)
        } else {
            (2, k - 2)
        };
        if let Some(i) = items.iter().position(|g| g.len() != item_size) {
            return Err(CoverError::invalid(format!(
                "item {i} should have {item_size} vertices"
            )));
        }
        if let Some(j) = sets.iter().position(|g| g.len() != set_size) {
            return Err(CoverError::invalid(format!(
                "set {j} should have {set_size} vertices"
            )));
        }
        let family = sets
            .iter()
            .map(|s| {
                (0..items.len())
                    .filter(|&i| graph.has_edge(s[0], items[i][0]))
                    .collect::<Vec<_>>()
            })
            .collect();
        let instance = SetCoverInstance::new(items.len(), family, None)?;
        let rg = LabeledReductionGraph::assemble(graph, k, roles, instance, items, sets, common);
        if let Some(&e) = rg.anchors.iter().find(|&&e| rg.graph.contains_edge(e)) {
            return Err(CoverError::AlreadyAnEdge(e));
        }
        Ok(rg)
    }

    pub(crate) fn assemble(
        graph: Graph,
        k: usize,
        roles: Vec<Role>,
        instance: SetCoverInstance,
        items: Vec<Vec<usize>>,
        sets: Vec<Vec<usize>>,
        common: usize,
    ) -> Self {
        let anchors: Vec<Edge> = sets
            .iter()
            .map(|s| {
                if k == 3 {
                    Edge::new(s[0], common)
                } else {
                    Edge::new(s[0], s[1])
                }
            })
            .collect();
        let anchor_index = anchors.iter().enumerate().map(|(j, &e)| (e, j)).collect();
        LabeledReductionGraph {
            graph,
            k,
            roles,
            instance,
            items,
            sets,
            common,
            anchors,
            anchor_index,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `(k, 1)`.
    pub fn spec(&self) -> CoverSpec {
        CoverSpec::k_cover(self.k).expect("k checked at construction")
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn instance(&self) -> &SetCoverInstance {
        &self.instance
    }

    /// `I_i` for k=3, `[x_i, x'_i]` for k>=4.
    pub fn item_vertices(&self, item: usize) -> &[usize] {
        &self.items[item]
    }

    /// `[S_j]` for k=3, the set subgraph (`S_j`, `S'_j` first) for k>=4.
    pub fn set_vertices(&self, set: usize) -> &[usize] {
        &self.sets[set]
    }

    pub fn common(&self) -> usize {
        self.common
    }

    /// `(S_j, P)` for k=3, `(S_j, S'_j)` for k>=4.
    pub fn anchor(&self, set: usize) -> Edge {
        self.anchors[set]
    }

    pub fn anchors(&self) -> &[Edge] {
        &self.anchors
    }

    /// The set whose anchor is `e`, if any.
    pub fn anchor_set(&self, e: Edge) -> Option<usize> {
        self.anchor_index.get(&e).copied()
    }

    /// A completion set is good when it consists of anchor edges only.
    pub fn is_good(&self, c: &CompletionSet) -> bool {
        c.iter().all(|e| self.anchor_index.contains_key(&e))
    }

    pub fn roles_json(&self) -> String {
        roles_to_json(&self.roles)
    }
}
