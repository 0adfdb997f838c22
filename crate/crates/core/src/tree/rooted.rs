use std::collections::VecDeque;

use crate::error::{CoverError, Result};
use crate::graph::Graph;

/// A tree with parent pointers and depths relative to a fixed root.
#[derive(Clone, Debug)]
pub struct RootedTree {
    base: Graph,
    root: usize,
    parent: Vec<usize>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    /// Roots `base` at `root`. Fails unless `base` is a single tree.
    pub fn new(base: Graph, root: usize) -> Result<Self> {
        let n = base.n();
        if root >= n {
            return Err(CoverError::VertexOutOfRange { vertex: root, n });
        }
        if base.m() + 1 != n {
            return Err(CoverError::NotATree);
        }
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0; n];
        let mut children = vec![Vec::new(); n];
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        let mut seen = 1;
        while let Some(x) = queue.pop_front() {
            for &y in base.neighbors(x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    children[x].push(y);
                    seen += 1;
                    queue.push_back(y);
                }
            }
        }
        if seen != n {
            return Err(CoverError::NotATree);
        }
        Ok(RootedTree {
            base,
            root,
            parent,
            depth,
            children,
        })
    }

    /// Roots at vertex 0.
    pub fn from_graph(base: Graph) -> Result<Self> {
        RootedTree::new(base, 0)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn into_base(self) -> Graph {
        self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Parent of `v`; the root maps to itself.
    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn depths(&self) -> &[usize] {
        &self.depth
    }

    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    /// Children of `v`, ascending.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }
}
