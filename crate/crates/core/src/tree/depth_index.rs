use std::collections::BinaryHeap;

/// Nodes bucketed by their (fixed) depth, each bucket a max-heap on a
/// caller-supplied key.
///
/// Updates push a fresh entry instead of adjusting in place; an entry is
/// stale once the node is removed or its key has moved on, and stale entries
/// are dropped when they reach the top of their heap.
#[derive(Clone, Debug)]
pub struct DepthIndex<K: Ord + Copy> {
    depth: Vec<usize>,
    buckets: Vec<BinaryHeap<(K, usize)>>,
    current: Vec<Option<K>>,
    deleted: Vec<bool>,
    top: usize,
}

impl<K: Ord + Copy> DepthIndex<K> {
    /// An empty index over nodes `0..depth.len()`.
    pub fn new(depth: Vec<usize>) -> Self {
        let levels = depth.iter().copied().max().map_or(0, |d| d + 1);
        let n = depth.len();
        DepthIndex {
            depth,
            buckets: (0..levels).map(|_| BinaryHeap::new()).collect(),
            current: vec![None; n],
            deleted: vec![false; n],
            top: levels,
        }
    }

    pub fn depth(&self, node: usize) -> usize {
        self.depth[node]
    }

    /// Sets the key of `node`; `None` takes it out of the index until a later
    /// `set`. No-op on removed nodes.
    pub fn set(&mut self, node: usize, key: Option<K>) {
        if self.deleted[node] || self.current[node] == key {
            return;
        }
        self.current[node] = key;
        if let Some(k) = key {
            let d = self.depth[node];
            self.buckets[d].push((k, node));
            if self.top == self.buckets.len() || d > self.top {
                self.top = d;
            }
        }
    }

    /// Removes `node` for good.
    pub fn remove(&mut self, node: usize) {
        self.deleted[node] = true;
        self.current[node] = None;
    }

    pub fn is_removed(&self, node: usize) -> bool {
        self.deleted[node]
    }

    pub fn key(&self, node: usize) -> Option<K> {
        self.current[node]
    }

    /// The maximum-key node in the deepest non-empty bucket.
    pub fn peek_deepest(&mut self) -> Option<(usize, K)> {
        let levels = self.buckets.len();
        if self.top == levels {
            return None;
        }
        loop {
            let heap = &mut self.buckets[self.top];
            match heap.peek() {
                Some(&(k, node)) if self.current[node] == Some(k) => return Some((node, k)),
                Some(_) => {
                    heap.pop();
                }
                None => {
                    if self.top == 0 {
                        self.top = levels;
                        return None;
                    }
                    self.top -= 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deepest_bucket_wins() {
        let mut idx: DepthIndex<usize> = DepthIndex::new(vec![0, 1, 1, 2]);
        idx.set(0, Some(9));
        idx.set(1, Some(1));
        idx.set(2, Some(3));
        assert_eq!(idx.peek_deepest(), Some((2, 3)));
        idx.set(3, Some(1));
        assert_eq!(idx.peek_deepest(), Some((3, 1)));
        idx.remove(3);
        assert_eq!(idx.peek_deepest(), Some((2, 3)));
    }

    #[test]
    fn stale_keys_are_skipped() {
        let mut idx: DepthIndex<usize> = DepthIndex::new(vec![1, 1]);
        idx.set(0, Some(5));
        idx.set(1, Some(4));
        idx.set(0, Some(2));
        assert_eq!(idx.peek_deepest(), Some((1, 4)));
        idx.set(1, None);
        assert_eq!(idx.peek_deepest(), Some((0, 2)));
        idx.set(0, None);
        assert_eq!(idx.peek_deepest(), None);
        idx.set(1, Some(7));
        assert_eq!(idx.peek_deepest(), Some((1, 7)));
    }

    #[test]
    fn removed_nodes_stay_out() {
        let mut idx: DepthIndex<u8> = DepthIndex::new(vec![0]);
        idx.set(0, Some(1));
        idx.remove(0);
        idx.set(0, Some(2));
        assert!(idx.is_removed(0));
        assert_eq!(idx.peek_deepest(), None);
        assert_eq!(idx.depth(0), 0);
    }
}
