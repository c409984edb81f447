//! Exact maximum matching in general graphs.
//!
//! Augmenting-path search with blossom contraction (Edmonds). The contract
//! is exact maximum cardinality, not speed; the grow/contract bookkeeping
//! below is the classic O(V^3) formulation.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A set of pairwise-disjoint edges of a base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    n: usize,
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// True iff every vertex is matched.
    pub fn is_perfect(&self) -> bool {
        2 * self.pairs.len() == self.n
    }

    /// Partner of `v`, if matched.
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    /// Lowest common ancestor of the bases of `a` and `b` along the
    /// alternating tree.
    fn lca(&self, a: usize, b: usize) -> usize {
        let n = self.g.n();
        let mut on_path = vec![false; n];
        let mut v = a;
        loop {
            v = self.base[v];
            on_path[v] = true;
            if self.mate[v] == NONE {
                break;
            }
            v = self.parent[self.mate[v]];
        }
        let mut v = b;
        loop {
            v = self.base[v];
            if on_path[v] {
                return v;
            }
            v = self.parent[self.mate[v]];
        }
    }

    /// Marks blossom vertices on the path from `v` down to base `b`,
    /// rethreading parents through `child`.
    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        for i in 0..n {
            self.used[i] = false;
            self.parent[i] = NONE;
            self.base[i] = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let nbrs: Vec<usize> = self.g.neighbors(v).iter().collect();
            for to in nbrs {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // An odd cycle: contract the blossom.
                    let cur_base = self.lca(v, to);
                    for f in self.in_blossom.iter_mut() {
                        *f = false;
                    }
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[self.mate[to]] = true;
                    queue.push_back(self.mate[to]);
                }
            }
        }
        None
    }

    /// Flips matched/unmatched edges along the found path ending at `u`.
    fn augment(&mut self, mut u: usize) {
        while u != NONE {
            let pv = self.parent[u];
            let ppv = self.mate[pv];
            self.mate[u] = pv;
            self.mate[pv] = u;
            u = ppv;
        }
    }
}

/// Computes a maximum-cardinality matching, exactly.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut state = Blossom::new(g);
    // Greedy warm start cuts down on augmentations.
    for u in 0..n {
        if state.mate[u] != NONE {
            continue;
        }
        for v in g.neighbors(u).iter() {
            if state.mate[v] == NONE {
                state.mate[u] = v;
                state.mate[v] = u;
                break;
            }
        }
    }
    for u in 0..n {
        if state.mate[u] != NONE {
            continue;
        }
        if let Some(end) = state.find_path(u) {
            state.augment(end);
        }
    }
    let mut pairs = Vec::new();
    for v in 0..n {
        let w = state.mate[v];
        if w != NONE && v < w {
            pairs.push((v, w));
        }
    }
    pairs.sort_unstable();
    Matching { n, pairs }
}
