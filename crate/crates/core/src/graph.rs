//! Finite simple undirected graphs on vertices `0..n-1` and their basic
//! structural subroutines: complement, girth, cycle census per component,
//! clique number, average degree.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::Error;
use crate::Result;

/// Girth of a graph: length of a shortest cycle, or `Infinite` for forests.
///
/// `Infinite` is a distinct sentinel, never a large integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    /// True if the girth is at least `k` (infinite girth qualifies).
    pub fn at_least(&self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => *g >= k,
            Girth::Infinite => true,
        }
    }
}

/// A finite simple undirected graph with vertices `0..n-1`.
///
/// Adjacency is stored as one bit row per vertex; construction rejects
/// self-loops and silently deduplicates repeated edges, so adjacency queries
/// are always symmetric and loop-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
            m: 0,
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list, validating ranges and rejecting
    /// self-loops. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge_unchecked(i, (i + 1) % n);
        }
        g
    }

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge_unchecked(i - 1, i);
        }
        g
    }

    /// Star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let mut g = Graph::empty(k + 1);
        for leaf in 1..=k {
            g.add_edge_unchecked(0, leaf);
        }
        g
    }

    /// The Petersen graph.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge_unchecked(i, (i + 1) % 5); // outer cycle
            g.add_edge_unchecked(i, i + 5); // spokes
            g.add_edge_unchecked(5 + i, 5 + (i + 2) % 5); // inner pentagram
        }
        g
    }

    /// Adds an edge, validating both endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbor row of `v`.
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Exact average degree `2m/n` as a reduced fraction `(num, den)`.
    pub fn average_degree(&self) -> Result<(usize, usize)> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let num = 2 * self.m;
        let den = self.n;
        let g = gcd(num.max(1), den);
        Ok((num / g, den / g))
    }

    /// Average degree as a float, `2m/n`.
    pub fn average_degree_f64(&self) -> Result<f64> {
        let (num, den) = self.average_degree()?;
        Ok(num as f64 / den as f64)
    }

    /// Complement graph; an involution.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `verts` (which need not be sorted); vertex `i` of
    /// the result corresponds to `verts_sorted[i]`. Returns the subgraph and
    /// the sorted vertex map.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut vs: Vec<usize> = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut g = Graph::empty(vs.len());
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        (g, vs)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.adj[v].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Girth via BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for root in 0..self.n {
            for d in dist.iter_mut() {
                *d = usize::MAX;
            }
            queue.clear();
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                // Cycles through `root` are found as non-tree edges; the
                // shortest one through the BFS root is exact, and every
                // shortest cycle of the graph is seen from its own vertices.
                if 2 * dist[v] >= best {
                    continue;
                }
                for w in self.adj[v].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push(w);
                    } else if parent[v] != w && dist[w] >= dist[v] {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Per-component cycle census.
    ///
    /// Returns, per component, `(component_vertices, excess)` where
    /// `excess = m_C - n_C + 1` is the number of independent cycles.
    pub fn cycle_census(&self) -> Vec<(Vec<usize>, isize)> {
        self.components()
            .into_iter()
            .map(|comp| {
                let mut mc = 0usize;
                for &v in &comp {
                    mc += self.degree(v);
                }
                let mc = mc / 2;
                let excess = mc as isize - comp.len() as isize + 1;
                (comp, excess)
            })
            .collect()
    }

    /// True iff every connected component contains at most one cycle.
    pub fn multicyclic_free(&self) -> bool {
        self.cycle_census().iter().all(|(_, excess)| *excess <= 1)
    }

    /// True iff the graph is acyclic.
    pub fn is_forest(&self) -> bool {
        self.cycle_census().iter().all(|(_, excess)| *excess <= 0)
    }

    /// True iff connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Exact clique number by branch and bound.
    ///
    /// Exactness is practical for `n <= 64`; larger graphs are accepted but
    /// may take long.
    pub fn clique_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        if self.n <= 64 {
            return self.clique_number_small();
        }
        // Greedy-ordered branch and bound on bit rows of arbitrary width.
        let mut best = 0usize;
        let mut all = BitSet::new(self.n);
        for v in 0..self.n {
            all.insert(v);
        }
        self.clique_bb(&all, 0, &mut best);
        best
    }

    fn clique_bb(&self, cand: &BitSet, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        let rest: Vec<usize> = cand.iter().collect();
        if size + rest.len() <= *best {
            return;
        }
        let mut cand = cand.clone();
        for v in rest {
            if size + cand.len() <= *best {
                return;
            }
            if !cand.contains(v) {
                continue;
            }
            cand.remove(v);
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            self.clique_bb(&next, size + 1, best);
        }
    }

    fn clique_number_small(&self) -> usize {
        let rows: Vec<u64> = (0..self.n)
            .map(|v| {
                let mut w = 0u64;
                for u in self.adj[v].iter() {
                    w |= 1 << u;
                }
                w
            })
            .collect();
        let mut best = 0usize;
        let all = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        fn bb(rows: &[u64], cand: u64, size: usize, best: &mut usize) {
            if size > *best {
                *best = size;
            }
            let mut cand = cand;
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            while cand != 0 {
                if size + cand.count_ones() as usize <= *best {
                    return;
                }
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                bb(rows, cand & rows[v], size + 1, best);
            }
        }
        bb(&rows, all, 0, &mut best);
        best
    }
}

fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A partition of `0..n-1` into disjoint, exhaustive classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    n: usize,
    /// Class index per vertex.
    class_of: Vec<usize>,
    /// Sorted members per class (classes may be empty).
    classes: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Builds a partition from a class assignment with `num_classes` classes.
    pub fn from_assignment(class_of: Vec<usize>, num_classes: usize) -> Result<Self> {
        if num_classes == 0 && !class_of.is_empty() {
            return Err(Error::BadParameter(alloc::string::String::from(
                "partition needs at least one class",
            )));
        }
        let mut classes = vec![Vec::new(); num_classes.max(1)];
        for (v, &c) in class_of.iter().enumerate() {
            if c >= num_classes {
                return Err(Error::BadParameter(alloc::format!(
                    "vertex {v} assigned to class {c} >= {num_classes}"
                )));
            }
            classes[c].push(v);
        }
        Ok(VertexPartition {
            n: class_of.len(),
            class_of,
            classes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    /// Union of the classes listed in `block`, sorted.
    pub fn union_of(&self, block: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for &c in block {
            out.extend_from_slice(&self.classes[c]);
        }
        out.sort_unstable();
        out
    }
}
