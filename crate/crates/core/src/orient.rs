//! Edge orientations: Eulerian orientations of even graphs and the
//! cycle-plus-forest orientation with out-degree at most `ceil(deg/2)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

/// An assignment of a direction to every edge of a base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    n: usize,
    /// Directed edges `(tail, head)`, sorted by the underlying edge.
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    fn new(n: usize, mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable_by_key(|&(t, h)| (t.min(h), t.max(h)));
        Orientation { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Directed edges `(tail, head)`.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(t, _)| t == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, h)| h == v).count()
    }

    pub fn max_out_degree(&self) -> usize {
        let mut out = vec![0usize; self.n];
        for &(t, _) in &self.arcs {
            out[t] += 1;
        }
        out.into_iter().max().unwrap_or(0)
    }

    /// In-neighbors of `v` (tails of arcs pointing at `v`), sorted.
    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .arcs
            .iter()
            .filter(|&&(_, h)| h == v)
            .map(|&(t, _)| t)
            .collect();
        out.sort_unstable();
        out
    }
}

/// Mutable adjacency used while peeling trails and cycles.
struct Scratch {
    adj: Vec<Vec<usize>>,
    /// Lazily deleted: `used[u]` marks neighbors already consumed.
    deg: Vec<usize>,
}

impl Scratch {
    fn new(g: &Graph) -> Self {
        let adj: Vec<Vec<usize>> = (0..g.n())
            .map(|v| g.neighbors(v).iter().collect())
            .collect();
        let deg = (0..g.n()).map(|v| g.degree(v)).collect();
        Scratch { adj, deg }
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        if let Some(pos) = self.adj[u].iter().position(|&x| x == v) {
            self.adj[u].remove(pos);
        }
        if let Some(pos) = self.adj[v].iter().position(|&x| x == u) {
            self.adj[v].remove(pos);
        }
        self.deg[u] -= 1;
        self.deg[v] -= 1;
    }
}

/// Orients every edge so that each vertex has out-degree exactly half its
/// degree. Requires every degree to be even; the offending vertex is named
/// otherwise.
pub fn eulerian_orientation(g: &Graph) -> Result<Orientation> {
    for v in 0..g.n() {
        if !g.degree(v).is_multiple_of(2) {
            return Err(Error::OddDegree { vertex: v });
        }
    }
    let mut s = Scratch::new(g);
    let mut arcs = Vec::with_capacity(g.m());
    // Peel closed trails; every even graph decomposes into them. Starting
    // at the lowest vertex with remaining degree keeps the result
    // deterministic.
    for start in 0..g.n() {
        while s.deg[start] > 0 {
            let mut v = start;
            loop {
                let w = s.adj[v][0];
                s.remove_edge(v, w);
                arcs.push((v, w));
                v = w;
                if v == start {
                    break;
                }
            }
        }
    }
    Ok(Orientation::new(g.n(), arcs))
}

/// Orients every edge so that each vertex has out-degree at most
/// `ceil(deg(v)/2)`; in particular at most `(k+1)/2` for `k`-regular graphs
/// with `k` odd.
///
/// Greedily peels edge-disjoint cycles (oriented cyclically) until the rest
/// is a forest, whose edges are oriented toward per-tree roots. Cycles are
/// found by lowest-vertex-first DFS and forest components are rooted at
/// their lowest vertex, so the output is deterministic.
pub fn halfplus_orientation(g: &Graph) -> Orientation {
    let mut s = Scratch::new(g);
    let mut arcs = Vec::with_capacity(g.m());

    // Peel cycles while any remain.
    while let Some(cycle) = find_cycle(&s, g.n()) {
        for i in 0..cycle.len() {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            s.remove_edge(u, v);
            arcs.push((u, v));
        }
    }

    // The remainder is a forest: orient each edge toward the root.
    let mut seen = vec![false; g.n()];
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for i in 0..s.adj[v].len() {
                let w = s.adj[v][i];
                if !seen[w] {
                    seen[w] = true;
                    arcs.push((w, v)); // child points toward the root
                    stack.push(w);
                }
            }
        }
    }
    Orientation::new(g.n(), arcs)
}

/// Finds a cycle in the scratch graph as a vertex sequence, or `None`.
fn find_cycle(s: &Scratch, n: usize) -> Option<Vec<usize>> {
    let mut state = vec![0u8; n]; // 0 unseen, 1 on stack, 2 done
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if state[start] != 0 || s.deg[start] == 0 {
            continue;
        }
        // Iterative DFS keeping the current path implicit in `parent`.
        let mut stack = vec![(start, usize::MAX)];
        while let Some(&(v, from)) = stack.last() {
            if state[v] == 0 {
                state[v] = 1;
                parent[v] = from;
            }
            let mut advanced = false;
            for &w in &s.adj[v] {
                if w == from {
                    continue;
                }
                if state[w] == 1 {
                    // Found a cycle: walk back from v to w.
                    let mut cycle = vec![v];
                    let mut x = v;
                    while x != w {
                        x = parent[x];
                        cycle.push(x);
                    }
                    cycle.reverse();
                    return Some(cycle);
                }
                if state[w] == 0 {
                    stack.push((w, v));
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_orientation_covers(g: &Graph, o: &Orientation) {
        assert_eq!(o.arcs().len(), g.m());
        for &(t, h) in o.arcs() {
            assert!(g.has_edge(t, h));
        }
        let mut seen: Vec<(usize, usize)> = o
            .arcs()
            .iter()
            .map(|&(t, h)| (t.min(h), t.max(h)))
            .collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), g.m(), "every edge oriented exactly once");
    }

    #[test]
    fn eulerian_on_cycles_and_cliques() {
        let c4 = Graph::cycle(4);
        let o = eulerian_orientation(&c4).unwrap();
        check_orientation_covers(&c4, &o);
        for v in 0..4 {
            assert_eq!(o.out_degree(v), 1);
        }
        let k5 = Graph::complete(5);
        let o = eulerian_orientation(&k5).unwrap();
        check_orientation_covers(&k5, &o);
        for v in 0..5 {
            assert_eq!(o.out_degree(v), 2);
            assert_eq!(o.in_degree(v), 2);
        }
    }

    #[test]
    fn eulerian_rejects_odd_degree() {
        let p3 = Graph::path(3);
        assert_eq!(
            eulerian_orientation(&p3),
            Err(Error::OddDegree { vertex: 0 })
        );
    }

    #[test]
    fn halfplus_bounds() {
        let petersen = Graph::petersen();
        let o = halfplus_orientation(&petersen);
        check_orientation_covers(&petersen, &o);
        assert!(
            o.max_out_degree() <= 2,
            "3-regular: out-degree at most (3+1)/2"
        );

        let c5 = Graph::cycle(5);
        let o = halfplus_orientation(&c5);
        check_orientation_covers(&c5, &o);
        assert_eq!(o.max_out_degree(), 1);

        let tree = Graph::star(6);
        let o = halfplus_orientation(&tree);
        check_orientation_covers(&tree, &o);
        assert_eq!(o.max_out_degree(), 1);
    }

    #[test]
    fn halfplus_per_vertex_bound_random() {
        let mut rng = crate::rng::Rng::new(11);
        for _ in 0..100 {
            let n = 2 + rng.next_below(10) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.next_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let o = halfplus_orientation(&g);
            check_orientation_covers(&g, &o);
            for v in 0..n {
                assert!(o.out_degree(v) <= g.degree(v).div_ceil(2), "vertex {v}");
            }
        }
    }

    #[test]
    fn outdegree_sum_is_edge_count() {
        let g = Graph::petersen();
        let o = halfplus_orientation(&g);
        let total: usize = (0..g.n()).map(|v| o.out_degree(v)).sum();
        assert_eq!(total, g.m());
    }

    #[test]
    fn eulerian_equals_its_impossibility_on_c4_plus_pendant() {
        let mut g = Graph::cycle(4);
        let mut edges = g.edges();
        edges.push((0, 4));
        g = Graph::from_edges(5, &edges).unwrap();
        assert!(eulerian_orientation(&g).is_err());
        let o = halfplus_orientation(&g);
        check_orientation_covers(&g, &o);
    }
}
