//! Shared oracles for the integration suites: an isomorphism-free census of
//! small graphs, a prime sieve, and seeded random graphs.
#![allow(dead_code)] // each integration test binary uses a different subset

use locbox_core::rng::Rng;
use locbox_core::Graph;
use std::collections::BTreeSet;

/// Colexicographic pair index: `(i, j)` with `i < j` maps to
/// `j*(j-1)/2 + i`.
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Canonical form of a labelled graph: the lexicographically least
/// adjacency word over all relabelings, with early pairs in the most
/// significant bits so prefixes prune the permutation search.
pub fn canonical_form(n: usize, adj: &[u32]) -> u32 {
    let bits = n * (n - 1) / 2;
    let mut best = u32::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        bits: usize,
        adj: &[u32],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        cur: u32,
        best: &mut u32,
    ) {
        let t = perm.len();
        if t == n {
            if cur < *best {
                *best = cur;
            }
            return;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let mut mask = cur;
            for (i, &p) in perm.iter().enumerate() {
                if adj[cand] & (1 << p) != 0 {
                    mask |= 1 << (bits - 1 - pair_index_inner(i, t));
                }
            }
            let done = (t + 1) * t / 2;
            let shift = bits - done;
            if bits > 0 && done > 0 && (mask >> shift) > (*best >> shift) {
                continue;
            }
            used[cand] = true;
            perm.push(cand);
            rec(n, bits, adj, perm, used, mask, best);
            perm.pop();
            used[cand] = false;
        }
    }
    fn pair_index_inner(i: usize, j: usize) -> usize {
        j * (j - 1) / 2 + i
    }
    if n <= 1 {
        return 0;
    }
    rec(n, bits, adj, &mut perm, &mut used, 0, &mut best);
    best
}

/// Rebuilds the graph of a canonical word.
pub fn mask_to_graph(n: usize, canon: u32) -> Graph {
    let bits = n * (n - 1) / 2;
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if canon & (1 << (bits - 1 - pair_index(i, j))) != 0 {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

fn adj_rows(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| {
            let mut m = 0u32;
            for w in g.neighbors(v).iter() {
                m |= 1 << w;
            }
            m
        })
        .collect()
}

/// All graphs on exactly `n` vertices up to isomorphism, grown by vertex
/// augmentation from the census one size down.
fn all_graphs_exactly(n: usize, prev: &BTreeSet<u32>) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    if n == 1 {
        out.insert(0);
        return out;
    }
    for &mask in prev {
        let base = mask_to_graph(n - 1, mask);
        for nb in 0u32..(1 << (n - 1)) {
            let mut g = Graph::empty(n);
            for (u, v) in base.edges() {
                g.add_edge(u, v).unwrap();
            }
            for w in 0..(n - 1) {
                if nb & (1 << w) != 0 {
                    g.add_edge(w, n - 1).unwrap();
                }
            }
            out.insert(canonical_form(n, &adj_rows(&g)));
        }
    }
    out
}

/// All graphs on `1..=nmax` vertices up to isomorphism, with the census
/// sizes cross-checked against the known counts.
pub fn full_census(nmax: usize) -> Vec<Graph> {
    assert!(nmax <= 7, "the 32-bit adjacency word covers n <= 8");
    const ALL: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];
    let mut out = Vec::new();
    let mut level: BTreeSet<u32> = BTreeSet::new();
    for n in 1..=nmax {
        level = all_graphs_exactly(n, &level);
        assert_eq!(level.len(), ALL[n - 1], "graph census size at n = {n}");
        out.extend(level.iter().map(|&m| mask_to_graph(n, m)));
    }
    out
}

/// The connected graphs on `1..=nmax` vertices up to isomorphism, with the
/// census sizes cross-checked against the known counts.
pub fn connected_census(nmax: usize) -> Vec<Graph> {
    const CONNECTED: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];
    let mut counts = vec![0usize; nmax];
    let out: Vec<Graph> = full_census(nmax)
        .into_iter()
        .filter(|g| g.is_connected())
        .inspect(|g| counts[g.n() - 1] += 1)
        .collect();
    for n in 1..=nmax {
        assert_eq!(
            counts[n - 1],
            CONNECTED[n - 1],
            "connected census size at n = {n}"
        );
    }
    out
}

/// Primes up to `limit` by sieve of Eratosthenes.
pub fn sieve(limit: usize) -> Vec<bool> {
    let mut is_prime = vec![true; limit + 1];
    is_prime[0] = false;
    if limit >= 1 {
        is_prime[1] = false;
    }
    let mut p = 2;
    while p * p <= limit {
        if is_prime[p] {
            let mut q = p * p;
            while q <= limit {
                is_prime[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    is_prime
}

/// Seeded Erdos-Renyi-style graph for tests.
pub fn random_graph(n: usize, p: f64, rng: &mut Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
