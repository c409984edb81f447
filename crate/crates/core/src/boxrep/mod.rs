//! Local box representations: realization, verification, dimension
//! plumbing, normalization, and the equivalent cover/family views.
//!
//! A box assigns to each dimension either the whole line or a bounded closed
//! interval with integer endpoints; only the bounded entries are stored. The
//! locality of a box is its number of bounded entries, and a representation
//! realizes the graph whose edges are exactly the intersecting box pairs.

pub mod codec;
pub mod cover;
pub mod family;

use alloc::collections::BTreeMap;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

pub use codec::{decode, encode, payload_budget, EncodedRep};
pub use cover::{from_cover, to_cover, CoIntervalCover, CoverPart};
pub use family::{from_family, to_family, FamilyMember, IntervalFamily};

/// One coordinate of a box: the whole line, or a bounded closed interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalSpec {
    /// The whole real line.
    All,
    /// Closed interval `[lo, hi]` with `lo <= hi`.
    Bounded(i64, i64),
}

impl IntervalSpec {
    /// True if the two specs intersect (`All` intersects everything).
    pub fn intersects(&self, other: &IntervalSpec) -> bool {
        match (self, other) {
            (IntervalSpec::All, _) | (_, IntervalSpec::All) => true,
            (IntervalSpec::Bounded(a, b), IntervalSpec::Bounded(c, d)) => a <= d && c <= b,
        }
    }
}

/// A box that is bounded in finitely many named dimensions and equals the
/// whole line everywhere else.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LocalBox {
    bounded: BTreeMap<usize, (i64, i64)>,
}

impl LocalBox {
    /// The all-line box (0-local).
    pub fn all() -> Self {
        LocalBox::default()
    }

    /// Builds a box from `(dimension, lo, hi)` triples.
    pub fn from_triples(triples: &[(usize, i64, i64)]) -> Result<Self> {
        let mut bounded = BTreeMap::new();
        for &(dim, lo, hi) in triples {
            if lo > hi {
                return Err(Error::BadInterval { lo, hi });
            }
            bounded.insert(dim, (lo, hi));
        }
        Ok(LocalBox { bounded })
    }

    /// Sets dimension `dim` to `[lo, hi]`.
    pub fn set(&mut self, dim: usize, lo: i64, hi: i64) -> Result<()> {
        if lo > hi {
            return Err(Error::BadInterval { lo, hi });
        }
        self.bounded.insert(dim, (lo, hi));
        Ok(())
    }

    /// The projection on `dim`.
    pub fn get(&self, dim: usize) -> IntervalSpec {
        match self.bounded.get(&dim) {
            Some(&(lo, hi)) => IntervalSpec::Bounded(lo, hi),
            None => IntervalSpec::All,
        }
    }

    /// Number of bounded dimensions.
    pub fn locality(&self) -> usize {
        self.bounded.len()
    }

    /// Bounded entries as `(dimension, lo, hi)` in increasing dimension order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, i64, i64)> + '_ {
        self.bounded.iter().map(|(&d, &(lo, hi))| (d, lo, hi))
    }

    /// True if the boxes intersect in every dimension.
    pub fn intersects(&self, other: &LocalBox) -> bool {
        // Only dimensions bounded in both can separate the boxes.
        for (&dim, &(lo, hi)) in &self.bounded {
            if let Some(&(lo2, hi2)) = other.bounded.get(&dim) {
                if lo > hi2 || lo2 > hi {
                    return false;
                }
            }
        }
        true
    }
}

/// A family of local boxes, one per vertex, in a fixed ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    n: usize,
    dims: usize,
    boxes: Vec<LocalBox>,
}

/// Why `verify` rejected a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The realized graph and the target disagree on this pair.
    WrongPair {
        u: usize,
        v: usize,
        expected_edge: bool,
    },
    /// This vertex is bounded in more dimensions than allowed.
    OverLocal { vertex: usize, locality: usize },
}

/// Result of `verify`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub first_violation: Option<Violation>,
    pub max_locality: usize,
}

impl Representation {
    /// Builds a representation, checking that every bounded dimension index
    /// is below `dims`.
    pub fn new(n: usize, dims: usize, boxes: Vec<LocalBox>) -> Result<Self> {
        if boxes.len() != n {
            return Err(Error::VertexCountMismatch {
                expected: n,
                got: boxes.len(),
            });
        }
        for (v, b) in boxes.iter().enumerate() {
            for (dim, _, _) in b.triples() {
                if dim >= dims {
                    return Err(Error::DimOutOfRange {
                        vertex: v,
                        dim,
                        dims,
                    });
                }
            }
        }
        Ok(Representation { n, dims, boxes })
    }

    /// All-line boxes on `n` vertices: realizes the complete graph with zero
    /// locality and zero dimensions.
    pub fn complete(n: usize) -> Self {
        Representation {
            n,
            dims: 0,
            boxes: vec![LocalBox::all(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn boxes(&self) -> &[LocalBox] {
        &self.boxes
    }

    pub fn boxed(&self, v: usize) -> &LocalBox {
        &self.boxes[v]
    }

    /// Locality of the box of `v`.
    pub fn locality_of(&self, v: usize) -> usize {
        self.boxes[v].locality()
    }

    /// Per-vertex localities.
    pub fn localities(&self) -> Vec<usize> {
        self.boxes.iter().map(|b| b.locality()).collect()
    }

    /// Maximum locality over all vertices (0 for the empty representation).
    pub fn max_locality(&self) -> usize {
        self.boxes.iter().map(|b| b.locality()).max().unwrap_or(0)
    }

    /// The graph realized by the boxes: edge `{u, v}` iff the boxes of `u`
    /// and `v` intersect in every dimension.
    pub fn realize(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.boxes[u].intersects(&self.boxes[v]) {
                    g.add_edge(u, v).expect("indices in range");
                }
            }
        }
        g
    }

    /// Checks that the representation realizes `g` with every box `d`-local.
    pub fn verify(&self, g: &Graph, d: usize) -> Result<VerifyReport> {
        if self.n != g.n() {
            return Err(Error::VertexCountMismatch {
                expected: g.n(),
                got: self.n,
            });
        }
        let mut max_locality = 0;
        let mut first_violation = None;
        for v in 0..self.n {
            let loc = self.locality_of(v);
            max_locality = max_locality.max(loc);
            if loc > d && first_violation.is_none() {
                first_violation = Some(Violation::OverLocal {
                    vertex: v,
                    locality: loc,
                });
            }
        }
        if first_violation.is_none() {
            'outer: for u in 0..self.n {
                for v in (u + 1)..self.n {
                    let has = self.boxes[u].intersects(&self.boxes[v]);
                    let want = g.has_edge(u, v);
                    if has != want {
                        first_violation = Some(Violation::WrongPair {
                            u,
                            v,
                            expected_edge: want,
                        });
                        break 'outer;
                    }
                }
            }
        }
        Ok(VerifyReport {
            ok: first_violation.is_none(),
            first_violation,
            max_locality,
        })
    }

    /// Removes every dimension in which all boxes are the whole line and
    /// renumbers the rest. The realized graph is unchanged; afterwards
    /// `dims <= max_locality * n`.
    pub fn prune_dims(&self) -> Representation {
        let mut used = vec![false; self.dims];
        for b in &self.boxes {
            for (dim, _, _) in b.triples() {
                used[dim] = true;
            }
        }
        let mut remap = vec![usize::MAX; self.dims];
        let mut next = 0;
        for (dim, &u) in used.iter().enumerate() {
            if u {
                remap[dim] = next;
                next += 1;
            }
        }
        let boxes = self
            .boxes
            .iter()
            .map(|b| {
                let mut nb = LocalBox::all();
                for (dim, lo, hi) in b.triples() {
                    nb.set(remap[dim], lo, hi).expect("intervals already valid");
                }
                nb
            })
            .collect();
        Representation {
            n: self.n,
            dims: next,
            boxes,
        }
    }

    /// Remaps the endpoints of every dimension order-preservingly to
    /// integers in `[1, 2n]`. The realized graph is unchanged; the result is
    /// the canonical form the codec requires.
    pub fn normalize(&self) -> Representation {
        let mut boxes: Vec<LocalBox> = vec![LocalBox::all(); self.n];
        for dim in 0..self.dims {
            // Distinct endpoint values in this dimension, in order.
            let mut values: Vec<i64> = Vec::new();
            for b in &self.boxes {
                if let IntervalSpec::Bounded(lo, hi) = b.get(dim) {
                    values.push(lo);
                    values.push(hi);
                }
            }
            values.sort_unstable();
            values.dedup();
            for (v, b) in self.boxes.iter().enumerate() {
                if let IntervalSpec::Bounded(lo, hi) = b.get(dim) {
                    let nlo = values.binary_search(&lo).expect("present") as i64 + 1;
                    let nhi = values.binary_search(&hi).expect("present") as i64 + 1;
                    boxes[v].set(dim, nlo, nhi).expect("order preserved");
                }
            }
        }
        Representation {
            n: self.n,
            dims: self.dims,
            boxes,
        }
    }

    /// Appends one dimension realizing the vertex addition: the new vertex
    /// (index `self.n`) maps to `{0}`, its neighbors to `[0, 1]`, everyone
    /// else to `{1}`, and the new vertex is unbounded elsewhere.
    ///
    /// Every old vertex gains at most one locality; the new vertex has
    /// locality exactly 1.
    pub fn add_vertex_dim(&self, nbrs: &[usize]) -> Result<Representation> {
        for &u in nbrs {
            if u >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    n: self.n,
                });
            }
        }
        let mut is_nbr = vec![false; self.n];
        for &u in nbrs {
            is_nbr[u] = true;
        }
        let dim = self.dims;
        let mut boxes = self.boxes.clone();
        for (v, b) in boxes.iter_mut().enumerate() {
            if is_nbr[v] {
                b.set(dim, 0, 1).expect("valid");
            } else {
                b.set(dim, 1, 1).expect("valid");
            }
        }
        let mut newbox = LocalBox::all();
        newbox.set(dim, 0, 0).expect("valid");
        boxes.push(newbox);
        Ok(Representation {
            n: self.n + 1,
            dims: dim + 1,
            boxes,
        })
    }

    /// Builds the trivial representation of `g` by adding vertices one at a
    /// time (one dimension per vertex). Locality of `v` is
    /// `1 + |{later neighbors of v}|`.
    pub fn by_vertex_addition(g: &Graph) -> Representation {
        let mut rep = Representation::complete(0);
        for v in 0..g.n() {
            let nbrs: Vec<usize> = g.neighbors(v).iter().filter(|&u| u < v).collect();
            rep = rep.add_vertex_dim(&nbrs).expect("indices in range");
        }
        rep
    }
}

/// Embeds a representation of the induced subgraph `g[support]` into a
/// representation on all of `g`'s vertices: vertices outside `support` get
/// all-line boxes (0-local). The result realizes the graph obtained from `g`
/// by making every pair not inside `support` adjacent.
///
/// `rep` must realize `g[support]` (checked).
pub fn pad_universal(rep: &Representation, g: &Graph, support: &[usize]) -> Result<Representation> {
    let mut sup: Vec<usize> = support.to_vec();
    sup.sort_unstable();
    sup.dedup();
    let (induced, vs) = g.induced(&sup);
    if rep.n() != vs.len() {
        return Err(Error::VertexCountMismatch {
            expected: vs.len(),
            got: rep.n(),
        });
    }
    if rep.realize() != induced {
        let (u, v) = first_difference(&rep.realize(), &induced);
        return Err(Error::DoesNotRealize {
            u,
            v,
            expected_edge: induced.has_edge(u, v),
        });
    }
    let mut boxes = vec![LocalBox::all(); g.n()];
    for (i, &orig) in vs.iter().enumerate() {
        boxes[orig] = rep.boxed(i).clone();
    }
    Representation::new(g.n(), rep.dims(), boxes)
}

/// The graph obtained from `g` by adding every edge `{u, v}` with `u` and
/// `v` not both in `s`.
pub fn bracket(g: &Graph, s: &[usize]) -> Graph {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        in_s[v] = true;
    }
    let mut out = g.clone();
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if !(in_s[u] && in_s[v]) {
                out.add_edge(u, v).expect("in range");
            }
        }
    }
    out
}

/// The graph obtained from `g` by making both sides of the bipartition
/// `(a, b)` cliques.
pub fn bracket_bipartition(g: &Graph, a: &[usize], b: &[usize]) -> Graph {
    let mut side = vec![0u8; g.n()];
    for &v in a {
        side[v] = 1;
    }
    for &v in b {
        side[v] = 2;
    }
    let mut out = g.clone();
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if side[u] == side[v] && side[u] != 0 {
                out.add_edge(u, v).expect("in range");
            }
        }
    }
    out
}

/// Concatenates the dimension sets of several representations on the same
/// vertex count. The result realizes the intersection of the realized
/// graphs, and per-vertex localities add.
pub fn intersect_reps(reps: &[Representation]) -> Result<Representation> {
    let n = match reps.first() {
        Some(r) => r.n(),
        None => {
            return Err(Error::BadParameter(String::from(
                "intersect_reps needs at least one input",
            )))
        }
    };
    for r in reps {
        if r.n() != n {
            return Err(Error::VertexCountMismatch {
                expected: n,
                got: r.n(),
            });
        }
    }
    let mut boxes = vec![LocalBox::all(); n];
    let mut offset = 0usize;
    for r in reps {
        for (v, b) in boxes.iter_mut().enumerate() {
            for (dim, lo, hi) in r.boxed(v).triples() {
                b.set(offset + dim, lo, hi)?;
            }
        }
        offset += r.dims();
    }
    Representation::new(n, offset, boxes)
}

fn first_difference(a: &Graph, b: &Graph) -> (usize, usize) {
    for u in 0..a.n() {
        for v in (u + 1)..a.n() {
            if a.has_edge(u, v) != b.has_edge(u, v) {
                return (u, v);
            }
        }
    }
    (0, 0)
}

/// Convenience: a deterministic random representation for tests and audits.
pub fn random_representation(
    n: usize,
    dims: usize,
    max_locality: usize,
    rng: &mut crate::rng::Rng,
) -> Representation {
    let mut boxes = Vec::with_capacity(n);
    for _ in 0..n {
        let mut b = LocalBox::all();
        if dims > 0 {
            let k = rng.next_below(max_locality as u64 + 1) as usize;
            for _ in 0..k {
                let dim = rng.next_below(dims as u64) as usize;
                let lo = rng.next_below(2 * n as u64 + 1) as i64 - n as i64;
                let len = rng.next_below(n as u64 + 1) as i64;
                b.set(dim, lo, lo + len).expect("lo <= hi");
            }
        }
        boxes.push(b);
    }
    Representation::new(n, dims, boxes).expect("dims validated by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    #[test]
    fn realize_extremes() {
        let all = Representation::complete(4);
        assert_eq!(all.realize(), Graph::complete(4));
        assert_eq!(all.max_locality(), 0);

        let boxes = vec![
            LocalBox::from_triples(&[(0, 0, 1)]).unwrap(),
            LocalBox::from_triples(&[(0, 2, 3)]).unwrap(),
        ];
        let rep = Representation::new(2, 1, boxes).unwrap();
        assert_eq!(rep.realize(), Graph::empty(2));
    }

    #[test]
    fn c4_one_local() {
        // C4 = K4 minus the matching {0,2},{1,3}: two dimensions, each
        // separating one matched pair.
        let boxes = vec![
            LocalBox::from_triples(&[(0, 0, 0)]).unwrap(),
            LocalBox::from_triples(&[(1, 0, 0)]).unwrap(),
            LocalBox::from_triples(&[(0, 1, 1)]).unwrap(),
            LocalBox::from_triples(&[(1, 1, 1)]).unwrap(),
        ];
        let rep = Representation::new(4, 2, boxes).unwrap();
        let c4 = Graph::cycle(4);
        let report = rep.verify(&c4, 1).unwrap();
        assert!(report.ok, "{:?}", report.first_violation);
        assert_eq!(report.max_locality, 1);
        // Same representation is not 0-local.
        let report = rep.verify(&c4, 0).unwrap();
        assert!(!report.ok);
        assert!(matches!(
            report.first_violation,
            Some(Violation::OverLocal {
                vertex: 0,
                locality: 1
            })
        ));
    }

    #[test]
    fn verify_rejects_mismatched_n() {
        let rep = Representation::complete(3);
        assert!(matches!(
            rep.verify(&Graph::complete(4), 0),
            Err(Error::VertexCountMismatch { .. })
        ));
    }

    #[test]
    fn prune_removes_only_all_line_dims() {
        let boxes = vec![
            LocalBox::from_triples(&[(2, 0, 1)]).unwrap(),
            LocalBox::from_triples(&[(2, 1, 2)]).unwrap(),
        ];
        let rep = Representation::new(2, 5, boxes).unwrap();
        let pruned = rep.prune_dims();
        assert_eq!(pruned.dims(), 1);
        assert_eq!(pruned.realize(), rep.realize());
        // Idempotent.
        assert_eq!(pruned.prune_dims(), pruned);
    }

    #[test]
    fn prune_respects_dn_bound() {
        let mut rng = Rng::new(7);
        for _ in 0..50 {
            let rep = random_representation(6, 10, 2, &mut rng);
            let pruned = rep.prune_dims();
            assert_eq!(pruned.realize(), rep.realize());
            assert!(pruned.dims() <= pruned.max_locality() * 6);
        }
    }

    #[test]
    fn normalize_preserves_realize() {
        let mut rng = Rng::new(8);
        for _ in 0..100 {
            let rep = random_representation(7, 4, 3, &mut rng);
            let norm = rep.normalize();
            assert_eq!(norm.realize(), rep.realize());
            // Endpoints in [1, 2n].
            for b in norm.boxes() {
                for (_, lo, hi) in b.triples() {
                    assert!(lo >= 1 && hi <= 2 * 7);
                    assert!(lo <= hi);
                }
            }
            // Idempotent.
            assert_eq!(norm.normalize(), norm);
        }
    }

    #[test]
    fn add_vertex_dim_builds_k2_and_star() {
        let rep = Representation::complete(1);
        let k2 = rep.add_vertex_dim(&[0]).unwrap();
        assert_eq!(k2.realize(), Graph::complete(2));

        // K_{1,3} built by adding the center last: leaves first (edgeless),
        // then the center adjacent to all three.
        let mut rep = Representation::complete(0);
        for _ in 0..3 {
            rep = rep.add_vertex_dim(&[]).unwrap();
        }
        let before: Vec<usize> = rep.localities();
        let rep = rep.add_vertex_dim(&[0, 1, 2]).unwrap();
        let mut star = Graph::empty(4);
        for leaf in 0..3 {
            star.add_edge(leaf, 3).unwrap();
        }
        assert_eq!(rep.realize(), star);
        assert_eq!(rep.locality_of(3), 1);
        for (v, &b) in before.iter().enumerate() {
            assert!(rep.locality_of(v) <= b + 1);
        }
    }

    #[test]
    fn by_vertex_addition_realizes() {
        let mut rng = Rng::new(17);
        for _ in 0..50 {
            let n = 1 + rng.next_below(8) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.next_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let rep = Representation::by_vertex_addition(&g);
            assert_eq!(rep.realize(), g);
        }
    }

    #[test]
    fn pad_universal_cases() {
        let c6 = Graph::cycle(6);
        // S = all vertices: identity realization.
        let rep = Representation::by_vertex_addition(&c6);
        let all: Vec<usize> = (0..6).collect();
        let padded = pad_universal(&rep, &c6, &all).unwrap();
        assert_eq!(padded.realize(), c6);

        // S empty: complete graph, zero locality.
        let empty = Representation::complete(0);
        let padded = pad_universal(&empty, &c6, &[]).unwrap();
        assert_eq!(padded.realize(), Graph::complete(6));
        assert_eq!(padded.max_locality(), 0);

        // S = {0,1,2}: realize equals the bracket graph built by definition.
        let s = [0usize, 1, 2];
        let (gs, _) = c6.induced(&s);
        let rep = Representation::by_vertex_addition(&gs);
        let padded = pad_universal(&rep, &c6, &s).unwrap();
        assert_eq!(padded.realize(), bracket(&c6, &s));
    }

    #[test]
    fn pad_universal_rejects_wrong_rep() {
        let c6 = Graph::cycle(6);
        let wrong = Representation::complete(3); // realizes K3, not C6[{0,1,2}]
        assert!(matches!(
            pad_universal(&wrong, &c6, &[0, 1, 2]),
            Err(Error::DoesNotRealize { .. })
        ));
    }

    #[test]
    fn intersect_reps_bracket_decomposition() {
        // G = G<A> cap G<B> cap G<A,B> for a bipartition of C6.
        let c6 = Graph::cycle(6);
        let a = [0usize, 2, 4];
        let b = [1usize, 3, 5];
        let (ga, _) = c6.induced(&a);
        let (gb, _) = c6.induced(&b);
        let ra = pad_universal(&Representation::by_vertex_addition(&ga), &c6, &a).unwrap();
        let rb = pad_universal(&Representation::by_vertex_addition(&gb), &c6, &b).unwrap();
        let gab = bracket_bipartition(&c6, &a, &b);
        let rab = Representation::by_vertex_addition(&gab);
        let combined = intersect_reps(&[ra.clone(), rb.clone(), rab.clone()]).unwrap();
        assert_eq!(combined.realize(), c6);
        assert_eq!(combined.dims(), ra.dims() + rb.dims() + rab.dims());
        // Locality additivity.
        for v in 0..6 {
            assert_eq!(
                combined.locality_of(v),
                ra.locality_of(v) + rb.locality_of(v) + rab.locality_of(v)
            );
        }
        // A single representation passes through unchanged.
        let single = intersect_reps(std::slice::from_ref(&ra)).unwrap();
        assert_eq!(single.realize(), ra.realize());
    }

    #[test]
    fn intersect_reps_rejects_mixed_n() {
        let a = Representation::complete(3);
        let b = Representation::complete(4);
        assert!(matches!(
            intersect_reps(&[a, b]),
            Err(Error::VertexCountMismatch { .. })
        ));
    }
}
