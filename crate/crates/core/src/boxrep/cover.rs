//! The co-interval edge-cover view of a representation: a family of
//! co-interval subgraphs of the complement whose edges cover every
//! complement edge, with per-vertex membership counts matching per-vertex
//! locality.

use alloc::vec;
use alloc::vec::Vec;

use crate::boxrep::{IntervalSpec, LocalBox, Representation};
use crate::error::Error;
use crate::graph::Graph;
use crate::interval::{is_interval, IntervalCheck};
use crate::Result;

/// One co-interval subgraph, given by its edges; the support is always the
/// set of non-isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverPart {
    support: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl CoverPart {
    /// Builds a part from its edges; the support is derived.
    pub fn new(edges: &[(usize, usize)]) -> Self {
        let mut edges: Vec<(usize, usize)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut support: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        support.sort_unstable();
        support.dedup();
        CoverPart { support, edges }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The part as a graph on `n` vertices.
    pub fn graph(&self, n: usize) -> Graph {
        Graph::from_edges(n, &self.edges).expect("edges validated upstream")
    }
}

/// A family of co-interval subgraphs covering the edges of `base`
/// (conceptually the complement of the represented graph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoIntervalCover {
    base: Graph,
    parts: Vec<CoverPart>,
}

impl CoIntervalCover {
    /// Builds and validates a cover: every part edge lies in `base`, every
    /// part is co-interval, and the parts jointly cover `E(base)`.
    pub fn new(base: Graph, parts: Vec<CoverPart>) -> Result<Self> {
        let cover = CoIntervalCover { base, parts };
        cover.validate()?;
        Ok(cover)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn parts(&self) -> &[CoverPart] {
        &self.parts
    }

    /// Number of parts whose support contains `v`.
    pub fn load(&self, v: usize) -> usize {
        self.parts
            .iter()
            .filter(|p| p.support.binary_search(&v).is_ok())
            .count()
    }

    pub fn max_load(&self) -> usize {
        (0..self.base.n()).map(|v| self.load(v)).max().unwrap_or(0)
    }

    fn validate(&self) -> Result<()> {
        let n = self.base.n();
        let mut covered = Graph::empty(n);
        for (idx, part) in self.parts.iter().enumerate() {
            for &(u, v) in &part.edges {
                if u >= n || v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: u.max(v),
                        n,
                    });
                }
                if !self.base.has_edge(u, v) {
                    return Err(Error::PartEdgeNotInBase { part: idx, u, v });
                }
                covered.add_edge(u, v)?;
            }
            let part_graph = part.graph(n);
            if !crate::interval::is_cointerval(&part_graph) {
                return Err(Error::PartNotCoInterval { part: idx });
            }
        }
        for (u, v) in self.base.edges() {
            if !covered.has_edge(u, v) {
                return Err(Error::CoverIncomplete { u, v });
            }
        }
        Ok(())
    }
}

/// Converts a representation of `on` into a co-interval cover of `on`'s
/// complement: dimension `i` contributes the part whose edges are the pairs
/// separated in dimension `i`.
///
/// Bounded intervals that separate nothing are relaxed to the whole line
/// first (this never changes the realized graph), so that afterwards the
/// per-vertex load of the cover equals the per-vertex locality of the
/// relaxed, pruned representation.
pub fn to_cover(rep: &Representation, on: &Graph) -> Result<CoIntervalCover> {
    let realized = rep.realize();
    if &realized != on {
        let report = rep.verify(on, rep.max_locality().max(on.n()))?;
        if let Some(crate::boxrep::Violation::WrongPair {
            u,
            v,
            expected_edge,
        }) = report.first_violation
        {
            return Err(Error::DoesNotRealize {
                u,
                v,
                expected_edge,
            });
        }
        return Err(Error::VertexCountMismatch {
            expected: on.n(),
            got: rep.n(),
        });
    }
    let relaxed = relax(rep).prune_dims();
    let n = relaxed.n();
    let mut parts = Vec::new();
    for dim in 0..relaxed.dims() {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if let (IntervalSpec::Bounded(a, b), IntervalSpec::Bounded(c, d)) =
                    (relaxed.boxed(u).get(dim), relaxed.boxed(v).get(dim))
                {
                    if a > d || c > b {
                        edges.push((u, v));
                    }
                }
            }
        }
        if !edges.is_empty() {
            parts.push(CoverPart::new(&edges));
        }
    }
    CoIntervalCover::new(on.complement(), parts)
}

/// Relaxes to the whole line every bounded interval that intersects every
/// other box's projection in its dimension, iterating to a fixed point.
fn relax(rep: &Representation) -> Representation {
    let n = rep.n();
    let dims = rep.dims();
    let mut boxes: Vec<LocalBox> = rep.boxes().to_vec();
    loop {
        let mut changed = false;
        for dim in 0..dims {
            for v in 0..n {
                let IntervalSpec::Bounded(lo, hi) = boxes[v].get(dim) else {
                    continue;
                };
                let separates = (0..n).any(|u| {
                    u != v
                        && match boxes[u].get(dim) {
                            IntervalSpec::Bounded(lo2, hi2) => lo > hi2 || lo2 > hi,
                            IntervalSpec::All => false,
                        }
                });
                if !separates {
                    let mut nb = LocalBox::all();
                    for (d2, l2, h2) in boxes[v].triples() {
                        if d2 != dim {
                            nb.set(d2, l2, h2).expect("valid");
                        }
                    }
                    boxes[v] = nb;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Representation::new(n, dims, boxes).expect("dims unchanged")
}

/// Converts a validated cover back into a representation: one dimension per
/// part, with the interval model of the part's complement within its support
/// and all-line boxes outside the support.
pub fn from_cover(cover: &CoIntervalCover) -> Result<Representation> {
    let n = cover.base().n();
    let mut boxes = vec![LocalBox::all(); n];
    for (idx, part) in cover.parts().iter().enumerate() {
        // Complement within the support; its interval model separates
        // exactly the part's edges.
        let verts: Vec<usize> = part.support().to_vec();
        let part_edges_local: Vec<(usize, usize)> = part
            .edges()
            .iter()
            .map(|&(u, v)| {
                let lu = verts.binary_search(&u).expect("support vertex");
                let lv = verts.binary_search(&v).expect("support vertex");
                (lu.min(lv), lu.max(lv))
            })
            .collect();
        let local_part = Graph::from_edges(verts.len(), &part_edges_local)?;
        let model = match is_interval(&local_part.complement()) {
            IntervalCheck::Interval(m) => m,
            IntervalCheck::NotInterval(_) => return Err(Error::PartNotCoInterval { part: idx }),
        };
        for (local, &orig) in verts.iter().enumerate() {
            let (lo, hi) = model.interval(local);
            boxes[orig].set(idx, lo, hi)?;
        }
    }
    let rep = Representation::new(n, cover.parts().len(), boxes)?;
    debug_assert_eq!(rep.realize(), cover.base().complement());
    Ok(rep)
}
