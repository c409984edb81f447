//! The interval-family view: the represented graph as an intersection of
//! interval supergraphs, with per-vertex universal flags marking all-line
//! coordinates.

use alloc::vec;
use alloc::vec::Vec;

use crate::boxrep::{IntervalSpec, LocalBox, Representation};
use crate::error::Error;
use crate::graph::Graph;
use crate::interval::{is_interval, IntervalCheck};
use crate::Result;

/// One interval supergraph together with the vertices whose coordinate is
/// the whole line (and which are therefore universal in the member).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub graph: Graph,
    pub universal: Vec<bool>,
}

/// A family of interval graphs on a common vertex set whose intersection is
/// the represented graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalFamily {
    n: usize,
    members: Vec<FamilyMember>,
}

impl IntervalFamily {
    pub fn new(n: usize, members: Vec<FamilyMember>) -> Result<Self> {
        for (idx, member) in members.iter().enumerate() {
            if member.graph.n() != n || member.universal.len() != n {
                return Err(Error::BadFamilyMember { member: idx });
            }
        }
        Ok(IntervalFamily { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[FamilyMember] {
        &self.members
    }

    /// The intersection of all members (complete graph for an empty family).
    pub fn intersection(&self) -> Graph {
        let mut out = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.members.iter().all(|m| m.graph.has_edge(u, v)) {
                    out.add_edge(u, v).expect("in range");
                }
            }
        }
        out
    }

    /// Number of members in which `v` is not universal.
    pub fn non_universal_count(&self, v: usize) -> usize {
        self.members.iter().filter(|m| !m.universal[v]).count()
    }
}

/// Projects a representation dimension-by-dimension: member `i` is the
/// interval graph of the dimension-`i` projections, with the universal flag
/// set exactly where the projection is the whole line.
pub fn to_family(rep: &Representation) -> IntervalFamily {
    let n = rep.n();
    let mut members = Vec::with_capacity(rep.dims());
    for dim in 0..rep.dims() {
        let mut g = Graph::empty(n);
        let universal: Vec<bool> = (0..n)
            .map(|v| matches!(rep.boxed(v).get(dim), IntervalSpec::All))
            .collect();
        for u in 0..n {
            for v in (u + 1)..n {
                if rep.boxed(u).get(dim).intersects(&rep.boxed(v).get(dim)) {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        members.push(FamilyMember {
            graph: g,
            universal,
        });
    }
    IntervalFamily::new(n, members).expect("sizes consistent by construction")
}

/// Rebuilds a representation from a family: universal vertices become
/// all-line coordinates; the rest carry an interval model of the member
/// restricted to them.
///
/// Fails if some flagged-universal vertex is not universal in its member or
/// if a member restricted to its non-universal vertices is not an interval
/// graph.
pub fn from_family(family: &IntervalFamily) -> Result<Representation> {
    let n = family.n();
    let mut boxes = vec![LocalBox::all(); n];
    for (idx, member) in family.members().iter().enumerate() {
        for v in 0..n {
            if member.universal[v] && member.graph.degree(v) != n - 1 {
                return Err(Error::BadFamilyMember { member: idx });
            }
        }
        let non_universal: Vec<usize> = (0..n).filter(|&v| !member.universal[v]).collect();
        let (sub, verts) = member.graph.induced(&non_universal);
        let model = match is_interval(&sub) {
            IntervalCheck::Interval(m) => m,
            IntervalCheck::NotInterval(_) => return Err(Error::BadFamilyMember { member: idx }),
        };
        for (local, &orig) in verts.iter().enumerate() {
            let (lo, hi) = model.interval(local);
            boxes[orig].set(idx, lo, hi)?;
        }
    }
    let rep = Representation::new(n, family.members().len(), boxes)?;
    Ok(rep)
}
