//! Exact algorithms and constructions for local box representations of graphs.
//!
//! A box is a cartesian product of real intervals, each either bounded or
//! equal to the whole line; a box is `d`-local if at most `d` of its
//! intervals are bounded. The local boxicity of a graph is the least `d`
//! such that the graph is the intersection graph of `d`-local boxes in some
//! dimension. This crate provides the representation data model with its
//! three equivalent views (boxes, co-interval edge covers, interval-graph
//! families), a bit-exact codec, exact solvers for small graphs, interval
//! graph machinery, Steiner-system compositions, randomized partition
//! drivers, girth-5 constructions, random-graph pipelines, and the coloring
//! algorithms for graphs of local boxicity at most two.
//!
//! The crate is `no_std` (with `alloc`); all I/O and file formats live in
//! the companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bitset;
pub mod bounds;
pub mod boxrep;
pub mod coloring;
pub mod compose;
pub mod error;
pub mod girth5;
pub mod gnp;
pub mod graph;
pub mod interval;
pub mod matching;
pub mod orient;
pub mod rng;
pub mod solver;

pub use error::Error;
pub use graph::Graph;

/// Result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
