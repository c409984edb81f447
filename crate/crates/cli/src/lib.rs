//! File formats and helpers for the local boxicity command-line tools.
//!
//! The algorithms live in `locbox-core`; this crate carries everything that
//! touches bytes on disk: graph6 and edge-list graph files, the JSON
//! representation format, the Steiner system text format, and CSV reports.

pub mod formats;

pub use formats::{edgelist, graph6, repjson, steiner};
