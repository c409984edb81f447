//! The representation text format: a JSON document with the vertex count,
//! the ambient dimension, and per-vertex lists of `[dimension, lo, hi]`
//! triples (absent dimensions mean the whole line).

use locbox_core::boxrep::{LocalBox, Representation};
use serde::{Deserialize, Serialize};

use super::FormatError;

#[derive(Serialize, Deserialize)]
struct RepDoc {
    n: usize,
    dims: usize,
    boxes: Vec<Vec<[i64; 3]>>,
}

/// Serializes a representation (stable field and triple order).
pub fn to_json(rep: &Representation) -> String {
    let doc = RepDoc {
        n: rep.n(),
        dims: rep.dims(),
        boxes: (0..rep.n())
            .map(|v| {
                rep.boxed(v)
                    .triples()
                    .map(|(d, lo, hi)| [d as i64, lo, hi])
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

/// Parses the JSON representation format.
pub fn from_json(text: &str) -> Result<Representation, FormatError> {
    let doc: RepDoc = serde_json::from_str(text)
        .map_err(|e| FormatError::new("representation", e.line(), e.column(), e.to_string()))?;
    if doc.boxes.len() != doc.n {
        return Err(FormatError::new(
            "representation",
            0,
            0,
            format!("{} boxes for n = {}", doc.boxes.len(), doc.n),
        ));
    }
    let mut boxes = Vec::with_capacity(doc.n);
    for (v, triples) in doc.boxes.iter().enumerate() {
        let mut b = LocalBox::all();
        for &[d, lo, hi] in triples {
            if d < 0 {
                return Err(FormatError::new(
                    "representation",
                    0,
                    0,
                    format!("vertex {v}: negative dimension"),
                ));
            }
            b.set(d as usize, lo, hi).map_err(|e| {
                FormatError::new("representation", 0, 0, format!("vertex {v}: {e}"))
            })?;
        }
        boxes.push(b);
    }
    Representation::new(doc.n, doc.dims, boxes)
        .map_err(|e| FormatError::new("representation", 0, 0, e.to_string()))
}
