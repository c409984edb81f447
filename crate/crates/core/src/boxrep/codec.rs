//! Bit-exact codec for normalized representations.
//!
//! Layout (all fields big-endian, bits written most significant first):
//! a header of three 32-bit words `n`, `d`, `dims`, then per vertex in
//! index order: the locality `d_v` in `ceil(log2 d) + 1` bits, followed by
//! one `(dimension, lo, hi)` triple per bounded dimension in increasing
//! dimension order, with the dimension in `ceil(log2 (d*n))` bits and each
//! endpoint, biased by -1, in `ceil(log2 (2n))` bits.
//!
//! The payload length never exceeds `n*d*(3*log2 n + 7*log2 d)` bits; this
//! is asserted on every encode rather than assumed.

use alloc::format;
use alloc::vec::Vec;

use crate::boxrep::{LocalBox, Representation};
use crate::error::Error;
use crate::Result;

/// An encoded representation: framing header plus payload bit string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncodedRep {
    bytes: Vec<u8>,
    payload_bits: usize,
}

impl EncodedRep {
    /// Full frame: 12-byte header then payload bits, zero-padded to a byte.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Number of payload bits (excludes the header).
    pub fn payload_bits(&self) -> usize {
        self.payload_bits
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }
}

/// Number of bits needed to store values `0..x` (0 for `x <= 1`).
fn width_for(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

/// The payload budget `n*d*(3*log2 n + 7*log2 d)` in bits.
pub fn payload_budget(n: usize, d: usize) -> f64 {
    let n = n as f64;
    let d = d as f64;
    n * d * (3.0 * libm::log2(n) + 7.0 * libm::log2(d))
}

struct BitWriter {
    bytes: Vec<u8>,
    bits: usize,
}

impl BitWriter {
    fn new() -> Self {
        BitWriter {
            bytes: Vec::new(),
            bits: 0,
        }
    }

    fn push(&mut self, value: u64, width: usize) {
        debug_assert!(width == 64 || value < (1u64 << width));
        for i in (0..width).rev() {
            let bit = (value >> i) & 1;
            if self.bits.is_multiple_of(8) {
                self.bytes.push(0);
            }
            let byte = self.bytes.last_mut().expect("just pushed");
            *byte |= (bit as u8) << (7 - (self.bits % 8));
            self.bits += 1;
        }
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    fn read(&mut self, width: usize) -> Result<u64> {
        let mut out = 0u64;
        for _ in 0..width {
            let byte = self.pos / 8;
            if byte >= self.bytes.len() {
                return Err(Error::CodecCorrupt(format!(
                    "ran out of bits at {}",
                    self.pos
                )));
            }
            let bit = (self.bytes[byte] >> (7 - (self.pos % 8))) & 1;
            out = (out << 1) | bit as u64;
            self.pos += 1;
        }
        Ok(out)
    }
}

/// Encodes a normalized, pruned representation whose every box is `d`-local.
///
/// Preconditions (checked): `d >= 2`, endpoints already in `[1, 2n]`, no
/// all-line dimension, `dims <= d*n`, and `max_locality <= d`.
pub fn encode(rep: &Representation, d: usize) -> Result<EncodedRep> {
    let n = rep.n();
    if d < 2 {
        return Err(Error::CodecPrecondition(format!("d = {d} < 2")));
    }
    if rep.max_locality() > d {
        return Err(Error::CodecPrecondition(format!(
            "max locality {} exceeds d = {d}",
            rep.max_locality()
        )));
    }
    if rep.dims() > d * n {
        return Err(Error::CodecPrecondition(format!(
            "dims {} exceeds d*n = {}",
            rep.dims(),
            d * n
        )));
    }
    let mut dim_used = alloc::vec![false; rep.dims()];
    for v in 0..n {
        for (dim, lo, hi) in rep.boxed(v).triples() {
            dim_used[dim] = true;
            if lo < 1 || hi > 2 * n as i64 {
                return Err(Error::CodecPrecondition(format!(
                    "endpoint [{lo}, {hi}] of vertex {v} outside [1, 2n]; normalize first"
                )));
            }
        }
    }
    if let Some(dim) = dim_used.iter().position(|&u| !u) {
        return Err(Error::CodecPrecondition(format!(
            "dimension {dim} is all-line; prune first"
        )));
    }

    let dv_width = width_for(d) + 1;
    let dim_width = width_for(d * n);
    let end_width = width_for(2 * n);
    let mut w = BitWriter::new();
    for v in 0..n {
        let b = rep.boxed(v);
        w.push(b.locality() as u64, dv_width);
        for (dim, lo, hi) in b.triples() {
            w.push(dim as u64, dim_width);
            w.push((lo - 1) as u64, end_width);
            w.push((hi - 1) as u64, end_width);
        }
    }
    let payload_bits = w.bits;
    let budget = payload_budget(n.max(1), d);
    assert!(
        payload_bits as f64 <= budget,
        "payload {payload_bits} exceeds budget {budget}"
    );

    let mut bytes = Vec::with_capacity(12 + w.bytes.len());
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    bytes.extend_from_slice(&(d as u32).to_be_bytes());
    bytes.extend_from_slice(&(rep.dims() as u32).to_be_bytes());
    bytes.extend_from_slice(&w.bytes);
    Ok(EncodedRep {
        bytes,
        payload_bits,
    })
}

/// Decodes a frame produced by `encode`, cross-checking the expected `n` and
/// `d` against the header.
pub fn decode(bytes: &[u8], n: usize, d: usize) -> Result<Representation> {
    if bytes.len() < 12 {
        return Err(Error::CodecCorrupt(format!(
            "frame too short: {} bytes",
            bytes.len()
        )));
    }
    let hn = u32::from_be_bytes(bytes[0..4].try_into().expect("4 bytes")) as usize;
    let hd = u32::from_be_bytes(bytes[4..8].try_into().expect("4 bytes")) as usize;
    let dims = u32::from_be_bytes(bytes[8..12].try_into().expect("4 bytes")) as usize;
    if hn != n {
        return Err(Error::CodecCorrupt(format!(
            "header n = {hn}, expected {n}"
        )));
    }
    if hd != d {
        return Err(Error::CodecCorrupt(format!(
            "header d = {hd}, expected {d}"
        )));
    }
    if d < 2 || dims > d * n {
        return Err(Error::CodecCorrupt(format!(
            "header out of range: d = {d}, dims = {dims}"
        )));
    }
    let dv_width = width_for(d) + 1;
    let dim_width = width_for(d * n);
    let end_width = width_for(2 * n);
    let mut r = BitReader {
        bytes: &bytes[12..],
        pos: 0,
    };
    let mut boxes = Vec::with_capacity(n);
    for v in 0..n {
        let dv = r.read(dv_width)? as usize;
        if dv > d {
            return Err(Error::CodecCorrupt(format!(
                "vertex {v} claims locality {dv} > d"
            )));
        }
        let mut b = LocalBox::all();
        let mut last_dim: Option<usize> = None;
        for _ in 0..dv {
            let dim = r.read(dim_width)? as usize;
            let lo = r.read(end_width)? as i64 + 1;
            let hi = r.read(end_width)? as i64 + 1;
            if dim >= dims {
                return Err(Error::CodecCorrupt(format!(
                    "vertex {v}: dimension {dim} >= dims {dims}"
                )));
            }
            if let Some(prev) = last_dim {
                if dim <= prev {
                    return Err(Error::CodecCorrupt(format!(
                        "vertex {v}: dimensions not strictly increasing"
                    )));
                }
            }
            last_dim = Some(dim);
            if lo > hi {
                return Err(Error::CodecCorrupt(format!(
                    "vertex {v}: interval [{lo}, {hi}]"
                )));
            }
            b.set(dim, lo, hi)?;
        }
        boxes.push(b);
    }
    Representation::new(n, dims, boxes)
}
