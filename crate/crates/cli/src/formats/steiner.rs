//! Steiner system text format: a header line `s t k`, then one block per
//! line as space-separated points.

use locbox_core::compose::SteinerSystem;

use super::FormatError;

pub fn to_text(sys: &SteinerSystem) -> String {
    let mut out = format!("{} {} {}\n", sys.s, sys.t, sys.k);
    for block in &sys.blocks {
        let fields: Vec<String> = block.iter().map(|p| p.to_string()).collect();
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out
}

pub fn from_text(text: &str) -> Result<SteinerSystem, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| FormatError::new("steiner", 1, 0, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(FormatError::new(
            "steiner",
            lineno + 1,
            0,
            "header must be `s t k`",
        ));
    }
    let parse = |s: &str, what: &str, lineno: usize| -> Result<usize, FormatError> {
        s.parse()
            .map_err(|_| FormatError::new("steiner", lineno + 1, 0, format!("bad {what} `{s}`")))
    };
    let s = parse(fields[0], "s", lineno)?;
    let t = parse(fields[1], "t", lineno)?;
    let k = parse(fields[2], "k", lineno)?;
    let mut blocks = Vec::new();
    for (lineno, line) in lines {
        let mut block = Vec::new();
        for field in line.split_whitespace() {
            block.push(parse(field, "point", lineno)?);
        }
        blocks.push(block);
    }
    Ok(SteinerSystem { s, t, k, blocks })
}
