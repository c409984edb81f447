//! Readers and writers for the on-disk formats.

pub mod edgelist;
pub mod graph6;
pub mod repjson;
pub mod steiner;

use std::fmt;

/// A parse failure with enough position information to find it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatError {
    pub format: &'static str,
    pub line: usize,
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} parse error at line {}, offset {}: {}",
            self.format, self.line, self.offset, self.message
        )
    }
}

impl std::error::Error for FormatError {}

impl FormatError {
    pub fn new(
        format: &'static str,
        line: usize,
        offset: usize,
        message: impl Into<String>,
    ) -> Self {
        FormatError {
            format,
            line,
            offset,
            message: message.into(),
        }
    }
}
