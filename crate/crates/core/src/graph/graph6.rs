//! graph6 text encoding (short form, up to 62 vertices).
//!
//! One byte `n + 63`, then the upper triangle `(0,1), (0,2), (1,2), (0,3), ...`
//! packed six bits per byte, most significant first, each byte offset by 63.

use std::fs;
use std::path::Path;

use thiserror::Error;

use super::Graph;

pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed length byte {0:#04x}")]
    BadLength(u8),
    #[error("non-printable graph6 byte {byte:#04x} at offset {offset}")]
    NonPrintable { byte: u8, offset: usize },
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits after the last edge are not zero")]
    TrailingBits,
    #[error("graph has {0} vertices; short-form graph6 supports 1..=62")]
    Unsupported(usize),
    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<Graph6Error> },
    #[error("{0}")]
    Io(String),
}

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(HEADER.as_bytes()).unwrap_or(bytes);
    let (&len, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    // 126 ('~') introduces the long form
    if !(63..126).contains(&len) {
        return Err(Graph6Error::BadLength(len));
    }
    let n = (len - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::Unsupported(0));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if let Some((offset, &byte)) = data
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::NonPrintable {
            byte,
            offset: offset + 1,
        });
    }
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: data.len(),
        });
    }
    let bit = |idx: usize| (data[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::TrailingBits);
    }
    let mut g = Graph::empty(n).expect("n >= 1");
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                g.insert_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(g)
}

pub fn serialize_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::Unsupported(n));
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Read one graph per non-empty line.
pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>, Graph6Error> {
    let text = fs::read_to_string(path.as_ref())
        .map_err(|e| Graph6Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| Graph6Error::Line {
                line: i + 1,
                source: Box::new(e),
            })
        })
        .collect()
}
