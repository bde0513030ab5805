//! graph6 encoding, as produced and consumed by nauty's `geng`/`showg`.
//!
//! Layout: a size prefix (`n + 63` for `n <= 62`, otherwise `~` plus three
//! 6-bit groups), then the upper triangle of the adjacency matrix in column
//! order `(0,1), (0,2), (1,2), (0,3), ..` packed six bits per byte, most
//! significant bit first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";
const SHORT_MAX: usize = 62;
const LONG_MAX: usize = 258_047;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else {
        debug_assert!(n <= LONG_MAX);
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b:#04x} at offset {i} outside the printable range 63..=126")));
        }
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => return Err(Error::Graph6("orders above 258047 are not supported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size field".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!("expected {need} data bytes, found {}", body.len())));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!("{} bytes of trailing data", body.len() - need)));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if nbits % 6 != 0 && (nbits..need * 6).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
