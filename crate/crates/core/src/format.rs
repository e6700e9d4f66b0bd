//! Text codecs: graph6 and a plain edge-list format.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

/// graph6 codec for graphs of order at most 62 (single-byte header form).
///
/// Layout: one byte `n + 63`, then the upper triangle of the adjacency
/// matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed
/// big-endian into 6-bit groups, each emitted as `group + 63`. Encoding and
/// decoding round-trip byte for byte; padding bits must be zero.
pub mod graph6 {
    use super::*;

    /// Largest order the single-byte graph6 header can express.
    pub const MAX_GRAPH6_ORDER: usize = 62;

    #[derive(Debug, Clone, PartialEq, Eq, Error)]
    pub enum Graph6Error {
        #[error("empty graph6 string")]
        Empty,
        #[error("order {n} not supported: graph6 output is limited to n <= 62")]
        UnsupportedOrder { n: usize },
        #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
        InvalidByte { byte: u8, offset: usize },
        #[error("truncated graph6 string: need {expected} payload bytes, found {found}")]
        Truncated { expected: usize, found: usize },
        #[error("unexpected trailing byte at offset {offset}")]
        TrailingData { offset: usize },
        #[error("nonzero padding bits in final byte at offset {offset}")]
        NonZeroPadding { offset: usize },
    }

    pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
        let n = g.order();
        if n > MAX_GRAPH6_ORDER {
            return Err(Graph6Error::UnsupportedOrder { n });
        }
        let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2 + 5) / 6);
        out.push(n as u8 + 63);
        let mut group = 0u8;
        let mut filled = 0u8;
        for col in 1..n {
            for row in 0..col {
                group <<= 1;
                if g.has_edge(row, col) {
                    group |= 1;
                }
                filled += 1;
                if filled == 6 {
                    out.push(group + 63);
                    group = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((group << (6 - filled)) + 63);
        }
        Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
    }

    pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
        decode_bytes(s.as_bytes())
    }

    pub fn decode_bytes(bytes: &[u8]) -> Result<Graph, Graph6Error> {
        let header = *bytes.first().ok_or(Graph6Error::Empty)?;
        if !(63..=126).contains(&header) {
            return Err(Graph6Error::InvalidByte {
                byte: header,
                offset: 0,
            });
        }
        let n = (header - 63) as usize;
        // 126 introduces the multi-byte order form, which this codec does not
        // accept because every supported graph fits the short form.
        if n > MAX_GRAPH6_ORDER {
            return Err(Graph6Error::UnsupportedOrder { n });
        }
        let bit_count = n * n.saturating_sub(1) / 2;
        let expected = bit_count.div_ceil(6);
        let payload = &bytes[1..];
        if payload.len() < expected {
            return Err(Graph6Error::Truncated {
                expected,
                found: payload.len(),
            });
        }
        if payload.len() > expected {
            return Err(Graph6Error::TrailingData {
                offset: 1 + expected,
            });
        }
        let mut edges = Vec::new();
        let mut idx = 0usize;
        'outer: for (i, &b) in payload.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::InvalidByte {
                    byte: b,
                    offset: 1 + i,
                });
            }
            let group = b - 63;
            for bit in (0..6).rev() {
                if idx == bit_count {
                    if group & ((1 << (bit + 1)) - 1) != 0 {
                        return Err(Graph6Error::NonZeroPadding { offset: 1 + i });
                    }
                    break 'outer;
                }
                if group >> bit & 1 == 1 {
                    edges.push(pair_at(idx));
                }
                idx += 1;
            }
        }
        let mut g = Graph::edgeless(n).expect("order already bounded");
        for (u, v) in edges {
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// The `idx`-th pair in graph6 column order.
    fn pair_at(idx: usize) -> (usize, usize) {
        // Column c covers indices [c(c-1)/2, c(c+1)/2).
        let mut col = 1usize;
        while col * (col + 1) / 2 <= idx {
            col += 1;
        }
        (idx - col * (col - 1) / 2, col)
    }
}

/// Plain edge-list format: a `"n m"` header line followed by `m` lines
/// `"u v"` with 0-based endpoints.
pub mod edgelist {
    use super::*;

    #[derive(Debug, Clone, PartialEq, Eq, Error)]
    pub enum EdgeListError {
        #[error("line {line}: expected \"{expected}\", found {found:?}")]
        Malformed {
            line: usize,
            expected: &'static str,
            found: String,
        },
        #[error("line {line}: {source}")]
        BadGraph {
            line: usize,
            #[source]
            source: GraphError,
        },
        #[error("expected {expected} edge lines, found {found}")]
        WrongEdgeCount { expected: usize, found: usize },
        #[error("empty edge-list input")]
        Empty,
    }

    pub fn encode(g: &Graph) -> String {
        let edges = g.edges();
        let mut out = format!("{} {}\n", g.order(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn decode(s: &str) -> Result<Graph, EdgeListError> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines.next().ok_or(EdgeListError::Empty)?;
        let mut it = header.split_whitespace();
        let parse = |tok: Option<&str>, line: usize| -> Result<usize, EdgeListError> {
            tok.and_then(|t| t.parse().ok())
                .ok_or(EdgeListError::Malformed {
                    line: line + 1,
                    expected: "two integers",
                    found: header_snip(tok),
                })
        };
        let n = parse(it.next(), hline)?;
        let m = parse(it.next(), hline)?;
        if it.next().is_some() {
            return Err(EdgeListError::Malformed {
                line: hline + 1,
                expected: "two integers",
                found: header.trim().to_string(),
            });
        }
        let mut pairs = Vec::with_capacity(m);
        for (lineno, line) in lines.by_ref() {
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
                    (Ok(u), Ok(v)) => (u, v),
                    _ => {
                        return Err(EdgeListError::Malformed {
                            line: lineno + 1,
                            expected: "u v",
                            found: line.trim().to_string(),
                        })
                    }
                },
                _ => {
                    return Err(EdgeListError::Malformed {
                        line: lineno + 1,
                        expected: "u v",
                        found: line.trim().to_string(),
                    })
                }
            };
            pairs.push((u, v));
            if pairs.len() == m {
                break;
            }
        }
        if pairs.len() != m {
            return Err(EdgeListError::WrongEdgeCount {
                expected: m,
                found: pairs.len(),
            });
        }
        if let Some((lineno, line)) = lines.next() {
            return Err(EdgeListError::Malformed {
                line: lineno + 1,
                expected: "end of input",
                found: line.trim().to_string(),
            });
        }
        Graph::from_edges(n, &pairs).map_err(|source| EdgeListError::BadGraph {
            line: hline + 1,
            source,
        })
    }

    fn header_snip(tok: Option<&str>) -> String {
        tok.unwrap_or("<missing>").to_string()
    }
}
