//! Input parsing: one graph6 graph per line, or a single edge-list graph.

use crate::Format;
use mprec_core::format::{edgelist, graph6};
use mprec_core::graph::Graph;
use std::fmt;
use std::fs;
use std::io::Read;

#[derive(Debug)]
pub struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}

pub fn read_source(path: &str) -> Result<String, InputError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| InputError(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))
    }
}

/// One batch item: either a parsed graph or the parse failure for that item.
pub struct BatchItem {
    pub index: usize,
    pub graph: Result<Graph, String>,
}

/// Splits the source into graphs. graph6 input carries one graph per
/// non-empty line and parse failures do not abort the batch; edge-list
/// input is a single graph.
pub fn parse_batch(source: &str, format: Format) -> Vec<BatchItem> {
    match format {
        Format::Graph6 => {
            let mut items = Vec::new();
            let mut index = 0;
            for (lineno, line) in source.lines().enumerate() {
                let trimmed = line.trim();
                if trimmed.is_empty() {
                    continue;
                }
                let graph =
                    graph6::decode(trimmed).map_err(|e| format!("line {}: {e}", lineno + 1));
                items.push(BatchItem { index, graph });
                index += 1;
            }
            items
        }
        Format::Edgelist => {
            let graph = edgelist::decode(source).map_err(|e| e.to_string());
            vec![BatchItem { index: 0, graph }]
        }
    }
}

pub fn encode_graph(g: &Graph, format: Format) -> Result<String, String> {
    match format {
        Format::Graph6 => graph6::encode(g)
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Edgelist => Ok(edgelist::encode(g)),
    }
}
