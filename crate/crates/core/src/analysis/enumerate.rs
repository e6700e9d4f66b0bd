//! Exhaustive enumeration of small labelled graphs.
//!
//! Graphs of order `n` are identified with codes `0..2^(n(n-1)/2)`: bit
//! positions follow the graph6 upper-triangle column order with the pair
//! `(0,1)` as the most significant bit, so increasing code order equals
//! lexicographic order of the graph6 encodings.

use crate::graph::Graph;
use thiserror::Error;

/// Largest order for which full labelled enumeration is allowed.
pub const LABELED_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {n} exceeds the enumeration cap {cap}: {count} labelled graphs")]
    CapExceeded { n: usize, cap: usize, count: u128 },
}

/// Pairs in graph6 column order.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for col in 1..n {
        for row in 0..col {
            pairs.push((row, col));
        }
    }
    pairs
}

pub fn code_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn labeled_count(n: usize) -> u128 {
    1u128 << code_bits(n)
}

pub(crate) fn check_cap(n: usize) -> Result<(), EnumError> {
    if n > LABELED_CAP {
        return Err(EnumError::CapExceeded {
            n,
            cap: LABELED_CAP,
            count: labeled_count(n),
        });
    }
    Ok(())
}

/// Graph at the given position of the scan order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let pairs = pair_order(n);
    let bits = pairs.len();
    let mut g = Graph::edgeless(n).expect("enumeration orders are tiny");
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if code >> (bits - 1 - i) & 1 == 1 {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

pub fn code_of_graph(g: &Graph) -> u64 {
    let pairs = pair_order(g.order());
    let bits = pairs.len();
    let mut code = 0u64;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if g.has_edge(u, v) {
            code |= 1 << (bits - 1 - i);
        }
    }
    code
}

/// Code of the complement graph: every pair bit flips.
pub fn complement_code(n: usize, code: u64) -> u64 {
    let bits = code_bits(n);
    (if bits == 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }) ^ code
}

/// All labelled graphs of order `n` in scan order.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = (u64, Graph)>, EnumError> {
    check_cap(n)?;
    let count = labeled_count(n) as u64;
    Ok((0..count).map(move |code| (code, graph_from_code(n, code))))
}

/// Smallest code among all relabellings of the graph.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let pairs = pair_order(n);
    let bits = pairs.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if g.has_edge(p[u], p[v]) {
                code |= 1 << (bits - 1 - i);
                if code > best {
                    return; // prefix already worse than the best
                }
            }
        }
        best = best.min(code);
    });
    best
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// One representative per isomorphism class, in scan order of the
/// canonical (minimum) codes.
pub fn enumerate_up_to_iso(n: usize) -> Result<impl Iterator<Item = Graph>, EnumError> {
    check_cap(n)?;
    Ok(enumerate_labeled(n)?.filter_map(|(code, g)| (canonical_code(&g) == code).then_some(g)))
}
