//! Brute-force extremal edge counts over all labelled graphs of one order.
//!
//! `s(n, k)` is the least edge count among graphs with preclusion number
//! exactly `k`. `f(n, k)` is the least `m` such that every *connected*
//! graph with at least `m` edges has preclusion number at least `k`.
//! `g(n, k)` is the greatest `m` such that every graph with at most `m`
//! edges has preclusion number at most `k`.

use crate::analysis::enumerate::{code_bits, graph_from_code, EnumError};
use crate::analysis::{labeled_mp_table, NOT_PRECLUDABLE};
use crate::graph::Graph;

/// An extremal edge count with the graph attaining (or blocking) it.
#[derive(Debug, Clone)]
pub struct ExtremalValue {
    pub n: usize,
    pub k: usize,
    pub value: Option<usize>,
    pub witness: Option<Graph>,
}

/// Per-preclusion-value minimum edge counts (with a witness code), indexed
/// by value.
fn min_edges_by_mp(n: usize) -> Result<Vec<Option<(usize, u64)>>, EnumError> {
    let table = labeled_mp_table(n)?;
    let mut out: Vec<Option<(usize, u64)>> = Vec::new();
    for (code, &v) in table.iter().enumerate() {
        if v == NOT_PRECLUDABLE {
            continue;
        }
        let v = v as usize;
        if out.len() <= v {
            out.resize(v + 1, None);
        }
        let m = (code as u64).count_ones() as usize;
        if out[v].is_none_or(|(best, _)| m < best) {
            out[v] = Some((m, code as u64));
        }
    }
    Ok(out)
}

/// Per-preclusion-value maximum edge counts among connected graphs.
fn max_connected_edges_by_mp(n: usize) -> Result<Vec<Option<(usize, u64)>>, EnumError> {
    let table = labeled_mp_table(n)?;
    let mut out: Vec<Option<(usize, u64)>> = Vec::new();
    for (code, &v) in table.iter().enumerate() {
        if v == NOT_PRECLUDABLE {
            continue;
        }
        let g = graph_from_code(n, code as u64);
        if !g.is_connected() {
            continue;
        }
        let v = v as usize;
        if out.len() <= v {
            out.resize(v + 1, None);
        }
        let m = (code as u64).count_ones() as usize;
        if out[v].is_none_or(|(best, _)| m > best) {
            out[v] = Some((m, code as u64));
        }
    }
    Ok(out)
}

pub fn brute_s(n: usize, k: usize) -> Result<ExtremalValue, EnumError> {
    let mins = min_edges_by_mp(n)?;
    let hit = mins.get(k).copied().flatten();
    Ok(ExtremalValue {
        n,
        k,
        value: hit.map(|(m, _)| m),
        witness: hit.map(|(_, code)| graph_from_code(n, code)),
    })
}

/// The witness is a densest connected graph with preclusion number below
/// `k`, i.e. the blocker showing `f` cannot be smaller.
pub fn brute_f(n: usize, k: usize) -> Result<ExtremalValue, EnumError> {
    let maxima = max_connected_edges_by_mp(n)?;
    let blocker = maxima
        .iter()
        .take(k)
        .flatten()
        .max_by_key(|&&(m, _)| m)
        .copied();
    Ok(ExtremalValue {
        n,
        k,
        value: Some(blocker.map_or(0, |(m, _)| m + 1)),
        witness: blocker.map(|(_, code)| graph_from_code(n, code)),
    })
}

/// The witness is a sparsest graph with preclusion number above `k`, i.e.
/// the blocker showing `g` cannot be larger.
pub fn brute_g(n: usize, k: usize) -> Result<ExtremalValue, EnumError> {
    let mins = min_edges_by_mp(n)?;
    let blocker = mins
        .iter()
        .skip(k + 1)
        .flatten()
        .min_by_key(|&&(m, _)| m)
        .copied();
    Ok(ExtremalValue {
        n,
        k,
        value: Some(blocker.map_or(code_bits(n), |(m, _)| m - 1)),
        witness: blocker.map(|(_, code)| graph_from_code(n, code)),
    })
}

/// Largest preclusion value attained by any graph of order `n`.
pub fn max_mp(n: usize) -> Result<usize, EnumError> {
    Ok(min_edges_by_mp(n)?.len().saturating_sub(1))
}
