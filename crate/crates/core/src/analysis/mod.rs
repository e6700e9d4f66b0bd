//! Desk-scale verification machinery: exhaustive and sampled scans of the
//! registered claims, brute-force extremal tables, and complement-pair
//! scans.

pub mod enumerate;
pub mod extremal;
pub mod nordhaus;
pub mod registry;
pub mod trees;

use crate::analysis::enumerate::{graph_from_code, labeled_count, EnumError};
use crate::preclusion::{mp_value, MpValue};
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Table entry marking a graph no edge deletion can make unmatchable.
pub const NOT_PRECLUDABLE: u8 = u8::MAX;

/// Default seed for sampled scans.
pub const DEFAULT_SEED: u64 = 0x6d70_7265_6300;

static TABLES: OnceLock<Mutex<HashMap<usize, Arc<Vec<u8>>>>> = OnceLock::new();

/// Preclusion numbers of every labelled graph of order `n`, indexed by
/// code. Built once per process and shared; the fill is parallel and the
/// result is independent of the worker count.
pub fn labeled_mp_table(n: usize) -> Result<Arc<Vec<u8>>, EnumError> {
    enumerate::check_cap(n)?;
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("table lock poisoned");
    if let Some(t) = guard.get(&n) {
        return Ok(Arc::clone(t));
    }
    let count = labeled_count(n) as u64;
    let table: Vec<u8> = (0..count)
        .into_par_iter()
        .map(|code| {
            let g = graph_from_code(n, code);
            match mp_value(&g) {
                MpValue::Finite(k) => u8::try_from(k).expect("desk-scale values fit a byte"),
                MpValue::NotPrecludable => NOT_PRECLUDABLE,
            }
        })
        .collect();
    let table = Arc::new(table);
    guard.insert(n, Arc::clone(&table));
    Ok(table)
}
