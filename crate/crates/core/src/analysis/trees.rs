//! Labelled tree enumeration through vertex-sequence codes.

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Decodes a sequence of length `n-2` over `0..n` into its labelled tree.
pub fn tree_from_sequence(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Graph::edgeless(n).expect("tree orders are tiny");
    for &s in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always remains");
        g.add_edge_unchecked(leaf, s);
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut ends = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (ends.next().unwrap(), ends.next().unwrap());
    g.add_edge_unchecked(a, b);
    g
}

/// Visits all `n^(n-2)` labelled trees of order `n >= 2`.
pub fn for_each_labeled_tree(n: usize, mut f: impl FnMut(&Graph)) {
    assert!(n >= 2);
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        f(&tree_from_sequence(&seq));
        // Odometer.
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            if i == 0 {
                return;
            }
        }
    }
}

/// Total number of labelled trees of order `n >= 2`.
pub fn labeled_tree_count(n: usize) -> u64 {
    (n as u64).pow(n as u32 - 2)
}

/// The `idx`-th sequence in odometer order (base-`n` digits).
pub fn sequence_from_index(n: usize, mut idx: u64) -> Vec<usize> {
    let mut seq = vec![0usize; n - 2];
    for slot in seq.iter_mut().rev() {
        *slot = (idx % n as u64) as usize;
        idx /= n as u64;
    }
    seq
}

/// Visits `count` seeded uniform labelled trees.
pub fn for_each_sampled_tree(n: usize, count: usize, seed: u64, mut f: impl FnMut(&Graph)) {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq = vec![0usize; n - 2];
    for _ in 0..count {
        for s in seq.iter_mut() {
            *s = rng.random_range(0..n);
        }
        f(&tree_from_sequence(&seq));
    }
}
