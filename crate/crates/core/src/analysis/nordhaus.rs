//! Complement-pair scans: bounds on `mp(G) + mp(complement)` and
//! `mp(G) * mp(complement)`, with attainment statistics.

use crate::analysis::enumerate::{complement_code, graph_from_code, labeled_count, EnumError};
use crate::analysis::{labeled_mp_table, NOT_PRECLUDABLE};
use crate::graph::Graph;
use crate::preclusion::{mp, MpValue};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Upper bounds claimed for complement pairs of order `n`.
pub fn sum_bound(n: usize) -> usize {
    if n % 2 == 0 {
        n - 1
    } else {
        2 * n - 3
    }
}

/// The product bound; absent for odd orders below 5.
pub fn product_bound(n: usize) -> Option<usize> {
    if n % 2 == 0 {
        Some((n / 2) * ((n - 1) / 2))
    } else if n >= 5 {
        Some((n - 2) * (n - 2))
    } else {
        None
    }
}

#[derive(Debug, Clone)]
pub struct NordhausSummary {
    pub n: usize,
    pub scanned: u64,
    pub sum_bound: usize,
    pub product_bound: Option<usize>,
    pub max_sum: usize,
    pub max_product: usize,
    pub sum_violations: u64,
    pub product_violations: u64,
    /// First graph (scan order) violating either bound, as a code.
    pub first_violation: Option<u64>,
    /// Even order only: do all graphs attaining the sum bound come out
    /// regular, and all graphs attaining the product bound near-regular?
    pub sum_attainers_regular: Option<bool>,
    pub product_attainers_near_regular: Option<bool>,
    /// Distinct sums observed, ascending.
    pub attained_sums: Vec<usize>,
    pub seed: Option<u64>,
}

fn is_regular(g: &Graph) -> bool {
    let n = g.order();
    n == 0 || (1..n).all(|v| g.degree(v) == g.degree(0))
}

fn is_near_regular(g: &Graph) -> bool {
    // Regular with common degree one of the two halves of n-1.
    let n = g.order();
    let lo = (n - 1) / 2;
    let hi = n / 2;
    let d = g.degree(0);
    (d == lo || d == hi) && is_regular(g)
}

/// Exhaustive scan over every labelled graph of order `n`.
pub fn scan_exhaustive(n: usize) -> Result<NordhausSummary, EnumError> {
    let table = labeled_mp_table(n)?;
    let count = labeled_count(n) as u64;
    let mut summary = NordhausSummary {
        n,
        scanned: count,
        sum_bound: sum_bound(n),
        product_bound: product_bound(n),
        max_sum: 0,
        max_product: 0,
        sum_violations: 0,
        product_violations: 0,
        first_violation: None,
        sum_attainers_regular: (n % 2 == 0).then_some(true),
        product_attainers_near_regular: (n % 2 == 0).then_some(true),
        attained_sums: Vec::new(),
        seed: None,
    };
    let mut sums_seen = vec![false; 4 * n + 4];
    for code in 0..count {
        let a = table[code as usize];
        let b = table[complement_code(n, code) as usize];
        debug_assert!(a != NOT_PRECLUDABLE && b != NOT_PRECLUDABLE);
        let (a, b) = (a as usize, b as usize);
        let sum = a + b;
        let product = a * b;
        summary.max_sum = summary.max_sum.max(sum);
        summary.max_product = summary.max_product.max(product);
        sums_seen[sum] = true;
        if sum > summary.sum_bound {
            summary.sum_violations += 1;
            summary.first_violation.get_or_insert(code);
        }
        if let Some(pb) = summary.product_bound {
            if product > pb {
                summary.product_violations += 1;
                summary.first_violation.get_or_insert(code);
            }
        }
        if n % 2 == 0 {
            if sum == summary.sum_bound && !is_regular(&graph_from_code(n, code)) {
                summary.sum_attainers_regular = Some(false);
                summary.first_violation.get_or_insert(code);
            }
            if summary.product_bound == Some(product)
                && product > 0
                && !is_near_regular(&graph_from_code(n, code))
            {
                summary.product_attainers_near_regular = Some(false);
                summary.first_violation.get_or_insert(code);
            }
        }
    }
    summary.attained_sums = sums_seen
        .iter()
        .enumerate()
        .filter_map(|(s, &seen)| seen.then_some(s))
        .collect();
    Ok(summary)
}

/// Seeded sampled scan for orders beyond the enumeration cap.
pub fn scan_sampled(n: usize, seed: u64, samples: usize) -> NordhausSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = NordhausSummary {
        n,
        scanned: samples as u64,
        sum_bound: sum_bound(n),
        product_bound: product_bound(n),
        max_sum: 0,
        max_product: 0,
        sum_violations: 0,
        product_violations: 0,
        first_violation: None,
        sum_attainers_regular: None,
        product_attainers_near_regular: None,
        attained_sums: Vec::new(),
        seed: Some(seed),
    };
    let mut sums_seen = vec![false; 4 * n + 4];
    for i in 0..samples {
        let g = random_graph(n, &mut rng);
        let a = solve(&g);
        let b = solve(&g.complement());
        let sum = a + b;
        let product = a * b;
        summary.max_sum = summary.max_sum.max(sum);
        summary.max_product = summary.max_product.max(product);
        sums_seen[sum] = true;
        if sum > summary.sum_bound || summary.product_bound.is_some_and(|pb| product > pb) {
            summary.sum_violations += u64::from(sum > summary.sum_bound);
            summary.product_violations +=
                u64::from(summary.product_bound.is_some_and(|pb| product > pb));
            summary.first_violation.get_or_insert(i as u64);
        }
    }
    summary.attained_sums = sums_seen
        .iter()
        .enumerate()
        .filter_map(|(s, &seen)| seen.then_some(s))
        .collect();
    summary
}

fn solve(g: &Graph) -> usize {
    match mp(g).value {
        MpValue::Finite(k) => k,
        MpValue::NotPrecludable => unreachable!("orders >= 2 always precludable"),
    }
}

/// Uniform random labelled graph.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::edgeless(n).expect("sampling orders are tiny");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(0.5) {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    g
}

/// Random graph with exactly `m` edges (uniform over edge subsets).
pub fn random_graph_with_edges(n: usize, m: usize, rng: &mut impl Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = pairs.len();
    let m = m.min(total);
    // Partial Fisher-Yates.
    for i in 0..m {
        let j = rng.random_range(i..total);
        pairs.swap(i, j);
    }
    let mut g = Graph::edgeless(n).expect("sampling orders are tiny");
    for &(u, v) in &pairs[..m] {
        g.add_edge_unchecked(u, v);
    }
    g
}
