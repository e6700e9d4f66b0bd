//! Independent reference routines used to cross-check the production
//! algorithms. Everything here enumerates over vertex bitmasks and never
//! calls into the augmenting-path engine or the preclusion solvers.

use crate::graph::Graph;

/// Largest order accepted by the bitmask routines (2^n table entries).
pub const ORACLE_MAX_ORDER: usize = 20;

/// Maximum matching size by dynamic programming over vertex subsets.
pub fn max_matching_size(g: &Graph) -> usize {
    let n = g.order();
    assert!(
        n <= ORACLE_MAX_ORDER,
        "oracle limited to n <= {ORACLE_MAX_ORDER}, got {n}"
    );
    let full = g.full_mask() as usize;
    let mut best = vec![0u8; full + 1];
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        // v left unmatched:
        let mut b = best[rest];
        // v matched to a neighbour inside the mask:
        let mut nbrs = g.neighbors_mask(v) as usize & rest;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            b = b.max(1 + best[rest & !(1 << u)]);
        }
        best[mask] = b;
    }
    best[full] as usize
}

/// Vertices missed by a maximum matching.
pub fn deficiency(g: &Graph) -> usize {
    g.order() - 2 * max_matching_size(g)
}

/// Whether the graph has a perfect matching (even order) or an
/// almost-perfect matching (odd order).
pub fn is_matchable(g: &Graph) -> bool {
    deficiency(g) == g.order() % 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn hand_checked_sizes() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(max_matching_size(&k4), 2);
        assert!(is_matchable(&k4));

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(max_matching_size(&c5), 2);
        assert!(is_matchable(&c5));

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(max_matching_size(&star), 1);
        assert_eq!(deficiency(&star), 2);
        assert!(!is_matchable(&star));

        assert!(is_matchable(&Graph::edgeless(1).unwrap()));
        assert!(is_matchable(&Graph::edgeless(0).unwrap()));
        assert!(!is_matchable(&Graph::edgeless(2).unwrap()));
    }
}
