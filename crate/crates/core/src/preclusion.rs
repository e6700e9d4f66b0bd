//! Exact matching preclusion numbers with independently checkable
//! certificates.
//!
//! Two exact engines sit behind [`mp`]. A branch-and-bound search over the
//! hitting-set formulation (every preclusion set must hit every surviving
//! perfect/almost-perfect matching) handles sparse graphs and small
//! incumbents. For dense graphs that tree explodes, so a structure search
//! takes over: it minimises, over all vertex sets `S` and partitions of the
//! rest, the number of edges that must be deleted to leave more odd
//! components than the matching conditions allow. Both report the same
//! optimum; the subset-enumeration oracle [`brute_force_mp`] stays
//! independent of both.

use crate::graph::{BitIter, EdgeSet, Graph, GraphError};
use crate::matching::{
    classify_with_matching, maximum_matching, tutte_berge_witness, DeficiencyWitness, MatchClass,
};
use crate::oracle;
use thiserror::Error;

/// Default cap on edge counts accepted by [`brute_force_mp`].
pub const DEFAULT_ORACLE_CAP: usize = 16;

/// An edge set `F` plus a witness that `G - F` has neither a perfect nor an
/// almost-perfect matching; proves `mp(G) <= |F|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreclusionCertificate {
    pub f: EdgeSet,
    pub witness: DeficiencyWitness,
}

/// The preclusion number, or the marker for graphs no edge deletion can
/// make unmatchable (only the orders 0 and 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MpValue {
    Finite(usize),
    NotPrecludable,
}

impl MpValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            MpValue::Finite(k) => Some(k),
            MpValue::NotPrecludable => None,
        }
    }
}

/// Closed-form upper bounds on the preclusion number, by parity.
///
/// Each present bound is realised by an explicit isolating edge set: the
/// edges at one minimum-degree vertex (even order), at both endpoints of a
/// minimum-degree edge, or at a minimum-degree vertex plus a vertex of
/// minimum degree in the remainder (odd order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct UpperBounds {
    pub even_delta: Option<usize>,
    pub odd_xi: Option<usize>,
    pub odd_two_vertex: Option<usize>,
}

impl UpperBounds {
    pub fn best(&self) -> Option<usize> {
        [self.even_delta, self.odd_xi, self.odd_two_vertex]
            .into_iter()
            .flatten()
            .min()
    }
}

/// Result of an exact preclusion computation.
#[derive(Debug, Clone)]
pub struct MpResult {
    pub value: MpValue,
    pub certificate: Option<PreclusionCertificate>,
    pub bounds_used: UpperBounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "edge count {edges} exceeds the subset-enumeration cap {cap} \
         (up to 2^{edges} deletions would be checked)"
    )]
    CapExceeded { edges: usize, cap: usize },
}

/// Upper bounds for graphs of order at least 2; degenerate orders get an
/// empty record.
pub fn upper_bounds(g: &Graph) -> UpperBounds {
    let n = g.order();
    if n < 2 {
        return UpperBounds::default();
    }
    let stats = g.degree_stats();
    if n % 2 == 0 {
        UpperBounds {
            even_delta: Some(stats.min_degree),
            ..UpperBounds::default()
        }
    } else {
        let odd_two_vertex = (0..n)
            .filter(|&v| g.degree(v) == stats.min_degree)
            .map(|v| min_degree_without(g, v))
            .min()
            .map(|d| stats.min_degree + d);
        UpperBounds {
            even_delta: None,
            odd_xi: stats.min_edge_degree.map(|xi| xi + 1),
            odd_two_vertex,
        }
    }
}

/// Minimum degree of `G - v`.
fn min_degree_without(g: &Graph, v: usize) -> usize {
    (0..g.order())
        .filter(|&u| u != v)
        .map(|u| g.degree(u) - usize::from(g.has_edge(u, v)))
        .min()
        .unwrap_or(0)
}

/// The best closed-form bound together with the isolating set realising it.
fn bound_certificate(g: &Graph) -> Option<(usize, Vec<(usize, usize)>)> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let stats = g.degree_stats();
    let mut best: Option<(usize, Vec<(usize, usize)>)> = None;
    let mut offer = |size: usize, f: Vec<(usize, usize)>| {
        debug_assert_eq!(size, f.len());
        if best.as_ref().map_or(true, |(b, _)| size < *b) {
            best = Some((size, f));
        }
    };
    if n % 2 == 0 {
        let v = (0..n).find(|&v| g.degree(v) == stats.min_degree).unwrap();
        offer(stats.min_degree, incident_edges(g, v));
    } else {
        if let Some(xi) = stats.min_edge_degree {
            let (u, v) = g
                .edges()
                .into_iter()
                .find(|&(u, v)| g.degree(u) + g.degree(v) - 2 == xi)
                .unwrap();
            offer(xi + 1, incident_edges_pair(g, u, v));
        }
        let mut two: Option<(usize, usize, usize)> = None; // (bound, v, u)
        for v in (0..n).filter(|&v| g.degree(v) == stats.min_degree) {
            for u in (0..n).filter(|&u| u != v) {
                let du = g.degree(u) - usize::from(g.has_edge(u, v));
                let bound = stats.min_degree + du;
                if two.map_or(true, |(b, _, _)| bound < b) {
                    two = Some((bound, v, u));
                }
            }
        }
        if let Some((bound, v, u)) = two {
            offer(bound, incident_edges_pair(g, u, v));
        }
    }
    best
}

fn incident_edges(g: &Graph, v: usize) -> Vec<(usize, usize)> {
    let mut f: Vec<(usize, usize)> = g.neighbors(v).map(|u| (u.min(v), u.max(v))).collect();
    f.sort_unstable();
    f
}

fn incident_edges_pair(g: &Graph, a: usize, b: usize) -> Vec<(usize, usize)> {
    let mut f = incident_edges(g, a);
    f.extend(incident_edges(g, b));
    f.sort_unstable();
    f.dedup();
    f
}

/// Exact preclusion number with a certificate whenever it is finite.
pub fn mp(g: &Graph) -> MpResult {
    let bounds = upper_bounds(g);
    finish(g, bounds, solve_optimal_set(g))
}

/// Exact preclusion number only, skipping certificate construction; the
/// cheap entry point for bulk scans.
pub fn mp_value(g: &Graph) -> MpValue {
    if classify_with_matching(g).0 == MatchClass::Neither {
        return MpValue::Finite(0);
    }
    let initial = bound_certificate(g);
    let dense = initial
        .as_ref()
        .is_some_and(|&(inc, _)| use_structure_search(g.order(), inc));
    if dense {
        let (incumbent, _) = initial.expect("checked above");
        match structure::min_cost_below(g, incumbent) {
            Some(cost) => MpValue::Finite(cost),
            None => MpValue::Finite(incumbent),
        }
    } else {
        match branch_and_bound(g, initial) {
            Some((k, _)) => MpValue::Finite(k),
            None => MpValue::NotPrecludable,
        }
    }
}

fn solve_optimal_set(g: &Graph) -> Option<(usize, Vec<(usize, usize)>)> {
    if classify_with_matching(g).0 == MatchClass::Neither {
        return Some((0, Vec::new()));
    }
    let initial = bound_certificate(g);
    let dense = initial
        .as_ref()
        .is_some_and(|&(inc, _)| use_structure_search(g.order(), inc));
    if dense {
        let (incumbent, fallback) = initial.expect("checked above");
        match structure::best_violation_below(g, incumbent) {
            Some(v) => Some((v.cost, v.f)),
            None => Some((incumbent, fallback)),
        }
    } else {
        branch_and_bound(g, initial)
    }
}

/// Decision form: a certificate of size at most `k` iff `mp(G) <= k`.
pub fn mp_decision(g: &Graph, k: usize) -> Option<PreclusionCertificate> {
    let result = mp(g);
    match result.value {
        MpValue::Finite(v) if v <= k => result.certificate,
        _ => None,
    }
}

fn finish(g: &Graph, bounds: UpperBounds, best: Option<(usize, Vec<(usize, usize)>)>) -> MpResult {
    match best {
        None => MpResult {
            value: MpValue::NotPrecludable,
            certificate: None,
            bounds_used: bounds,
        },
        Some((k, mut f)) => {
            f.sort_unstable();
            debug_assert_eq!(f.len(), k);
            let fset = EdgeSet::from_sorted_unchecked(f);
            let h = g.delete_edges(&fset).expect("deleted edges come from G");
            let witness = tutte_berge_witness(&h);
            let cert = PreclusionCertificate { f: fset, witness };
            debug_assert_eq!(verify_certificate(g, &cert), Ok(true));
            MpResult {
                value: MpValue::Finite(k),
                certificate: Some(cert),
                bounds_used: bounds,
            }
        }
    }
}

/// The hitting-set tree stays shallow only while the incumbent is small;
/// dense graphs go to the structure search instead.
fn use_structure_search(n: usize, incumbent: usize) -> bool {
    n <= 16 && incumbent >= 3 && (n <= 12 || incumbent >= n - 8)
}

/// Checks a certificate from scratch: `F` must consist of edges of `G`, `S`
/// must be a valid vertex set, and removing both must leave more odd
/// components than a matchable graph of this parity allows.
///
/// Malformed input is an error, distinct from a well-formed certificate
/// that simply proves nothing (`Ok(false)`).
pub fn verify_certificate(g: &Graph, cert: &PreclusionCertificate) -> Result<bool, GraphError> {
    let h = g.delete_edges(&cert.f)?;
    let s_mask = h.vertex_mask(&cert.witness.s)?;
    let odd = h.odd_components_excluding(s_mask);
    Ok(odd > cert.witness.s.len() + g.order() % 2)
}

/// Subset-enumeration oracle: tries all edge subsets in size order and
/// reports the first size whose deletion kills matchability. Matchability
/// is decided by the bitmask reference routine, independent of the
/// production engines.
pub fn brute_force_mp(g: &Graph) -> Result<MpResult, OracleError> {
    brute_force_mp_with_cap(g, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_mp_with_cap(g: &Graph, cap: usize) -> Result<MpResult, OracleError> {
    let edges = g.edges();
    let m = edges.len();
    if m > cap {
        return Err(OracleError::CapExceeded { edges: m, cap });
    }
    let bounds = upper_bounds(g);
    for k in 0..=m {
        let mut found: Option<Vec<(usize, usize)>> = None;
        for_each_combination(m, k, |choice| {
            if found.is_some() {
                return;
            }
            let mut work = g.clone();
            for &i in choice {
                let (u, v) = edges[i];
                work.remove_edge_unchecked(u, v);
            }
            if !oracle::is_matchable(&work) {
                found = Some(choice.iter().map(|&i| edges[i]).collect());
            }
        });
        if let Some(f) = found {
            return Ok(finish(g, bounds, Some((k, f))));
        }
    }
    Ok(MpResult {
        value: MpValue::NotPrecludable,
        certificate: None,
        bounds_used: bounds,
    })
}

/// Lexicographic k-combinations of `0..m`, visited in order.
fn for_each_combination<F: FnMut(&[usize])>(m: usize, k: usize, mut f: F) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
        }
        if idx[i] == i + m - k {
            return;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Greedy peeling count of pairwise edge-disjoint perfect matchings: find
/// one, delete its edges, repeat. Every preclusion set must hit each of
/// them, so the count lower-bounds `mp` for even graphs.
pub fn edge_disjoint_pm_lower_bound(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut work = g.clone();
    let mut count = 0;
    loop {
        let m = maximum_matching(&work);
        if 2 * m.size() != n {
            return count;
        }
        for (u, v) in m.edges().iter() {
            work.remove_edge_unchecked(u, v);
        }
        count += 1;
    }
}

/// Branch and bound on the hitting-set formulation. At each node with the
/// current deletions applied, either the graph is already unmatchable (an
/// incumbent) or some perfect/almost-perfect matching survives and every
/// extension must delete one of its edges.
fn branch_and_bound(
    g: &Graph,
    initial: Option<(usize, Vec<(usize, usize)>)>,
) -> Option<(usize, Vec<(usize, usize)>)> {
    let root_lb = edge_disjoint_pm_lower_bound(g);
    let mut incumbent = initial.as_ref().map_or(usize::MAX, |(k, _)| *k);
    let mut best = initial.map(|(_, f)| f);
    if best.is_none() || incumbent > root_lb {
        let mut work = g.clone();
        let mut stack = Vec::new();
        descend(&mut work, &mut stack, &mut incumbent, &mut best, root_lb);
    }
    best.map(|f| (incumbent, f))
}

fn descend(
    work: &mut Graph,
    stack: &mut Vec<(usize, usize)>,
    incumbent: &mut usize,
    best: &mut Option<Vec<(usize, usize)>>,
    root_lb: usize,
) -> bool {
    if stack.len() >= *incumbent {
        return false;
    }
    let (class, matching) = classify_with_matching(work);
    if class == MatchClass::Neither {
        *incumbent = stack.len();
        *best = Some(stack.clone());
        return *incumbent <= root_lb;
    }
    if stack.len() + 1 >= *incumbent {
        return false;
    }
    let branch: Vec<(usize, usize)> = matching.edges().iter().collect();
    for (u, v) in branch {
        work.remove_edge_unchecked(u, v);
        stack.push((u, v));
        let done = descend(work, stack, incumbent, best, root_lb);
        stack.pop();
        work.add_edge_unchecked(u, v);
        if done {
            return true;
        }
        if stack.len() + 1 >= *incumbent {
            break;
        }
    }
    false
}

/// Structure search over witness shapes.
///
/// A deletion set `F` makes `G` unmatchable iff some vertex set `S` leaves
/// `(G - F) - S` with more than `|S|` odd components (one more for odd
/// order). Conversely, for a fixed `S` and a partition of the remaining
/// vertices, the cheapest `F` realising it is exactly the set of edges
/// crossing between partition classes, so minimising over `S` and
/// partitions is exact. The partition side is a subset DP maximising kept
/// (internal) edges subject to a minimum number of odd classes.
mod structure {
    use super::*;

    pub(super) struct Violation {
        pub cost: usize,
        pub f: Vec<(usize, usize)>,
        #[allow(dead_code)]
        pub s: Vec<usize>,
    }

    const NEG: i32 = i32::MIN / 2;

    /// Cheapest violation strictly below `incumbent`, if any.
    pub(super) fn min_cost_below(g: &Graph, incumbent: usize) -> Option<usize> {
        search(g, incumbent).map(|(cost, _)| cost)
    }

    /// Best violation strictly cheaper than `incumbent`, if any.
    pub(super) fn best_violation_below(g: &Graph, incumbent: usize) -> Option<Violation> {
        let (cost, s_mask) = search(g, incumbent)?;
        let mut scratch = Scratch::new(g.order(), g.order() % 2);
        Some(reconstruct(g, s_mask, g.order() % 2, &mut scratch, cost))
    }

    fn search(g: &Graph, incumbent: usize) -> Option<(usize, u64)> {
        let n = g.order();
        debug_assert!(n <= 16);
        let eps = n % 2;
        let full = g.full_mask();
        let mut scratch = Scratch::new(n, eps);
        let mut bound = incumbent;
        let mut best: Option<u64> = None;
        for s_mask in 0..1u64 << n {
            let t = s_mask.count_ones() as usize;
            let q = t + 1 + eps;
            let h = n - t;
            if q > h {
                continue;
            }
            let rim = full & !s_mask;
            let rim_edges = count_edges_within(g, rim);
            // A partition into at least q classes keeps at most C(h-q+1, 2)
            // edges, so the deletion cost is at least rim_edges minus that.
            let kept_cap = (h - q + 1) * (h - q) / 2;
            if rim_edges.saturating_sub(kept_cap) >= bound {
                continue;
            }
            if let Some(kept) = scratch.max_kept(g, rim, q, false) {
                let cost = rim_edges - kept;
                if cost < bound {
                    bound = cost;
                    best = Some(s_mask);
                }
            }
        }
        best.map(|s| (bound, s))
    }

    fn count_edges_within(g: &Graph, mask: u64) -> usize {
        BitIter(mask)
            .map(|v| (g.neighbors_mask(v) & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    struct Scratch {
        adj: Vec<u32>,
        labels: Vec<usize>,
        kept: Vec<i32>,
        dp: Vec<i32>,
        choice: Vec<u32>,
    }

    impl Scratch {
        fn new(n: usize, eps: usize) -> Self {
            let q_max = n.saturating_sub(1 + eps) / 2 + 1 + eps;
            Scratch {
                adj: vec![0; n.max(1)],
                labels: Vec::with_capacity(n),
                kept: vec![0; 1 << n],
                dp: vec![NEG; (1 << n) * (q_max + 1)],
                choice: Vec::new(),
            }
        }

        /// Maximum total internal edge count over partitions of the rim
        /// with at least `q` odd classes; `None` when infeasible. With
        /// `track` set, records the chosen class per DP state.
        fn max_kept(&mut self, g: &Graph, rim: u64, q: usize, track: bool) -> Option<usize> {
            self.labels.clear();
            self.labels.extend(BitIter(rim));
            let h = self.labels.len();
            for (i, &v) in self.labels.iter().enumerate() {
                let mut row = 0u32;
                for (j, &u) in self.labels.iter().enumerate() {
                    if g.has_edge(v, u) {
                        row |= 1 << j;
                    }
                }
                self.adj[i] = row;
            }
            let size = 1usize << h;
            let width = q + 1;
            self.kept[0] = 0;
            for mask in 1..size {
                let v = mask.trailing_zeros() as usize;
                let rest = mask & !(1 << v);
                self.kept[mask] =
                    self.kept[rest] + (self.adj[v] as usize & rest).count_ones() as i32;
            }
            self.dp[..size * width].fill(NEG);
            self.dp[0] = 0;
            if track {
                self.choice.clear();
                self.choice.resize(size * width, 0);
            }
            for mask in 1..size {
                let v_bit = mask & mask.wrapping_neg();
                let rest = mask & !v_bit;
                let mut sub = rest;
                loop {
                    let class = sub | v_bit;
                    let prev = mask & !class;
                    let odd = class.count_ones() as usize & 1;
                    let w = self.kept[class];
                    for j in 0..width {
                        let pj = j.saturating_sub(odd);
                        let from = self.dp[prev * width + pj];
                        if from >= 0 && from + w > self.dp[mask * width + j] {
                            self.dp[mask * width + j] = from + w;
                            if track {
                                self.choice[mask * width + j] = class as u32;
                            }
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
            }
            let v = self.dp[(size - 1) * width + q];
            (v >= 0).then_some(v as usize)
        }
    }

    fn reconstruct(
        g: &Graph,
        s_mask: u64,
        eps: usize,
        scratch: &mut Scratch,
        cost: usize,
    ) -> Violation {
        let rim = g.full_mask() & !s_mask;
        let t = s_mask.count_ones() as usize;
        let q = t + 1 + eps;
        scratch
            .max_kept(g, rim, q, true)
            .expect("winning structure must be feasible");
        let h = rim.count_ones() as usize;
        let width = q + 1;
        // Walk the recorded choices to recover the partition classes.
        let mut class_of = vec![usize::MAX; h];
        let mut mask = (1usize << h) - 1;
        let mut j = q;
        let mut class_id = 0;
        while mask != 0 {
            let class = scratch.choice[mask * width + j] as usize;
            debug_assert!(class != 0 && class & !mask == 0);
            for i in BitIter(class as u64) {
                class_of[i] = class_id;
            }
            j = j.saturating_sub(class.count_ones() as usize & 1);
            mask &= !class;
            class_id += 1;
        }
        let index_of = {
            let mut map = vec![usize::MAX; g.order()];
            for (i, &v) in scratch.labels.iter().enumerate() {
                map[v] = i;
            }
            map
        };
        let mut f = Vec::new();
        for (u, v) in g.edges() {
            let (iu, iv) = (index_of[u], index_of[v]);
            if iu != usize::MAX && iv != usize::MAX && class_of[iu] != class_of[iv] {
                f.push((u, v));
            }
        }
        debug_assert_eq!(f.len(), cost);
        Violation {
            cost,
            f,
            s: BitIter(s_mask).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::edgeless(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(upper_bounds(&complete(9)).odd_xi, Some(15));
        assert_eq!(upper_bounds(&path(5)).odd_two_vertex, Some(2));
        assert_eq!(upper_bounds(&cycle(6)).even_delta, Some(2));
        assert_eq!(
            upper_bounds(&Graph::edgeless(1).unwrap()),
            UpperBounds::default()
        );
        // Odd edgeless graphs have no edge-degree but still a two-vertex bound.
        let b = upper_bounds(&Graph::edgeless(5).unwrap());
        assert_eq!(b.odd_xi, None);
        assert_eq!(b.odd_two_vertex, Some(0));
    }

    #[test]
    fn mp_examples() {
        assert_eq!(mp(&complete(4)).value, MpValue::Finite(3));
        assert_eq!(mp(&cycle(5)).value, MpValue::Finite(3));
        assert_eq!(mp(&star(4)).value, MpValue::Finite(0));
        assert_eq!(mp(&complete(9)).value, MpValue::Finite(15));
    }

    #[test]
    fn small_odd_complete_graphs_from_search_not_formula() {
        // The 2n-3 closed form starts at order 9; below it the solver and
        // the oracle agree on smaller values.
        let k5 = mp(&complete(5));
        let oracle5 = brute_force_mp(&complete(5)).unwrap();
        assert_eq!(k5.value, oracle5.value);
        assert_eq!(k5.value, MpValue::Finite(6));

        assert_eq!(mp(&complete(3)).value, MpValue::Finite(3));
        assert_eq!(mp(&complete(7)).value, MpValue::Finite(10));
    }

    #[test]
    fn certificates_verify() {
        for g in [complete(4), complete(7), cycle(5), path(5), star(6)] {
            let r = mp(&g);
            if let Some(cert) = &r.certificate {
                assert_eq!(verify_certificate(&g, cert), Ok(true));
                assert_eq!(cert.f.len(), r.value.finite().unwrap());
            }
        }
    }

    #[test]
    fn decision_examples() {
        assert!(mp_decision(&complete(4), 2).is_none());
        let cert = mp_decision(&cycle(5), 3).unwrap();
        assert!(cert.f.len() <= 3);
        assert_eq!(verify_certificate(&cycle(5), &cert), Ok(true));

        // Removing any single edge of P_5 leaves an almost-perfect matching.
        assert!(mp_decision(&path(5), 1).is_none());
        let p5 = path(5);
        for (u, v) in p5.edges() {
            let h = p5.delete_edges(&EdgeSet::new([(u, v)]).unwrap()).unwrap();
            assert!(oracle::is_matchable(&h));
        }
    }

    #[test]
    fn verify_certificate_cases() {
        let k4 = complete(4);
        let cert = PreclusionCertificate {
            f: EdgeSet::new([(0, 1), (0, 2), (0, 3)]).unwrap(),
            witness: DeficiencyWitness {
                s: vec![],
                odd_components: 2,
                excess: 2,
            },
        };
        assert_eq!(verify_certificate(&k4, &cert), Ok(true));

        let weak = PreclusionCertificate {
            f: EdgeSet::new([(0, 1)]).unwrap(),
            witness: DeficiencyWitness {
                s: vec![],
                odd_components: 0,
                excess: 0,
            },
        };
        assert_eq!(verify_certificate(&k4, &weak), Ok(false));

        let c5 = cycle(5);
        let empty = PreclusionCertificate {
            f: EdgeSet::new([]).unwrap(),
            witness: DeficiencyWitness {
                s: vec![],
                odd_components: 1,
                excess: 1,
            },
        };
        assert_eq!(verify_certificate(&c5, &empty), Ok(false));

        let malformed = PreclusionCertificate {
            f: EdgeSet::new([(0, 2)]).unwrap(),
            witness: DeficiencyWitness {
                s: vec![],
                odd_components: 0,
                excess: 0,
            },
        };
        assert!(verify_certificate(&c5, &malformed).is_err());

        let bad_s = PreclusionCertificate {
            f: EdgeSet::new([]).unwrap(),
            witness: DeficiencyWitness {
                s: vec![7],
                odd_components: 0,
                excess: 0,
            },
        };
        assert!(verify_certificate(&c5, &bad_s).is_err());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_mp(&path(5)).unwrap().value, MpValue::Finite(2));
        assert_eq!(
            brute_force_mp(&complete(2)).unwrap().value,
            MpValue::Finite(1)
        );
        assert_eq!(brute_force_mp(&cycle(4)).unwrap().value, MpValue::Finite(2));
        assert!(matches!(
            brute_force_mp(&complete(7)),
            Err(OracleError::CapExceeded { edges: 21, cap: 16 })
        ));
        assert_eq!(
            brute_force_mp_with_cap(&complete(7), 21).unwrap().value,
            MpValue::Finite(10)
        );
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(edge_disjoint_pm_lower_bound(&complete(4)), 3);
        assert_eq!(edge_disjoint_pm_lower_bound(&cycle(6)), 2);
        assert_eq!(edge_disjoint_pm_lower_bound(&star(4)), 0);
        assert_eq!(edge_disjoint_pm_lower_bound(&cycle(5)), 0);
    }

    #[test]
    fn degenerate_orders_are_not_precludable() {
        assert_eq!(
            mp(&Graph::edgeless(1).unwrap()).value,
            MpValue::NotPrecludable
        );
        assert_eq!(
            mp(&Graph::edgeless(0).unwrap()).value,
            MpValue::NotPrecludable
        );
        assert_eq!(
            brute_force_mp(&Graph::edgeless(1).unwrap()).unwrap().value,
            MpValue::NotPrecludable
        );
    }

    /// Both engine paths against the oracle on every labelled graph of
    /// order up to 5.
    #[test]
    fn exhaustive_oracle_agreement_small() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for code in 0u32..1 << pairs.len() {
                let mut g = Graph::edgeless(n).unwrap();
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if code >> i & 1 == 1 {
                        g.add_edge_unchecked(u, v);
                    }
                }
                let solved = mp(&g);
                let brute = brute_force_mp(&g).unwrap();
                assert_eq!(solved.value, brute.value, "disagreement on {g:?}");
                if let Some(cert) = &solved.certificate {
                    assert_eq!(verify_certificate(&g, cert), Ok(true), "bad cert on {g:?}");
                }
                if let (Some(b), Some(v)) = (solved.bounds_used.best(), solved.value.finite()) {
                    assert!(v <= b, "bound violated on {g:?}");
                }
            }
        }
    }

    /// Dense graphs route to the structure search; force the same inputs
    /// through the branch and bound and require identical optima.
    #[test]
    fn both_engines_agree_on_dense_mid_orders() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1234);
        for _ in 0..40 {
            let n = rng.random_range(8..=10);
            let mut g = Graph::edgeless(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.6) {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
            let via_dispatch = mp(&g).value;
            let via_bnb = match branch_and_bound(&g, bound_certificate(&g)) {
                Some((k, _)) => MpValue::Finite(k),
                None => MpValue::NotPrecludable,
            };
            let expected = if classify_with_matching(&g).0 == MatchClass::Neither {
                MpValue::Finite(0)
            } else {
                via_bnb
            };
            assert_eq!(via_dispatch, expected, "engines disagree on {g:?}");
        }
    }

    #[test]
    fn combination_enumeration() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut count = 0;
        for_each_combination(5, 0, |_| count += 1);
        assert_eq!(count, 1);
    }
}
