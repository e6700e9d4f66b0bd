//! Deterministic generators for the named graph families and edge
//! decompositions of complete graphs.
//!
//! All constructions use fixed vertex labels so their graph6 encodings are
//! byte-stable across runs.

use crate::graph::{EdgeSet, Graph, GraphError};
use crate::matching::Matching;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("order {n} must be at least {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("order {n} must be even")]
    EvenOrderRequired { n: usize },
    #[error("order {n} must be odd")]
    OddOrderRequired { n: usize },
    #[error("parameter {name}={value} is outside [{min}, {max}]")]
    ParamOutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

fn require_order(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(ConstructionError::OrderTooSmall { n, min });
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(ConstructionError::Graph(GraphError::TooManyVertices { n }));
    }
    Ok(())
}

fn require_even(n: usize) -> Result<()> {
    (n % 2 == 0)
        .then_some(())
        .ok_or(ConstructionError::EvenOrderRequired { n })
}

fn require_odd(n: usize) -> Result<()> {
    (n % 2 == 1)
        .then_some(())
        .ok_or(ConstructionError::OddOrderRequired { n })
}

fn param(name: &'static str, value: usize, min: usize, max: usize) -> Result<usize> {
    if value < min || value > max {
        return Err(ConstructionError::ParamOutOfRange {
            name,
            value,
            min,
            max,
        });
    }
    Ok(value)
}

/// Complete graph on any order, including the degenerate orders 0 and 1.
fn clique(n: usize) -> Graph {
    let mut g = Graph::edgeless(n).expect("caller bounds the order");
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

pub fn complete(n: usize) -> Result<Graph> {
    require_order(n, 1)?;
    Ok(clique(n))
}

pub fn empty(n: usize) -> Result<Graph> {
    require_order(n, 1)?;
    Ok(Graph::edgeless(n)?)
}

pub fn path(n: usize) -> Result<Graph> {
    require_order(n, 1)?;
    let mut g = Graph::edgeless(n)?;
    for v in 1..n {
        g.add_edge_unchecked(v - 1, v);
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    require_order(n, 3)?;
    let mut g = path(n)?;
    g.add_edge_unchecked(n - 1, 0);
    Ok(g)
}

/// Star with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    require_order(n, 1)?;
    let mut g = Graph::edgeless(n)?;
    for v in 1..n {
        g.add_edge_unchecked(0, v);
    }
    Ok(g)
}

/// `(n-1)/2` independent edges plus the isolated vertex `n-1`; the sparsest
/// graph with preclusion number exactly 1.
pub fn near_pm_plus_isolated(n: usize) -> Result<Graph> {
    require_order(n, 3)?;
    require_odd(n)?;
    let mut g = Graph::edgeless(n)?;
    for i in 0..n / 2 {
        g.add_edge_unchecked(2 * i, 2 * i + 1);
    }
    Ok(g)
}

/// A partition of the edges of an even complete graph into `n-1` perfect
/// matchings.
#[derive(Debug, Clone)]
pub struct OneFactorization {
    pub host_n: usize,
    pub factors: Vec<Matching>,
}

/// Round-robin construction: fix vertex `n-1`; round `r` pairs it with `r`
/// and pairs `(r+i) mod (n-1)` with `(r-i) mod (n-1)` for the rest.
pub fn one_factorization(n: usize) -> Result<OneFactorization> {
    require_order(n, 2)?;
    require_even(n)?;
    let m = n - 1;
    let mut factors = Vec::with_capacity(m);
    for r in 0..m {
        let mut pairs = vec![(n - 1, r)];
        for i in 1..n / 2 {
            pairs.push(((r + i) % m, (r + m - i) % m));
        }
        factors.push(Matching::new(pairs).expect("round-robin pairs are disjoint"));
    }
    Ok(OneFactorization { host_n: n, factors })
}

/// A partition of the edges of an odd complete graph into `m` almost-perfect
/// matchings, each vertex missed exactly once.
#[derive(Debug, Clone)]
pub struct NearPerfectDecomposition {
    pub host_m: usize,
    pub factors: Vec<Matching>,
    pub missed: Vec<usize>,
}

/// Round-robin on an odd order: in round `r` vertex `r` sits out and
/// `(r+i) mod m` pairs with `(r-i) mod m`.
pub fn near_perfect_decomposition(m: usize) -> Result<NearPerfectDecomposition> {
    require_order(m, 3)?;
    require_odd(m)?;
    let mut factors = Vec::with_capacity(m);
    let mut missed = Vec::with_capacity(m);
    for r in 0..m {
        let pairs: Vec<(usize, usize)> = (1..=(m - 1) / 2)
            .map(|i| ((r + i) % m, (r + m - i) % m))
            .collect();
        factors.push(Matching::new(pairs).expect("round-robin pairs are disjoint"));
        missed.push(r);
    }
    Ok(NearPerfectDecomposition {
        host_m: m,
        factors,
        missed,
    })
}

/// A partition of the edges of an odd complete graph into `(n-1)/2`
/// Hamiltonian cycles.
#[derive(Debug, Clone)]
pub struct HamDecomposition {
    pub host_n: usize,
    pub cycles: Vec<EdgeSet>,
}

/// Zigzag construction: cycle `j` visits the hub `n-1` and then
/// `j, j+1, j-1, j+2, j-2, ...` over the remaining indices mod `n-1`.
pub fn ham_decomposition(n: usize) -> Result<HamDecomposition> {
    require_order(n, 3)?;
    require_odd(n)?;
    let m = n - 1;
    let mut cycles = Vec::with_capacity(m / 2);
    for j in 1..=m / 2 {
        let mut seq = Vec::with_capacity(n);
        seq.push(n - 1);
        for step in 0..m {
            let v = if step % 2 == 0 {
                (j + step / 2) % m
            } else {
                (j + m - (step + 1) / 2) % m
            };
            seq.push(v);
        }
        let mut pairs = Vec::with_capacity(n);
        for w in seq.windows(2) {
            pairs.push((w[0], w[1]));
        }
        pairs.push((seq[n - 1], seq[0]));
        cycles.push(EdgeSet::new(pairs).expect("zigzag cycle is simple"));
    }
    Ok(HamDecomposition { host_n: n, cycles })
}

/// Union of the first `k` perfect-matching factors of the even complete
/// graph; has `nk/2` edges and preclusion number `k`.
pub fn one_factor_union(n: usize, k: usize) -> Result<Graph> {
    require_order(n, 2)?;
    require_even(n)?;
    param("k", k, 0, n - 1)?;
    let fac = one_factorization(n)?;
    let mut g = Graph::edgeless(n)?;
    for factor in fac.factors.iter().take(k) {
        for (u, v) in factor.edges().iter() {
            g.add_edge_unchecked(u, v);
        }
    }
    Ok(g)
}

/// Union of the first `r` almost-perfect factors of the odd complete graph.
pub fn near_factor_union(m: usize, r: usize) -> Result<Graph> {
    require_order(m, 3)?;
    require_odd(m)?;
    param("r", r, 0, m)?;
    let dec = near_perfect_decomposition(m)?;
    let mut g = Graph::edgeless(m)?;
    for factor in dec.factors.iter().take(r) {
        for (u, v) in factor.edges().iter() {
            g.add_edge_unchecked(u, v);
        }
    }
    Ok(g)
}

/// Union of the first `c` Hamiltonian-cycle layers of the odd complete
/// graph; has `cn` edges.
pub fn ham_union(n: usize, c: usize) -> Result<Graph> {
    require_order(n, 3)?;
    require_odd(n)?;
    param("c", c, 0, (n - 1) / 2)?;
    let dec = ham_decomposition(n)?;
    let mut g = Graph::edgeless(n)?;
    for cyc in dec.cycles.iter().take(c) {
        for (u, v) in cyc.iter() {
            g.add_edge_unchecked(u, v);
        }
    }
    Ok(g)
}

/// Which canonical edge pattern to remove from the complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinusKind {
    /// The single edge (0, 1).
    OneEdge,
    /// The two edges of the path 0-1-2.
    P3,
    /// The matching (0,1), (2,3), ..., with the given number of edges.
    Matching(usize),
}

pub fn complete_minus(n: usize, kind: MinusKind) -> Result<Graph> {
    require_order(n, 3)?;
    let mut g = clique(n);
    match kind {
        MinusKind::OneEdge => g.remove_edge_unchecked(0, 1),
        MinusKind::P3 => {
            g.remove_edge_unchecked(0, 1);
            g.remove_edge_unchecked(1, 2);
        }
        MinusKind::Matching(t) => {
            param("t", t, 0, n / 2)?;
            for i in 0..t {
                g.remove_edge_unchecked(2 * i, 2 * i + 1);
            }
        }
    }
    Ok(g)
}

/// The densest connected graph of the given order whose preclusion number
/// still falls short of `k`; attains the edge-threshold extremal bound.
///
/// Even order: the join of a `(k-1)`-clique with a `(n-k)`-clique plus one
/// extra vertex. Odd order: a `(n-2)`-clique plus two outside vertices that
/// share `k-1` attachment edges, the first taking the larger half.
pub fn f_witness(n: usize, k: usize) -> Result<Graph> {
    if n % 2 == 0 {
        require_order(n, 2)?;
        param("k", k, 1, n - 1)?;
        let inner = clique(n - k).disjoint_union(&clique(1))?;
        Ok(clique(k - 1).join(&inner)?)
    } else {
        require_order(n, 3)?;
        param("k", k, 2, 2 * n - 3)?;
        let u = n - 2;
        let v = n - 1;
        let u_share = (k - 1).div_ceil(2);
        let v_share = (k - 1) / 2;
        let mut g = clique(n - 2).disjoint_union(&Graph::edgeless(2)?)?;
        for t in 0..u_share {
            g.add_edge_unchecked(u, t);
        }
        for t in 0..v_share {
            g.add_edge_unchecked(v, t);
        }
        Ok(g)
    }
}

/// A clique with five satellite vertices attached through vertex 0 (four
/// direct spokes and one pendant chained to the first). Both the graph and
/// its complement are connected, and neither is matchable.
pub fn clique_with_satellites(n: usize) -> Result<Graph> {
    require_order(n, 12)?;
    let mut g = clique(n - 5).disjoint_union(&Graph::edgeless(5)?)?;
    for i in 0..4 {
        g.add_edge_unchecked(0, n - 5 + i);
    }
    g.add_edge_unchecked(n - 1, n - 5);
    Ok(g)
}

/// Union of `r` almost-perfect factors on `n-1` vertices plus a universal
/// vertex: preclusion number exactly `r` while the complement keeps an
/// isolated vertex.
pub fn universal_plus_factors(n: usize, r: usize) -> Result<Graph> {
    require_order(n, 4)?;
    require_even(n)?;
    param("r", r, 1, n - 1)?;
    let rim = near_factor_union(n - 1, r)?;
    let mut g = rim.disjoint_union(&Graph::edgeless(1)?)?;
    for v in 0..n - 1 {
        g.add_edge_unchecked(n - 1, v);
    }
    Ok(g)
}

impl OneFactorization {
    /// Checks the defining properties: every factor is a perfect matching,
    /// factors are pairwise edge-disjoint, and they cover the complete graph.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.host_n;
        if self.factors.len() != n - 1 {
            return Err(format!(
                "expected {} factors, found {}",
                n - 1,
                self.factors.len()
            ));
        }
        let mut seen = EdgeCover::new(n);
        for (i, f) in self.factors.iter().enumerate() {
            if 2 * f.size() != n {
                return Err(format!("factor {i} is not perfect"));
            }
            seen.absorb(f.edges(), i)?;
        }
        seen.expect_complete()
    }
}

impl NearPerfectDecomposition {
    pub fn validate(&self) -> std::result::Result<(), String> {
        let m = self.host_m;
        if self.factors.len() != m || self.missed.len() != m {
            return Err("wrong factor or missed-vertex count".to_string());
        }
        let mut missed_seen = vec![false; m];
        let mut seen = EdgeCover::new(m);
        for (i, f) in self.factors.iter().enumerate() {
            if 2 * f.size() != m - 1 {
                return Err(format!("factor {i} is not almost-perfect"));
            }
            let miss = self.missed[i];
            if f.covers(miss) {
                return Err(format!("factor {i} covers its own missed vertex {miss}"));
            }
            if missed_seen[miss] {
                return Err(format!("vertex {miss} missed twice"));
            }
            missed_seen[miss] = true;
            seen.absorb(f.edges(), i)?;
        }
        seen.expect_complete()
    }
}

impl HamDecomposition {
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.host_n;
        if self.cycles.len() != (n - 1) / 2 {
            return Err(format!(
                "expected {} cycles, found {}",
                (n - 1) / 2,
                self.cycles.len()
            ));
        }
        let mut seen = EdgeCover::new(n);
        for (i, c) in self.cycles.iter().enumerate() {
            if c.len() != n {
                return Err(format!("cycle {i} has {} edges, expected {n}", c.len()));
            }
            let g = Graph::new(n, c).map_err(|e| e.to_string())?;
            if (0..n).any(|v| g.degree(v) != 2) {
                return Err(format!("cycle {i} is not 2-regular"));
            }
            if !g.is_connected() {
                return Err(format!("cycle {i} is not a single cycle"));
            }
            seen.absorb(c, i)?;
        }
        seen.expect_complete()
    }
}

/// Tracks which host edges have been used by which factor.
struct EdgeCover {
    n: usize,
    used: Vec<Option<usize>>,
}

impl EdgeCover {
    fn new(n: usize) -> Self {
        EdgeCover {
            n,
            used: vec![None; n * n],
        }
    }

    fn absorb(&mut self, edges: &EdgeSet, factor: usize) -> std::result::Result<(), String> {
        for (u, v) in edges.iter() {
            if u >= self.n || v >= self.n {
                return Err(format!("edge ({u}, {v}) outside host of order {}", self.n));
            }
            let slot = &mut self.used[u * self.n + v];
            if let Some(prev) = *slot {
                return Err(format!(
                    "edge ({u}, {v}) used by factors {prev} and {factor}"
                ));
            }
            *slot = Some(factor);
        }
        Ok(())
    }

    fn expect_complete(&self) -> std::result::Result<(), String> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.used[u * self.n + v].is_none() {
                    return Err(format!("edge ({u}, {v}) not covered"));
                }
            }
        }
        Ok(())
    }
}
