//! Maximum matchings, matchability classification and deficiency witnesses.
//!
//! The engine is a blossom-shrinking augmenting-path search with a fixed
//! exploration order (lowest free vertex first, neighbours in index order),
//! so results are reproducible. Witness structure is derived from the
//! engine only through matching sizes, never from its internals.

use crate::graph::{BitIter, EdgeSet, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: EdgeSet,
    covered: u64,
}

impl Matching {
    /// Builds a matching from explicit pairs, rejecting shared endpoints.
    pub fn new<I>(pairs: I) -> Result<Self, crate::graph::GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges = EdgeSet::new(pairs)?;
        let mut covered = 0u64;
        for (u, v) in edges.iter() {
            let bits = 1 << u | 1 << v;
            if covered & bits != 0 {
                let shared = if covered >> u & 1 == 1 { u } else { v };
                return Err(crate::graph::GraphError::DuplicateVertex { v: shared });
            }
            covered |= bits;
        }
        Ok(Matching { edges, covered })
    }

    fn from_mates(mate: &[usize]) -> Self {
        let mut pairs = Vec::new();
        let mut covered = 0u64;
        for (v, &m) in mate.iter().enumerate() {
            if m != NONE {
                covered |= 1 << v;
                if v < m {
                    pairs.push((v, m));
                }
            }
        }
        pairs.sort_unstable();
        Matching {
            edges: EdgeSet::from_sorted_unchecked(pairs),
            covered,
        }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn covered_mask(&self) -> u64 {
        self.covered
    }

    pub fn covers(&self, v: usize) -> bool {
        self.covered >> v & 1 == 1
    }

    pub fn covered(&self) -> Vec<usize> {
        BitIter(self.covered).collect()
    }
}

/// Whether a graph carries a perfect matching, an almost-perfect matching,
/// or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchClass {
    Perfect,
    AlmostPerfect { missed: usize },
    Neither,
}

impl MatchClass {
    pub fn is_matchable(self) -> bool {
        !matches!(self, MatchClass::Neither)
    }
}

/// A vertex set `S` together with the number of odd components of `G - S`;
/// `excess = o(G - S) - |S|` measures how badly `S` violates the matching
/// conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyWitness {
    pub s: Vec<usize>,
    pub odd_components: usize,
    pub excess: usize,
}

/// The canonical partition of the vertex set: `d` holds the vertices missed
/// by at least one maximum matching, `a` their outside neighbours, `c` the
/// rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiEdmonds {
    pub d: Vec<usize>,
    pub a: Vec<usize>,
    pub c: Vec<usize>,
}

/// Maximum matching via blossom contraction, deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate = vec![NONE; n];
    let mut search = Search::new(n);
    for start in 0..n {
        if mate[start] == NONE {
            if let Some(finish) = search.augmenting_path(g, &mate, start) {
                augment(&mut mate, &search.parent, finish);
            }
        }
    }
    Matching::from_mates(&mate)
}

/// Number of vertices missed by a maximum matching.
pub fn deficiency(g: &Graph) -> usize {
    g.order() - 2 * maximum_matching(g).size()
}

/// Classifies by parity and deficiency; the almost-perfect case records the
/// single missed vertex.
pub fn classify(g: &Graph) -> MatchClass {
    classify_with_matching(g).0
}

/// Same as [`classify`], returning the matching that settled it.
pub fn classify_with_matching(g: &Graph) -> (MatchClass, Matching) {
    let m = maximum_matching(g);
    let def = g.order() - 2 * m.size();
    let class = match (g.order() % 2, def) {
        (0, 0) => MatchClass::Perfect,
        (1, 1) => {
            let missed = (!m.covered_mask() & g.full_mask()).trailing_zeros() as usize;
            MatchClass::AlmostPerfect { missed }
        }
        _ => MatchClass::Neither,
    };
    (class, m)
}

/// Computes the canonical partition directly from the definition of `d`:
/// a vertex is in `d` iff deleting it does not reduce the maximum matching
/// size. Costs `n + 1` matching runs.
pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let n = g.order();
    let base = maximum_matching(g).size();
    let full = g.full_mask();
    let mut d_mask = 0u64;
    for v in 0..n {
        let (h, _) = g.keep_mask(full & !(1 << v));
        if maximum_matching(&h).size() == base {
            d_mask |= 1 << v;
        }
    }
    let mut a_mask = 0u64;
    for v in BitIter(d_mask) {
        a_mask |= g.neighbors_mask(v);
    }
    a_mask &= !d_mask;
    let c_mask = full & !d_mask & !a_mask;
    GallaiEdmonds {
        d: BitIter(d_mask).collect(),
        a: BitIter(a_mask).collect(),
        c: BitIter(c_mask).collect(),
    }
}

/// Maximum-excess witness: the `a` part of the canonical partition. Its
/// excess equals the deficiency, so it certifies the maximum matching size.
pub fn tutte_berge_witness(g: &Graph) -> DeficiencyWitness {
    let ge = gallai_edmonds(g);
    let s_mask = ge.a.iter().fold(0u64, |m, &v| m | 1 << v);
    let odd_components = g.odd_components_excluding(s_mask);
    DeficiencyWitness {
        odd_components,
        excess: odd_components - ge.a.len(),
        s: ge.a,
    }
}

struct Search {
    parent: Vec<usize>,
    base: Vec<usize>,
    queue: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_seen: Vec<bool>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            queue: Vec::with_capacity(n),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            lca_seen: vec![false; n],
        }
    }

    fn augmenting_path(&mut self, g: &Graph, mate: &[usize], start: usize) -> Option<usize> {
        let n = g.order();
        self.parent.fill(NONE);
        self.in_tree.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.queue.push(start);
        self.in_tree[start] = true;
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for u in g.neighbors(v) {
                if self.base[u] == self.base[v] || mate[v] == u {
                    continue;
                }
                if u == start || (mate[u] != NONE && self.parent[mate[u]] != NONE) {
                    // Even vertex on both ends: an odd cycle closed, contract it.
                    let b = self.lca(mate, v, u);
                    self.in_blossom.fill(false);
                    self.mark_path(mate, v, b, u);
                    self.mark_path(mate, u, b, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = b;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[u] == NONE {
                    self.parent[u] = v;
                    if mate[u] == NONE {
                        return Some(u);
                    }
                    let w = mate[u];
                    if !self.in_tree[w] {
                        self.in_tree[w] = true;
                        self.queue.push(w);
                    }
                }
            }
        }
        None
    }

    fn lca(&mut self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        self.lca_seen.fill(false);
        loop {
            a = self.base[a];
            self.lca_seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }
}

fn augment(mate: &mut [usize], parent: &[usize], mut v: usize) {
    while v != NONE {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
}
