//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Vertices are dense integers `0..n`. Adjacency is stored as one machine
//! word per vertex, so neighbourhood queries, component scans and the
//! subset searches built on top of them are all bit-parallel. Graph values
//! are immutable after construction; every operation returns a new graph.

use std::fmt;
use thiserror::Error;

/// Largest supported vertex count: one `u64` bitmask row per vertex.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum of {max}", max = MAX_VERTICES)]
    TooManyVertices { n: usize },
    #[error("vertex {v} is out of range for a graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("({u}, {v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("duplicate vertex {v} in vertex list")]
    DuplicateVertex { v: usize },
}

/// A set of unordered vertex pairs with distinct endpoints.
///
/// Pairs are normalised to `(min, max)`, kept sorted and duplicate-free, so
/// two edge sets compare equal iff they contain the same edges.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct EdgeSet {
    edges: Vec<(usize, usize)>,
}

impl EdgeSet {
    pub fn new<I>(pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }
        Ok(EdgeSet { edges })
    }

    /// Builds from pairs already known to be normalised, sorted and distinct.
    pub(crate) fn from_sorted_unchecked(edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v));
        EdgeSet { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

impl From<EdgeSet> for Vec<(usize, usize)> {
    fn from(s: EdgeSet) -> Self {
        s.edges
    }
}

/// Minimum degree, maximum degree and minimum edge-degree of a graph.
///
/// The edge-degree of an edge `uv` is `deg(u) + deg(v) - 2`; its minimum
/// over all edges is absent for edgeless graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub min_edge_degree: Option<usize>,
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph of order `n` with exactly the given edges.
    pub fn new(n: usize, edges: &EdgeSet) -> Result<Self, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges.iter() {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Convenience constructor validating the pair list along the way.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let set = EdgeSet::new(pairs.iter().copied())?;
        Graph::new(n, &set)
    }

    /// The graph of order `n` with no edges.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> BitIter {
        BitIter(self.adj[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Mask with one bit per vertex of the graph.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Edges in lexicographic endpoint order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] >> (u + 1) << (u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet::from_sorted_unchecked(self.edges())
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| !row & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Removes the given edges, all of which must be present.
    pub fn delete_edges(&self, x: &EdgeSet) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for (u, v) in x.iter() {
            if !g.has_edge(u, v) {
                return Err(GraphError::NotAnEdge { u, v });
            }
            g.remove_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Removes the given vertices and relabels the rest to `0..n-|S|`,
    /// returning the order-preserving map from new labels to old ones.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mask = self.vertex_mask(s)?;
        Ok(self.keep_mask(self.full_mask() & !mask))
    }

    /// Subgraph induced by the given vertices, with the relabelling map.
    pub fn induced(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mask = self.vertex_mask(s)?;
        Ok(self.keep_mask(mask))
    }

    /// Validates a vertex list against this graph and packs it into a mask.
    pub(crate) fn vertex_mask(&self, s: &[usize]) -> Result<u64, GraphError> {
        let mut mask = 0u64;
        for &v in s {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
            if mask >> v & 1 == 1 {
                return Err(GraphError::DuplicateVertex { v });
            }
            mask |= 1 << v;
        }
        Ok(mask)
    }

    /// Induced subgraph on the vertices of `mask`, plus new-to-old labels.
    pub(crate) fn keep_mask(&self, mask: u64) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = BitIter(mask).collect();
        let mut g = Graph {
            n: keep.len(),
            adj: vec![0; keep.len()],
        };
        for (new_u, &old_u) in keep.iter().enumerate() {
            let mut row = self.adj[old_u] & mask;
            while row != 0 {
                let old_v = row.trailing_zeros() as usize;
                row &= row - 1;
                if old_v > old_u {
                    let new_v = keep.partition_point(|&x| x < old_v);
                    g.add_edge_unchecked(new_u, new_v);
                }
            }
        }
        (g, keep)
    }

    /// Disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|row| row << self.n));
        Ok(Graph { n, adj })
    }

    /// Disjoint union plus all edges between the two vertex classes.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = if self.n == 0 { 0 } else { (1u64 << self.n) - 1 };
        let right = g.full_mask() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut min_degree = usize::MAX;
        let mut max_degree = 0;
        for v in 0..self.n {
            let d = self.degree(v);
            min_degree = min_degree.min(d);
            max_degree = max_degree.max(d);
        }
        if self.n == 0 {
            min_degree = 0;
        }
        let min_edge_degree = self
            .edges()
            .into_iter()
            .map(|(u, v)| self.degree(u) + self.degree(v) - 2)
            .min();
        DegreeStats {
            min_degree,
            max_degree,
            min_edge_degree,
        }
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        self.component_masks_within(self.full_mask())
    }

    /// Components of the subgraph induced by `within`.
    pub(crate) fn component_masks_within(&self, within: u64) -> Vec<u64> {
        let mut unseen = within;
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v] & within & !comp;
                }
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            unseen &= !comp;
        }
        out
    }

    /// Number of odd-order components after removing the vertices of `s_mask`.
    pub(crate) fn odd_components_excluding(&self, s_mask: u64) -> usize {
        self.component_masks_within(self.full_mask() & !s_mask)
            .iter()
            .filter(|c| c.count_ones() % 2 == 1)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_masks().len() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.edge_count(),
            self.edges()
        )
    }
}

/// Iterator over the set bits of a mask, in increasing order.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}
