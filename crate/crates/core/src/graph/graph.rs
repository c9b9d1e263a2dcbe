use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::algebra::Monomial;
use crate::error::{Error, Result};
use crate::ideal::{minimal_transversals, MonomialIdeal, PolynomialRing};

/// Largest supported vertex count; vertex sets are `u64` masks.
pub const MAX_VERTICES: usize = 64;
/// Largest supported edge count; edge sets are `u128` masks.
pub const MAX_EDGES: usize = 128;

/// A finite simple graph on vertices `0..n`, shown to users as `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from 0-based edges. Endpoints are reordered and edges
    /// sorted; loops, duplicates and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Invalid(format!(
                "vertex count must be between 1 and {MAX_VERTICES}, got {n}"
            )));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Invalid(format!(
                    "edge {}-{} has an endpoint outside 1..={n}",
                    a + 1,
                    b + 1
                )));
            }
            if a == b {
                return Err(Error::Invalid(format!("loop at vertex {}", a + 1)));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::Invalid(format!(
                    "edge {}-{} listed twice",
                    a + 1,
                    b + 1
                )));
            }
        }
        if set.len() > MAX_EDGES {
            return Err(Error::Invalid(format!(
                "at most {MAX_EDGES} edges are supported"
            )));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![0u64; n];
        for &(a, b) in &edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).tuple_combinations()).expect("valid complete graph")
    }

    /// The cycle `1-2-...-n-1`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Invalid(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `1-2-...-n`.
    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Vertex 1 joined to `leaves` further vertices.
    pub fn star(leaves: usize) -> Result<Self> {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .tuple_combinations()
            .filter(|&(a, b)| !self.has_edge(a, b));
        Graph::new(self.n, edges).expect("complement of a valid graph")
    }

    /// Builds a graph from an edge bitmask over the lexicographic pairs of `0..n`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let edges = (0..n)
            .tuple_combinations()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| e);
        Graph::new(n, edges).expect("valid pair mask")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted 0-based pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// `N(i)` as a vertex mask.
    pub fn neighbours(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn edge_mask(&self, e: usize) -> u64 {
        let (a, b) = self.edges[e];
        1 << a | 1 << b
    }

    pub fn is_independent(&self, vertices: u64) -> bool {
        (0..self.n).all(|i| vertices >> i & 1 == 0 || self.adj[i] & vertices == 0)
    }

    /// `E(i)`: indices of the edges not containing `i` that meet `N(i)`.
    pub fn edge_neighbourhood(&self, i: usize) -> Vec<usize> {
        let nb = self.adj[i];
        (0..self.edges.len())
            .filter(|&e| {
                let m = self.edge_mask(e);
                m >> i & 1 == 0 && m & nb != 0
            })
            .collect()
    }

    /// Number of edges of `G \ N[i]`.
    pub fn edges_outside_closed_neighbourhood(&self, i: usize) -> usize {
        let closed = self.adj[i] | 1 << i;
        (0..self.edges.len())
            .filter(|&e| self.edge_mask(e) & closed == 0)
            .count()
    }

    /// `I(G)` in `K[x1, ..., xn]`; the zero ideal when there are no edges.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let ring = PolynomialRing::standard(self.n);
        MonomialIdeal::new(
            &ring,
            (0..self.edges.len()).map(|e| Monomial::from_mask(self.edge_mask(e))),
        )
    }

    /// `c_G`, the minimum size of a vertex cover.
    pub fn vertex_cover_number(&self) -> usize {
        let masks: Vec<u64> = (0..self.edges.len()).map(|e| self.edge_mask(e)).collect();
        minimal_transversals(&masks)
            .iter()
            .map(|t| t.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    /// Canonical form under vertex relabeling: the smallest pair mask over
    /// all permutations. Only for `n <= 8`.
    pub fn canonical_mask(&self) -> u64 {
        assert!(
            self.n <= 8,
            "canonical form is only computed for small graphs"
        );
        let pair_index = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            a * (2 * self.n - a - 1) / 2 + (b - a - 1)
        };
        (0..self.n)
            .permutations(self.n)
            .map(|p| {
                self.edges
                    .iter()
                    .fold(0u64, |acc, &(a, b)| acc | 1 << pair_index(p[a], p[b]))
            })
            .min()
            .unwrap_or(0)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices: {}; edges: ", self.n)?;
        let shown = self
            .edges
            .iter()
            .map(|&(a, b)| format!("{}-{}", a + 1, b + 1))
            .join(", ");
        f.write_str(&shown)
    }
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices with at least one edge, `n <= 6`.
pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
    assert!(
        n <= 6,
        "isomorphism classes are enumerated only up to 6 vertices"
    );
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 1..(1u64 << pairs) {
        let g = Graph::from_pair_mask(n, mask);
        if seen.insert(g.canonical_mask()) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(Graph::complete(4).num_edges(), 6);
        assert_eq!(Graph::cycle(5).unwrap().num_edges(), 5);
        assert_eq!(Graph::path(4).unwrap().num_edges(), 3);
        assert_eq!(Graph::star(3).unwrap().degree(0), 3);
        assert_eq!(
            Graph::cycle(4).unwrap().complement().edges(),
            &[(0, 2), (1, 3)]
        );
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn edge_ideals() {
        assert_eq!(
            Graph::complete(3).edge_ideal().to_string(),
            "(x1*x2, x1*x3, x2*x3)"
        );
        assert_eq!(
            Graph::path(3).unwrap().edge_ideal().to_string(),
            "(x1*x2, x2*x3)"
        );
        assert_eq!(
            Graph::cycle(4).unwrap().edge_ideal().to_string(),
            "(x1*x2, x1*x4, x2*x3, x3*x4)"
        );
    }

    #[test]
    fn edge_neighbourhoods() {
        let p = Graph::path(3).unwrap();
        assert!(p.edge_neighbourhood(1).is_empty());
        assert_eq!(p.edge_neighbourhood(0), vec![1]);
        let k3 = Graph::complete(3);
        for i in 0..3 {
            let e = k3.edge_neighbourhood(i);
            assert_eq!(e.len(), 1);
            assert_eq!(k3.edge_mask(e[0]) >> i & 1, 0);
        }
    }

    #[test]
    fn cover_numbers() {
        assert_eq!(Graph::complete(4).vertex_cover_number(), 3);
        assert_eq!(Graph::cycle(5).unwrap().vertex_cover_number(), 3);
        assert_eq!(Graph::star(4).unwrap().vertex_cover_number(), 1);
    }

    #[test]
    fn class_counts() {
        // Graphs with at least one edge on exactly n vertices, up to isomorphism.
        let counts: Vec<usize> = (2..=5).map(|n| isomorphism_classes(n).len()).collect();
        assert_eq!(counts, [1, 3, 10, 33]);
    }
}
