//! Finite simple undirected graphs with canonical vertex indexing 0..n-1.

mod extension;
mod format;
mod intersection;
mod search;

pub use extension::{extension_property_check, random_graph, ExtensionOutcome};
pub(crate) use format::to_dot;
pub use format::{parse_graph, serialize_graph, GraphFormat};
pub use intersection::{intersection_graph, intersection_representation, SetFamily};
pub use search::{find_induced_embedding, find_induced_embedding_with_cap, DEFAULT_SEARCH_CAP};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite simple undirected graph. Vertices are `0..n`; adjacency is
/// symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list. Rejects self-loops and out-of-range
    /// endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.adj[u - 1].insert(u);
            g.adj[u].insert(u - 1);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.adj[0].insert(n - 1);
            g.adj[n - 1].insert(0);
        }
        g
    }

    /// The star K_{1,leaves} with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.adj[0].insert(v);
            g.adj[v].insert(0);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Validation(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Validation(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].ones()
    }

    /// Neighborhood of `u` as a bitset (not including `u`).
    pub fn neighbor_set(&self, u: usize) -> &FixedBitSet {
        &self.adj[u]
    }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].ones() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    /// u ~ v in the output iff u != v and u is not adjacent to v here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u].contains(v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    /// The subgraph induced on `vs`; vertex i of the result is vs[i].
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        for &v in vs {
            if v >= self.n {
                return Err(Error::Validation(format!(
                    "vertex {v} out of range for {} vertices",
                    self.n
                )));
            }
            if seen.contains(v) {
                return Err(Error::Validation(format!("duplicate vertex {v}")));
            }
            seen.insert(v);
        }
        let mut g = Graph::empty(vs.len());
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.adj[vs[i]].contains(vs[j]) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok(g)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        ds.sort_unstable();
        ds
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An injective map from the vertices of a source graph into a target graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    entries: Vec<usize>,
}

impl VertexMap {
    pub fn new(entries: Vec<usize>) -> Self {
        VertexMap { entries }
    }

    pub fn image(&self, v: usize) -> usize {
        self.entries[v]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        // C4 -> 2K2
        let c4 = Graph::cycle(4);
        let co = c4.complement();
        assert_eq!(co.edges(), vec![(0, 2), (1, 3)]);
        // K_n -> empty
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
        // involution on P4
        let p4 = Graph::path(4);
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.induced_subgraph(&[0, 1, 2, 3]).unwrap(), c4);
        let p4 = Graph::path(4);
        assert_eq!(p4.induced_subgraph(&[0, 3]).unwrap(), Graph::empty(2));
        let k4 = Graph::complete(4);
        assert_eq!(k4.induced_subgraph(&[1, 2, 3]).unwrap(), Graph::complete(3));
    }

    #[test]
    fn induced_subgraph_rejects_bad_input() {
        let g = Graph::path(3);
        assert!(g.induced_subgraph(&[0, 0]).is_err());
        assert!(g.induced_subgraph(&[0, 7]).is_err());
    }

    #[test]
    fn self_loop_rejected() {
        let mut g = Graph::empty(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
    }
}
