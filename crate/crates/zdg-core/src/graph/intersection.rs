//! Intersection representations of graphs.
//!
//! Every vertex of the non-degenerate part is represented by its set of
//! incident edges; isolated vertices get one fresh point each, the two ends
//! of an isolated edge get {q} and {q, r}, and one sentinel point belongs to
//! no set at all, so every represented set is a proper subset of the ground
//! set.

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// A family of subsets of a ground set {0..ground_size-1}, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    pub ground_size: usize,
    pub sets: Vec<FixedBitSet>,
}

impl SetFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Human-readable set, e.g. "{0,2}".
    pub fn set_text(&self, i: usize) -> String {
        let elems: Vec<String> = self.sets[i].ones().map(|p| p.to_string()).collect();
        format!("{{{}}}", elems.join(","))
    }
}

/// Builds a set family whose intersection graph is exactly `h`.
pub fn intersection_representation(h: &Graph) -> SetFamily {
    let n = h.n();

    // classify: isolated vertices, isolated edges (components that are a
    // single edge), and the rest
    let mut isolated_vertices = Vec::new();
    let mut isolated_edge_of = vec![None; n];
    let mut isolated_edges = Vec::new();
    for v in 0..n {
        if h.degree(v) == 0 {
            isolated_vertices.push(v);
        }
    }
    for (u, v) in h.edges() {
        if h.degree(u) == 1 && h.degree(v) == 1 {
            isolated_edge_of[u] = Some(isolated_edges.len());
            isolated_edge_of[v] = Some(isolated_edges.len());
            isolated_edges.push((u, v));
        }
    }

    // ground points: core edges, then one per isolated vertex, then two per
    // isolated edge, then the sentinel
    let core_edges: Vec<(usize, usize)> = h
        .edges()
        .into_iter()
        .filter(|&(u, v)| !(h.degree(u) == 1 && h.degree(v) == 1))
        .collect();
    let core_count = core_edges.len();
    let ground_size = core_count + isolated_vertices.len() + 2 * isolated_edges.len() + 1;

    let mut sets = vec![FixedBitSet::with_capacity(ground_size); n];
    for (idx, &(u, v)) in core_edges.iter().enumerate() {
        sets[u].insert(idx);
        sets[v].insert(idx);
    }
    for (k, &v) in isolated_vertices.iter().enumerate() {
        sets[v].insert(core_count + k);
    }
    let edge_base = core_count + isolated_vertices.len();
    for (k, &(u, v)) in isolated_edges.iter().enumerate() {
        let q = edge_base + 2 * k;
        let r = q + 1;
        sets[u].insert(q);
        sets[v].insert(q);
        sets[v].insert(r);
    }
    // the final point is the sentinel: contained in no set

    SetFamily { ground_size, sets }
}

/// The intersection graph of a set family: i ~ j iff the sets meet.
pub fn intersection_graph(fam: &SetFamily) -> Graph {
    let n = fam.sets.len();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if !fam.sets[i].is_disjoint(&fam.sets[j]) {
                g.add_edge(i, j).expect("indices in range, i != j");
            }
        }
    }
    g
}
