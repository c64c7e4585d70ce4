//! Backtracking search for induced-subgraph embeddings.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};

/// Default cap on the pattern size for [`find_induced_embedding`].
pub const DEFAULT_SEARCH_CAP: usize = 10;

/// Finds an injective map phi with pattern u~v iff host phi(u)~phi(v), or
/// `None` if no such map exists. Pattern vertices are assigned in ascending
/// index order and host candidates tried in ascending order, so the first
/// witness found is deterministic.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Result<Option<VertexMap>> {
    find_induced_embedding_with_cap(pattern, host, DEFAULT_SEARCH_CAP)
}

pub fn find_induced_embedding_with_cap(
    pattern: &Graph,
    host: &Graph,
    cap: usize,
) -> Result<Option<VertexMap>> {
    if pattern.n() > cap {
        return Err(Error::SearchCapExceeded {
            size: pattern.n(),
            cap,
        });
    }
    let mut assignment = Vec::with_capacity(pattern.n());
    let mut used = FixedBitSet::with_capacity(host.n());
    if backtrack(pattern, host, &mut assignment, &mut used) {
        Ok(Some(VertexMap::new(assignment)))
    } else {
        Ok(None)
    }
}

fn backtrack(
    pattern: &Graph,
    host: &Graph,
    assignment: &mut Vec<usize>,
    used: &mut FixedBitSet,
) -> bool {
    let k = assignment.len();
    if k == pattern.n() {
        return true;
    }
    for cand in 0..host.n() {
        if used.contains(cand) {
            continue;
        }
        let consistent = (0..k).all(|j| pattern.has_edge(j, k) == host.has_edge(assignment[j], cand));
        if !consistent {
            continue;
        }
        assignment.push(cand);
        used.insert(cand);
        if backtrack(pattern, host, assignment, used) {
            return true;
        }
        assignment.pop();
        used.remove(cand);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn c4_has_no_induced_2k2() {
        assert!(find_induced_embedding(&two_k2(), &Graph::cycle(4))
            .unwrap()
            .is_none());
    }

    #[test]
    fn p3_in_c4() {
        let found = find_induced_embedding(&Graph::path(3), &Graph::cycle(4)).unwrap();
        let map = found.expect("C4 contains an induced P3");
        // deterministic first witness: 1-0-3 is the first path through vertex 0
        let g = Graph::cycle(4);
        assert!(g.has_edge(map.image(0), map.image(1)));
        assert!(g.has_edge(map.image(1), map.image(2)));
        assert!(!g.has_edge(map.image(0), map.image(2)));
    }

    #[test]
    fn cap_is_enforced() {
        let big = Graph::empty(11);
        let host = Graph::empty(12);
        assert!(matches!(
            find_induced_embedding(&big, &host),
            Err(Error::SearchCapExceeded { .. })
        ));
        assert!(find_induced_embedding_with_cap(&big, &host, 12)
            .unwrap()
            .is_some());
    }

    /// Independent oracle: try every injective map by brute force.
    fn exists_by_enumeration(pattern: &Graph, host: &Graph) -> bool {
        fn rec(pattern: &Graph, host: &Graph, partial: &mut Vec<usize>) -> bool {
            if partial.len() == pattern.n() {
                return (0..pattern.n()).all(|i| {
                    (0..pattern.n())
                        .all(|j| pattern.has_edge(i, j) == host.has_edge(partial[i], partial[j]))
                });
            }
            for cand in 0..host.n() {
                if partial.contains(&cand) {
                    continue;
                }
                partial.push(cand);
                if rec(pattern, host, partial) {
                    return true;
                }
                partial.pop();
            }
            false
        }
        rec(pattern, host, &mut Vec::new())
    }

    #[test]
    fn agrees_with_exhaustive_enumeration() {
        // all patterns on 4 vertices vs a spread of hosts on up to 8 vertices
        let hosts = vec![
            Graph::cycle(8),
            Graph::path(7),
            Graph::complete(6),
            Graph::star(5),
            crate::graph::random_graph(8, 99),
            crate::graph::random_graph(8, 123),
        ];
        for mask in 0u32..64 {
            let mut pattern = Graph::empty(4);
            let mut bit = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    if mask & (1 << bit) != 0 {
                        pattern.add_edge(i, j).unwrap();
                    }
                    bit += 1;
                }
            }
            for host in &hosts {
                let fast = find_induced_embedding(&pattern, host).unwrap().is_some();
                let slow = exists_by_enumeration(&pattern, host);
                assert_eq!(fast, slow, "disagreement on pattern mask {mask}");
            }
        }
    }

    #[test]
    fn witness_is_induced() {
        let host = crate::graph::random_graph(8, 5);
        let pattern = Graph::path(4);
        if let Some(map) = find_induced_embedding(&pattern, &host).unwrap() {
            for i in 0..4 {
                for j in 0..4 {
                    assert_eq!(
                        pattern.has_edge(i, j),
                        host.has_edge(map.image(i), map.image(j))
                    );
                }
            }
        }
    }
}
