//! Seeded random graphs and the finite extension-property check.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// G(n, 1/2): each pair is an edge with probability 1/2. Pairs (i, j) with
/// i < j are drawn in lexicographic order from a ChaCha8 stream seeded with
/// `seed`, so the output is a pure function of (n, seed).
pub fn random_graph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(i, j).expect("i < j < n");
            }
        }
    }
    g
}

/// Outcome of [`extension_property_check`]: either every disjoint pair
/// (U, V) with |U| = s, |V| = t has a witness z adjacent to all of U and none
/// of V, or the lexicographically first pair without one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ExtensionOutcome {
    Pass,
    Fail { u: Vec<usize>, v: Vec<usize> },
}

impl ExtensionOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, ExtensionOutcome::Pass)
    }
}

pub fn extension_property_check(g: &Graph, s: usize, t: usize) -> Result<ExtensionOutcome> {
    let n = g.n();
    if s + t > n {
        return Err(Error::Validation(format!(
            "need s + t <= n, got s={s}, t={t}, n={n}"
        )));
    }
    let mut u_sel = first_combination(s);
    loop {
        let mut v_sel = first_combination(t);
        loop {
            if disjoint(&u_sel, &v_sel) && !has_witness(g, &u_sel, &v_sel) {
                return Ok(ExtensionOutcome::Fail {
                    u: u_sel.clone(),
                    v: v_sel.clone(),
                });
            }
            if !next_combination(&mut v_sel, n) {
                break;
            }
        }
        if !next_combination(&mut u_sel, n) {
            break;
        }
    }
    Ok(ExtensionOutcome::Pass)
}

fn has_witness(g: &Graph, u: &[usize], v: &[usize]) -> bool {
    'outer: for z in 0..g.n() {
        if u.contains(&z) || v.contains(&z) {
            continue;
        }
        for &a in u {
            if !g.has_edge(z, a) {
                continue 'outer;
            }
        }
        for &b in v {
            if g.has_edge(z, b) {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

fn first_combination(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// Advances `sel` to the next k-subset of {0..n-1} in lexicographic order.
fn next_combination(sel: &mut [usize], n: usize) -> bool {
    let k = sel.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if sel[i] < n - (k - i) {
            sel[i] += 1;
            for j in i + 1..k {
                sel[j] = sel[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graph_deterministic() {
        assert_eq!(random_graph(0, 7), Graph::empty(0));
        assert_eq!(random_graph(5, 42), random_graph(5, 42));
        assert_ne!(random_graph(8, 1), random_graph(8, 2));
    }

    #[test]
    fn random_graph_density() {
        // edge density over 10^4 samples of n=10 within 0.5 +/- 0.02
        let mut edges = 0usize;
        let samples = 10_000usize;
        for seed in 0..samples {
            edges += random_graph(10, seed as u64).edge_count();
        }
        let density = edges as f64 / (samples as f64 * 45.0);
        assert!((density - 0.5).abs() < 0.02, "density {density}");
    }

    #[test]
    fn k2_extension_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(
            extension_property_check(&k2, 1, 0).unwrap(),
            ExtensionOutcome::Pass
        );
        assert_eq!(
            extension_property_check(&k2, 0, 1).unwrap(),
            ExtensionOutcome::Fail { u: vec![], v: vec![0] }
        );
    }

    #[test]
    fn precondition_enforced() {
        assert!(extension_property_check(&Graph::complete(2), 2, 1).is_err());
    }

    #[test]
    fn g24_regression() {
        // frozen verdicts for G(24, 1/2) samples at s = t = 1
        let g = random_graph(24, 1);
        assert_eq!(
            extension_property_check(&g, 1, 1).unwrap(),
            ExtensionOutcome::Fail { u: vec![7], v: vec![1] }
        );
        let g = random_graph(24, 2);
        assert_eq!(
            extension_property_check(&g, 1, 1).unwrap(),
            ExtensionOutcome::Pass
        );
    }

    #[test]
    fn exhaustive_oracle_agreement() {
        // independent check: directly enumerate ordered pairs of disjoint
        // subsets and compare the verdict
        let g = random_graph(7, 3);
        for s in 0..=2 {
            for t in 0..=2 {
                let fast = extension_property_check(&g, s, t).unwrap().passed();
                let slow = slow_check(&g, s, t);
                assert_eq!(fast, slow, "s={s}, t={t}");
            }
        }
    }

    fn slow_check(g: &Graph, s: usize, t: usize) -> bool {
        let n = g.n();
        let subsets = |k: usize| -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut stack = vec![(Vec::new(), 0usize)];
            while let Some((cur, start)) = stack.pop() {
                if cur.len() == k {
                    out.push(cur);
                    continue;
                }
                for x in start..n {
                    let mut next = cur.clone();
                    next.push(x);
                    stack.push((next, x + 1));
                }
            }
            out
        };
        for u in subsets(s) {
            for v in subsets(t) {
                if !disjoint(&u, &v) {
                    continue;
                }
                if !has_witness(g, &u, &v) {
                    return false;
                }
            }
        }
        true
    }
}
