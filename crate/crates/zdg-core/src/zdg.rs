//! Zero-divisor graphs and ring-theoretic threshold tests.
//!
//! The zero-divisor graph of a ring has the nonzero zero-divisors as
//! vertices, with a ~ b whenever a != b and ab = 0.

use fixedbitset::FixedBitSet;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{serialize_graph, Graph, GraphFormat};
use crate::ring::{Element, Ring};
use crate::threshold::{recognize_threshold, ThresholdOutcome};

/// A graph whose vertices carry ring-element labels (injective, and every
/// labeled element is a zero-divisor of the source ring).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn to_dot(&self) -> String {
        crate::graph::to_dot(&self.graph, Some(&self.labels))
    }
}

impl Serialize for LabeledGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LabeledGraph", 2)?;
        s.serialize_field("graph6", &serialize_graph(&self.graph, GraphFormat::Graph6))?;
        s.serialize_field("labels", &self.labels)?;
        s.end()
    }
}

/// Computes the zero-divisor graph. Vertices appear in ring enumeration
/// order.
pub fn zero_divisor_graph(ring: &Ring, cap: u64) -> Result<LabeledGraph> {
    if let Ring::Modular(m) = ring {
        if let Some(n) = m.modulus_u64() {
            if n <= cap {
                return Ok(zdg_modular_u64(n));
            }
        }
    }
    let count = ring.checked_count(cap)?;
    let zero = ring.zero();
    let nonzero: Vec<(u64, Element)> = (1..count).map(|i| (i, ring.element_at(i))).collect();

    // product-zero relation over nonzero elements, including squares
    let m = nonzero.len();
    let mut zero_products = vec![FixedBitSet::with_capacity(m); m];
    for i in 0..m {
        if ring.mul(&nonzero[i].1, &nonzero[i].1)? == zero {
            zero_products[i].insert(i);
        }
        for j in i + 1..m {
            if ring.mul(&nonzero[i].1, &nonzero[j].1)? == zero {
                zero_products[i].insert(j);
                zero_products[j].insert(i);
            }
        }
    }

    let vertex_ids: Vec<usize> = (0..m)
        .filter(|&i| zero_products[i].count_ones(..) > 0)
        .collect();
    let mut graph = Graph::empty(vertex_ids.len());
    let mut labels = Vec::with_capacity(vertex_ids.len());
    for (gi, &i) in vertex_ids.iter().enumerate() {
        labels.push(ring.to_text(&nonzero[i].1)?);
        for (gj, &j) in vertex_ids.iter().enumerate().skip(gi + 1) {
            if zero_products[i].contains(j) {
                graph.add_edge(gi, gj)?;
            }
        }
    }
    Ok(LabeledGraph { graph, labels })
}

/// u64 fast path for Z_n: a is a zero-divisor iff gcd(a, n) > 1.
fn zdg_modular_u64(n: u64) -> LabeledGraph {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    let divisors: Vec<u64> = (1..n).filter(|&a| gcd(a, n) > 1).collect();
    let mut graph = Graph::empty(divisors.len());
    let mut labels = Vec::with_capacity(divisors.len());
    for (i, &a) in divisors.iter().enumerate() {
        labels.push(a.to_string());
        for (j, &b) in divisors.iter().enumerate().skip(i + 1) {
            if (a as u128 * b as u128) % n as u128 == 0 {
                graph.add_edge(i, j).expect("distinct in-range vertices");
            }
        }
    }
    LabeledGraph { graph, labels }
}

// ---------------------------------------------------------------------------
// Annihilator conditions
// ---------------------------------------------------------------------------

/// A pair of zero-divisors failing a condition as literally stated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRef {
    pub x: String,
    pub y: String,
}

/// Four distinct zero-divisors {x, a, y, b} inducing a forbidden pattern,
/// derived from a condition violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenQuad {
    pub x: String,
    pub y: String,
    pub a: String,
    pub b: String,
    pub pattern: crate::threshold::ForbiddenPattern,
}

/// Per-condition outcome. `literal_violation` is the first pair where the
/// condition fails as stated; `forbidden` is the first violation that also
/// yields four distinct vertices inducing C4, P4 or 2K2 (only the latter
/// implies the graph is not threshold: with fewer than four distinct
/// elements involved, a failing condition says nothing).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConditionOutcome {
    pub literal_violation: Option<PairRef>,
    pub forbidden: Option<ForbiddenQuad>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AnnThresholdReport {
    pub intersection: ConditionOutcome, // (a) Ann(x) ∩ Ann(y) != {0}
    pub comparability: ConditionOutcome, // (b) Ann(x) ⊆ Ann(y) or vice versa
    pub clique: ConditionOutcome,       // (c) smaller annihilator induces a clique
    pub cross_products: ConditionOutcome, // (d) Ann(x) * (Ann(y) \ Ann(x)) = 0
}

impl AnnThresholdReport {
    /// No violation produced a forbidden four-vertex configuration.
    pub fn forbidden_free(&self) -> bool {
        self.intersection.forbidden.is_none()
            && self.comparability.forbidden.is_none()
            && self.clique.forbidden.is_none()
            && self.cross_products.forbidden.is_none()
    }

    /// Every condition holds as literally stated.
    pub fn literal_pass(&self) -> bool {
        self.intersection.literal_violation.is_none()
            && self.comparability.literal_violation.is_none()
            && self.clique.literal_violation.is_none()
            && self.cross_products.literal_violation.is_none()
    }

    pub fn first_forbidden(&self) -> Option<&ForbiddenQuad> {
        [
            &self.intersection,
            &self.comparability,
            &self.clique,
            &self.cross_products,
        ]
        .into_iter()
        .find_map(|c| c.forbidden.as_ref())
    }
}

/// Evaluates the four annihilator conditions over every pair of distinct
/// zero-divisors, scanned in enumeration order.
pub fn ann_threshold_conditions(ring: &Ring, cap: u64) -> Result<AnnThresholdReport> {
    let count = ring.checked_count(cap)?;
    let zero = ring.zero();
    let elements: Vec<Element> = (0..count).map(|i| ring.element_at(i)).collect();
    let n = elements.len();

    // zero_products[i] = indices j with elements[i] * elements[j] = 0
    let mut zero_products = vec![FixedBitSet::with_capacity(n); n];
    for i in 0..n {
        zero_products[i].insert(0);
        zero_products[0].insert(i);
        if i == 0 {
            continue;
        }
        if ring.mul(&elements[i], &elements[i])? == zero {
            zero_products[i].insert(i);
        }
        for j in i + 1..n {
            if ring.mul(&elements[i], &elements[j])? == zero {
                zero_products[i].insert(j);
                zero_products[j].insert(i);
            }
        }
    }
    // every zero_products[i] contains index 0; a nonzero element is a
    // zero-divisor iff something else annihilates it too
    let zds: Vec<usize> = (1..n)
        .filter(|&i| zero_products[i].count_ones(..) > 1)
        .collect();

    let text = |i: usize| ring.to_text(&elements[i]);
    let mut report = AnnThresholdReport::default();

    for (pi, &xi) in zds.iter().enumerate() {
        for &yi in &zds[pi + 1..] {
            let ann_x = &zero_products[xi];
            let ann_y = &zero_products[yi];

            // shared helper: witnesses a in Ann(x)\Ann(y), b in Ann(y)\Ann(x),
            // both nonzero and distinct from x and y
            let side_witness = |ann_small: &FixedBitSet, ann_large: &FixedBitSet| {
                let mut s = ann_small.clone();
                s.difference_with(ann_large);
                s.remove(0);
                s.remove(xi);
                s.remove(yi);
                s.ones().next()
            };

            // (a) intersection condition
            let mut inter = ann_x.clone();
            inter.intersect_with(ann_y);
            inter.remove(0);
            if inter.count_ones(..) == 0 {
                if report.intersection.literal_violation.is_none() {
                    report.intersection.literal_violation = Some(PairRef {
                        x: text(xi)?,
                        y: text(yi)?,
                    });
                }
                if report.intersection.forbidden.is_none() {
                    if let (Some(a), Some(b)) =
                        (side_witness(ann_x, ann_y), side_witness(ann_y, ann_x))
                    {
                        report.intersection.forbidden = Some(quad(
                            ring,
                            &elements,
                            &zero_products,
                            xi,
                            yi,
                            a,
                            b,
                        )?);
                    }
                }
            }

            // (b) comparability condition
            if !ann_x.is_subset(ann_y) && !ann_y.is_subset(ann_x) {
                if report.comparability.literal_violation.is_none() {
                    report.comparability.literal_violation = Some(PairRef {
                        x: text(xi)?,
                        y: text(yi)?,
                    });
                }
                if report.comparability.forbidden.is_none() {
                    if let (Some(a), Some(b)) =
                        (side_witness(ann_x, ann_y), side_witness(ann_y, ann_x))
                    {
                        report.comparability.forbidden = Some(quad(
                            ring,
                            &elements,
                            &zero_products,
                            xi,
                            yi,
                            a,
                            b,
                        )?);
                    }
                }
            }

            // (c) and (d) apply when one annihilator is strictly inside the
            // other and the pair product is nonzero; orient so x is the small
            // side
            let oriented = if ann_x.is_subset(ann_y) && ann_x != ann_y {
                Some((xi, yi))
            } else if ann_y.is_subset(ann_x) && ann_x != ann_y {
                Some((yi, xi))
            } else {
                None
            };
            if let Some((si, li)) = oriented {
                if !zero_products[si].contains(li) {
                    let ann_s = &zero_products[si];
                    // (c): nonzero elements of Ann(x) must be pairwise
                    // annihilating; a failing pair gives a C4 directly
                    if report.clique.literal_violation.is_none()
                        || report.clique.forbidden.is_none()
                    {
                        'clique: for a in ann_s.ones() {
                            if a == 0 {
                                continue;
                            }
                            for b in ann_s.ones() {
                                if b <= a {
                                    continue;
                                }
                                if !zero_products[a].contains(b) {
                                    if report.clique.literal_violation.is_none() {
                                        report.clique.literal_violation = Some(PairRef {
                                            x: text(si)?,
                                            y: text(li)?,
                                        });
                                    }
                                    if report.clique.forbidden.is_none() {
                                        report.clique.forbidden = Some(quad(
                                            ring,
                                            &elements,
                                            &zero_products,
                                            si,
                                            li,
                                            a,
                                            b,
                                        )?);
                                    }
                                    break 'clique;
                                }
                            }
                        }
                    }
                    // (d): every a in Ann(x), b in Ann(y) \ Ann(x) must have
                    // ab = 0
                    if report.cross_products.literal_violation.is_none()
                        || report.cross_products.forbidden.is_none()
                    {
                        let mut large_only = zero_products[li].clone();
                        large_only.difference_with(ann_s);
                        'cross: for a in ann_s.ones() {
                            if a == 0 {
                                continue;
                            }
                            for b in large_only.ones() {
                                if b == 0 || zero_products[a].contains(b) {
                                    continue;
                                }
                                if report.cross_products.literal_violation.is_none() {
                                    report.cross_products.literal_violation = Some(PairRef {
                                        x: text(si)?,
                                        y: text(li)?,
                                    });
                                }
                                // a = x collapses the quad to three vertices
                                if a != si && report.cross_products.forbidden.is_none() {
                                    report.cross_products.forbidden = Some(quad(
                                        ring,
                                        &elements,
                                        &zero_products,
                                        si,
                                        li,
                                        a,
                                        b,
                                    )?);
                                }
                                if report.cross_products.literal_violation.is_some()
                                    && report.cross_products.forbidden.is_some()
                                {
                                    break 'cross;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

fn quad(
    ring: &Ring,
    elements: &[Element],
    zero_products: &[FixedBitSet],
    x: usize,
    y: usize,
    a: usize,
    b: usize,
) -> Result<ForbiddenQuad> {
    use crate::threshold::ForbiddenPattern;
    let idx = [x, a, y, b];
    let mut degs = [0usize; 4];
    let mut edges = 0usize;
    for i in 0..4 {
        for j in i + 1..4 {
            if zero_products[idx[i]].contains(idx[j]) {
                degs[i] += 1;
                degs[j] += 1;
                edges += 1;
            }
        }
    }
    degs.sort_unstable();
    let pattern = match (edges, degs) {
        (4, [2, 2, 2, 2]) => ForbiddenPattern::C4,
        (3, [1, 1, 2, 2]) => ForbiddenPattern::P4,
        (2, [1, 1, 1, 1]) => ForbiddenPattern::TwoK2,
        other => {
            return Err(Error::Validation(format!(
                "witness quad induces no forbidden pattern: {other:?}"
            )))
        }
    };
    Ok(ForbiddenQuad {
        x: ring.to_text(&elements[x])?,
        y: ring.to_text(&elements[y])?,
        a: ring.to_text(&elements[a])?,
        b: ring.to_text(&elements[b])?,
        pattern,
    })
}

// ---------------------------------------------------------------------------
// Non-local classification
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct NonlocalVerdict {
    /// Γ(R) passed threshold recognition.
    pub computed_threshold: bool,
    /// R is a product of exactly two fields, one of order 2.
    pub syntactic_condition: bool,
    pub graph: LabeledGraph,
    pub outcome: ThresholdOutcome,
}

impl NonlocalVerdict {
    pub fn consistent(&self) -> bool {
        self.computed_threshold == self.syntactic_condition
    }
}

/// Computes thresholdness of Γ(R) for a product ring and independently tests
/// the syntactic criterion (two factors, both fields, one of size 2), for
/// cross-validation.
pub fn classify_nonlocal_threshold(ring: &Ring, cap: u64) -> Result<NonlocalVerdict> {
    let factors = match ring {
        Ring::Product(p) => p.factors(),
        _ => {
            return Err(Error::Validation(
                "non-local classification expects a product ring".into(),
            ))
        }
    };
    if factors.len() < 2 {
        return Err(Error::Validation(
            "non-local classification needs at least two factors".into(),
        ));
    }
    for f in factors {
        if f.order() < num_bigint::BigUint::from(2u32) {
            return Err(Error::Validation("trivial factor in product".into()));
        }
    }
    let syntactic = factors.len() == 2
        && factors[0].is_field(cap)?
        && factors[1].is_field(cap)?
        && (factors[0].order_u64() == Some(2) || factors[1].order_u64() == Some(2));
    let graph = zero_divisor_graph(ring, cap)?;
    let outcome = recognize_threshold(&graph.graph);
    Ok(NonlocalVerdict {
        computed_threshold: outcome.is_threshold(),
        syntactic_condition: syntactic,
        graph,
        outcome,
    })
}

// ---------------------------------------------------------------------------
// Complete-graph check for socle-like monomial quotients
// ---------------------------------------------------------------------------

/// For a monomial quotient where every product of two variables vanishes,
/// confirms that the zero-divisor graph is complete.
pub fn is_complete_graph_check(ring: &Ring, cap: u64) -> Result<bool> {
    match ring {
        Ring::MonomialQuotient(m) if m.degree_two_vanishes() => {}
        Ring::MonomialQuotient(_) => {
            return Err(Error::Validation(
                "a degree-two monomial survives; the completeness argument needs them all zero"
                    .into(),
            ))
        }
        _ => {
            return Err(Error::Validation(
                "completeness check expects a monomial quotient".into(),
            ))
        }
    }
    let graph = zero_divisor_graph(ring, cap)?;
    Ok(graph.graph.is_complete())
}

// ---------------------------------------------------------------------------
// Principal maximal ideal: Z_{p^k}
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct PrincipalLocalVerdict {
    pub p: u64,
    pub k: u32,
    pub graph: LabeledGraph,
    pub outcome: ThresholdOutcome,
    /// p-adic valuation of each vertex, in vertex order.
    pub valuations: Vec<u32>,
    /// adjacency matches v(a) + v(b) >= k on every vertex pair
    pub valuations_characterize_adjacency: bool,
}

impl PrincipalLocalVerdict {
    /// Recognition and the valuation weights must agree that the graph is
    /// threshold.
    pub fn agree(&self) -> bool {
        self.outcome.is_threshold() && self.valuations_characterize_adjacency
    }
}

/// For R = Z_{p^k}: confirms Γ(R) is threshold both by recognition and by
/// the valuation weights w(a) = v_p(a) with adjacency iff w(a) + w(b) >= k.
pub fn principal_local_threshold_check(ring: &Ring, cap: u64) -> Result<PrincipalLocalVerdict> {
    let n = match ring {
        Ring::Modular(m) => m.modulus_u64().ok_or_else(|| Error::CapExceeded {
            needed: m.modulus().to_string(),
            cap,
        })?,
        _ => {
            return Err(Error::Validation(
                "principal-local check expects Z_n with n a prime power".into(),
            ))
        }
    };
    let (p, k) = prime_power(n).ok_or_else(|| {
        Error::Validation(format!("{n} is not a prime power"))
    })?;
    let graph = zero_divisor_graph(ring, cap)?;
    let valuations: Vec<u32> = graph
        .labels
        .iter()
        .map(|l| {
            let mut a: u64 = l.parse().expect("modular labels are decimal");
            let mut v = 0u32;
            while a % p == 0 {
                a /= p;
                v += 1;
            }
            v
        })
        .collect();
    let mut ok = true;
    'outer: for u in 0..graph.graph.n() {
        for w in u + 1..graph.graph.n() {
            let adjacent = graph.graph.has_edge(u, w);
            if adjacent != (valuations[u] + valuations[w] >= k) {
                ok = false;
                break 'outer;
            }
        }
    }
    let outcome = recognize_threshold(&graph.graph);
    Ok(PrincipalLocalVerdict {
        p,
        k,
        graph,
        outcome,
        valuations,
        valuations_characterize_adjacency: ok,
    })
}

fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;
    use crate::DEFAULT_ENUMERATION_CAP as CAP;

    fn ring(d: &RingDescriptor) -> Ring {
        Ring::make(d).unwrap()
    }

    #[test]
    fn gamma_z6_is_p3() {
        let g = zero_divisor_graph(&ring(&RingDescriptor::zn(6)), CAP).unwrap();
        assert_eq!(g.labels, ["2", "3", "4"]);
        assert_eq!(g.graph.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn gamma_z4_is_a_single_vertex() {
        let g = zero_divisor_graph(&ring(&RingDescriptor::zn(4)), CAP).unwrap();
        assert_eq!(g.labels, ["2"]);
        assert_eq!(g.graph.edge_count(), 0);
    }

    #[test]
    fn gamma_f2xf5_is_a_star() {
        let d = RingDescriptor::product(vec![
            RingDescriptor::galois(2, 1),
            RingDescriptor::galois(5, 1),
        ]);
        let g = zero_divisor_graph(&ring(&d), CAP).unwrap();
        assert_eq!(g.graph.n(), 5);
        assert_eq!(g.graph.edge_count(), 4);
        let center = g.vertex_by_label("(1,0)").unwrap();
        assert_eq!(g.graph.degree(center), 4);
    }

    #[test]
    fn modular_fast_path_matches_generic() {
        // same ring through the generic path (as a trivial product)
        for n in [6u64, 12, 16, 30] {
            let fast = zero_divisor_graph(&ring(&RingDescriptor::zn(n)), CAP).unwrap();
            let slow_ring = Ring::Product(
                crate::ring::ProductRing::new(vec![ring(&RingDescriptor::zn(n))]).unwrap(),
            );
            let slow = zero_divisor_graph(&slow_ring, CAP).unwrap();
            assert_eq!(fast.graph, slow.graph, "n={n}");
            let stripped: Vec<String> = slow
                .labels
                .iter()
                .map(|l| l.trim_start_matches('(').trim_end_matches(')').to_string())
                .collect();
            assert_eq!(fast.labels, stripped, "n={n}");
        }
    }

    #[test]
    fn ann_conditions_pass_on_z8() {
        let report = ann_threshold_conditions(&ring(&RingDescriptor::zn(8)), CAP).unwrap();
        assert!(report.forbidden_free());
        assert!(report.literal_pass());
    }

    #[test]
    fn z2_cubed_violates_comparability() {
        let d = RingDescriptor::product(vec![
            RingDescriptor::zn(2),
            RingDescriptor::zn(2),
            RingDescriptor::zn(2),
        ]);
        let report = ann_threshold_conditions(&ring(&d), CAP).unwrap();
        let quad = report
            .comparability
            .forbidden
            .as_ref()
            .expect("Z2^3 has incomparable annihilators with genuine witnesses");
        // the four elements are distinct and the pattern is forbidden
        let mut elems = vec![&quad.x, &quad.y, &quad.a, &quad.b];
        elems.sort();
        elems.dedup();
        assert_eq!(elems.len(), 4);
        assert!(!report.forbidden_free());
    }

    #[test]
    fn stars_pass_despite_literal_failures() {
        // Γ(F2 x F5) is a star (threshold), yet conditions (a) and (b) fail
        // as literally stated; no four distinct vertices exist to witness it
        let d = RingDescriptor::product(vec![
            RingDescriptor::galois(2, 1),
            RingDescriptor::galois(5, 1),
        ]);
        let report = ann_threshold_conditions(&ring(&d), CAP).unwrap();
        assert!(report.forbidden_free());
        assert!(!report.literal_pass());
    }

    #[test]
    fn classify_f2xf3_and_f3xf3() {
        let f2xf3 = RingDescriptor::product(vec![
            RingDescriptor::galois(2, 1),
            RingDescriptor::galois(3, 1),
        ]);
        let v = classify_nonlocal_threshold(&ring(&f2xf3), CAP).unwrap();
        assert!(v.computed_threshold && v.syntactic_condition && v.consistent());

        let f3xf3 = RingDescriptor::product(vec![
            RingDescriptor::galois(3, 1),
            RingDescriptor::galois(3, 1),
        ]);
        let v = classify_nonlocal_threshold(&ring(&f3xf3), CAP).unwrap();
        assert!(!v.computed_threshold && !v.syntactic_condition && v.consistent());

        let z2xz4 = RingDescriptor::product(vec![RingDescriptor::zn(2), RingDescriptor::zn(4)]);
        let v = classify_nonlocal_threshold(&ring(&z2xz4), CAP).unwrap();
        assert!(!v.computed_threshold && !v.syntactic_condition && v.consistent());
    }

    #[test]
    fn classification_needs_a_product() {
        assert!(classify_nonlocal_threshold(&ring(&RingDescriptor::zn(6)), CAP).is_err());
    }

    #[test]
    fn complete_graph_check_examples() {
        // F_2[x1,x2]/(x1^2, x2^2, x1 x2): Γ complete on 3 vertices
        let d = RingDescriptor::MonomialQuotient {
            p: 2,
            vars: 2,
            truncate_degree: Some(2),
            zero_monomials: vec![],
            var_names: None,
        };
        let r = ring(&d);
        assert!(is_complete_graph_check(&r, CAP).unwrap());
        let g = zero_divisor_graph(&r, CAP).unwrap();
        assert_eq!(g.graph.n(), 3);

        // F_3 version: complete on 8 vertices
        let d3 = RingDescriptor::MonomialQuotient {
            p: 3,
            vars: 2,
            truncate_degree: Some(2),
            zero_monomials: vec![],
            var_names: None,
        };
        let r3 = ring(&d3);
        assert!(is_complete_graph_check(&r3, CAP).unwrap());
        assert_eq!(zero_divisor_graph(&r3, CAP).unwrap().graph.n(), 8);

        // K1 case: F_2[x1]/(x1^2)
        let d1 = RingDescriptor::MonomialQuotient {
            p: 2,
            vars: 1,
            truncate_degree: Some(2),
            zero_monomials: vec![],
            var_names: None,
        };
        assert!(is_complete_graph_check(&ring(&d1), CAP).unwrap());

        // precondition: a surviving degree-2 monomial is rejected
        let bad = RingDescriptor::MonomialQuotient {
            p: 2,
            vars: 2,
            truncate_degree: Some(3),
            zero_monomials: vec![vec![1, 1]],
            var_names: None,
        };
        assert!(is_complete_graph_check(&ring(&bad), CAP).is_err());
    }

    #[test]
    fn principal_local_z9_and_z16() {
        let v = principal_local_threshold_check(&ring(&RingDescriptor::zn(9)), CAP).unwrap();
        assert_eq!((v.p, v.k), (3, 2));
        assert_eq!(v.graph.labels, ["3", "6"]);
        assert_eq!(v.graph.graph.edge_count(), 1);
        assert!(v.agree());

        let v = principal_local_threshold_check(&ring(&RingDescriptor::zn(16)), CAP).unwrap();
        assert!(v.agree());
        assert_eq!(v.valuations.len(), 7);
    }

    #[test]
    fn z12_is_not_a_prime_power() {
        assert!(principal_local_threshold_check(&ring(&RingDescriptor::zn(12)), CAP).is_err());
    }
}
