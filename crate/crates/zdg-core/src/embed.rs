//! Constructive embeddings of arbitrary finite graphs into zero-divisor
//! graphs, one backend per ring family, plus the independent verifier.
//!
//! Every backend maps vertices to ring elements so that adjacency in the
//! input graph corresponds exactly to "product is zero" in the ring, and
//! every image is a zero-divisor. The verifier re-checks all of this from
//! the serialized embedding alone.

use std::collections::HashSet;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{intersection_representation, Graph, SetFamily};
use crate::ring::{Element, Ring, RingDescriptor};
use crate::threshold::{dismantle_stages, AdditionKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    Boolean,
    Zn,
    Local,
    Threshold,
}

impl std::str::FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "boolean" => Ok(Backend::Boolean),
            "zn" => Ok(Backend::Zn),
            "local" => Ok(Backend::Local),
            "threshold" => Ok(Backend::Threshold),
            other => Err(Error::Validation(format!("unknown backend {other:?}"))),
        }
    }
}

/// A ring descriptor plus an injective vertex -> element map (as canonical
/// element texts, indexed by vertex).
#[derive(Clone, Debug, Serialize)]
pub struct Embedding {
    pub backend: Backend,
    pub ring: RingDescriptor,
    pub map: Vec<String>,
}

/// Outcome of the independent verification of an embedding.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub injective: bool,
    /// first duplicated pair of vertices, if any
    pub duplicate: Option<(usize, usize)>,
    /// vertices whose image is zero or not a zero-divisor
    pub vertex_failures: Vec<VertexFailure>,
    /// pairs where adjacency and product-zero disagree
    pub adjacency_failures: Vec<AdjacencyFailure>,
    pub ring_order: String,
    pub checked_pairs: usize,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexFailure {
    pub vertex: usize,
    pub image: String,
    pub reason: VertexFailureReason,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexFailureReason {
    ZeroImage,
    NotZeroDivisor,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjacencyFailure {
    pub u: usize,
    pub v: usize,
    pub adjacent: bool,
    pub product: String,
}

// ---------------------------------------------------------------------------
// Boolean backend
// ---------------------------------------------------------------------------

/// Embeds g into the Boolean ring on the ground set of an intersection
/// representation of the complement: u ~ v in g iff the representing sets
/// are disjoint iff their product is zero.
pub fn embed_boolean(g: &Graph) -> Result<Embedding> {
    let fam = intersection_representation(&g.complement());
    let ring = Ring::make(&RingDescriptor::boolean(fam.ground_size))?;
    let map = fam
        .sets
        .iter()
        .map(|s| ring.to_text(&Element::Set(s.clone())))
        .collect::<Result<Vec<_>>>()?;
    let emb = Embedding {
        backend: Backend::Boolean,
        ring: RingDescriptor::boolean(fam.ground_size),
        map,
    };
    ensure_verified(g, emb)
}

// ---------------------------------------------------------------------------
// Z_n backend
// ---------------------------------------------------------------------------

/// First m primes.
fn primes(m: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(m);
    let mut cand = 2u64;
    while out.len() < m {
        if is_prime_u64(cand) {
            out.push(cand);
        }
        cand += 1;
    }
    out
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Composes the Boolean set family with the prime map: ground point i
/// becomes the (i+1)-th prime, n is the product of all of them, and a vertex
/// with set A goes to the product of the primes outside A.
pub fn embed_zn(g: &Graph) -> Result<Embedding> {
    let fam = intersection_representation(&g.complement());
    let ps = primes(fam.ground_size);
    let n: BigUint = ps.iter().fold(BigUint::one(), |acc, &p| acc * p);
    let images: Vec<BigUint> = fam
        .sets
        .iter()
        .map(|set| {
            ps.iter()
                .enumerate()
                .filter(|(i, _)| !set.contains(*i))
                .fold(BigUint::one(), |acc, (_, &p)| acc * p)
        })
        .collect();
    let emb = Embedding {
        backend: Backend::Zn,
        ring: RingDescriptor::modular(&n),
        map: images.iter().map(|v| v.to_string()).collect(),
    };
    ensure_verified(g, emb)
}

// ---------------------------------------------------------------------------
// Local backend
// ---------------------------------------------------------------------------

/// Ring descriptor for the local backend: F_p[x_1..x_n] with every monomial
/// of degree 3 zero and x_i x_j zero exactly for edges {v_i, v_j}.
pub fn local_ring_descriptor(g: &Graph, p: u64) -> RingDescriptor {
    let zero_monomials = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let mut exps = vec![0u32; g.n()];
            exps[u] = 1;
            exps[v] = 1;
            exps
        })
        .collect();
    RingDescriptor::MonomialQuotient {
        p,
        vars: g.n(),
        truncate_degree: Some(3),
        zero_monomials,
        var_names: None,
    }
}

/// Embeds g into a local ring: vertex v_i goes to the variable x_i; products
/// x_i x_j vanish exactly on edges. Defaults to p = 2.
pub fn embed_local(g: &Graph, p: u64) -> Result<Embedding> {
    let descriptor = local_ring_descriptor(g, p);
    let ring = Ring::make(&descriptor)?;
    let quotient = match &ring {
        Ring::MonomialQuotient(m) => m,
        _ => unreachable!(),
    };
    let map = (0..g.n())
        .map(|v| {
            let x = quotient.variable(v)?;
            quotient.to_text(&x)
        })
        .collect::<Result<Vec<_>>>()?;
    let emb = Embedding {
        backend: Backend::Local,
        ring: descriptor,
        map,
    };
    ensure_verified(g, emb)
}

// ---------------------------------------------------------------------------
// Threshold backend
// ---------------------------------------------------------------------------

/// Embeds a threshold graph into Z/(p^(2m+1)) where m is the number of
/// dismantling stages: a vertex removed in an isolated round i maps into
/// p^i R \ p^(i+1) R, one removed in a dominating round i into
/// p^(2m-i+1) R \ p^(2m-i+2) R, with distinct unit multipliers inside each
/// round. With `prime` unset, the smallest prime above g.n() is used.
pub fn embed_threshold(g: &Graph, prime: Option<u64>) -> Result<Embedding> {
    let schedule = dismantle_stages(g)?;
    let m = schedule.stage_count() as u32;
    let p = match prime {
        Some(p) => {
            if !is_prime_u64(p) {
                return Err(Error::Validation(format!("{p} is not prime")));
            }
            p
        }
        None => {
            let mut cand = g.n() as u64 + 1;
            while !is_prime_u64(cand) {
                cand += 1;
            }
            cand
        }
    };
    for (_, vs) in &schedule.rounds {
        if vs.len() as u64 > p - 1 {
            return Err(Error::Validation(format!(
                "round of {} vertices needs more unit multipliers than prime {p} offers",
                vs.len()
            )));
        }
    }
    let modulus = BigUint::from(p).pow(2 * m + 1);
    let mut images = vec![BigUint::one(); g.n()];
    for (idx, (kind, vs)) in schedule.rounds.iter().enumerate() {
        let round = idx as u32 + 1;
        let exponent = match kind {
            AdditionKind::Isolated => round,
            AdditionKind::Dominating => 2 * m - round + 1,
        };
        let base = BigUint::from(p).pow(exponent);
        for (offset, &v) in vs.iter().enumerate() {
            images[v] = &base * BigUint::from(offset as u64 + 1);
        }
    }
    let emb = Embedding {
        backend: Backend::Threshold,
        ring: RingDescriptor::modular(&modulus),
        map: images.iter().map(|x| x.to_string()).collect(),
    };
    ensure_verified(g, emb)
}

fn ensure_verified(g: &Graph, emb: Embedding) -> Result<Embedding> {
    let report = verify_embedding(g, &emb)?;
    if !report.pass {
        return Err(Error::Validation(format!(
            "internal error: backend {:?} produced a non-verifying embedding: {:?}",
            emb.backend, report
        )));
    }
    Ok(emb)
}

// ---------------------------------------------------------------------------
// Verifier
// ---------------------------------------------------------------------------

/// Independently checks an embedding: the map must be injective, every image
/// a nonzero zero-divisor, and adjacency must coincide with product-zero on
/// every vertex pair. Zero-divisor membership uses per-realization witnesses,
/// so no full ring enumeration is ever needed.
pub fn verify_embedding(g: &Graph, emb: &Embedding) -> Result<VerificationReport> {
    let start = Instant::now();
    let ring = Ring::make(&emb.ring)?;
    if emb.map.len() != g.n() {
        return Err(Error::Validation(format!(
            "embedding maps {} vertices but the graph has {}",
            emb.map.len(),
            g.n()
        )));
    }
    let images: Vec<Element> = emb
        .map
        .iter()
        .map(|t| ring.from_text(t))
        .collect::<Result<_>>()?;

    let mut duplicate = None;
    let mut seen: HashSet<String> = HashSet::new();
    for (v, text) in emb.map.iter().enumerate() {
        let canonical = ring.to_text(&images[v])?;
        if !seen.insert(canonical) {
            let other = emb.map[..v]
                .iter()
                .position(|t| ring.from_text(t).map(|e| e == images[v]).unwrap_or(false))
                .unwrap_or(v);
            duplicate = Some((other, v));
            break;
        }
        let _ = text;
    }
    let injective = duplicate.is_none();

    let mut vertex_failures = Vec::new();
    for (v, image) in images.iter().enumerate() {
        if ring.is_zero(image) {
            vertex_failures.push(VertexFailure {
                vertex: v,
                image: emb.map[v].clone(),
                reason: VertexFailureReason::ZeroImage,
            });
        } else if !ring.is_zero_divisor(image)? {
            vertex_failures.push(VertexFailure {
                vertex: v,
                image: emb.map[v].clone(),
                reason: VertexFailureReason::NotZeroDivisor,
            });
        }
    }

    let mut adjacency_failures = Vec::new();
    let mut checked_pairs = 0usize;
    let zero = ring.zero();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            checked_pairs += 1;
            let product = ring.mul(&images[u], &images[v])?;
            let product_zero = product == zero;
            if product_zero != g.has_edge(u, v) {
                adjacency_failures.push(AdjacencyFailure {
                    u,
                    v,
                    adjacent: g.has_edge(u, v),
                    product: ring.to_text(&product)?,
                });
            }
        }
    }

    let pass = injective && vertex_failures.is_empty() && adjacency_failures.is_empty();
    Ok(VerificationReport {
        pass,
        injective,
        duplicate,
        vertex_failures,
        adjacency_failures,
        ring_order: ring.order().to_string(),
        checked_pairs,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

// ---------------------------------------------------------------------------
// Size bound
// ---------------------------------------------------------------------------

/// Ground-set accounting for the Boolean construction on complement(g).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// points actually used (edges of the core + 1 per isolated vertex + 2
    /// per isolated edge + sentinel)
    pub p_actual: usize,
    /// the m + a + b count (edges + isolated vertices + isolated edges of
    /// the complement), which undercounts the two-point isolated-edge scheme
    /// and the sentinel
    pub paper_count: usize,
    /// 2^p_actual, the Boolean ring order achieved
    pub ring_order: String,
}

pub fn size_bound(g: &Graph) -> BoundReport {
    let co = g.complement();
    let fam: SetFamily = intersection_representation(&co);
    let isolated_vertices = (0..co.n()).filter(|&v| co.degree(v) == 0).count();
    let isolated_edges = co
        .edges()
        .into_iter()
        .filter(|&(u, v)| co.degree(u) == 1 && co.degree(v) == 1)
        .count();
    let paper_count = co.edge_count() + isolated_vertices + isolated_edges;
    BoundReport {
        p_actual: fam.ground_size,
        paper_count,
        ring_order: (BigUint::one() << fam.ground_size).to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFormat;

    #[test]
    fn boolean_k2() {
        let emb = embed_boolean(&Graph::complete(2)).unwrap();
        // complement of K2 is 2K1: two singletons plus the sentinel
        assert_eq!(emb.ring, RingDescriptor::boolean(3));
        assert_eq!(emb.map, ["{0}", "{1}"]);
    }

    #[test]
    fn boolean_2k1() {
        let emb = embed_boolean(&Graph::empty(2)).unwrap();
        // complement is K2, an isolated edge: {q} and {q, r}
        assert_eq!(emb.map, ["{0}", "{0,1}"]);
    }

    #[test]
    fn zn_k2_primes() {
        let emb = embed_zn(&Graph::complete(2)).unwrap();
        assert_eq!(emb.ring, RingDescriptor::zn(30));
        assert_eq!(emb.map, ["15", "10"]);
    }

    #[test]
    fn zn_k1() {
        let emb = embed_zn(&Graph::empty(1)).unwrap();
        assert_eq!(emb.ring, RingDescriptor::zn(6));
        assert_eq!(emb.map, ["3"]);
    }

    #[test]
    fn local_k2_ring_size() {
        let emb = embed_local(&Graph::complete(2), 2).unwrap();
        let ring = Ring::make(&emb.ring).unwrap();
        // basis {1, x1, x2, x1^2, x2^2}: 2^5 elements
        assert_eq!(ring.order(), BigUint::from(32u32));
        assert_eq!(emb.map, ["x1", "x2"]);
        let x1 = ring.from_text("x1").unwrap();
        let x2 = ring.from_text("x2").unwrap();
        assert!(ring.is_zero(&ring.mul(&x1, &x2).unwrap()));
        assert!(!ring.is_zero(&ring.mul(&x1, &x1).unwrap()));
    }

    #[test]
    fn local_2k1_keeps_nonedges() {
        let emb = embed_local(&Graph::empty(2), 2).unwrap();
        let ring = Ring::make(&emb.ring).unwrap();
        let x1 = ring.from_text("x1").unwrap();
        let x2 = ring.from_text("x2").unwrap();
        assert!(!ring.is_zero(&ring.mul(&x1, &x2).unwrap()));
    }

    #[test]
    fn threshold_k2() {
        let emb = embed_threshold(&Graph::complete(2), Some(3)).unwrap();
        assert_eq!(emb.ring, RingDescriptor::zn(27));
        assert_eq!(emb.map, ["9", "18"]);
    }

    #[test]
    fn threshold_2k1() {
        let emb = embed_threshold(&Graph::empty(2), Some(3)).unwrap();
        assert_eq!(emb.ring, RingDescriptor::zn(27));
        assert_eq!(emb.map, ["3", "6"]);
    }

    #[test]
    fn threshold_star_valuations() {
        // K_{1,2} at p = 5: m = 2, ring Z_5^5, center valuation 4, leaves 2
        let emb = embed_threshold(&Graph::star(2), Some(5)).unwrap();
        assert_eq!(emb.ring, RingDescriptor::zn(3125));
        assert_eq!(emb.map[0], "625"); // 5^4
        assert_eq!(emb.map, ["625", "25", "50"]);
    }

    #[test]
    fn threshold_rejects_non_threshold() {
        match embed_threshold(&Graph::path(4), None) {
            Err(Error::NotThreshold { witness }) => {
                assert!(crate::threshold::verify_witness(&Graph::path(4), &witness));
            }
            other => panic!("expected NotThreshold, got {other:?}"),
        }
    }

    #[test]
    fn verifier_rejects_tampering() {
        let g = Graph::cycle(4);
        let mut emb = embed_boolean(&g).unwrap();
        emb.map.swap(0, 1);
        let report = verify_embedding(&g, &emb).unwrap();
        assert!(!report.pass);
        assert!(!report.adjacency_failures.is_empty());
    }

    #[test]
    fn verifier_rejects_unity_image() {
        let g = Graph::empty(1);
        let emb = Embedding {
            backend: Backend::Boolean,
            ring: RingDescriptor::boolean(2),
            map: vec!["{0,1}".into()],
        };
        let report = verify_embedding(&g, &emb).unwrap();
        assert!(!report.pass);
        assert_eq!(
            report.vertex_failures[0].reason,
            VertexFailureReason::NotZeroDivisor
        );
    }

    #[test]
    fn verifier_rejects_duplicates() {
        let g = Graph::empty(2);
        let emb = Embedding {
            backend: Backend::Boolean,
            ring: RingDescriptor::boolean(3),
            map: vec!["{0}".into(), "{0}".into()],
        };
        let report = verify_embedding(&g, &emb).unwrap();
        assert!(!report.pass);
        assert_eq!(report.duplicate, Some((0, 1)));
    }

    #[test]
    fn bound_examples() {
        let b = size_bound(&Graph::complete(2));
        assert_eq!((b.p_actual, b.paper_count, b.ring_order.as_str()), (3, 2, "8"));
        let b = size_bound(&Graph::cycle(5));
        assert_eq!((b.p_actual, b.paper_count, b.ring_order.as_str()), (6, 5, "64"));
        let b = size_bound(&Graph::empty(1));
        assert_eq!((b.p_actual, b.paper_count, b.ring_order.as_str()), (2, 1, "4"));
    }

    #[test]
    fn all_backends_verify_on_small_graphs() {
        for n in 0..=4usize {
            let pairs = n * n.saturating_sub(1) / 2;
            for mask in 0u32..(1 << pairs) {
                let mut g = Graph::empty(n);
                let mut bit = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if mask & (1 << bit) != 0 {
                            g.add_edge(i, j).unwrap();
                        }
                        bit += 1;
                    }
                }
                embed_boolean(&g).unwrap();
                embed_zn(&g).unwrap();
                embed_local(&g, 2).unwrap();
                let _ = crate::graph::serialize_graph(&g, GraphFormat::Graph6);
            }
        }
    }

    #[test]
    fn backend_consistency_boolean_vs_zn() {
        // the Z_n image of v is the product of primes indexed by the
        // complement of the Boolean image of v
        let g = crate::graph::random_graph(6, 11);
        let be = embed_boolean(&g).unwrap();
        let ze = embed_zn(&g).unwrap();
        let ground = match be.ring {
            RingDescriptor::Boolean { ground_size } => ground_size,
            _ => unreachable!(),
        };
        let ps = primes(ground);
        let bool_ring = Ring::make(&be.ring).unwrap();
        for v in 0..g.n() {
            let set = match bool_ring.from_text(&be.map[v]).unwrap() {
                Element::Set(s) => s,
                _ => unreachable!(),
            };
            let expected: BigUint = ps
                .iter()
                .enumerate()
                .filter(|(i, _)| !set.contains(*i))
                .fold(BigUint::one(), |acc, (_, &p)| acc * p);
            assert_eq!(ze.map[v], expected.to_string());
        }
    }
}
