//! JSON-serializable ring descriptors: the construction recipe for every
//! concrete ring realization.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableGenerator {
    pub name: String,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingDescriptor {
    /// Subsets of {0..ground_size-1}; addition is symmetric difference,
    /// multiplication is intersection.
    Boolean { ground_size: usize },
    /// Integers modulo n (decimal string, arbitrary size).
    Modular { modulus: String },
    /// Componentwise product of the factor rings.
    Product { factors: Vec<RingDescriptor> },
    /// The field with p^k elements (p^k <= 64, built-in irreducible table).
    Galois { p: u64, k: u32 },
    /// F_p[x1..x_vars] modulo monomial relations: every listed monomial (and
    /// its multiples) is zero, as is everything of total degree >=
    /// truncate_degree when set. The surviving monomials form the basis.
    MonomialQuotient {
        p: u64,
        vars: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        truncate_degree: Option<u32>,
        zero_monomials: Vec<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        var_names: Option<Vec<String>>,
    },
    /// Additive generators with given additive orders and a full
    /// generator-by-generator multiplication table; multiplication extends
    /// bilinearly. generators[0] must be the unity.
    Table {
        generators: Vec<TableGenerator>,
        products: Vec<Vec<Vec<u64>>>,
    },
}

impl RingDescriptor {
    pub fn boolean(ground_size: usize) -> Self {
        RingDescriptor::Boolean { ground_size }
    }

    pub fn modular(n: &BigUint) -> Self {
        RingDescriptor::Modular {
            modulus: n.to_string(),
        }
    }

    pub fn zn(n: u64) -> Self {
        RingDescriptor::Modular {
            modulus: n.to_string(),
        }
    }

    pub fn product(factors: Vec<RingDescriptor>) -> Self {
        RingDescriptor::Product { factors }
    }

    pub fn galois(p: u64, k: u32) -> Self {
        RingDescriptor::Galois { p, k }
    }

    /// F_q for prime powers q <= 64.
    pub fn field(q: u64) -> Self {
        for p in 2..=q {
            if q % p == 0 {
                let mut k = 0u32;
                let mut m = q;
                while m % p == 0 {
                    m /= p;
                    k += 1;
                }
                return RingDescriptor::Galois { p, k };
            }
        }
        RingDescriptor::Galois { p: q, k: 1 }
    }
}
