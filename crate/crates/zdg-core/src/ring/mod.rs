//! Finite commutative rings with unity: one behavioral contract, six
//! concrete realizations.

mod boolean;
mod descriptor;
mod galois;
mod modular;
mod monomial;
mod product;
mod table;

pub use boolean::BooleanRing;
pub use descriptor::{RingDescriptor, TableGenerator};
pub use galois::{GaloisField, MAX_GALOIS_ORDER};
pub use modular::ModularRing;
pub use monomial::MonomialQuotientRing;
pub use product::ProductRing;
pub use table::TableRing;

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// Default cap on full element enumerations.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// A ring element; the payload shape depends on the realization, and the
/// canonical form is unique per ring element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    /// Subset of the ground set (Boolean rings).
    Set(FixedBitSet),
    /// Residue modulo n.
    Residue(BigUint),
    /// One component per factor (product rings).
    Tuple(Vec<Element>),
    /// Coefficient vector over a basis with per-coordinate moduli
    /// (Galois fields, monomial quotients, structure-constant tables).
    Coeffs(Vec<u64>),
}

/// A finite commutative ring with unity.
#[derive(Clone, Debug)]
pub enum Ring {
    Boolean(BooleanRing),
    Modular(ModularRing),
    Product(ProductRing),
    Galois(GaloisField),
    MonomialQuotient(MonomialQuotientRing),
    Table(TableRing),
}

impl Ring {
    pub fn make(descriptor: &RingDescriptor) -> Result<Ring> {
        Ring::make_with_cap(descriptor, DEFAULT_ENUMERATION_CAP)
    }

    /// Builds a ring from its descriptor. `cap` bounds realizations that
    /// require full enumeration up front (structure-constant tables).
    pub fn make_with_cap(descriptor: &RingDescriptor, cap: u64) -> Result<Ring> {
        match descriptor {
            RingDescriptor::Boolean { ground_size } => {
                Ok(Ring::Boolean(BooleanRing::new(*ground_size)))
            }
            RingDescriptor::Modular { modulus } => {
                let n: BigUint = modulus.parse().map_err(|_| {
                    Error::Descriptor(format!("invalid modulus {modulus:?}"))
                })?;
                Ok(Ring::Modular(ModularRing::new(n)?))
            }
            RingDescriptor::Product { factors } => {
                let factors: Vec<Ring> = factors
                    .iter()
                    .map(|f| Ring::make_with_cap(f, cap))
                    .collect::<Result<_>>()?;
                Ok(Ring::Product(ProductRing::new(factors)?))
            }
            RingDescriptor::Galois { p, k } => Ok(Ring::Galois(GaloisField::new(*p, *k)?)),
            RingDescriptor::MonomialQuotient {
                p,
                vars,
                truncate_degree,
                zero_monomials,
                var_names,
            } => Ok(Ring::MonomialQuotient(MonomialQuotientRing::new(
                *p,
                *vars,
                *truncate_degree,
                zero_monomials.clone(),
                var_names.clone(),
            )?)),
            RingDescriptor::Table {
                generators,
                products,
            } => Ok(Ring::Table(TableRing::new(generators, products.clone(), cap)?)),
        }
    }

    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            Ring::Boolean(r) => RingDescriptor::Boolean {
                ground_size: r.ground_size,
            },
            Ring::Modular(r) => RingDescriptor::modular(r.modulus()),
            Ring::Product(r) => RingDescriptor::Product {
                factors: r.factors().iter().map(|f| f.descriptor()).collect(),
            },
            Ring::Galois(r) => RingDescriptor::Galois { p: r.p(), k: r.k() },
            Ring::MonomialQuotient(r) => r.descriptor(),
            Ring::Table(r) => r.descriptor(),
        }
    }

    pub fn order(&self) -> BigUint {
        match self {
            Ring::Boolean(r) => r.order(),
            Ring::Modular(r) => r.order(),
            Ring::Product(r) => r.order(),
            Ring::Galois(r) => r.order(),
            Ring::MonomialQuotient(r) => r.order(),
            Ring::Table(r) => r.order(),
        }
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn zero(&self) -> Element {
        match self {
            Ring::Boolean(r) => r.zero(),
            Ring::Modular(r) => r.zero(),
            Ring::Product(r) => r.zero(),
            Ring::Galois(r) => r.zero(),
            Ring::MonomialQuotient(r) => r.zero(),
            Ring::Table(r) => r.zero(),
        }
    }

    pub fn one(&self) -> Element {
        match self {
            Ring::Boolean(r) => r.one(),
            Ring::Modular(r) => r.one(),
            Ring::Product(r) => r.one(),
            Ring::Galois(r) => r.one(),
            Ring::MonomialQuotient(r) => r.one(),
            Ring::Table(r) => r.one(),
        }
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        *a == self.zero()
    }

    pub fn contains(&self, a: &Element) -> bool {
        match self {
            Ring::Boolean(r) => r.contains(a),
            Ring::Modular(r) => r.contains(a),
            Ring::Product(r) => r.contains(a),
            Ring::Galois(r) => r.contains(a),
            Ring::MonomialQuotient(r) => r.contains(a),
            Ring::Table(r) => r.contains(a),
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        match self {
            Ring::Boolean(r) => r.add(a, b),
            Ring::Modular(r) => r.add(a, b),
            Ring::Product(r) => r.add(a, b),
            Ring::Galois(r) => r.add(a, b),
            Ring::MonomialQuotient(r) => r.add(a, b),
            Ring::Table(r) => r.add(a, b),
        }
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        match self {
            Ring::Boolean(r) => r.neg(a),
            Ring::Modular(r) => r.neg(a),
            Ring::Product(r) => r.neg(a),
            Ring::Galois(r) => r.neg(a),
            Ring::MonomialQuotient(r) => r.neg(a),
            Ring::Table(r) => r.neg(a),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        match self {
            Ring::Boolean(r) => r.mul(a, b),
            Ring::Modular(r) => r.mul(a, b),
            Ring::Product(r) => r.mul(a, b),
            Ring::Galois(r) => r.mul(a, b),
            Ring::MonomialQuotient(r) => r.mul(a, b),
            Ring::Table(r) => r.mul(a, b),
        }
    }

    /// Element count if it does not exceed `cap`.
    pub fn checked_count(&self, cap: u64) -> Result<u64> {
        let order = self.order();
        order
            .to_u64()
            .filter(|&n| n <= cap)
            .ok_or_else(|| Error::CapExceeded {
                needed: order.to_string(),
                cap,
            })
    }

    /// The element at position `index` in the canonical enumeration order.
    pub fn element_at(&self, index: u64) -> Element {
        match self {
            Ring::Boolean(r) => r.element_at(index),
            Ring::Modular(r) => r.element_at(index),
            Ring::Product(r) => r.element_at(index),
            Ring::Galois(r) => r.element_at(index),
            Ring::MonomialQuotient(r) => r.element_at(index),
            Ring::Table(r) => r.element_at(index),
        }
    }

    /// Position of `a` in the canonical enumeration order, when it fits u64.
    pub fn index_of(&self, a: &Element) -> Option<u64> {
        match self {
            Ring::Boolean(r) => r.index_of(a),
            Ring::Modular(r) => r.index_of(a),
            Ring::Product(r) => r.index_of(a),
            Ring::Galois(r) => r.index_of(a),
            Ring::MonomialQuotient(r) => r.index_of(a),
            Ring::Table(r) => r.index_of(a),
        }
    }

    /// All elements in enumeration order; errors above the cap.
    pub fn elements(&self, cap: u64) -> Result<Vec<Element>> {
        let count = self.checked_count(cap)?;
        Ok((0..count).map(|i| self.element_at(i)).collect())
    }

    pub fn to_text(&self, a: &Element) -> Result<String> {
        match self {
            Ring::Boolean(r) => r.to_text(a),
            Ring::Modular(r) => r.to_text(a),
            Ring::Product(r) => r.to_text(a),
            Ring::Galois(r) => r.to_text(a),
            Ring::MonomialQuotient(r) => r.to_text(a),
            Ring::Table(r) => r.to_text(a),
        }
    }

    pub fn from_text(&self, text: &str) -> Result<Element> {
        match self {
            Ring::Boolean(r) => r.from_text(text),
            Ring::Modular(r) => r.from_text(text),
            Ring::Product(r) => r.from_text(text),
            Ring::Galois(r) => r.from_text(text),
            Ring::MonomialQuotient(r) => r.from_text(text),
            Ring::Table(r) => r.from_text(text),
        }
    }

    /// True iff a has a multiplicative inverse; fast per realization except
    /// for table rings, which scan (they are capped at construction).
    pub fn is_unit(&self, a: &Element) -> Result<bool> {
        match self {
            Ring::Boolean(r) => {
                if !r.contains(a) {
                    return Err(Error::RingMismatch("not a Boolean element".into()));
                }
                Ok(*a == r.one())
            }
            Ring::Modular(r) => r.is_unit(a),
            Ring::Product(r) => r.is_unit(a),
            Ring::Galois(r) => {
                if !r.contains(a) {
                    return Err(Error::RingMismatch("not a field element".into()));
                }
                Ok(*a != r.zero())
            }
            Ring::MonomialQuotient(r) => r.is_unit(a),
            Ring::Table(r) => {
                if !r.contains(a) {
                    return Err(Error::RingMismatch("not a table-ring element".into()));
                }
                let one = r.one();
                for i in 0..r.order_u64() {
                    if r.mul(a, &r.element_at(i))? == one {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    /// A nonzero b with ab = 0, when one exists. `None` for zero and for
    /// non-zero-divisors.
    pub fn zero_divisor_partner(&self, a: &Element) -> Result<Option<Element>> {
        match self {
            Ring::Boolean(r) => {
                if !r.contains(a) {
                    return Err(Error::RingMismatch("not a Boolean element".into()));
                }
                if self.is_zero(a) || *a == r.one() {
                    return Ok(None);
                }
                // the complement of a proper nonempty set
                r.add(a, &r.one()).map(Some)
            }
            Ring::Modular(r) => r.zero_divisor_partner(a),
            Ring::Product(r) => r.zero_divisor_partner(a),
            Ring::Galois(r) => {
                if !r.contains(a) {
                    return Err(Error::RingMismatch("not a field element".into()));
                }
                Ok(None)
            }
            Ring::MonomialQuotient(r) => r.zero_divisor_partner(a),
            Ring::Table(r) => {
                if !r.contains(a) {
                    return Err(Error::RingMismatch("not a table-ring element".into()));
                }
                if self.is_zero(a) {
                    return Ok(None);
                }
                let zero = r.zero();
                for i in 1..r.order_u64() {
                    let b = r.element_at(i);
                    if r.mul(a, &b)? == zero {
                        return Ok(Some(b));
                    }
                }
                Ok(None)
            }
        }
    }

    /// True iff a is nonzero and has a nonzero annihilating partner.
    pub fn is_zero_divisor(&self, a: &Element) -> Result<bool> {
        if self.is_zero(a) {
            return Ok(false);
        }
        Ok(self.zero_divisor_partner(a)?.is_some())
    }

    /// Ann(a) = {b : ab = 0}, in enumeration order. Always contains 0.
    pub fn annihilator(&self, a: &Element, cap: u64) -> Result<Vec<Element>> {
        if !self.contains(a) {
            return Err(Error::RingMismatch("annihilator of a foreign element".into()));
        }
        let count = self.checked_count(cap)?;
        let zero = self.zero();
        let mut out = Vec::new();
        for i in 0..count {
            let b = self.element_at(i);
            if self.mul(a, &b)? == zero {
                out.push(b);
            }
        }
        Ok(out)
    }

    /// Local-ring test for finite commutative rings: true iff the nonunits
    /// are closed under addition and under multiplication by ring elements.
    pub fn nonunits_form_ideal(&self, cap: u64) -> Result<bool> {
        let count = self.checked_count(cap)?;
        let elements: Vec<Element> = (0..count).map(|i| self.element_at(i)).collect();
        let mut nonunits = Vec::new();
        for e in &elements {
            if !self.is_unit(e)? {
                nonunits.push(e.clone());
            }
        }
        for (i, a) in nonunits.iter().enumerate() {
            for b in &nonunits[i..] {
                if self.is_unit(&self.add(a, b)?)? {
                    return Ok(false);
                }
            }
        }
        for r in &elements {
            for m in &nonunits {
                if self.is_unit(&self.mul(r, m)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Least r such that every r-fold product of elements of the ideal
    /// generated by `generators` is zero. Errors when the ideal is not
    /// nilpotent (detected by a repeating power level).
    pub fn nilpotency_index(&self, generators: &[Element], cap: u64) -> Result<u32> {
        for g in generators {
            if !self.contains(g) {
                return Err(Error::RingMismatch("generator outside the ring".into()));
            }
        }
        let zero = self.zero();
        let mut current: Vec<Element> = Vec::new();
        let mut texts = HashSet::new();
        for g in generators {
            if *g != zero && texts.insert(self.to_text(g)?) {
                current.push(g.clone());
            }
        }
        if current.is_empty() {
            return Ok(1);
        }
        let mut seen_levels = HashSet::new();
        let mut r = 1u32;
        loop {
            let mut signature: Vec<String> = current
                .iter()
                .map(|e| self.to_text(e))
                .collect::<Result<_>>()?;
            signature.sort();
            if !seen_levels.insert(signature.join("|")) {
                return Err(Error::NotNilpotent {
                    witness: self.to_text(&current[0])?,
                });
            }
            let mut next = Vec::new();
            let mut next_texts = HashSet::new();
            for e in &current {
                for g in generators {
                    let prod = self.mul(e, g)?;
                    if prod != zero && next_texts.insert(self.to_text(&prod)?) {
                        next.push(prod);
                    }
                }
            }
            r += 1;
            if next.is_empty() {
                return Ok(r);
            }
            if next.len() as u64 > cap {
                return Err(Error::CapExceeded {
                    needed: next.len().to_string(),
                    cap,
                });
            }
            current = next;
        }
    }

    /// True iff every nonzero element is a unit.
    pub fn is_field(&self, cap: u64) -> Result<bool> {
        match self {
            Ring::Galois(_) => Ok(true),
            _ => {
                let count = self.checked_count(cap)?;
                for i in 1..count {
                    if !self.is_unit(&self.element_at(i))? {
                        return Ok(false);
                    }
                }
                Ok(count >= 2)
            }
        }
    }
}
