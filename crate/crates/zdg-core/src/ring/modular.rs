//! Z_n with an arbitrary-size modulus.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::Element;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularRing {
    modulus: BigUint,
}

impl ModularRing {
    pub fn new(modulus: BigUint) -> Result<Self> {
        if modulus < BigUint::from(2u32) {
            return Err(Error::Descriptor(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        Ok(ModularRing { modulus })
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn modulus_u64(&self) -> Option<u64> {
        self.modulus.to_u64()
    }

    pub fn order(&self) -> BigUint {
        self.modulus.clone()
    }

    pub fn zero(&self) -> Element {
        Element::Residue(BigUint::zero())
    }

    pub fn one(&self) -> Element {
        Element::Residue(BigUint::one())
    }

    pub fn residue(&self, value: BigUint) -> Element {
        Element::Residue(value % &self.modulus)
    }

    pub fn residue_u64(&self, value: u64) -> Element {
        self.residue(BigUint::from(value))
    }

    pub fn contains(&self, a: &Element) -> bool {
        matches!(a, Element::Residue(v) if v < &self.modulus)
    }

    fn value<'a>(&self, a: &'a Element) -> Result<&'a BigUint> {
        match a {
            Element::Residue(v) if v < &self.modulus => Ok(v),
            other => Err(Error::RingMismatch(format!(
                "expected a residue below {}, got {other:?}",
                self.modulus
            ))),
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        let (a, b) = (self.value(a)?, self.value(b)?);
        Ok(Element::Residue((a + b) % &self.modulus))
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        let a = self.value(a)?;
        if a.is_zero() {
            Ok(self.zero())
        } else {
            Ok(Element::Residue(&self.modulus - a))
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        let (a, b) = (self.value(a)?, self.value(b)?);
        Ok(Element::Residue((a * b) % &self.modulus))
    }

    pub fn is_unit(&self, a: &Element) -> Result<bool> {
        let a = self.value(a)?;
        Ok(a.gcd(&self.modulus).is_one())
    }

    /// For a nonzero zero-divisor a returns n / gcd(a, n), a nonzero partner
    /// with product 0.
    pub fn zero_divisor_partner(&self, a: &Element) -> Result<Option<Element>> {
        let a = self.value(a)?;
        if a.is_zero() {
            return Ok(None);
        }
        let g = a.gcd(&self.modulus);
        if g.is_one() {
            Ok(None)
        } else {
            Ok(Some(Element::Residue(&self.modulus / &g)))
        }
    }

    pub fn element_at(&self, index: u64) -> Element {
        Element::Residue(BigUint::from(index))
    }

    pub fn index_of(&self, a: &Element) -> Option<u64> {
        match a {
            Element::Residue(v) if v < &self.modulus => v.to_u64(),
            _ => None,
        }
    }

    pub fn to_text(&self, a: &Element) -> Result<String> {
        Ok(self.value(a)?.to_string())
    }

    pub fn from_text(&self, text: &str) -> Result<Element> {
        let v: BigUint = text.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            msg: format!("invalid residue {text:?}"),
        })?;
        Ok(Element::Residue(v % &self.modulus))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z30_example() {
        let r = ModularRing::new(BigUint::from(30u32)).unwrap();
        let a = r.residue_u64(15);
        let b = r.residue_u64(10);
        assert_eq!(r.mul(&a, &b).unwrap(), r.zero());
        assert_eq!(r.to_text(&a).unwrap(), "15");
        assert_eq!(r.from_text("15").unwrap(), a);
    }

    #[test]
    fn units_of_z6() {
        let r = ModularRing::new(BigUint::from(6u32)).unwrap();
        assert!(r.is_unit(&r.residue_u64(5)).unwrap());
        assert!(!r.is_unit(&r.residue_u64(2)).unwrap());
    }

    #[test]
    fn partner_divides_out_the_gcd() {
        let r = ModularRing::new(BigUint::from(12u32)).unwrap();
        let p = r.zero_divisor_partner(&r.residue_u64(3)).unwrap().unwrap();
        assert_eq!(p, r.residue_u64(4));
        assert!(r.zero_divisor_partner(&r.residue_u64(5)).unwrap().is_none());
    }

    #[test]
    fn small_modulus_rejected() {
        assert!(ModularRing::new(BigUint::one()).is_err());
    }
}
