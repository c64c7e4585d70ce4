//! The Boolean ring on a finite point set: elements are subsets, addition is
//! symmetric difference, multiplication is intersection.

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::Element;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanRing {
    pub ground_size: usize,
}

impl BooleanRing {
    pub fn new(ground_size: usize) -> Self {
        BooleanRing { ground_size }
    }

    pub fn order(&self) -> BigUint {
        BigUint::one() << self.ground_size
    }

    pub fn zero(&self) -> Element {
        Element::Set(FixedBitSet::with_capacity(self.ground_size))
    }

    pub fn one(&self) -> Element {
        let mut s = FixedBitSet::with_capacity(self.ground_size);
        s.insert_range(..);
        Element::Set(s)
    }

    pub fn from_points(&self, points: &[usize]) -> Result<Element> {
        let mut s = FixedBitSet::with_capacity(self.ground_size);
        for &p in points {
            if p >= self.ground_size {
                return Err(Error::RingMismatch(format!(
                    "point {p} outside ground set of size {}",
                    self.ground_size
                )));
            }
            s.insert(p);
        }
        Ok(Element::Set(s))
    }

    pub fn contains(&self, a: &Element) -> bool {
        matches!(a, Element::Set(s) if s.len() == self.ground_size)
    }

    fn set<'a>(&self, a: &'a Element) -> Result<&'a FixedBitSet> {
        match a {
            Element::Set(s) if s.len() == self.ground_size => Ok(s),
            other => Err(Error::RingMismatch(format!(
                "expected a subset of {} points, got {other:?}",
                self.ground_size
            ))),
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        let (a, b) = (self.set(a)?, self.set(b)?);
        let mut r = a.clone();
        r.symmetric_difference_with(b);
        Ok(Element::Set(r))
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.set(a)?;
        Ok(a.clone()) // characteristic 2
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        let (a, b) = (self.set(a)?, self.set(b)?);
        let mut r = a.clone();
        r.intersect_with(b);
        Ok(Element::Set(r))
    }

    pub fn element_at(&self, index: u64) -> Element {
        debug_assert!(self.ground_size < 64 || index == 0);
        let mut s = FixedBitSet::with_capacity(self.ground_size);
        for p in 0..self.ground_size.min(63) {
            if index & (1u64 << p) != 0 {
                s.insert(p);
            }
        }
        Element::Set(s)
    }

    pub fn index_of(&self, a: &Element) -> Option<u64> {
        let s = self.set(a).ok()?;
        let mut idx: u64 = 0;
        for p in s.ones() {
            if p >= 64 {
                return None;
            }
            idx |= 1u64 << p;
        }
        Some(idx)
    }

    pub fn to_text(&self, a: &Element) -> Result<String> {
        let s = self.set(a)?;
        let points: Vec<String> = s.ones().map(|p| p.to_string()).collect();
        Ok(format!("{{{}}}", points.join(",")))
    }

    pub fn from_text(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("expected {{...}} set notation, got {t:?}"),
            })?;
        let mut points = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let p: usize = part.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("invalid point {part:?}"),
            })?;
            points.push(p);
        }
        self.from_points(&points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_arithmetic() {
        let r = BooleanRing::new(3);
        let a = r.from_points(&[0, 1]).unwrap();
        let b = r.from_points(&[1, 2]).unwrap();
        assert_eq!(r.mul(&a, &b).unwrap(), r.from_points(&[1]).unwrap());
        assert_eq!(r.add(&a, &b).unwrap(), r.from_points(&[0, 2]).unwrap());
        // every element is idempotent
        assert_eq!(r.mul(&a, &a).unwrap(), a);
    }

    #[test]
    fn text_roundtrip() {
        let r = BooleanRing::new(4);
        for idx in 0..16u64 {
            let a = r.element_at(idx);
            let text = r.to_text(&a).unwrap();
            assert_eq!(r.from_text(&text).unwrap(), a);
            assert_eq!(r.index_of(&a), Some(idx));
        }
        assert_eq!(r.from_text("{}").unwrap(), r.zero());
    }

    #[test]
    fn out_of_range_point_rejected() {
        let r = BooleanRing::new(2);
        assert!(r.from_text("{5}").is_err());
    }
}
