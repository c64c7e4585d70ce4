//! Componentwise products of rings.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{Element, Ring};

#[derive(Clone, Debug)]
pub struct ProductRing {
    factors: Vec<Ring>,
}

impl ProductRing {
    pub fn new(factors: Vec<Ring>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Descriptor(
                "a product ring needs at least one factor".into(),
            ));
        }
        Ok(ProductRing { factors })
    }

    pub fn factors(&self) -> &[Ring] {
        &self.factors
    }

    pub fn order(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, f| acc * f.order())
    }

    pub fn zero(&self) -> Element {
        Element::Tuple(self.factors.iter().map(|f| f.zero()).collect())
    }

    pub fn one(&self) -> Element {
        Element::Tuple(self.factors.iter().map(|f| f.one()).collect())
    }

    pub fn tuple(&self, components: Vec<Element>) -> Result<Element> {
        let e = Element::Tuple(components);
        self.components(&e)?;
        Ok(e)
    }

    pub fn contains(&self, a: &Element) -> bool {
        match a {
            Element::Tuple(cs) => {
                cs.len() == self.factors.len()
                    && cs.iter().zip(&self.factors).all(|(c, f)| f.contains(c))
            }
            _ => false,
        }
    }

    fn components<'a>(&self, a: &'a Element) -> Result<&'a [Element]> {
        match a {
            Element::Tuple(cs)
                if cs.len() == self.factors.len()
                    && cs.iter().zip(&self.factors).all(|(c, f)| f.contains(c)) =>
            {
                Ok(cs)
            }
            other => Err(Error::RingMismatch(format!(
                "expected a {}-tuple matching the factors, got {other:?}",
                self.factors.len()
            ))),
        }
    }

    fn zip_with(
        &self,
        a: &Element,
        b: &Element,
        op: impl Fn(&Ring, &Element, &Element) -> Result<Element>,
    ) -> Result<Element> {
        let (a, b) = (self.components(a)?, self.components(b)?);
        let mut out = Vec::with_capacity(self.factors.len());
        for ((x, y), f) in a.iter().zip(b).zip(&self.factors) {
            out.push(op(f, x, y)?);
        }
        Ok(Element::Tuple(out))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.zip_with(a, b, |f, x, y| f.add(x, y))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.zip_with(a, b, |f, x, y| f.mul(x, y))
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        let a = self.components(a)?;
        let mut out = Vec::with_capacity(self.factors.len());
        for (x, f) in a.iter().zip(&self.factors) {
            out.push(f.neg(x)?);
        }
        Ok(Element::Tuple(out))
    }

    pub fn is_unit(&self, a: &Element) -> Result<bool> {
        let a = self.components(a)?;
        for (x, f) in a.iter().zip(&self.factors) {
            if !f.is_unit(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A nonzero annihilating partner supported in a single slot.
    pub fn zero_divisor_partner(&self, a: &Element) -> Result<Option<Element>> {
        let cs = self.components(a)?;
        if cs.iter().zip(&self.factors).all(|(c, f)| *c == f.zero()) {
            return Ok(None);
        }
        for (i, (c, f)) in cs.iter().zip(&self.factors).enumerate() {
            let partner_i = if *c == f.zero() {
                Some(f.one())
            } else {
                f.zero_divisor_partner(c)?
            };
            if let Some(p) = partner_i {
                let mut out: Vec<Element> = self.factors.iter().map(|f| f.zero()).collect();
                out[i] = p;
                return Ok(Some(Element::Tuple(out)));
            }
        }
        Ok(None)
    }

    pub fn element_at(&self, index: u64) -> Element {
        // odometer with the last factor fastest: tuples come out in
        // lexicographic order
        let mut out = vec![self.factors[0].zero(); self.factors.len()];
        let mut rest = index;
        for (i, f) in self.factors.iter().enumerate().rev() {
            let ord = f
                .order_u64()
                .expect("element_at requires factor orders to fit u64");
            out[i] = f.element_at(rest % ord);
            rest /= ord;
        }
        Element::Tuple(out)
    }

    pub fn index_of(&self, a: &Element) -> Option<u64> {
        let cs = self.components(a).ok()?;
        let mut idx: u64 = 0;
        for (c, f) in cs.iter().zip(&self.factors) {
            let ord = f.order_u64()?;
            idx = idx.checked_mul(ord)?.checked_add(f.index_of(c)?)?;
        }
        Some(idx)
    }

    pub fn to_text(&self, a: &Element) -> Result<String> {
        let cs = self.components(a)?;
        let parts: Vec<String> = cs
            .iter()
            .zip(&self.factors)
            .map(|(c, f)| f.to_text(c))
            .collect::<Result<_>>()?;
        Ok(format!("({})", parts.join(",")))
    }

    pub fn from_text(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("expected a tuple, got {t:?}"),
            })?;
        let parts = split_top_level(inner);
        if parts.len() != self.factors.len() {
            return Err(Error::Parse {
                line: 1,
                msg: format!(
                    "expected {} components, got {}",
                    self.factors.len(),
                    parts.len()
                ),
            });
        }
        let mut out = Vec::with_capacity(parts.len());
        for (part, f) in parts.iter().zip(&self.factors) {
            out.push(f.from_text(part)?);
        }
        Ok(Element::Tuple(out))
    }
}

/// Splits on commas not nested inside parentheses or braces.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    fn z2xz3() -> Ring {
        Ring::make(&RingDescriptor::product(vec![
            RingDescriptor::zn(2),
            RingDescriptor::zn(3),
        ]))
        .unwrap()
    }

    #[test]
    fn componentwise_ops() {
        let r = z2xz3();
        let a = r.from_text("(1,2)").unwrap();
        let b = r.from_text("(1,1)").unwrap();
        assert_eq!(r.to_text(&r.mul(&a, &b).unwrap()).unwrap(), "(1,2)");
        assert_eq!(r.to_text(&r.add(&a, &b).unwrap()).unwrap(), "(0,0)");
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let r = z2xz3();
        let texts: Vec<String> = (0..6)
            .map(|i| r.to_text(&r.element_at(i)).unwrap())
            .collect();
        assert_eq!(texts, ["(0,0)", "(0,1)", "(0,2)", "(1,0)", "(1,1)", "(1,2)"]);
        for i in 0..6 {
            assert_eq!(r.index_of(&r.element_at(i)), Some(i));
        }
    }

    #[test]
    fn partner_in_one_slot() {
        let r = z2xz3();
        let a = r.from_text("(1,0)").unwrap();
        let p = r.zero_divisor_partner(&a).unwrap().unwrap();
        assert_eq!(r.mul(&a, &p).unwrap(), r.zero());
        assert_ne!(p, r.zero());
        // units have no partner
        assert!(r
            .zero_divisor_partner(&r.from_text("(1,1)").unwrap())
            .unwrap()
            .is_none());
    }
}
