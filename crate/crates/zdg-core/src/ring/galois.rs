//! Small Galois fields GF(p^k) with p^k <= 64, via a built-in table of
//! irreducible polynomials. Elements are coefficient vectors of polynomial
//! residues, lowest degree first.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ring::Element;

pub const MAX_GALOIS_ORDER: u64 = 64;

/// Monic irreducible polynomial over F_p of degree k, lowest degree first.
fn irreducible_poly(p: u64, k: u32) -> Option<Vec<u64>> {
    let poly: &[u64] = match (p, k) {
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (2, 5) => &[1, 0, 1, 0, 0, 1],
        (2, 6) => &[1, 1, 0, 0, 0, 0, 1],
        (3, 2) => &[1, 0, 1],
        (3, 3) => &[1, 2, 0, 1],
        (5, 2) => &[2, 0, 1],
        (7, 2) => &[1, 0, 1],
        _ => return None,
    };
    Some(poly.to_vec())
}

fn is_prime(n: u64) -> bool {
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

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    p: u64,
    k: u32,
    irreducible: Vec<u64>,
    order: u64,
}

impl GaloisField {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Descriptor(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::Descriptor("field degree must be positive".into()));
        }
        let order = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_GALOIS_ORDER)
            .ok_or_else(|| {
                Error::Descriptor(format!(
                    "GF({p}^{k}) exceeds the supported bound {MAX_GALOIS_ORDER}"
                ))
            })?;
        let irreducible = if k == 1 {
            vec![0, 1]
        } else {
            irreducible_poly(p, k).ok_or_else(|| {
                Error::Descriptor(format!("no irreducible polynomial tabled for GF({p}^{k})"))
            })?
        };
        let field = GaloisField {
            p,
            k,
            irreducible,
            order,
        };
        field.verify_inverses()?;
        Ok(field)
    }

    /// Every nonzero element must have a multiplicative inverse.
    fn verify_inverses(&self) -> Result<()> {
        let one = self.one();
        for i in 1..self.order {
            let a = self.element_at(i);
            let mut found = false;
            for j in 1..self.order {
                if self.mul(&a, &self.element_at(j))? == one {
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::AxiomViolation {
                    law: "field inverse",
                    a: self.to_text(&a)?,
                    b: "-".into(),
                    c: "-".into(),
                });
            }
        }
        Ok(())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.order)
    }

    pub fn order_u64(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> Element {
        Element::Coeffs(vec![0; self.k as usize])
    }

    pub fn one(&self) -> Element {
        let mut c = vec![0; self.k as usize];
        c[0] = 1;
        Element::Coeffs(c)
    }

    pub fn contains(&self, a: &Element) -> bool {
        matches!(a, Element::Coeffs(c)
            if c.len() == self.k as usize && c.iter().all(|&x| x < self.p))
    }

    fn coeffs<'a>(&self, a: &'a Element) -> Result<&'a [u64]> {
        match a {
            Element::Coeffs(c) if c.len() == self.k as usize && c.iter().all(|&x| x < self.p) => {
                Ok(c)
            }
            other => Err(Error::RingMismatch(format!(
                "expected {} coefficients below {}, got {other:?}",
                self.k, self.p
            ))),
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        let (a, b) = (self.coeffs(a)?, self.coeffs(b)?);
        Ok(Element::Coeffs(
            a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect(),
        ))
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        let a = self.coeffs(a)?;
        Ok(Element::Coeffs(
            a.iter().map(|&x| (self.p - x) % self.p).collect(),
        ))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        let (a, b) = (self.coeffs(a)?, self.coeffs(b)?);
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce modulo the monic irreducible polynomial
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &ir) in self.irreducible.iter().enumerate().take(k) {
                let pos = d - k + i;
                prod[pos] = (prod[pos] + c * (self.p - ir)) % self.p;
            }
        }
        prod.truncate(k);
        Ok(Element::Coeffs(prod))
    }

    pub fn element_at(&self, index: u64) -> Element {
        let mut c = Vec::with_capacity(self.k as usize);
        let mut rest = index;
        for _ in 0..self.k {
            c.push(rest % self.p);
            rest /= self.p;
        }
        Element::Coeffs(c)
    }

    pub fn index_of(&self, a: &Element) -> Option<u64> {
        let c = self.coeffs(a).ok()?;
        let mut idx = 0u64;
        for &x in c.iter().rev() {
            idx = idx * self.p + x;
        }
        Some(idx)
    }

    pub fn to_text(&self, a: &Element) -> Result<String> {
        let c = self.coeffs(a)?;
        if self.k == 1 {
            Ok(c[0].to_string())
        } else {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            Ok(format!("({})", parts.join(",")))
        }
    }

    pub fn from_text(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        if self.k == 1 {
            let v: u64 = t.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("invalid field element {t:?}"),
            })?;
            return Ok(Element::Coeffs(vec![v % self.p]));
        }
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("expected coefficient tuple, got {t:?}"),
            })?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != self.k as usize {
            return Err(Error::Parse {
                line: 1,
                msg: format!("expected {} coefficients, got {}", self.k, parts.len()),
            });
        }
        let mut c = Vec::with_capacity(parts.len());
        for part in parts {
            let v: u64 = part.trim().parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("invalid coefficient {part:?}"),
            })?;
            c.push(v % self.p);
        }
        Ok(Element::Coeffs(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_fields_build() {
        for (p, k) in [
            (2u64, 1u32),
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 1),
            (3, 2),
            (3, 3),
            (5, 1),
            (5, 2),
            (7, 1),
            (7, 2),
            (11, 1),
            (61, 1),
        ] {
            let f = GaloisField::new(p, k).unwrap_or_else(|e| panic!("GF({p}^{k}): {e}"));
            assert_eq!(f.order_u64(), p.pow(k));
        }
    }

    #[test]
    fn bad_parameters_rejected() {
        assert!(GaloisField::new(4, 1).is_err()); // not prime
        assert!(GaloisField::new(2, 7).is_err()); // 128 > 64
        assert!(GaloisField::new(2, 0).is_err());
    }

    #[test]
    fn gf4_multiplication() {
        let f = GaloisField::new(2, 2).unwrap();
        // x * x = x + 1 under x^2 + x + 1
        let x = Element::Coeffs(vec![0, 1]);
        assert_eq!(f.mul(&x, &x).unwrap(), Element::Coeffs(vec![1, 1]));
    }

    #[test]
    fn text_roundtrip() {
        let f = GaloisField::new(3, 2).unwrap();
        for i in 0..f.order_u64() {
            let a = f.element_at(i);
            assert_eq!(f.from_text(&f.to_text(&a).unwrap()).unwrap(), a);
            assert_eq!(f.index_of(&a), Some(i));
        }
    }
}
