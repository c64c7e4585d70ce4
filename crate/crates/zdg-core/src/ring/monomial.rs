//! Quotients of F_p[x_1..x_k] by monomial relations.
//!
//! A relation monomial declares itself and all of its multiples zero; an
//! optional degree truncation declares everything of total degree >= d zero.
//! The surviving monomials form an F_p basis, and products of basis monomials
//! are again basis monomials or zero, so elements are coefficient vectors
//! over the basis (graded-lex order, constant first).

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ring::Element;

#[derive(Clone, Debug)]
pub struct MonomialQuotientRing {
    p: u64,
    nvars: usize,
    truncate_degree: Option<u32>,
    zero_monomials: Vec<Vec<u32>>,
    var_names: Vec<String>,
    basis: Vec<Vec<u32>>,
    basis_index: HashMap<Vec<u32>, usize>,
}

const CANDIDATE_SPACE_LIMIT: u64 = 1 << 22;

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

impl MonomialQuotientRing {
    pub fn new(
        p: u64,
        nvars: usize,
        truncate_degree: Option<u32>,
        zero_monomials: Vec<Vec<u32>>,
        var_names: Option<Vec<String>>,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Descriptor(format!(
                "coefficient field order {p} is not prime"
            )));
        }
        for z in &zero_monomials {
            if z.len() != nvars {
                return Err(Error::Descriptor(format!(
                    "relation monomial {z:?} has {} exponents, expected {nvars}",
                    z.len()
                )));
            }
            if z.iter().all(|&e| e == 0) {
                return Err(Error::Descriptor(
                    "the unit monomial cannot be declared zero".into(),
                ));
            }
        }
        if truncate_degree == Some(0) {
            return Err(Error::Descriptor(
                "degree truncation at 0 leaves no ring".into(),
            ));
        }
        let var_names = match var_names {
            Some(names) => {
                if names.len() != nvars {
                    return Err(Error::Descriptor(format!(
                        "{} variable names for {nvars} variables",
                        names.len()
                    )));
                }
                for name in &names {
                    if name.is_empty()
                        || !name.chars().next().unwrap().is_ascii_alphabetic()
                        || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    {
                        return Err(Error::Descriptor(format!("bad variable name {name:?}")));
                    }
                }
                let mut sorted = names.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != names.len() {
                    return Err(Error::Descriptor("duplicate variable names".into()));
                }
                names
            }
            None => (1..=nvars).map(|i| format!("x{i}")).collect(),
        };

        // per-variable exponent bounds: from a pure-power relation or the
        // degree truncation; without either the quotient is infinite
        let mut bounds = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let pure = zero_monomials
                .iter()
                .filter(|z| z.iter().enumerate().all(|(i, &e)| (i == v) == (e > 0)))
                .map(|z| z[v])
                .min();
            let bound = match (pure, truncate_degree) {
                (Some(e), Some(d)) => Some((e - 1).min(d - 1)),
                (Some(e), None) => Some(e - 1),
                (None, Some(d)) => Some(d - 1),
                (None, None) => None,
            };
            match bound {
                Some(b) => bounds.push(b),
                None => {
                    return Err(Error::Descriptor(format!(
                        "variable {} has no vanishing power; the quotient is infinite",
                        var_names[v]
                    )))
                }
            }
        }

        let mut space: u64 = 1;
        for &b in &bounds {
            space = space
                .checked_mul(b as u64 + 1)
                .filter(|&s| s <= CANDIDATE_SPACE_LIMIT)
                .ok_or_else(|| {
                    Error::Descriptor("monomial candidate space too large".into())
                })?;
        }

        let mut basis: Vec<Vec<u32>> = Vec::new();
        let mut exps = vec![0u32; nvars];
        loop {
            let degree: u32 = exps.iter().sum();
            let truncated = truncate_degree.is_some_and(|d| degree >= d);
            let killed = zero_monomials
                .iter()
                .any(|z| exps.iter().zip(z).all(|(e, ze)| e >= ze));
            if !truncated && !killed {
                basis.push(exps.clone());
            }
            // odometer over the exponent box
            let mut pos = 0;
            loop {
                if pos == nvars {
                    break;
                }
                if exps[pos] < bounds[pos] {
                    exps[pos] += 1;
                    break;
                }
                exps[pos] = 0;
                pos += 1;
            }
            if pos == nvars {
                break;
            }
            if nvars == 0 {
                break;
            }
        }
        basis.sort_by(|a, b| {
            let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
            da.cmp(&db).then_with(|| b.cmp(a)) // graded, then lex-descending
        });
        let basis_index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(MonomialQuotientRing {
            p,
            nvars,
            truncate_degree,
            zero_monomials,
            var_names,
            basis,
            basis_index,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn descriptor(&self) -> crate::ring::RingDescriptor {
        crate::ring::RingDescriptor::MonomialQuotient {
            p: self.p,
            vars: self.nvars,
            truncate_degree: self.truncate_degree,
            zero_monomials: self.zero_monomials.clone(),
            var_names: Some(self.var_names.clone()),
        }
    }

    /// True iff every product of two variables is zero (no basis monomial of
    /// degree two or more survives).
    pub fn degree_two_vanishes(&self) -> bool {
        self.basis.iter().all(|m| m.iter().sum::<u32>() < 2)
    }

    pub fn basis_size(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn order(&self) -> BigUint {
        num_traits::pow::pow(BigUint::from(self.p), self.basis.len())
    }

    pub fn zero(&self) -> Element {
        Element::Coeffs(vec![0; self.basis.len()])
    }

    pub fn one(&self) -> Element {
        let mut c = vec![0; self.basis.len()];
        c[0] = 1; // graded-lex puts the constant monomial first
        Element::Coeffs(c)
    }

    /// The image of variable `v` (0-based).
    pub fn variable(&self, v: usize) -> Result<Element> {
        if v >= self.nvars {
            return Err(Error::Validation(format!("no variable with index {v}")));
        }
        let mut exps = vec![0u32; self.nvars];
        exps[v] = 1;
        let idx = self.basis_index.get(&exps).ok_or_else(|| {
            Error::Validation(format!("variable {} is zero in this ring", self.var_names[v]))
        })?;
        let mut c = vec![0; self.basis.len()];
        c[*idx] = 1;
        Ok(Element::Coeffs(c))
    }

    pub fn contains(&self, a: &Element) -> bool {
        matches!(a, Element::Coeffs(c)
            if c.len() == self.basis.len() && c.iter().all(|&x| x < self.p))
    }

    fn coeffs<'a>(&self, a: &'a Element) -> Result<&'a [u64]> {
        match a {
            Element::Coeffs(c)
                if c.len() == self.basis.len() && c.iter().all(|&x| x < self.p) =>
            {
                Ok(c)
            }
            other => Err(Error::RingMismatch(format!(
                "expected {} coefficients below {}, got {other:?}",
                self.basis.len(),
                self.p
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

    /// Product of two basis monomials: a basis index or None when the product
    /// reduces to zero.
    fn mul_basis(&self, i: usize, j: usize) -> Option<usize> {
        let sum: Vec<u32> = self.basis[i]
            .iter()
            .zip(&self.basis[j])
            .map(|(a, b)| a + b)
            .collect();
        let degree: u32 = sum.iter().sum();
        if self.truncate_degree.is_some_and(|d| degree >= d) {
            return None;
        }
        if self
            .zero_monomials
            .iter()
            .any(|z| sum.iter().zip(z).all(|(e, ze)| e >= ze))
        {
            return None;
        }
        Some(*self.basis_index.get(&sum).expect("closed under products"))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        let (a, b) = (self.coeffs(a)?, self.coeffs(b)?);
        let mut out = vec![0u64; self.basis.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                if let Some(k) = self.mul_basis(i, j) {
                    out[k] = (out[k] + x * y) % self.p;
                }
            }
        }
        Ok(Element::Coeffs(out))
    }

    /// Units are exactly the elements with a nonzero constant term: every
    /// variable is nilpotent here.
    pub fn is_unit(&self, a: &Element) -> Result<bool> {
        Ok(self.coeffs(a)?[0] != 0)
    }

    /// For a nonzero nilpotent a (zero constant term), the last nonzero power.
    pub fn zero_divisor_partner(&self, a: &Element) -> Result<Option<Element>> {
        let c = self.coeffs(a)?;
        if c.iter().all(|&x| x == 0) || c[0] != 0 {
            return Ok(None);
        }
        let mut prev = a.clone();
        loop {
            let next = self.mul(&prev, a)?;
            if next == self.zero() {
                return Ok(Some(prev));
            }
            prev = next;
        }
    }

    pub fn element_at(&self, index: u64) -> Element {
        let mut c = Vec::with_capacity(self.basis.len());
        let mut rest = index;
        for _ in 0..self.basis.len() {
            c.push(rest % self.p);
            rest /= self.p;
        }
        Element::Coeffs(c)
    }

    pub fn index_of(&self, a: &Element) -> Option<u64> {
        let c = self.coeffs(a).ok()?;
        let mut idx: u64 = 0;
        for &x in c.iter().rev() {
            idx = idx.checked_mul(self.p)?.checked_add(x)?;
        }
        Some(idx)
    }

    fn monomial_text(&self, exps: &[u32]) -> String {
        let factors: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                if e == 1 {
                    self.var_names[v].clone()
                } else {
                    format!("{}^{e}", self.var_names[v])
                }
            })
            .collect();
        factors.join("*")
    }

    pub fn to_text(&self, a: &Element) -> Result<String> {
        let c = self.coeffs(a)?;
        let mut terms = Vec::new();
        for (i, &x) in c.iter().enumerate().skip(1) {
            if x == 0 {
                continue;
            }
            let m = self.monomial_text(&self.basis[i]);
            terms.push(if x == 1 { m } else { format!("{x}*{m}") });
        }
        if c[0] != 0 {
            terms.push(c[0].to_string());
        }
        if terms.is_empty() {
            Ok("0".to_string())
        } else {
            Ok(terms.join("+"))
        }
    }

    pub fn from_text(&self, text: &str) -> Result<Element> {
        let mut coeffs = vec![0u64; self.basis.len()];
        for term in text.trim().split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse {
                    line: 1,
                    msg: "empty term".into(),
                });
            }
            let mut coeff: u64 = 1;
            let mut exps = vec![0u32; self.nvars];
            let mut any_var = false;
            let mut any_num = false;
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.chars().all(|ch| ch.is_ascii_digit()) && !factor.is_empty() {
                    let v: u64 = factor.parse().map_err(|_| Error::Parse {
                        line: 1,
                        msg: format!("bad coefficient {factor:?}"),
                    })?;
                    coeff = coeff * (v % self.p) % self.p;
                    any_num = true;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let exp: u32 = e.trim().parse().map_err(|_| Error::Parse {
                            line: 1,
                            msg: format!("bad exponent in {factor:?}"),
                        })?;
                        (n.trim(), exp)
                    }
                    None => (factor, 1),
                };
                let v = self
                    .var_names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| Error::Parse {
                        line: 1,
                        msg: format!("unknown variable {name:?}"),
                    })?;
                exps[v] += exp;
                any_var = true;
            }
            if !any_var && !any_num {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("unreadable term {term:?}"),
                });
            }
            let idx = self.basis_index.get(&exps).ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("monomial in {term:?} is zero in this ring"),
            })?;
            coeffs[*idx] = (coeffs[*idx] + coeff) % self.p;
        }
        Ok(Element::Coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// F_2[x]/(x^3)
    fn trunc_cubed() -> MonomialQuotientRing {
        MonomialQuotientRing::new(2, 1, None, vec![vec![3]], None).unwrap()
    }

    #[test]
    fn basis_of_x_cubed_quotient() {
        let r = trunc_cubed();
        assert_eq!(r.basis(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(r.order(), BigUint::from(8u32));
    }

    #[test]
    fn one_plus_x_is_a_unit() {
        let r = trunc_cubed();
        let a = r.from_text("1+x1").unwrap();
        assert!(r.is_unit(&a).unwrap());
        let inv = r.from_text("1+x1+x1^2").unwrap();
        assert_eq!(r.mul(&a, &inv).unwrap(), r.one());
    }

    #[test]
    fn partner_is_last_nonzero_power() {
        let r = trunc_cubed();
        let x = r.variable(0).unwrap();
        let partner = r.zero_divisor_partner(&x).unwrap().unwrap();
        assert_eq!(r.to_text(&partner).unwrap(), "x1^2");
        assert_eq!(r.mul(&x, &partner).unwrap(), r.zero());
    }

    #[test]
    fn custom_names_and_parse() {
        let r = MonomialQuotientRing::new(
            2,
            2,
            Some(4),
            vec![vec![3, 0], vec![0, 3], vec![1, 1]],
            Some(vec!["x".into(), "y".into()]),
        )
        .unwrap();
        // basis: 1, x, y, x^2, y^2 (xy dies, degree >= 4 dies, x^3, y^3 die)
        assert_eq!(r.basis_size(), 5);
        let a = r.from_text("x^2+y+1").unwrap();
        assert_eq!(r.from_text(&r.to_text(&a).unwrap()).unwrap(), a);
        assert!(r.from_text("x*y").is_err()); // zero monomial is not canonical
    }

    #[test]
    fn infinite_quotient_rejected() {
        assert!(MonomialQuotientRing::new(2, 2, None, vec![vec![2, 0]], None).is_err());
    }

    #[test]
    fn zero_vars_is_the_prime_field() {
        let r = MonomialQuotientRing::new(5, 0, None, vec![], None).unwrap();
        assert_eq!(r.basis_size(), 1);
        assert_eq!(r.order(), BigUint::from(5u32));
    }

    #[test]
    fn graded_lex_order() {
        let r = MonomialQuotientRing::new(2, 2, Some(3), vec![], None).unwrap();
        // 1; x1, x2; x1^2, x1*x2, x2^2
        assert_eq!(
            r.basis(),
            &[
                vec![0, 0],
                vec![1, 0],
                vec![0, 1],
                vec![2, 0],
                vec![1, 1],
                vec![0, 2]
            ]
        );
    }
}
