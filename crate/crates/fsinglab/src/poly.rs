//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are kept sorted in strictly decreasing ring order, with no zero
//! coefficients; two polynomials are equal iff their term vectors are.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{coeff_abs, coeff_is_negative, Coeff, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    /// (monomial, coefficient), strictly decreasing in the ring order.
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.one_coeff())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), index), ring.one_coeff())],
        }
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Normalize an arbitrary term list: combine equal monomials, drop
    /// zeros, sort into canonical order.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ring.nvars());
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = ring.c_add(&last.1, &c);
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constants are the units of a polynomial ring over a field.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn constant_coefficient(&self) -> Coeff {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.zero_coeff())
    }

    pub fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ring.cmp_monomials(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.c_add(&self.terms[i].1, &other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ring.c_neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), self.ring.c_mul(tc, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut acc: Vec<(Monomial, Coeff)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), self.ring.c_mul(ca, cb)));
            }
        }
        Polynomial::from_terms(&self.ring, acc)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, tc)| (m.clone(), self.ring.c_mul(tc, c)))
                .collect(),
        }
    }

    /// Monic rescaling (leading coefficient 1); zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    self.scale(&self.ring.c_inv(lc))
                }
            }
        }
    }

    pub fn pow(&self, e: u64) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        if e == 0 {
            return acc;
        }
        let mut base = self.clone();
        let mut e = e;
        loop {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc
    }

    /// f^(p^e), computed termwise (the Frobenius is additive in
    /// characteristic p and coefficients of the prime field are fixed).
    pub fn pth_power(&self, e: u32) -> Result<Polynomial> {
        let p = self.ring.characteristic;
        if p == 0 {
            return Err(Error::CharacteristicZero);
        }
        if e == 0 {
            return Ok(self.clone());
        }
        let q = BigUint::from(p).pow(e);
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.scale(&q), c.clone()))
                .collect(),
        })
    }

    /// Exact multivariate division by `g`: returns the quotient when the
    /// remainder is zero, else `None`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        debug_assert_eq!(self.ring, g.ring);
        let (glm, glc) = g.leading_term()?.clone();
        let ring = self.ring.clone();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((lm, lc)) = rem.leading_term().cloned() {
            let m = lm.div(&glm)?;
            let c = ring.c_div(&lc, &glc);
            rem = rem.sub(&g.mul_term(&m, &c));
            quot.push((m, c));
        }
        Some(Polynomial::from_terms(&ring, quot))
    }

    /// Total order on polynomials of one ring: by leading terms downward.
    /// Used only to make generator lists and reports deterministic.
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        let n = self.terms.len().min(other.terms.len());
        for i in 0..n {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[i];
            match self.ring.cmp_monomials(ma, mb) {
                Ordering::Equal => {}
                c => return c,
            }
            match ca.cmp(cb) {
                Ordering::Equal => {}
                c => return c,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Canonical text rendering; `parse_poly` round-trips it.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let vars = &self.ring.variables;
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = coeff_is_negative(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = coeff_abs(c);
            if m.is_one() {
                out.push_str(&self.ring.render_coeff(&mag));
            } else if mag.is_one() {
                out.push_str(&m.render(vars));
            } else {
                out.push_str(&self.ring.render_coeff(&mag));
                out.push('*');
                out.push_str(&m.render(vars));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Coefficientwise reduction of a rational polynomial modulo p. Monomials
/// whose coefficient vanishes mod p are recorded so callers can tell when
/// the support degenerates.
pub struct CoeffReduction {
    pub poly: Polynomial,
    pub dropped_support: Vec<Monomial>,
}

pub fn reduce_coeffs_mod_p(f: &Polynomial, target: &Ring) -> Result<CoeffReduction> {
    if !f.ring().is_char_zero() {
        return Err(Error::CharacteristicPositive);
    }
    let p = target.characteristic;
    if p == 0 {
        return Err(Error::CharacteristicZero);
    }
    if f.ring().variables != target.variables {
        return Err(Error::RingMismatch);
    }
    let mut terms = Vec::with_capacity(f.num_terms());
    let mut dropped = Vec::new();
    for (m, c) in f.terms() {
        let r = match c {
            Coeff::Rat(r) => r,
            Coeff::Fp(_) => unreachable!("char-zero polynomial with prime-field coefficient"),
        };
        let reduced = target
            .coeff_from_rational(r)
            .map_err(|_| Error::BadPrime { p })?;
        if reduced.is_zero() {
            dropped.push(m.clone());
        } else {
            terms.push((m.clone(), reduced));
        }
    }
    Ok(CoeffReduction {
        poly: Polynomial::from_terms(target, terms),
        dropped_support: dropped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{MonomialOrder, RingDescriptor};

    fn gf7() -> Ring {
        RingDescriptor::new(7, vec!["x".into(), "y".into()], MonomialOrder::GrevLex).unwrap()
    }

    fn qq() -> Ring {
        RingDescriptor::new(0, vec!["x".into(), "y".into()], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let r = gf7();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x.pow(2).add(&y.pow(3));
        assert_eq!(f.num_terms(), 2);
        // leading term under grevlex is y^3
        assert_eq!(f.leading_term().unwrap().0, Monomial::from_u64s(&[0, 3]));
        let two_x = x.scale(&r.coeff_from_i64(2));
        let nine_x = x.scale(&r.coeff_from_i64(9));
        assert!(two_x.sub(&nine_x).is_zero());
    }

    #[test]
    fn freshman_dream() {
        let r5 = RingDescriptor::new(5, vec!["x".into(), "y".into()], MonomialOrder::GrevLex)
            .unwrap();
        let x = Polynomial::var(&r5, 0);
        let y = Polynomial::var(&r5, 1);
        let f = x.add(&y);
        assert_eq!(f.pth_power(1).unwrap(), f.pow(5));
        assert_eq!(f.pth_power(0).unwrap(), f);
    }

    #[test]
    fn pth_power_matches_naive_for_cusp() {
        let r = gf7();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x.pow(2).add(&y.pow(3));
        assert_eq!(f.pth_power(1).unwrap(), f.pow(7));
    }

    #[test]
    fn exact_division() {
        let r = gf7();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x.pow(2).add(&y.pow(3));
        let prod = f.mul(&x).mul(&f);
        let q = prod.div_exact(&f).unwrap();
        assert_eq!(q, f.mul(&x));
        assert!(x.add(&y).div_exact(&x).is_none());
    }

    #[test]
    fn reduction_mod_p() {
        let q = qq();
        let x = Polynomial::var(&q, 0);
        let y = Polynomial::var(&q, 1);
        // (1/2)x + y over F_3: 1/2 = 2
        let f = x.scale(&Coeff::Rat(num_rational::BigRational::new(
            1.into(),
            2.into(),
        )))
        .add(&y);
        let gf3 =
            RingDescriptor::new(3, vec!["x".into(), "y".into()], MonomialOrder::GrevLex).unwrap();
        let red = reduce_coeffs_mod_p(&f, &gf3).unwrap();
        assert_eq!(red.poly.render(), "2*x + y");
        assert!(red.dropped_support.is_empty());
        let gf2 =
            RingDescriptor::new(2, vec!["x".into(), "y".into()], MonomialOrder::GrevLex).unwrap();
        assert!(reduce_coeffs_mod_p(&f, &gf2).is_err());
        // 7x + y over F_7 drops the x term and flags it
        let seven_x = x.scale(&Coeff::Rat(num_rational::BigRational::from_integer(
            7.into(),
        )));
        let red7 = reduce_coeffs_mod_p(&seven_x.add(&y), &gf7()).unwrap();
        assert_eq!(red7.poly.render(), "y");
        assert_eq!(red7.dropped_support, vec![Monomial::from_u64s(&[1, 0])]);
    }
}
