//! Ambient polynomial rings: k[x_1..x_n] with k = F_p or Q, plus the
//! coefficient arithmetic both fields share.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::rational::is_prime_u64;

/// Term order used for every cached basis of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    GrevLex,
    Lex,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::GrevLex
    }
}

/// Ambient ring descriptor. `characteristic` is 0 (rationals) or a prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDescriptor {
    pub characteristic: u64,
    pub variables: Vec<String>,
    pub order: MonomialOrder,
}

/// Shared handle; polynomials and ideals hold one of these.
pub type Ring = Arc<RingDescriptor>;

impl RingDescriptor {
    pub fn new(characteristic: u64, variables: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        if characteristic != 0 && !is_prime_u64(characteristic) {
            return Err(Error::NotPrime(characteristic));
        }
        if characteristic >= (1 << 62) {
            return Err(Error::InvalidRing("characteristic too large".into()));
        }
        if variables.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                || v.chars().next().is_some_and(|c| c.is_ascii_digit())
            {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(RingDescriptor {
            characteristic,
            variables,
            order,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn is_char_zero(&self) -> bool {
        self.characteristic == 0
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// Compare monomials under this ring's order. Larger = later in the order.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            MonomialOrder::GrevLex => {
                let da = a.total_degree();
                let db = b.total_degree();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        for i in (0..a.arity()).rev() {
                            match a.exp(i).cmp(b.exp(i)) {
                                Ordering::Equal => {}
                                // bigger exponent in a later variable = smaller
                                Ordering::Less => return Ordering::Greater,
                                Ordering::Greater => return Ordering::Less,
                            }
                        }
                        Ordering::Equal
                    }
                    c => c,
                }
            }
            MonomialOrder::Lex => {
                for i in 0..a.arity() {
                    match a.exp(i).cmp(b.exp(i)) {
                        Ordering::Equal => {}
                        c => return c,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// A coefficient of the ambient field: `Fp` holds a canonical residue in
/// `[0, p)`, `Rat` an exact reduced rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    Fp(u64),
    Rat(BigRational),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Fp(a) => *a == 0,
            Coeff::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Fp(a) => *a == 1,
            Coeff::Rat(r) => r.is_one(),
        }
    }
}

impl RingDescriptor {
    pub fn zero_coeff(&self) -> Coeff {
        if self.is_char_zero() {
            Coeff::Rat(BigRational::zero())
        } else {
            Coeff::Fp(0)
        }
    }

    pub fn one_coeff(&self) -> Coeff {
        if self.is_char_zero() {
            Coeff::Rat(BigRational::one())
        } else {
            Coeff::Fp(1)
        }
    }

    pub fn coeff_from_i64(&self, n: i64) -> Coeff {
        if self.is_char_zero() {
            Coeff::Rat(BigRational::from_integer(BigInt::from(n)))
        } else {
            let p = self.characteristic as i128;
            Coeff::Fp((((n as i128) % p + p) % p) as u64)
        }
    }

    /// Map an exact rational into the field; in characteristic p the
    /// denominator must be invertible.
    pub fn coeff_from_rational(&self, r: &BigRational) -> Result<Coeff> {
        if self.is_char_zero() {
            return Ok(Coeff::Rat(r.clone()));
        }
        let p = self.characteristic;
        let pb = BigInt::from(p);
        let num = r.numer().mod_floor_u64(&pb);
        let den = r.denom().mod_floor_u64(&pb);
        if den == 0 {
            return Err(Error::BadCoefficient {
                text: r.to_string(),
                p,
            });
        }
        Ok(Coeff::Fp(self.fp_mul(num, self.fp_inv(den))))
    }

    pub fn c_add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Fp(x), Coeff::Fp(y)) => {
                let p = self.characteristic as u128;
                Coeff::Fp(((*x as u128 + *y as u128) % p) as u64)
            }
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            _ => unreachable!("mixed coefficient fields"),
        }
    }

    pub fn c_neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Fp(x) => {
                if *x == 0 {
                    Coeff::Fp(0)
                } else {
                    Coeff::Fp(self.characteristic - x)
                }
            }
            Coeff::Rat(x) => Coeff::Rat(-x),
        }
    }

    pub fn c_sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.c_add(a, &self.c_neg(b))
    }

    pub fn c_mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(self.fp_mul(*x, *y)),
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            _ => unreachable!("mixed coefficient fields"),
        }
    }

    pub fn c_inv(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Fp(x) => {
                assert!(*x != 0, "division by zero");
                Coeff::Fp(self.fp_inv(*x))
            }
            Coeff::Rat(x) => {
                assert!(!x.is_zero(), "division by zero");
                Coeff::Rat(x.recip())
            }
        }
    }

    pub fn c_div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.c_mul(a, &self.c_inv(b))
    }

    fn fp_mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.characteristic as u128) as u64
    }

    fn fp_inv(&self, a: u64) -> u64 {
        // extended Euclid on (a, p)
        let p = self.characteristic as i128;
        let (mut r0, mut r1) = (a as i128, p);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        assert!(r0 == 1, "non-invertible element");
        ((s0 % p + p) % p) as u64
    }

    pub fn render_coeff(&self, c: &Coeff) -> String {
        match c {
            Coeff::Fp(x) => x.to_string(),
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Signed magnitude split used when rendering rational polynomials.
pub fn coeff_is_negative(c: &Coeff) -> bool {
    match c {
        Coeff::Fp(_) => false,
        Coeff::Rat(r) => r.is_negative(),
    }
}

pub fn coeff_abs(c: &Coeff) -> Coeff {
    match c {
        Coeff::Fp(x) => Coeff::Fp(*x),
        Coeff::Rat(r) => Coeff::Rat(r.abs()),
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: &BigInt) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: &BigInt) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(p);
        let (_, digits) = m.to_u64_digits();
        match digits.len() {
            0 => 0,
            1 => digits[0],
            _ => unreachable!("residue exceeds u64"),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = if self.is_char_zero() {
            "QQ".to_string()
        } else {
            format!("GF({})", self.characteristic)
        };
        write!(f, "{}[{}]", field, self.variables.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64) -> Ring {
        RingDescriptor::new(p, vec!["x".into(), "y".into()], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn validates_characteristic_and_names() {
        assert!(RingDescriptor::new(4, vec!["x".into()], MonomialOrder::Lex).is_err());
        assert!(RingDescriptor::new(7, vec!["x".into(), "x".into()], MonomialOrder::Lex).is_err());
        assert!(RingDescriptor::new(7, vec!["".into()], MonomialOrder::Lex).is_err());
        assert!(ring(7).var_index("y") == Some(1));
    }

    #[test]
    fn fp_arithmetic() {
        let r = ring(7);
        let two = r.coeff_from_i64(2);
        let five = r.coeff_from_i64(-2);
        assert_eq!(five, Coeff::Fp(5));
        assert_eq!(r.c_add(&two, &five), Coeff::Fp(0));
        assert_eq!(r.c_mul(&two, &five), Coeff::Fp(3));
        assert_eq!(r.c_mul(&five, &r.c_inv(&five)), Coeff::Fp(1));
    }

    #[test]
    fn rational_reduction_mod_p() {
        let r = ring(3);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(r.coeff_from_rational(&half).unwrap(), Coeff::Fp(2));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert!(r.coeff_from_rational(&bad).is_err());
    }
}
