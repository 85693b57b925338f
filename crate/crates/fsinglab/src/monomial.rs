//! Exponent vectors. Exponents are arbitrary-precision so that Frobenius
//! powers never overflow, no matter the level.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A monomial is its exponent vector; the arity must match the ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<BigUint>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![BigUint::zero(); arity],
        }
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut m = Self::one(arity);
        m.exps[index] = BigUint::one();
        m
    }

    pub fn from_exps(exps: Vec<BigUint>) -> Self {
        Monomial { exps }
    }

    pub fn from_u64s(exps: &[u64]) -> Self {
        Monomial {
            exps: exps.iter().map(|&e| BigUint::from(e)).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> &BigUint {
        &self.exps[i]
    }

    pub fn exps(&self) -> &[BigUint] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    pub fn total_degree(&self) -> BigUint {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise division; `None` when not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.arity(), other.arity());
        let mut exps = Vec::with_capacity(self.arity());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| a.is_zero() || b.is_zero())
    }

    /// Multiply every exponent by q (used by Frobenius powers).
    pub fn scale(&self, q: &BigUint) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * q).collect(),
        }
    }

    /// Componentwise (exp div p, exp mod p): quotient is the p-th root part,
    /// remainder the p-basis digit.
    pub fn divmod(&self, p: u64) -> (Monomial, Monomial) {
        let p = BigUint::from(p);
        let mut quot = Vec::with_capacity(self.arity());
        let mut rem = Vec::with_capacity(self.arity());
        for e in &self.exps {
            let (q, r) = e.div_rem(&p);
            quot.push(q);
            rem.push(r);
        }
        (Monomial { exps: quot }, Monomial { exps: rem })
    }

    /// True when each exponent is < bound (membership in the p^e-basis).
    pub fn all_below(&self, bound: &BigUint) -> bool {
        self.exps.iter().all(|e| e < bound)
    }

    pub fn render(&self, variables: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, e) in self.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if e.is_one() {
                parts.push(variables[i].clone());
            } else {
                parts.push(format!("{}^{}", variables[i], e));
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<String> = self.exps.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", exps.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_and_lcm() {
        let a = Monomial::from_u64s(&[3, 1]);
        let b = Monomial::from_u64s(&[1, 1]);
        assert_eq!(a.div(&b), Some(Monomial::from_u64s(&[2, 0])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.lcm(&b), a);
        assert!(b.divides(&a));
    }

    #[test]
    fn divmod_digits() {
        let a = Monomial::from_u64s(&[6, 5]);
        let (q, r) = a.divmod(5);
        assert_eq!(q, Monomial::from_u64s(&[1, 1]));
        assert_eq!(r, Monomial::from_u64s(&[1, 0]));
    }

    #[test]
    fn rendering() {
        let vars = vec!["x".to_string(), "y".to_string()];
        assert_eq!(Monomial::from_u64s(&[2, 1]).render(&vars), "x^2*y");
        assert_eq!(Monomial::from_u64s(&[0, 0]).render(&vars), "1");
    }
}
