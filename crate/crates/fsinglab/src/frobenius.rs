//! Frobenius bracket powers I^[q], Frobenius roots I^[1/p^e], and twisted
//! roots (f^N · I)^[1/p^e] with base-p digit peeling so f^N is never
//! expanded for N ≥ p.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{Coeff, Ring};

fn require_char_p(ring: &Ring) -> Result<u64> {
    match ring.characteristic {
        0 => Err(Error::CharacteristicZero),
        p => Ok(p),
    }
}

/// Check q = p^e and return e.
fn p_power_exponent(q: &BigUint, p: u64) -> Result<u32> {
    let pb = BigUint::from(p);
    let mut rest = q.clone();
    let mut e = 0u32;
    if rest.is_zero() {
        return Err(Error::NotPPower(q.to_string()));
    }
    while rest > BigUint::from(1u32) {
        let (quot, rem) = rest.div_rem(&pb);
        if !rem.is_zero() {
            return Err(Error::NotPPower(q.to_string()));
        }
        rest = quot;
        e += 1;
    }
    if e == 0 {
        return Err(Error::NotPPower(q.to_string()));
    }
    Ok(e)
}

/// I^[q]: the ideal generated by q-th powers of the generators, q = p^e.
/// Independent of the generating set by flatness of Frobenius.
pub fn bracket_power(ideal: &Ideal, q: &BigUint) -> Result<Ideal> {
    let p = require_char_p(ideal.ring())?;
    let e = p_power_exponent(q, p)?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.pth_power(e))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// One p-th root of a single polynomial: group the terms by their p-basis
/// digit r = exp mod p and collect the digit coefficients. Coefficients of
/// the prime field are their own p-th roots.
fn root_step_poly(p: u64, h: &Polynomial) -> Vec<Polynomial> {
    let ring = h.ring().clone();
    let mut buckets: Vec<(Monomial, Vec<(Monomial, Coeff)>)> = Vec::new();
    for (m, c) in h.terms() {
        let (quot, digit) = m.divmod(p);
        match buckets.iter_mut().find(|(d, _)| *d == digit) {
            Some((_, terms)) => terms.push((quot, c.clone())),
            None => buckets.push((digit, vec![(quot, c.clone())])),
        }
    }
    buckets.sort_by(|a, b| a.0.cmp(&b.0));
    buckets
        .into_iter()
        .map(|(_, terms)| Polynomial::from_terms(&ring, terms))
        .filter(|f| !f.is_zero())
        .collect()
}

fn root_step_ideal(p: u64, gens: &[Polynomial], ring: &Ring) -> Result<Ideal> {
    let mut out = Vec::new();
    for g in gens {
        out.extend(root_step_poly(p, g));
    }
    Ok(Ideal::new(ring, out)?.reduced())
}

/// I^[1/p^e]: the smallest ideal J with I ⊆ J^[p^e].
pub fn frobenius_root(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let p = require_char_p(ideal.ring())?;
    let mut cur = ideal.reduced();
    for _ in 0..e {
        cur = root_step_ideal(p, cur.generators(), ideal.ring())?;
        if cur.is_unit_ideal() {
            break;
        }
    }
    Ok(cur)
}

/// A product of principal twists kept in factored form, with the root
/// level. Represents (Π fᵢ^{Nᵢ} · J)^[1/p^level] for a J supplied later.
#[derive(Debug, Clone)]
pub struct TwistData {
    factors: Vec<(Polynomial, BigUint)>,
    level: u32,
}

impl TwistData {
    pub fn new(factors: Vec<(Polynomial, BigUint)>, level: u32) -> Result<TwistData> {
        if level == 0 {
            return Err(Error::InvalidPair("twist level must be ≥ 1".into()));
        }
        for (f, _) in &factors {
            if f.is_zero() {
                return Err(Error::InvalidPair("zero twist factor".into()));
            }
        }
        Ok(TwistData { factors, level })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn factors(&self) -> &[(Polynomial, BigUint)] {
        &self.factors
    }
}

/// (Π fᵢ^{Nᵢ} · J)^[1/p^e] by digit peeling: at each of the e root steps
/// only fᵢ^{rᵢ} with rᵢ < p is multiplied in, and the leading parts
/// fᵢ^{Nᵢ div p} ride along to the next step. Exact factor extraction
/// (u^p·I)^[1/p] = u·I^[1/p] makes this agree with the naive expansion.
pub fn twisted_root(twist: &TwistData, ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring().clone();
    let p = require_char_p(&ring)?;
    for (f, _) in &twist.factors {
        f.same_ring(&Polynomial::zero(&ring))?;
    }
    let pb = BigUint::from(p);
    let mut exps: Vec<BigUint> = twist.factors.iter().map(|(_, n)| n.clone()).collect();
    let mut cur = ideal.reduced();
    for _ in 0..twist.level {
        let mut multiplier = Polynomial::one(&ring);
        for (k, (f, _)) in twist.factors.iter().enumerate() {
            let (quot, rem) = exps[k].div_rem(&pb);
            let r: u64 = (&rem).try_into().expect("remainder below p fits u64");
            if r > 0 {
                multiplier = multiplier.mul(&f.pow(r));
            }
            exps[k] = quot;
        }
        let gens: Vec<Polynomial> = if multiplier.is_one() {
            cur.generators().to_vec()
        } else {
            cur.generators().iter().map(|g| g.mul(&multiplier)).collect()
        };
        cur = root_step_ideal(p, &gens, &ring)?;
    }
    // leftover factored part multiplies the result
    for (k, (f, _)) in twist.factors.iter().enumerate() {
        if !exps[k].is_zero() {
            let e: u64 = (&exps[k])
                .try_into()
                .map_err(|_| Error::TooLarge(format!("leftover twist exponent {}", exps[k])))?;
            cur = cur.mul_poly(&f.pow(e))?;
        }
    }
    Ok(cur.reduced())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::{MonomialOrder, RingDescriptor};

    fn gf(p: u64) -> Ring {
        RingDescriptor::new(p, vec!["x".into(), "y".into()], MonomialOrder::GrevLex).unwrap()
    }

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
        let ps = gens.iter().map(|s| parse_poly(s, ring).unwrap()).collect();
        Ideal::new(ring, ps).unwrap()
    }

    #[test]
    fn bracket_power_basics() {
        let r = gf(5);
        let m = ideal(&r, &["x", "y"]);
        let b = bracket_power(&m, &BigUint::from(5u32)).unwrap();
        assert!(b.equal(&ideal(&r, &["x^5", "y^5"])).unwrap());
        let f = ideal(&r, &["x + y"]);
        let bf = bracket_power(&f, &BigUint::from(5u32)).unwrap();
        assert!(bf.equal(&ideal(&r, &["x^5 + y^5"])).unwrap());
        assert!(bracket_power(&m, &BigUint::from(10u32)).is_err());
        assert!(bracket_power(&m, &BigUint::from(1u32)).is_err());
    }

    #[test]
    fn bracket_power_generating_set_independent() {
        let r = gf(5);
        let a = ideal(&r, &["x", "y"]);
        let b = ideal(&r, &["x", "y", "x + y"]);
        let q = BigUint::from(5u32);
        assert!(bracket_power(&a, &q)
            .unwrap()
            .equal(&bracket_power(&b, &q).unwrap())
            .unwrap());
    }

    #[test]
    fn root_examples() {
        let r = gf(5);
        assert!(frobenius_root(&ideal(&r, &["x^5"]), 1)
            .unwrap()
            .equal(&ideal(&r, &["x"]))
            .unwrap());
        // x^4 y^4 is a p-basis monomial with unit coefficient
        assert!(frobenius_root(&ideal(&r, &["x^4*y^4"]), 1)
            .unwrap()
            .is_unit_ideal());
        // x^6 y^5 = (x y)^5 · x
        assert!(frobenius_root(&ideal(&r, &["x^6*y^5"]), 1)
            .unwrap()
            .equal(&ideal(&r, &["x*y"]))
            .unwrap());
    }

    #[test]
    fn root_rejects_char_zero() {
        let q = RingDescriptor::new(0, vec!["x".into()], MonomialOrder::GrevLex).unwrap();
        let i = Ideal::new(&q, vec![Polynomial::var(&q, 0)]).unwrap();
        assert!(frobenius_root(&i, 1).is_err());
    }

    #[test]
    fn twisted_examples() {
        let r = gf(5);
        // f = x, N = p-1, J = (1): (x^4)^[1/5] = (1)
        let f = parse_poly("x", &r).unwrap();
        let t = TwistData::new(vec![(f.clone(), BigUint::from(4u32))], 1).unwrap();
        assert!(twisted_root(&t, &Ideal::unit(&r)).unwrap().is_unit_ideal());
        // (f^{pM} I)^[1/p] = f^M I^[1/p]: f = x, M = 2, I = (y^5)
        let t2 = TwistData::new(vec![(f, BigUint::from(10u32))], 1).unwrap();
        let i = ideal(&r, &["y^5"]);
        assert!(twisted_root(&t2, &i)
            .unwrap()
            .equal(&ideal(&r, &["x^2*y"]))
            .unwrap());
    }

    #[test]
    fn cusp_twist_is_unit_at_seven() {
        // f^5 contains 3·x^6 y^6 (C(5,3)=10 ≡ 3 mod 7), a unit digit
        let r = gf(7);
        let f = parse_poly("x^2 + y^3", &r).unwrap();
        let t = TwistData::new(vec![(f.clone(), BigUint::from(5u32))], 1).unwrap();
        let root = twisted_root(&t, &Ideal::unit(&r)).unwrap();
        assert!(root.is_unit_ideal());
        // and it agrees with the naive expansion
        let naive = frobenius_root(&Ideal::principal(f.pow(5)), 1).unwrap();
        assert!(root.equal(&naive).unwrap());
    }

    #[test]
    fn twisted_matches_naive_across_levels() {
        let r = gf(3);
        let f = parse_poly("x^2 + y^3", &r).unwrap();
        let j = ideal(&r, &["x", "y^2"]);
        for n in [0u32, 1, 2, 4, 8, 9, 10] {
            for level in [1u32, 2] {
                let t = TwistData::new(vec![(f.clone(), BigUint::from(n))], level).unwrap();
                let fast = twisted_root(&t, &j).unwrap();
                let expanded = Ideal::new(
                    &r,
                    j.generators()
                        .iter()
                        .map(|g| g.mul(&f.pow(n as u64)))
                        .collect(),
                )
                .unwrap();
                let slow = frobenius_root(&expanded, level).unwrap();
                assert!(
                    fast.equal(&slow).unwrap(),
                    "n={n} level={level}: {:?} vs {:?}",
                    fast.rendered_basis(),
                    slow.rendered_basis()
                );
            }
        }
    }

    #[test]
    fn root_additivity() {
        let r = gf(5);
        let a = ideal(&r, &["x^7 + y^3"]);
        let b = ideal(&r, &["x^2*y^9"]);
        let lhs = frobenius_root(&a.sum(&b).unwrap(), 1).unwrap();
        let rhs = frobenius_root(&a, 1)
            .unwrap()
            .sum(&frobenius_root(&b, 1).unwrap())
            .unwrap();
        assert!(lhs.equal(&rhs).unwrap());
    }
}
