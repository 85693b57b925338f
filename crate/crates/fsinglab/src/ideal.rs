//! Ideals and the Buchberger engine.
//!
//! Every ideal caches its reduced Gröbner basis (unique for the ring's
//! order), which backs membership, equality, intersection and colon. All
//! tie-breaking is deterministic so reruns are byte-identical.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring, RingDescriptor};

#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            gb,
        }
    }
}

impl Ideal {
    /// Build an ideal from generators; zero generators are dropped.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        gens.sort_by(|a, b| a.canonical_cmp(b));
        gens.dedup();
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![]).expect("zero ideal")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("unit ideal")
    }

    pub fn principal(f: Polynomial) -> Ideal {
        let ring = f.ring().clone();
        Ideal::new(&ring, vec![f]).expect("principal ideal")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_monomial_generated(&self) -> bool {
        self.generators.iter().all(|g| g.is_monomial())
    }

    /// The unique reduced Gröbner basis, computed once and cached.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb
            .get_or_init(|| buchberger(&self.ring, self.generators.clone()))
    }

    pub fn is_unit_ideal(&self) -> bool {
        let gb = self.groebner_basis();
        gb.len() == 1 && gb[0].is_one()
    }

    /// Replace the generators by the reduced basis (canonical form).
    pub fn reduced(&self) -> Ideal {
        let gb = self.groebner_basis().to_vec();
        let cell = OnceLock::new();
        let _ = cell.set(gb.clone());
        Ideal {
            ring: self.ring.clone(),
            generators: gb,
            gb: cell,
        }
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        f.same_ring(&Polynomial::zero(&self.ring))?;
        Ok(normal_form(f, self.groebner_basis()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.groebner_basis() == other.groebner_basis())
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// I^n with deduplication between steps so binomial-type generator
    /// lists stay linear instead of exponential.
    pub fn power(&self, n: u64) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self)?;
            if acc.generators.len() > 200_000 {
                return Err(Error::TooLarge(format!(
                    "ideal power expansion ({} generators)",
                    acc.generators.len()
                )));
            }
        }
        Ok(acc)
    }

    pub fn power_big(&self, n: &BigUint) -> Result<Ideal> {
        let n_u64: u64 = n
            .try_into()
            .map_err(|_| Error::TooLarge(format!("ideal power exponent {n}")))?;
        self.power(n_u64)
    }

    /// Multiply every generator by a polynomial.
    pub fn mul_poly(&self, f: &Polynomial) -> Result<Ideal> {
        f.same_ring(&Polynomial::zero(&self.ring))?;
        Ideal::new(
            &self.ring,
            self.generators.iter().map(|g| g.mul(f)).collect(),
        )
    }

    /// Intersection via the standard one-tag elimination.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = extension_ring(&self.ring)?;
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(inject(f, &ext).mul(&t));
        }
        for g in &other.generators {
            gens.push(inject(g, &ext).mul(&one_minus_t));
        }
        let ext_ideal = Ideal::new(&ext, gens)?;
        let mut kept = Vec::new();
        for b in ext_ideal.groebner_basis() {
            if b.terms().iter().all(|(m, _)| m.exp(0).is_zero()) {
                kept.push(project(b, &self.ring));
            }
        }
        Ideal::new(&self.ring, kept)
    }

    /// Colon ideal (I : J) = ∩_g (I : g), each principal colon by the
    /// intersection-and-exact-division construction.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            let part = self.colon_principal(g)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        Ok(acc.expect("nonzero ideal has generators"))
    }

    fn colon_principal(&self, g: &Polynomial) -> Result<Ideal> {
        debug_assert!(!g.is_zero());
        if self.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let meet = self.intersect(&Ideal::principal(g.clone()))?;
        let mut gens = Vec::new();
        for h in meet.generators() {
            let q = h
                .div_exact(g)
                .expect("every element of I ∩ (g) is divisible by g");
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// Canonical rendering: the reduced basis, in order.
    pub fn rendered_basis(&self) -> Vec<String> {
        self.groebner_basis().iter().map(|g| g.render()).collect()
    }
}

/// [__t, x_1..x_n] with lex order, so prefix elimination works.
fn extension_ring(ring: &Ring) -> Result<Ring> {
    let mut vars = vec!["__t".to_string()];
    vars.extend(ring.variables.iter().cloned());
    RingDescriptor::new(ring.characteristic, vars, MonomialOrder::Lex)
}

fn inject(f: &Polynomial, ext: &Ring) -> Polynomial {
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = vec![BigUint::zero()];
            exps.extend(m.exps().iter().cloned());
            (Monomial::from_exps(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(ext, terms)
}

fn project(f: &Polynomial, ring: &Ring) -> Polynomial {
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| {
            debug_assert!(m.exp(0).is_zero());
            (Monomial::from_exps(m.exps()[1..].to_vec()), c.clone())
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Full normal form: reduce the leading term while possible, else move it
/// to the remainder; the reducer scan order is fixed.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut cur = f.clone();
    let mut rem: Vec<(Monomial, crate::ring::Coeff)> = Vec::new();
    'outer: while let Some((lm, lc)) = cur.leading_term().cloned() {
        for g in basis {
            let (glm, glc) = g.leading_term().expect("basis has no zero entries");
            if let Some(q) = lm.div(glm) {
                let c = ring.c_div(&lc, glc);
                cur = cur.sub(&g.mul_term(&q, &c));
                continue 'outer;
            }
        }
        rem.push((lm, lc));
        cur = Polynomial::from_terms(&ring, cur.terms()[1..].to_vec());
    }
    Polynomial::from_terms(&ring, rem)
}

fn s_polynomial(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (flm, flc) = f.leading_term().expect("nonzero");
    let (glm, glc) = g.leading_term().expect("nonzero");
    let lcm = flm.lcm(glm);
    let fa = f.mul_term(
        &lcm.div(flm).expect("lcm divisible"),
        &ring.c_inv(flc),
    );
    let ga = g.mul_term(
        &lcm.div(glm).expect("lcm divisible"),
        &ring.c_inv(glc),
    );
    fa.sub(&ga)
}

/// Buchberger with the coprimality and chain criteria. S-pairs are
/// processed by (lcm total degree, then generator indices); output is the
/// reduced basis sorted by increasing leading monomial.
fn buchberger(ring: &Ring, gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.into_iter().map(|g| g.monic()).collect();
    basis.sort_by(|a, b| a.canonical_cmp(b));
    basis.dedup();
    if basis.is_empty() {
        return basis;
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.push((i, j));
        }
    }

    let key = |basis: &[Polynomial], (i, j): (usize, usize)| -> (BigUint, usize, usize) {
        let li = &basis[i].leading_term().unwrap().0;
        let lj = &basis[j].leading_term().unwrap().0;
        (li.lcm(lj).total_degree(), i, j)
    };

    while !pending.is_empty() {
        let mut best = 0;
        let mut best_key = key(&basis, pending[0]);
        for (idx, &pair) in pending.iter().enumerate().skip(1) {
            let k = key(&basis, pair);
            if k < best_key {
                best = idx;
                best_key = k;
            }
        }
        let (i, j) = pending.remove(best);

        let li = basis[i].leading_term().unwrap().0.clone();
        let lj = basis[j].leading_term().unwrap().0.clone();
        if li.gcd_is_one(&lj) {
            continue;
        }
        let lcm = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_term().unwrap().0.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let r = normal_form(&s, &basis);
        if !r.is_zero() {
            let r = r.monic();
            let new = basis.len();
            basis.push(r);
            for k in 0..new {
                pending.push((k, new));
            }
        }
    }

    reduce_basis(ring, basis)
}

fn reduce_basis(ring: &Ring, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    // minimal: leading terms form an antichain
    basis.sort_by(|a, b| {
        ring.cmp_monomials(&a.leading_term().unwrap().0, &b.leading_term().unwrap().0)
            .then_with(|| a.canonical_cmp(b))
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lg = &g.leading_term().unwrap().0;
        if !minimal
            .iter()
            .any(|h| h.leading_term().unwrap().0.divides(lg))
        {
            minimal.push(g);
        }
    }
    // interreduce tails to a fixpoint
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let red = normal_form(&minimal[i], &others).monic();
            if red != minimal[i] {
                minimal[i] = red;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.retain(|g| !g.is_zero());
    minimal.sort_by(|a, b| {
        ring.cmp_monomials(&a.leading_term().unwrap().0, &b.leading_term().unwrap().0)
    });
    minimal
}
