//! Text grammar for polynomials.
//!
//! terms joined by `+`/`-`; a term is an optional integer or
//! integer/integer coefficient, an optional `*`, then variable factors
//! `var`, `var^exp` separated by optional `*`. Whitespace is ignored.
//! Variable names are matched longest-first against the ring's list.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

struct Parser<'a> {
    input: &'a str,
    pos: usize,
    ring: &'a Ring,
    /// variable names sorted by decreasing length for longest-match
    vars_by_len: Vec<(usize, String)>,
}

pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut vars_by_len: Vec<(usize, String)> = ring
        .variables
        .iter()
        .enumerate()
        .map(|(i, v)| (i, v.clone()))
        .collect();
    vars_by_len.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.1.cmp(&b.1)));
    let mut p = Parser {
        input: text,
        pos: 0,
        ring,
        vars_by_len,
    };
    p.parse()
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.input.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn parse(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        if self.rest().is_empty() {
            return Err(self.err("empty input"));
        }
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = false;
        if let Some(c) = self.peek() {
            if c == '+' || c == '-' {
                self.bump();
                negate = c == '-';
            }
        }
        loop {
            let term = self.parse_term(negate)?;
            acc = acc.add(&term);
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some('+') => {
                    self.bump();
                    negate = false;
                }
                Some('-') => {
                    self.bump();
                    negate = true;
                }
                Some(c) => return Err(self.err(format!("expected `+` or `-`, found `{c}`"))),
            }
            self.skip_ws();
        }
    }

    fn parse_term(&mut self, negate: bool) -> Result<Polynomial> {
        self.skip_ws();
        let mut coeff = BigRational::one();
        let mut saw_coeff = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.parse_integer()?;
            let mut den = BigInt::one();
            self.skip_ws();
            if self.peek() == Some('/') {
                self.bump();
                self.skip_ws();
                if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(self.err("expected denominator digits after `/`"));
                }
                den = self.parse_integer()?;
                if den == BigInt::from(0) {
                    return Err(self.err("zero denominator"));
                }
            }
            coeff = BigRational::new(num, den);
            saw_coeff = true;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                self.skip_ws();
                if !self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
                    return Err(self.err("expected a variable after `*`"));
                }
            }
        }
        if negate {
            coeff = -coeff;
        }

        let mut exps = vec![BigUint::from(0u32); self.ring.nvars()];
        let mut saw_var = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let idx = self.parse_variable()?;
                    let mut exp = BigUint::one();
                    self.skip_ws();
                    if self.peek() == Some('^') {
                        self.bump();
                        self.skip_ws();
                        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                            return Err(self.err("expected exponent digits after `^`"));
                        }
                        let e = self.parse_integer()?;
                        exp = e.try_into().expect("nonnegative digits");
                    }
                    exps[idx] += exp;
                    saw_var = true;
                    self.skip_ws();
                    if self.peek() == Some('*') {
                        self.bump();
                        self.skip_ws();
                        if !self
                            .peek()
                            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                        {
                            return Err(self.err("expected a variable after `*`"));
                        }
                    }
                }
                Some(c) if c.is_ascii_digit() && saw_var => {
                    return Err(self.err("unexpected digit after a variable; use `*` or `^`"));
                }
                _ => break,
            }
        }
        if !saw_var && !saw_coeff {
            return Err(self.err("expected a term"));
        }
        let c = self
            .ring
            .coeff_from_rational(&coeff)
            .map_err(|_| Error::BadCoefficient {
                text: coeff.to_string(),
                p: self.ring.characteristic,
            })?;
        Ok(Polynomial::monomial(
            self.ring,
            Monomial::from_exps(exps),
            c,
        ))
    }

    fn parse_integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|_| self.err("bad integer"))
    }

    fn parse_variable(&mut self) -> Result<usize> {
        let rest = self.rest();
        for (idx, name) in &self.vars_by_len {
            if rest.starts_with(name.as_str()) {
                self.pos += name.len();
                return Ok(*idx);
            }
        }
        // no declared variable matches: collect the identifier for the report
        let ident: String = rest
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
            .collect();
        Err(Error::UnknownVariable {
            name: ident,
            position: self.pos,
        })
    }
}

/// Parse a separated list of polynomials (ideal generators). Both `,` and
/// `;` separate entries; empty entries are rejected.
pub fn parse_poly_list(text: &str, ring: &Ring) -> Result<Vec<Polynomial>> {
    text.split([',', ';'])
        .map(|chunk| parse_poly(chunk, ring))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{MonomialOrder, RingDescriptor};

    fn gf7() -> Ring {
        RingDescriptor::new(7, vec!["x".into(), "y".into()], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn literal_parse() {
        let r = gf7();
        let f = parse_poly("x^2 + y^3", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.render(), "y^3 + x^2");
    }

    #[test]
    fn cancellation_to_zero() {
        let r = gf7();
        let f = parse_poly("2*x - 9*x", &r).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn unknown_variable() {
        let r = gf7();
        match parse_poly("x^2 + z", &r) {
            Err(Error::UnknownVariable { name, .. }) => assert_eq!(name, "z"),
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
    }

    #[test]
    fn coefficient_not_reducible() {
        let r = gf7();
        assert!(parse_poly("1/7*x", &r).is_err());
        let f = parse_poly("1/2*x", &r).unwrap();
        assert_eq!(f.render(), "4*x");
    }

    #[test]
    fn implicit_products_and_repeats() {
        let r = gf7();
        assert_eq!(parse_poly("x y", &r).unwrap(), parse_poly("x*y", &r).unwrap());
        assert_eq!(parse_poly("xy", &r).unwrap(), parse_poly("x*y", &r).unwrap());
        assert_eq!(parse_poly("x*x", &r).unwrap(), parse_poly("x^2", &r).unwrap());
        assert_eq!(parse_poly("3x", &r).unwrap(), parse_poly("3*x", &r).unwrap());
    }

    #[test]
    fn syntax_errors_have_positions() {
        let r = gf7();
        for bad in ["", "x +", "x^", "3/", "^2", "x2", "x + + y", "3*", "1/0"] {
            match parse_poly(bad, &r) {
                Err(Error::Syntax { .. }) | Err(Error::UnknownVariable { .. }) => {}
                other => panic!("`{bad}` should fail to parse, got {other:?}"),
            }
        }
    }

    #[test]
    fn render_parse_round_trip() {
        let r = gf7();
        for text in ["y^3 + x^2", "4*x", "0", "6*x*y + 1", "x^12*y^40"] {
            let f = parse_poly(text, &r).unwrap();
            assert_eq!(parse_poly(&f.render(), &r).unwrap(), f);
        }
    }
}
