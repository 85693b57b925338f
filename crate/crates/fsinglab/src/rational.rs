//! Exact rational scalars: parsing, rendering and small arithmetic helpers.
//!
//! Exponents and thresholds are always exact fractions; nothing in this
//! crate touches floating point.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number with reduced numerator/denominator.
pub type Rational = BigRational;

/// Parse `a`, `a/b` or `-a/b` into an exact rational. Decimal notation is
/// rejected on purpose: thresholds must stay exact end to end.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = |msg: &str| Error::Syntax {
        position: 0,
        message: format!("bad rational `{s}`: {msg}"),
    };
    if s.is_empty() {
        return Err(err("empty"));
    }
    if s.contains('.') {
        return Err(err("decimal notation is not accepted; use a/b"));
    }
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_s.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| err("bad denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `num/den` rendering (`den` omitted when 1).
pub fn render_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rational_from_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}

/// ⌈x⌉ as a big integer.
pub fn ceil_big(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// ⌈x⌉ for nonnegative x, as an unsigned big integer.
pub fn ceil_unsigned(x: &Rational) -> Result<BigUint> {
    let c = ceil_big(x);
    c.to_biguint()
        .ok_or_else(|| Error::InvalidPair(format!("expected a nonnegative value, got {x}")))
}

/// Denominator of x in lowest terms, as u64 (desk-scale guard).
pub fn denominator_u64(x: &Rational) -> Result<u64> {
    x.denom()
        .to_u64()
        .ok_or_else(|| Error::TooLarge(format!("denominator of {x}")))
}

/// True when p divides the reduced denominator of x.
pub fn p_divides_denominator(x: &Rational, p: u64) -> bool {
    (x.denom() % BigInt::from(p)).is_zero()
}

/// Multiplicative order of p modulo d (requires gcd(p, d) = 1; d ≥ 1).
pub fn multiplicative_order(p: u64, d: u64) -> Result<u32> {
    if d == 0 {
        return Err(Error::PDividesModulus { p, d });
    }
    if d == 1 {
        return Ok(1);
    }
    if BigUint::from(p).gcd(&BigUint::from(d)) != BigUint::one() {
        return Err(Error::PDividesModulus { p, d });
    }
    let d = d as u128;
    let mut acc = (p as u128) % d;
    for e in 1..=4096u32 {
        if acc == 1 {
            return Ok(e);
        }
        acc = acc * (p as u128 % d) % d;
    }
    Err(Error::TooLarge(format!("multiplicative order of {p} mod {d}")))
}

/// Deterministic Miller–Rabin, exact for all u64 inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| -> u64 { ((a as u128 * b as u128) % n as u128) as u64 };
    let powmod = |mut base: u64, mut exp: u64| -> u64 {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes p ≤ bound in increasing order.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime_u64(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["0", "5", "-3", "5/6", "-7/2", "41/48"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(render_rational(&r), s);
        }
        assert_eq!(render_rational(&parse_rational("4/8").unwrap()), "1/2");
        assert_eq!(render_rational(&parse_rational("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(7, 6).unwrap(), 1);
        assert_eq!(multiplicative_order(5, 6).unwrap(), 2);
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(11, 1).unwrap(), 1);
        assert!(multiplicative_order(3, 6).is_err());
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = primes_up_to(30);
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime_u64(2147483647));
        assert!(!is_prime_u64(2147483649));
    }
}
