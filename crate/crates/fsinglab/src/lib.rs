//! Exact computer algebra for Frobenius singularity theory on affine
//! space: non-F-pure ideals σ and test ideals τ of pairs over prime
//! fields, F-pure thresholds, a characteristic-zero multiplier/non-lc
//! oracle for monomial and Newton-nondegenerate data, and a
//! reduction-mod-p laboratory comparing the two sides prime by prime.

pub mod error;
pub mod rational;
#[macro_use]
mod macros {}

pub mod monomial;
pub mod ring;
pub mod poly;
pub mod parse;
pub mod ideal;
pub mod frobenius;

pub use error::{Error, Result};

/// Temporary until the CLI module lands.
pub fn cli_placeholder() -> i32 {
    0
}
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use rational::Rational;
pub use ring::{MonomialOrder, Ring, RingDescriptor};
