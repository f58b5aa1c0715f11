//! Exact rational scalars used throughout the crate.
//!
//! [`Rat`] is an arbitrary-precision rational ([`num_rational::BigRational`]);
//! every coefficient, pairing and polynomial value in this crate is a `Rat`.
//! Nothing in this crate ever converts to floating point.

use alloc::string::String;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Exact arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `p/q` (`q != 0`), reduced.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Renders a rational canonically: reduced, `p` when integral, `p/q`
/// otherwise, with the sign on the numerator.
pub fn render(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        x.to_string()
    }
}

/// True if `x` is an integer `<= 0` (a non-positive integer).
pub fn is_nonpositive_integer(x: &Rat) -> bool {
    x.is_integer() && !x.is_positive()
}

/// `(-1)^n` as a rational.
pub fn sign_pow(n: u64) -> Rat {
    if n % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Exact integer square root test: returns `Some(r)` with `r*r == n` and
/// `r >= 0` if `n` is a perfect square.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}
