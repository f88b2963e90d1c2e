//! Exact arithmetic substrate: rationals, dense univariate polynomials,
//! rational functions, truncated Laurent series and linear forms.

mod field;
mod laurent;
mod linear_form;
mod poly;
mod ratfun;

pub use field::Field;
pub use laurent::LaurentSeries;
pub use linear_form::LinearForm;
pub use poly::{poly_gcd, Polynomial};
pub use ratfun::RationalFunction;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("series not invertible at stored order")]
    SeriesNotInvertible,
}

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"3"`, `"-7/2"` or `"0.25"` style literals into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.trim_start().starts_with('-');
        let int: BigInt = match int.trim() {
            "" | "-" | "+" => BigInt::zero(),
            s => s.parse().ok()?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().ok()?;
        let mut value = Rational::from_integer(int.abs()) + Rational::new(frac, scale);
        if negative {
            value = -value;
        }
        return Some(value);
    }
    text.parse::<BigInt>().ok().map(Rational::from_integer)
}
