use std::fmt::Debug;

use num_traits::{One, Zero};


use super::Rational;

/// The coefficient field of a [`LaurentSeries`](super::LaurentSeries).
///
/// Instantiated with [`Rational`] for expansions in `t` and with
/// [`RationalFunction`](super::RationalFunction) when the coefficients are
/// themselves rational functions of the grading variable `s`.
pub trait Field: Clone + PartialEq + Debug + Send + Sync + Zero + One {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `None` exactly when `self` is zero.
    fn inverse(&self) -> Option<Self>;
    fn from_rational(value: &Rational) -> Self;
}

impl Field for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negated(&self) -> Self {
        -self
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }
}
