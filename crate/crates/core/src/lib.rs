//! Exact computation of the Todd-class obstructions to asymptotic Chow
//! semistability on smooth toric Fano manifolds.
//!
//! Two independent engines are provided:
//!
//! * [`localization`] evaluates the fixed-point sum over the maximal cones of
//!   the fan and interpolates the resulting linear form in the torus
//!   parameters.
//! * [`hilbert`] expands the Brion-formula Hilbert series of the toric
//!   diagram and tests the `x`-derivative of its one-parameter
//!   specializations.
//!
//! Everything is exact: rationals, polynomials, rational functions and
//! truncated Laurent series live in [`algebra`].

pub mod algebra;
pub mod chern;
pub mod geometry;
pub mod hilbert;
pub mod linalg;
pub mod localization;
pub mod parallel;

pub use parallel::Execution;
