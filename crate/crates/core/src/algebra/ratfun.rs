use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{poly_gcd, AlgebraError, Field, Polynomial, Rational};

/// A univariate rational function `numerator / denominator` in lowest
/// terms, with a monic denominator.
///
/// The normal form is unique, so `==` is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    /// Builds `n / d` in normal form.
    pub fn new(n: Polynomial, d: Polynomial) -> Result<Self, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZeroPolynomial);
        }
        if n.is_zero() {
            return Ok(Self::zero());
        }
        let (n, d) = if d.is_constant() {
            (n, d)
        } else {
            let g = poly_gcd(&n, &d);
            if g.is_constant() {
                (n, d)
            } else {
                (n.exact_div(&g)?, d.exact_div(&g)?)
            }
        };
        let lc = d.leading().expect("nonzero denominator").recip();
        Ok(RationalFunction {
            numerator: n.scale(&lc),
            denominator: d.scale(&lc),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            numerator: p,
            denominator: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var() -> Self {
        Self::from_poly(Polynomial::var())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    /// Evaluates at a point that is not a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.denominator.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.numerator.eval(x) / d)
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    /// Power-series coefficients `c_0 .. c_{count-1}` around `s = 0`.
    /// Requires the denominator not to vanish at zero.
    pub fn power_series(&self, count: usize) -> Option<Vec<Rational>> {
        let d0 = self.denominator.coeff(0);
        if d0.is_zero() {
            return None;
        }
        let d0_inv = d0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = self.numerator.coeff(k);
            for i in 1..=k {
                let d = self.denominator.coeff(i);
                if !d.is_zero() {
                    acc -= d * &out[k - i];
                }
            }
            out.push(acc * &d0_inv);
        }
        Some(out)
    }

    /// Renders with the given variable name.
    pub fn display_in(&self, var: &str) -> String {
        let num = self.numerator.display_in(var);
        if self.denominator.is_one_poly() {
            return num;
        }
        format!("({num})/({})", self.denominator.display_in(var))
    }

    /// Like [`Polynomial::render`], for numerator and denominator.
    pub fn render(&self, monomial: impl Fn(usize) -> String, sep: &str) -> String {
        let num = self.numerator.render(&monomial, sep);
        if self.denominator.is_one_poly() {
            return num;
        }
        format!("({num})/({})", self.denominator.render(&monomial, sep))
    }
}

impl Polynomial {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("s"))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.denominator == rhs.denominator {
            return RationalFunction::new(
                &self.numerator + &rhs.numerator,
                self.denominator.clone(),
            )
            .expect("nonzero denominator");
        }
        RationalFunction::new(
            &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator),
            &self.denominator * &rhs.denominator,
        )
        .expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel first so the products stay reduced
        let g1 = poly_gcd(&self.numerator, &rhs.denominator);
        let g2 = poly_gcd(&rhs.numerator, &self.denominator);
        let n1 = self.numerator.exact_div(&g1).expect("gcd nonzero");
        let d2 = rhs.denominator.exact_div(&g1).expect("gcd nonzero");
        let n2 = rhs.numerator.exact_div(&g2).expect("gcd nonzero");
        let d1 = self.denominator.exact_div(&g2).expect("gcd nonzero");
        let d = &d1 * &d2;
        let lc = d.leading().expect("nonzero").recip();
        RationalFunction {
            numerator: (&n1 * &n2).scale(&lc),
            denominator: d.scale(&lc),
        }
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction, AlgebraError>;

    fn div(self, rhs: &RationalFunction) -> Self::Output {
        Ok(self * &rhs.recip()?)
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }

    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl Field for RationalFunction {
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
        self.recip().ok()
    }

    fn from_rational(value: &Rational) -> Self {
        RationalFunction::constant(value.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn proportional_polynomials_reduce_to_constant() {
        let r = RationalFunction::new(p(&[-2, 2]), p(&[-4, 4])).unwrap();
        assert_eq!(r, RationalFunction::constant(ratio(1, 2)));
    }

    #[test]
    fn common_factor_cancels() {
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(r, RationalFunction::from_poly(p(&[1, 1])));
    }

    #[test]
    fn cubic_over_quadratic() {
        let n = p(&[0, 1, 0, 1]);
        let d = p(&[1, 0, 1]);
        let r = RationalFunction::new(n.clone(), d.clone()).unwrap();
        assert_eq!(r, RationalFunction::var());
        // multiply back
        assert_eq!(&r.numerator * &d, &n * r.denominator());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(AlgebraError::DivisionByZeroPolynomial)
        );
        assert_eq!(
            AlgebraError::DivisionByZeroPolynomial.to_string(),
            "division by zero polynomial"
        );
    }

    #[test]
    fn denominator_is_monic() {
        let r = RationalFunction::new(p(&[3]), p(&[1, -2])).unwrap();
        assert_eq!(r.denominator(), &Polynomial::new(vec![ratio(-1, 2), rat(1)]));
        assert_eq!(r.numerator(), &Polynomial::constant(ratio(-3, 2)));
    }

    #[test]
    fn geometric_series_expansion() {
        // (1 + s) / (1 - s)^2 = sum (2d + 1) s^d
        let r = RationalFunction::new(p(&[1, 1]), p(&[1, -1]).pow(2)).unwrap();
        let coeffs = r.power_series(5).unwrap();
        assert_eq!(coeffs, vec![rat(1), rat(3), rat(5), rat(7), rat(9)]);
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-6i64..6, 0..4).prop_map(|c| Polynomial::from_ints(&c))
    }

    fn small_ratfun() -> impl Strategy<Value = RationalFunction> {
        (small_poly(), small_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(r in small_ratfun()) {
            let again = RationalFunction::new(r.numerator().clone(), r.denominator().clone()).unwrap();
            prop_assert_eq!(&again, &r);
            prop_assert!(r.denominator().leading().unwrap().is_one());
            prop_assert!(poly_gcd(r.numerator(), r.denominator()).is_constant() || r.is_zero());
        }

        #[test]
        fn field_axioms(a in small_ratfun(), b in small_ratfun(), c in small_ratfun()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), RationalFunction::one());
            }
        }
    }
}
