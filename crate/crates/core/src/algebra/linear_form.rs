use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rational_to_string, Rational};

/// An affine functional `constant + sum_i coeff_i * x_i` with exact
/// rational coefficients. Parameter indices are zero-based; absent indices
/// have coefficient zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LinearForm {
    coefficients: BTreeMap<usize, Rational>,
    constant: Rational,
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The coordinate functional `x_index`.
    pub fn variable(index: usize) -> Self {
        Self::from_coefficients([(index, Rational::one())])
    }

    pub fn from_coefficients(items: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut form = Self::zero();
        for (i, c) in items {
            form.add_term(i, &c);
        }
        form
    }

    /// Homogeneous form from a dense coefficient vector.
    pub fn from_dense(coeffs: &[Rational]) -> Self {
        Self::from_coefficients(coeffs.iter().cloned().enumerate())
    }

    pub fn with_constant(mut self, constant: Rational) -> Self {
        self.constant = constant;
        self
    }

    fn add_term(&mut self, index: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coefficients.entry(index).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coefficients.remove(&index);
        }
    }

    pub fn coefficient(&self, index: usize) -> Rational {
        self.coefficients
            .get(&index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coefficients.iter().map(|(&i, c)| (i, c))
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    /// Dense coefficient vector of length `dim` (constant excluded).
    pub fn dense(&self, dim: usize) -> Vec<Rational> {
        (0..dim).map(|i| self.coefficient(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty() && self.constant.is_zero()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constant.is_zero()
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        self.coefficients
            .iter()
            .fold(self.constant.clone(), |acc, (&i, c)| acc + c * &point[i])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.coefficients {
            out.add_term(i, c);
        }
        out.constant += &other.constant;
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinearForm {
            coefficients: self
                .coefficients
                .iter()
                .map(|(&i, a)| (i, a * c))
                .collect(),
            constant: &self.constant * c,
        }
    }

    /// The form `x -> self(g x)` for an integer matrix `g` acting on the
    /// parameter vector (`g` given row-major).
    pub fn compose(&self, g: &[Vec<i64>]) -> Self {
        let mut out = LinearForm::zero().with_constant(self.constant.clone());
        for (&i, c) in &self.coefficients {
            for (j, &gij) in g[i].iter().enumerate() {
                if gij != 0 {
                    out.add_term(j, &(c * Rational::from_integer(gij.into())));
                }
            }
        }
        out
    }

    /// `Some(r)` with `other = r * self` when `self` is nonzero and the two
    /// forms are proportional.
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        let (&i, c) = self.coefficients.iter().next()?;
        let r = other.coefficient(i) / c;
        (self.scale(&r) == *other).then_some(r)
    }

    /// Splits the form as `content * primitive` where the primitive part has
    /// coprime integer coefficients and a positive first coefficient.
    pub fn content(&self) -> (Rational, LinearForm) {
        let values: Vec<&Rational> = self
            .coefficients
            .values()
            .chain(std::iter::once(&self.constant).filter(|c| !c.is_zero()))
            .collect();
        let Some(first) = values.first() else {
            return (Rational::zero(), LinearForm::zero());
        };
        let num_gcd = values
            .iter()
            .fold(BigInt::zero(), |g, v| g.gcd(v.numer()));
        let den_lcm = values.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
        let mut content = Rational::new(num_gcd, den_lcm);
        if first.is_negative() {
            content = -content;
        }
        let primitive = self.scale(&content.recip());
        (content, primitive)
    }

    /// Renders the form with the given parameter labels, e.g.
    /// `13056(a1 + a2 + a3 - b1 - b2 - b3 - 2c)`.
    pub fn display_with(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (content, primitive) = self.content();
        let mut body = String::new();
        let label = |i: usize| {
            labels
                .get(i)
                .cloned()
                .unwrap_or_else(|| format!("x{}", i + 1))
        };
        let mut push = |c: &Rational, mono: Option<String>| {
            let negative = c.is_negative();
            if body.is_empty() {
                if negative {
                    body.push('-');
                }
            } else {
                body.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            match mono {
                Some(m) if abs.is_one() => body.push_str(&m),
                Some(m) => body.push_str(&format!("{}{}", rational_to_string(&abs), m)),
                None => body.push_str(&rational_to_string(&abs)),
            }
        };
        for (&i, c) in &primitive.coefficients {
            push(c, Some(label(i)));
        }
        if !primitive.constant.is_zero() {
            push(&primitive.constant, None);
        }
        if content.is_one() {
            body
        } else if content == -Rational::one() {
            format!("-({body})")
        } else {
            format!("{}({body})", rational_to_string(&content))
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}
