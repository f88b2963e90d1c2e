use super::{AlgebraError, Field};

/// A Laurent series known exactly on a finite window of orders.
///
/// Coefficients below `lowest_order` are zero; coefficients from
/// `lowest_order` through `lowest_order + window - 1` are stored; everything
/// above is unknown. Arithmetic only ever reports orders that both operands
/// determine.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentSeries<F> {
    lowest_order: i64,
    coeffs: Vec<F>,
}

impl<F: Field> LaurentSeries<F> {
    /// Panics if `coeffs` is empty (a window must be positive).
    pub fn new(lowest_order: i64, coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "laurent series window must be positive");
        LaurentSeries {
            lowest_order,
            coeffs,
        }
    }

    /// The constant `c` known through order `window - 1`.
    pub fn constant(c: F, window: usize) -> Self {
        let mut coeffs = vec![F::zero(); window];
        coeffs[0] = c;
        Self::new(0, coeffs)
    }

    pub fn lowest_order(&self) -> i64 {
        self.lowest_order
    }

    pub fn window(&self) -> usize {
        self.coeffs.len()
    }

    /// One past the highest order that is known.
    pub fn precision(&self) -> i64 {
        self.lowest_order + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `t^order`; `None` when the order lies above the window.
    pub fn coeff(&self, order: i64) -> Option<F> {
        if order >= self.precision() {
            None
        } else if order < self.lowest_order {
            Some(F::zero())
        } else {
            Some(self.coeffs[(order - self.lowest_order) as usize].clone())
        }
    }

    /// Restricts the known range to orders below `precision`.
    pub fn truncate_to(&self, precision: i64) -> Self {
        assert!(precision > self.lowest_order, "truncation would empty the window");
        let keep = ((precision - self.lowest_order) as usize).min(self.coeffs.len());
        Self::new(self.lowest_order, self.coeffs[..keep].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.plus(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a.minus(b))
    }

    fn combine(&self, other: &Self, op: impl Fn(&F, &F) -> F) -> Self {
        let low = self.lowest_order.min(other.lowest_order);
        let high = self.precision().min(other.precision());
        let coeffs = (low..high)
            .map(|k| {
                op(
                    &self.coeff(k).expect("within precision"),
                    &other.coeff(k).expect("within precision"),
                )
            })
            .collect();
        Self::new(low, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(
            self.lowest_order,
            self.coeffs.iter().map(Field::negated).collect(),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(
            self.lowest_order,
            self.coeffs.iter().map(|a| a.times(c)).collect(),
        )
    }

    /// Product; the window is the smaller of the two operand windows.
    pub fn mul(&self, other: &Self) -> Self {
        let window = self.window().min(other.window());
        let coeffs = (0..window)
            .map(|k| {
                (0..=k).fold(F::zero(), |acc, i| {
                    let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.plus(&a.times(b))
                    }
                })
            })
            .collect();
        Self::new(self.lowest_order + other.lowest_order, coeffs)
    }

    /// Multiplicative inverse. The stored leading coefficient must be
    /// nonzero; the result starts at `-lowest_order` with the same window.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        let lead_inv = self.coeffs[0]
            .inverse()
            .ok_or(AlgebraError::SeriesNotInvertible)?;
        let mut out: Vec<F> = Vec::with_capacity(self.window());
        out.push(lead_inv.clone());
        for k in 1..self.window() {
            let acc = (1..=k).fold(F::zero(), |acc, i| {
                let a = &self.coeffs[i];
                if a.is_zero() {
                    acc
                } else {
                    acc.plus(&a.times(&out[k - i]))
                }
            });
            out.push(acc.times(&lead_inv).negated());
        }
        Ok(Self::new(-self.lowest_order, out))
    }

    /// Converts coefficients into another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentSeries<G> {
        LaurentSeries::new(self.lowest_order, self.coeffs.iter().map(f).collect())
    }

    /// True when every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }
}
