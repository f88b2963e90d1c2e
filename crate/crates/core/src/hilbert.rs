//! Brion's formula for the Hilbert series of the cone over the dual
//! polytope `P`.
//!
//! With `s` standing for `e^{-(m+1)t}`, the graded series is
//!
//! ```text
//! C(x, s) = sum_j 1/(1 - x^{w_j} s) * prod_b 1/(1 - x^{e_jb})
//! ```
//!
//! summed over the vertices `w_j` of `P` with edge generators `e_jb`.
//! Restricting to `x_i = x^{n_i}` and putting `x = e^eps`, each term becomes a
//! Laurent series in `eps` whose coefficients are rational functions of `s`.
//! The poles cancel in the sum; the `eps^0` coefficient is the Ehrhart series
//! and the `eps^1` coefficient is the `x`-derivative at `x = 1`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, LaurentSeries, Polynomial, Rational, RationalFunction};
use crate::geometry::{dot, DualPolytope, FanoPolytope};
use crate::parallel::Execution;

/// Lattice points the oracle is willing to enumerate.
pub const ORACLE_BOX_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("direction has {found} entries, expected {expected}")]
    DirectionLength { expected: usize, found: usize },
    #[error("direction hits an edge hyperplane at vertex {vertex}; choose another n")]
    InadmissibleDirection { vertex: usize },
    #[error("no admissible perturbation of {0:?} found")]
    NoPerturbation(Vec<i64>),
    #[error("Brion cancellation failed at order {order}")]
    BrionCancellation { order: i64 },
    #[error("ξ on a wall; perturb b")]
    XiOnWall,
    #[error("window must be positive")]
    EmptyWindow,
    #[error("oracle box has {points} points, limit is {limit}")]
    OracleTooLarge { points: u128, limit: u128 },
    #[error("oracle supports dimension at most 3, got {0}")]
    OracleDimension(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub const VERDICT_DETECTED: &str = "obstruction detected";
pub const VERDICT_NONE: &str = "no obstruction found";

/// One vertex term of Brion's formula restricted to the direction `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrionTerm {
    pub vertex_index: usize,
    /// Power of `s` in the vertex factor (the height of `(w_j, 1)`).
    pub s_exponent: u32,
    /// `<n, w_j>`
    pub x_exponent_vertex: i64,
    /// `<n, e_jb>` for each edge at the vertex.
    pub edge_x_exponents: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeResult {
    pub n: Vec<i64>,
    pub value: RationalFunction,
    pub is_zero: bool,
}

/// The `eps^0` and `eps^1` coefficients of the specialized series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializedSeries {
    pub series: RationalFunction,
    pub derivative: DerivativeResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionOutcome {
    pub requested: Vec<i64>,
    /// `Some` when the requested direction had to be perturbed.
    pub used: Option<Vec<i64>>,
    pub result: DerivativeResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeTest {
    pub outcomes: Vec<DirectionOutcome>,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LaurentCoefficients {
    pub xi: Vec<Rational>,
    pub lowest_order: i64,
    pub values: Vec<Rational>,
}

pub fn brion_terms(p: &DualPolytope, n: &[i64]) -> Result<Vec<BrionTerm>, HilbertError> {
    if n.len() != p.dim() {
        return Err(HilbertError::DirectionLength {
            expected: p.dim(),
            found: n.len(),
        });
    }
    (0..p.vertices().len())
        .map(|j| {
            let edge_x_exponents: Vec<i64> =
                p.edge_generators(j).iter().map(|e| dot(n, e)).collect();
            if edge_x_exponents.contains(&0) {
                return Err(HilbertError::InadmissibleDirection { vertex: j });
            }
            Ok(BrionTerm {
                vertex_index: j,
                s_exponent: 1,
                x_exponent_vertex: dot(n, &p.vertices()[j]),
                edge_x_exponents,
            })
        })
        .collect()
}

/// `1 - e^{k u}` through order `window`, as a series in `u` starting at `u^1`.
fn one_minus_exp(k: &Rational, window: usize) -> LaurentSeries<Rational> {
    let mut coeffs = Vec::with_capacity(window);
    let mut term = Rational::one();
    for j in 1..=window {
        term = term * k / Rational::from_integer(j.into());
        coeffs.push(-term.clone());
    }
    LaurentSeries::new(1, coeffs)
}

/// `1 / (1 - e^{k u})`, orders `-1 .. window - 2`.
fn pole_factor(k: &Rational, window: usize) -> Result<LaurentSeries<Rational>, HilbertError> {
    if k.is_zero() {
        return Err(HilbertError::XiOnWall);
    }
    Ok(one_minus_exp(k, window).invert()?)
}

/// `1 / (1 - e^{a eps} s^h)` as a power series in `eps` over `Q(s)`.
fn vertex_factor(a: i64, h: u32, window: usize) -> Result<LaurentSeries<RationalFunction>, HilbertError> {
    let sh = Polynomial::monomial(Rational::one(), h as usize);
    let a = Rational::from_integer(a.into());
    let mut coeffs = Vec::with_capacity(window);
    coeffs.push(RationalFunction::from_poly(&Polynomial::one() - &sh));
    let mut term = Rational::one();
    for k in 1..window {
        term = term * &a / Rational::from_integer(k.into());
        coeffs.push(RationalFunction::from_poly(sh.scale(&-term.clone())));
    }
    Ok(LaurentSeries::new(0, coeffs).invert()?)
}

/// Product of the edge factors of a term, orders `-m .. window - m - 1`.
fn edge_series(term: &BrionTerm, window: usize) -> Result<LaurentSeries<Rational>, HilbertError> {
    let mut edges = LaurentSeries::constant(Rational::one(), window);
    for &b in &term.edge_x_exponents {
        edges = edges.mul(&pole_factor(&Rational::from_integer(b.into()), window)?);
    }
    Ok(edges)
}

fn term_series(
    term: &BrionTerm,
    window: usize,
) -> Result<LaurentSeries<RationalFunction>, HilbertError> {
    let edges = edge_series(term, window)?.map(|c| RationalFunction::constant(c.clone()));
    Ok(vertex_factor(term.x_exponent_vertex, term.s_exponent, window)?.mul(&edges))
}

/// `Li_{-k}(s^h) = sum_d d^k s^{hd}` for `k < count`.
fn polylog_basis(count: usize, h: u32) -> Vec<RationalFunction> {
    let one_minus_s = Polynomial::from_ints(&[1, -1]);
    let s = Polynomial::var();
    let mut out = Vec::with_capacity(count);
    // numerator of Li_{-k}(s) over (1 - s)^{k+1}
    let mut numerator = Polynomial::one();
    for k in 0..count {
        let denominator = one_minus_s.pow(k as u32 + 1);
        out.push(
            RationalFunction::new(substitute_power(&numerator, h), substitute_power(&denominator, h))
                .expect("nonzero denominator"),
        );
        // s d/ds [N / (1-s)^{k+1}] = s (N' (1-s) + (k+1) N) / (1-s)^{k+2}
        let k1 = Rational::from_integer((k + 1).into());
        numerator = &s * &(&(&numerator.derivative() * &one_minus_s) + &numerator.scale(&k1));
    }
    out
}

/// `p(s^h)`
fn substitute_power(p: &Polynomial, h: u32) -> Polynomial {
    if h == 1 {
        return p.clone();
    }
    let mut coeffs = vec![Rational::zero(); p.coeffs().len().saturating_sub(1) * h as usize + 1];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs[i * h as usize] = c.clone();
    }
    Polynomial::new(coeffs)
}

/// Rational weights `c[j][k]` of `Li_{-k}` in the `eps`-coefficient of
/// order `j - m` of one term.
fn polylog_weights(term: &BrionTerm, window: usize) -> Result<Vec<Vec<Rational>>, HilbertError> {
    let edges = edge_series(term, window)?;
    let a = Rational::from_integer(term.x_exponent_vertex.into());
    let mut vertex = Vec::with_capacity(window);
    let mut power = Rational::one();
    for k in 0..window {
        if k > 0 {
            power = power * &a / Rational::from_integer(k.into());
        }
        vertex.push(power.clone());
    }
    let e = edges.coeffs();
    Ok((0..window)
        .map(|j| (0..window).map(|k| if k <= j { &e[j - k] * &vertex[k] } else { Rational::zero() }).collect())
        .collect())
}

fn finish(total: LaurentSeries<RationalFunction>, n: &[i64]) -> Result<SpecializedSeries, HilbertError> {
    let m = n.len() as i64;
    for order in -m..0 {
        if !total.coeff(order).expect("within window").is_zero() {
            return Err(HilbertError::BrionCancellation { order });
        }
    }
    let value = total.coeff(1).expect("within window");
    Ok(SpecializedSeries {
        series: total.coeff(0).expect("within window"),
        derivative: DerivativeResult {
            n: n.to_vec(),
            is_zero: value.is_zero(),
            value,
        },
    })
}

/// Sums the Brion terms as Laurent series in `eps`, checks that every
/// negative order cancels, and returns the `eps^0` and `eps^1` coefficients.
///
/// The vertex factor expands as `sum_k (a eps)^k / k! * Li_{-k}(s^h)`, so each
/// term is a rational combination of the fixed functions `Li_{-k}`; the sum
/// is accumulated on those rational weights.
pub fn specialized_series_and_derivative(
    terms: &[BrionTerm],
    n: &[i64],
    exec: Execution,
) -> Result<SpecializedSeries, HilbertError> {
    let m = n.len();
    let window = m + 2;
    let weights = exec
        .map(terms, |t| polylog_weights(t, window).map(|w| (t.s_exponent, w)))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let mut by_height: std::collections::BTreeMap<u32, Vec<Vec<Rational>>> = Default::default();
    for (h, w) in weights {
        let acc = by_height
            .entry(h)
            .or_insert_with(|| vec![vec![Rational::zero(); window]; window]);
        for (row, add) in acc.iter_mut().zip(&w) {
            for (x, y) in row.iter_mut().zip(add) {
                *x += y;
            }
        }
    }
    let mut coeffs = vec![RationalFunction::zero(); window];
    for (h, acc) in by_height {
        let basis = polylog_basis(window, h);
        for (j, row) in acc.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    coeffs[j] = &coeffs[j] + &basis[k].scale(c);
                }
            }
        }
    }
    finish(LaurentSeries::new(-(m as i64), coeffs), n)
}

/// Same result as [`specialized_series_and_derivative`], expanding every
/// term as a Laurent series over `Q(s)` and adding the series directly.
pub fn specialized_series_direct(
    terms: &[BrionTerm],
    n: &[i64],
    exec: Execution,
) -> Result<SpecializedSeries, HilbertError> {
    let m = n.len();
    let window = m + 2;
    let series = exec
        .map(terms, |t| term_series(t, window))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let mut total = LaurentSeries::new(-(m as i64), vec![RationalFunction::zero(); window]);
    for s in &series {
        total = total.add(s);
    }
    finish(total, n)
}

/// Brion terms and both outputs for one admissible direction.
pub fn hilbert_derivative(
    p: &DualPolytope,
    n: &[i64],
    exec: Execution,
) -> Result<SpecializedSeries, HilbertError> {
    specialized_series_and_derivative(&brion_terms(p, n)?, n, exec)
}

/// `n + k g` for the smallest `k >= 1` that is admissible, where `g` has
/// entries `B^i` with `B` larger than twice every edge coordinate, so that
/// `<g, e>` never vanishes.
pub fn perturb_direction(p: &DualPolytope, n: &[i64]) -> Result<Vec<i64>, HilbertError> {
    let max_entry = (0..p.vertices().len())
        .flat_map(|j| p.edge_generators(j).iter().flatten().map(|x| x.abs()))
        .max()
        .unwrap_or(1);
    let base = 2 * max_entry + 1;
    let mut g = Vec::with_capacity(n.len());
    let mut power: i64 = 1;
    for _ in 0..n.len() {
        g.push(power);
        power = power
            .checked_mul(base)
            .ok_or_else(|| HilbertError::NoPerturbation(n.to_vec()))?;
    }
    let edge_count: usize = (0..p.vertices().len()).map(|j| p.edge_generators(j).len()).sum();
    for k in 1..=(edge_count as i64 + 1) {
        let candidate: Option<Vec<i64>> = n
            .iter()
            .zip(&g)
            .map(|(a, b)| b.checked_mul(k).and_then(|kb| a.checked_add(kb)))
            .collect();
        let Some(candidate) = candidate else { break };
        if brion_terms(p, &candidate).is_ok() {
            return Ok(candidate);
        }
    }
    Err(HilbertError::NoPerturbation(n.to_vec()))
}

/// Runs the derivative for each direction, perturbing inadmissible ones.
pub fn derivative_test(
    p: &DualPolytope,
    directions: &[Vec<i64>],
    exec: Execution,
) -> Result<DerivativeTest, HilbertError> {
    let mut outcomes = Vec::with_capacity(directions.len());
    for n in directions {
        let (used, terms) = match brion_terms(p, n) {
            Ok(t) => (None, t),
            Err(HilbertError::InadmissibleDirection { .. }) => {
                let q = perturb_direction(p, n)?;
                let t = brion_terms(p, &q)?;
                (Some(q), t)
            }
            Err(e) => return Err(e),
        };
        let effective = used.as_deref().unwrap_or(n);
        let result = specialized_series_and_derivative(&terms, effective, exec)?.derivative;
        outcomes.push(DirectionOutcome {
            requested: n.clone(),
            used,
            result,
        });
    }
    let verdict = if outcomes.iter().any(|o| !o.result.is_zero) {
        VERDICT_DETECTED
    } else {
        VERDICT_NONE
    };
    Ok(DerivativeTest {
        outcomes,
        verdict: verdict.to_string(),
    })
}

/// Laurent coefficients in `t` of `C(e^{-t xi})` at `xi = (b, m+1)`,
/// starting from order `-(m+1)`.
pub fn laurent_at_xi(
    p: &DualPolytope,
    b: &[Rational],
    window: usize,
) -> Result<LaurentCoefficients, HilbertError> {
    let m = p.dim();
    if b.len() != m {
        return Err(HilbertError::DirectionLength {
            expected: m,
            found: b.len(),
        });
    }
    if window == 0 {
        return Err(HilbertError::EmptyWindow);
    }
    let height = Rational::from_integer((m + 1).into());
    let pair = |v: &[i64]| -> Rational {
        v.iter()
            .zip(b)
            .map(|(&x, y)| Rational::from_integer(x.into()) * y)
            .sum()
    };
    let lowest = -(m as i64 + 1);
    let mut total = LaurentSeries::new(lowest, vec![Rational::zero(); window]);
    for j in 0..p.vertices().len() {
        // 1/(1 - e^{-t alpha}) is pole_factor(-alpha)
        let alpha = pair(&p.vertices()[j]) + &height;
        let mut term = pole_factor(&-alpha, window)?;
        for e in p.edge_generators(j) {
            term = term.mul(&pole_factor(&-pair(e), window)?);
        }
        total = total.add(&term);
    }
    Ok(LaurentCoefficients {
        xi: b.to_vec(),
        lowest_order: lowest,
        values: total.coeffs().to_vec(),
    })
}

/// Lattice-point counts `#(dP)` and weighted sums `sum <n, a>` over `dP` for
/// `d = 0..=d_max`, by enumerating a bounding box.
pub fn lattice_oracle(
    q: &FanoPolytope,
    p: &DualPolytope,
    n: &[i64],
    d_max: usize,
) -> Result<(Vec<u64>, Vec<i64>), HilbertError> {
    let m = p.dim();
    if m > 3 {
        return Err(HilbertError::OracleDimension(m));
    }
    if n.len() != m {
        return Err(HilbertError::DirectionLength {
            expected: m,
            found: n.len(),
        });
    }
    let bbox = p.bounding_box();
    let d = d_max as i64;
    let points: u128 = bbox
        .iter()
        .map(|&(lo, hi)| ((hi - lo) * d + 1) as u128)
        .product();
    if points > ORACLE_BOX_LIMIT {
        return Err(HilbertError::OracleTooLarge {
            points,
            limit: ORACLE_BOX_LIMIT,
        });
    }
    let mut counts = vec![0u64; d_max + 1];
    let mut weighted = vec![0i64; d_max + 1];
    let mut a: Vec<i64> = bbox.iter().map(|&(lo, _)| lo * d).collect();
    loop {
        // smallest dilate containing a
        let needed = q
            .vertices()
            .iter()
            .map(|v| -dot(v, &a))
            .max()
            .unwrap_or(0)
            .max(0) as usize;
        for k in needed..=d_max {
            counts[k] += 1;
            weighted[k] += dot(n, &a);
        }
        let mut i = 0;
        loop {
            if i == m {
                return Ok((counts, weighted));
            }
            if a[i] < bbox[i].1 * d {
                a[i] += 1;
                break;
            }
            a[i] = bbox[i].0 * d;
            i += 1;
        }
    }
}

/// `#(dP)` for `d = 0..=d_max`.
pub fn ehrhart_oracle(
    q: &FanoPolytope,
    p: &DualPolytope,
    d_max: usize,
) -> Result<Vec<u64>, HilbertError> {
    Ok(lattice_oracle(q, p, &vec![0; p.dim()], d_max)?.0)
}

/// Renders a function of `s` with `s^k` written `e^{-(m+1)k t}`.
pub fn display_exponential(f: &RationalFunction, m: usize) -> String {
    let h = m + 1;
    f.render(
        |k| match k {
            0 => String::new(),
            _ => format!("e^{{-{}t}}", h * k),
        },
        "",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use crate::geometry::{build_fan, builtin, polar_dual, Fan};
    use num_traits::Signed;
    use proptest::prelude::*;

    fn setup(name: &str) -> (Fan, DualPolytope) {
        let fan = build_fan(&builtin(name).unwrap()).unwrap();
        let dual = polar_dual(&fan).unwrap();
        (fan, dual)
    }

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn projective_line_terms() {
        let (_, p) = setup("p1");
        let terms = brion_terms(&p, &[1]).unwrap();
        assert_eq!(terms.len(), 2);
        let mut edges: Vec<i64> = terms.iter().map(|t| t.edge_x_exponents[0]).collect();
        edges.sort();
        assert_eq!(edges, vec![-1, 1]);
    }

    #[test]
    fn zero_direction_is_inadmissible() {
        let (_, p) = setup("p2");
        assert!(matches!(
            brion_terms(&p, &[0, 0]),
            Err(HilbertError::InadmissibleDirection { .. })
        ));
        assert_eq!(
            brion_terms(&p, &[1]).unwrap_err(),
            HilbertError::DirectionLength { expected: 2, found: 1 }
        );
    }

    #[test]
    fn projective_line_series() {
        let (_, p) = setup("p1");
        let out = hilbert_derivative(&p, &[1], Execution::Sequential).unwrap();
        let expected = RationalFunction::new(poly(&[1, 1]), poly(&[1, -1]).pow(2)).unwrap();
        assert_eq!(out.series, expected);
        assert!(out.derivative.is_zero);
    }

    #[test]
    fn series_matches_lattice_counts() {
        for (name, n) in [("p1", vec![3]), ("p2", vec![1, 2]), ("p1xp1", vec![2, 5])] {
            let (fan, p) = setup(name);
            let out = hilbert_derivative(&p, &n, Execution::Sequential).unwrap();
            let (counts, weighted) = lattice_oracle(fan.polytope(), &p, &n, 4).unwrap();
            let series = out.series.power_series(5).unwrap();
            let deriv = out.derivative.value.power_series(5).unwrap();
            for d in 0..5 {
                assert_eq!(series[d], rat(counts[d] as i64), "{name} d={d}");
                assert_eq!(deriv[d], rat(weighted[d]), "{name} d={d}");
            }
        }
    }

    #[test]
    fn direct_expansion_agrees() {
        for (name, n) in [("p1", vec![2]), ("p2", vec![1, -3]), ("p1cubed", vec![1, 2, 4])] {
            let (_, p) = setup(name);
            let terms = brion_terms(&p, &n).unwrap();
            let fast = specialized_series_and_derivative(&terms, &n, Execution::Sequential).unwrap();
            let direct = specialized_series_direct(&terms, &n, Execution::Sequential).unwrap();
            assert_eq!(fast, direct, "{name}");
        }
    }

    #[test]
    fn polylog_basis_expands_to_powers() {
        for (k, f) in polylog_basis(4, 1).iter().enumerate() {
            let coeffs = f.power_series(5).unwrap();
            for d in 0..5i64 {
                assert_eq!(coeffs[d as usize], rat(d.pow(k as u32)), "k={k} d={d}");
            }
        }
        let squared = &polylog_basis(2, 2)[1];
        assert_eq!(squared.power_series(5).unwrap(), vec![rat(0), rat(0), rat(1), rat(0), rat(2)]);
    }

    #[test]
    fn ehrhart_counts() {
        let (fan, p) = setup("p1");
        assert_eq!(ehrhart_oracle(fan.polytope(), &p, 3).unwrap(), vec![1, 3, 5, 7]);
        let (fan, p) = setup("p2");
        assert_eq!(ehrhart_oracle(fan.polytope(), &p, 1).unwrap()[1], 10);
        let (fan, p) = setup("p1xp1");
        assert_eq!(ehrhart_oracle(fan.polytope(), &p, 1).unwrap()[1], 9);
    }

    #[test]
    fn oracle_refuses_large_boxes() {
        let (fan, p) = setup("p1cubed");
        assert!(matches!(
            ehrhart_oracle(fan.polytope(), &p, 1000),
            Err(HilbertError::OracleTooLarge { .. })
        ));
        let (fan, p) = setup("nill-paffenholz");
        assert_eq!(
            ehrhart_oracle(fan.polytope(), &p, 1).unwrap_err(),
            HilbertError::OracleDimension(7)
        );
    }

    #[test]
    fn doubling_the_direction_doubles_the_derivative() {
        let (_, p) = setup("p2");
        let once = hilbert_derivative(&p, &[1, 3], Execution::Sequential).unwrap();
        let twice = hilbert_derivative(&p, &[2, 6], Execution::Sequential).unwrap();
        assert_eq!(twice.series, once.series);
        assert_eq!(twice.derivative.value, once.derivative.value.scale(&rat(2)));
    }

    #[test]
    fn symmetric_fixtures_pass_the_test() {
        for (name, dirs) in [
            ("p1", vec![vec![1], vec![5]]),
            ("p1xp1", vec![vec![1, 1], vec![1, 2]]),
            ("p2", vec![vec![1, 2], vec![3, -1]]),
            ("p1cubed", vec![vec![1, 2, 3]]),
        ] {
            let (_, p) = setup(name);
            let out = derivative_test(&p, &dirs, Execution::Sequential).unwrap();
            assert_eq!(out.verdict, VERDICT_NONE, "{name}");
        }
    }

    #[test]
    fn inadmissible_direction_is_perturbed() {
        let (_, p) = setup("p1xp1");
        let out = derivative_test(&p, &[vec![1, 0]], Execution::Sequential).unwrap();
        let used = out.outcomes[0].used.clone().expect("perturbed");
        assert!(brion_terms(&p, &used).is_ok());
        assert!(out.outcomes[0].result.is_zero);
    }

    #[test]
    fn projective_line_laurent() {
        let (_, p) = setup("p1");
        // C_{-2}(b) = 2 / (4 - b^2)
        for b in [rat(1), ratio(1, 3), ratio(-5, 7)] {
            let c = laurent_at_xi(&p, &[b.clone()], 2).unwrap();
            assert_eq!(c.lowest_order, -2);
            assert_eq!(c.values.len(), 2);
            assert_eq!(c.values[0], rat(2) / (rat(4) - &b * &b));
        }
        assert_eq!(laurent_at_xi(&p, &[rat(1)], 1).unwrap().values.len(), 1);
        assert_eq!(laurent_at_xi(&p, &[rat(0)], 2).unwrap_err(), HilbertError::XiOnWall);
    }

    #[test]
    fn leading_laurent_coefficient_approaches_volume() {
        // vol(P) m! / (m+1)^(m+1): 1/3 for the triangle, 8/27 for the square
        for (name, limit) in [("p2", ratio(1, 3)), ("p1xp1", ratio(8, 27))] {
            let (_, p) = setup(name);
            let b = vec![ratio(1, 10_007), ratio(1, 30_011)];
            let c = laurent_at_xi(&p, &b, 1).unwrap().values[0].clone();
            let err = (c - &limit) / limit;
            assert!(err.abs() < ratio(1, 1000), "{name}");
        }
    }

    #[test]
    fn exponential_printer() {
        let f = RationalFunction::new(poly(&[0, 2]), poly(&[-1, 1]).pow(2)).unwrap();
        assert_eq!(display_exponential(&f, 7), "(2e^{-8t})/(e^{-16t} - 2e^{-8t} + 1)");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn poles_cancel_and_oracles_agree(n in prop::collection::vec(-6i64..6, 2)) {
            let (fan, p) = setup("p2");
            prop_assume!(brion_terms(&p, &n).is_ok());
            let out = hilbert_derivative(&p, &n, Execution::Sequential).unwrap();
            let (_, weighted) = lattice_oracle(fan.polytope(), &p, &n, 3).unwrap();
            let deriv = out.derivative.value.power_series(4).unwrap();
            for d in 0..4 {
                prop_assert_eq!(deriv[d].clone(), rat(weighted[d]));
            }
        }
    }
}
