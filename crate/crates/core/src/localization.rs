//! Fixed-point localization of the Todd-class invariants `F_Td^p`.
//!
//! Each maximal cone of a smooth fan is an isolated fixed point of the torus;
//! its tangent weights are the dual basis of the cone generators paired with
//! the torus parameter `xi`. The localization sum is a homogeneous linear
//! form in `xi`, recovered exactly from a handful of rational samples.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{LinearForm, Rational};
use crate::chern::{integrand, todd_polynomial, ChernError, SymmetricPolynomial};
use crate::geometry::{parameter_labels, Fan, MaximalCone};
use crate::linalg::{self, Matrix};
use crate::parallel::Execution;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_100_901;

/// Number of redraws allowed when a sample lands on a weight hyperplane.
const MAX_REDRAWS: usize = 32;

/// Extra samples checked after interpolation.
const VERIFICATION_SAMPLES: usize = 3;

const SAMPLE_BOUND: i64 = 1_000_003;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizationError {
    #[error("fan is not smooth at cone {cone:?}")]
    NotSmooth { cone: Vec<usize> },
    #[error("sample has {found} coordinates, expected {expected}")]
    SampleLength { expected: usize, found: usize },
    #[error("non-generic sample: tangent weight {weight} vanishes at fixed point {fixed_point}")]
    NonGenericSample { fixed_point: usize, weight: usize },
    #[error("no generic sample found after {attempts} draws")]
    PersistentNonGeneric { attempts: usize },
    #[error("result not a linear form: {0}")]
    NotLinear(String),
    #[error(transparent)]
    Chern(#[from] ChernError),
}

/// A torus-fixed point: a maximal cone with the dual basis of its generators.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedPoint {
    cone: MaximalCone,
    dual_basis: Matrix,
    tangent_weights: Vec<LinearForm>,
}

impl FixedPoint {
    pub fn cone(&self) -> &MaximalCone {
        &self.cone
    }

    /// Rows `u_k` with `<u_k, v_l> = delta_kl` for the sorted generators.
    pub fn dual_basis(&self) -> &Matrix {
        &self.dual_basis
    }

    /// `xi -> <u_k, xi>`, aligned with the cone's generators.
    pub fn tangent_weights(&self) -> &[LinearForm] {
        &self.tangent_weights
    }

    /// Tangent weights at a sample, or the index of a vanishing one.
    fn weights_at(&self, sample: &[Rational]) -> Result<Vec<Rational>, usize> {
        self.tangent_weights
            .iter()
            .enumerate()
            .map(|(k, w)| {
                let value = w.evaluate(sample);
                if value.is_zero() {
                    Err(k)
                } else {
                    Ok(value)
                }
            })
            .collect()
    }
}

/// Parameter labels with an optional sample point.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusParameters {
    symbols: Vec<String>,
    sample: Option<Vec<Rational>>,
}

impl TorusParameters {
    pub fn for_dim(dim: usize) -> Self {
        TorusParameters {
            symbols: parameter_labels(dim),
            sample: None,
        }
    }

    pub fn with_sample(mut self, sample: Vec<Rational>) -> Result<Self, LocalizationError> {
        if sample.len() != self.symbols.len() {
            return Err(LocalizationError::SampleLength {
                expected: self.symbols.len(),
                found: sample.len(),
            });
        }
        self.sample = Some(sample);
        Ok(self)
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn sample(&self) -> Option<&[Rational]> {
        self.sample.as_deref()
    }
}

/// The exact form `k_p * F_Td^p` with the samples that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct ObstructionResult {
    pub p: usize,
    pub scaled_value: LinearForm,
    pub prefactor: Rational,
    pub interpolation_points: Vec<Vec<Rational>>,
    pub verification_points: Vec<(Vec<Rational>, Rational)>,
}

impl ObstructionResult {
    pub fn is_zero(&self) -> bool {
        self.scaled_value.is_zero()
    }

    /// `F_Td^p` itself, without the prefactor.
    pub fn value(&self) -> LinearForm {
        self.scaled_value.scale(&self.prefactor.recip())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObstructionReport {
    pub results: Vec<ObstructionResult>,
    pub verdict: String,
}

pub const VERDICT_VANISH: &str = "all obstructions vanish";
pub const VERDICT_UNSTABLE: &str = "asymptotically Chow unstable candidate";

pub fn verdict(results: &[ObstructionResult]) -> String {
    let nonzero: Vec<String> = results
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| r.p.to_string())
        .collect();
    if nonzero.is_empty() {
        VERDICT_VANISH.to_string()
    } else {
        format!("{VERDICT_UNSTABLE}: F_Td^p ≠ 0 for p = {}", nonzero.join(", "))
    }
}

/// One fixed point per maximal cone, in the fan's cone order.
pub fn fixed_points(fan: &Fan) -> Result<Vec<FixedPoint>, LocalizationError> {
    fan.cones()
        .iter()
        .map(|cone| {
            let rows = cone.generator_rows(fan.polytope());
            let g = linalg::from_ints(&rows);
            let not_smooth = || LocalizationError::NotSmooth {
                cone: cone.generators().to_vec(),
            };
            if !linalg::determinant(&g).abs().is_one() {
                return Err(not_smooth());
            }
            let dual_basis = linalg::inverse(&linalg::transpose(&g)).ok_or_else(not_smooth)?;
            let tangent_weights = dual_basis.iter().map(|u| LinearForm::from_dense(u)).collect();
            Ok(FixedPoint {
                cone: cone.clone(),
                dual_basis,
                tangent_weights,
            })
        })
        .collect()
}

/// Fixed-point data of a smooth fan, reusable across degrees and samples.
pub struct Localizer {
    dim: usize,
    points: Vec<FixedPoint>,
    exec: Execution,
}

impl Localizer {
    pub fn new(fan: &Fan, exec: Execution) -> Result<Self, LocalizationError> {
        Ok(Localizer {
            dim: fan.dim(),
            points: fixed_points(fan)?,
            exec,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn fixed_points(&self) -> &[FixedPoint] {
        &self.points
    }

    /// `sum_q f(w_q) / prod w_q` for an invariant polynomial `f`.
    pub fn sum(
        &self,
        f: &SymmetricPolynomial,
        sample: &[Rational],
    ) -> Result<Rational, LocalizationError> {
        if sample.len() != self.dim {
            return Err(LocalizationError::SampleLength {
                expected: self.dim,
                found: sample.len(),
            });
        }
        let terms = self.exec.map(&self.points, |point| {
            let w = point.weights_at(sample)?;
            let det = w.iter().fold(Rational::one(), |acc, x| acc * x);
            Ok(f.evaluate(&w) / det)
        });
        let mut total = Rational::zero();
        for (i, term) in terms.into_iter().enumerate() {
            match term {
                Ok(t) => total += t,
                Err(weight) => {
                    return Err(LocalizationError::NonGenericSample {
                        fixed_point: i,
                        weight,
                    })
                }
            }
        }
        Ok(total)
    }

    /// `F_Td^p` at one sample, with numerator `Td^p * c_1^(m-p+1)`.
    pub fn value(&self, p: usize, sample: &[Rational]) -> Result<Rational, LocalizationError> {
        self.sum(&integrand(p, self.dim)?, sample)
    }

    fn is_generic(&self, sample: &[Rational]) -> bool {
        self.points.iter().all(|q| q.weights_at(sample).is_ok())
    }

    /// Draws `count` generic samples whose homogenized vectors `(x, 1)` are
    /// linearly independent (for the first `dim + 1` of them).
    fn draw_samples(&self, rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<Vec<Rational>>, LocalizationError> {
        let mut samples: Vec<Vec<Rational>> = Vec::with_capacity(count);
        let mut failures = 0;
        while samples.len() < count {
            let candidate: Vec<Rational> = (0..self.dim)
                .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND))))
                .collect();
            let independent = samples.len() > self.dim || {
                let mut rows: Matrix = samples.iter().map(|s| homogenize(s)).collect();
                rows.push(homogenize(&candidate));
                rank(&rows) == rows.len()
            };
            if self.is_generic(&candidate) && independent {
                samples.push(candidate);
                failures = 0;
            } else {
                failures += 1;
                if failures >= MAX_REDRAWS {
                    return Err(LocalizationError::PersistentNonGeneric { attempts: failures });
                }
            }
        }
        Ok(samples)
    }

    /// The exact linear form `k_p * F_Td^p` by interpolation and verification.
    pub fn f_td(&self, p: usize, seed: u64) -> Result<ObstructionResult, LocalizationError> {
        let td = todd_polynomial(p, self.dim)?;
        let prefactor = Rational::from_integer(td.prefactor());
        let f = integrand(p, self.dim)?.scale(&prefactor);
        let m = self.dim;
        // one stream per degree keeps results independent of evaluation order
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (p as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let samples = self.draw_samples(&mut rng, m + 1 + VERIFICATION_SAMPLES)?;
        let values = self.exec.map(&samples, |s| self.sum(&f, s));
        let values: Vec<Rational> = values.into_iter().collect::<Result<_, _>>()?;

        let system: Matrix = samples[..=m].iter().map(|s| homogenize(s)).collect();
        let solution = linalg::solve(&system, &values[..=m])
            .ok_or_else(|| LocalizationError::NotLinear("singular sample system".into()))?;
        let constant = solution[m].clone();
        if !constant.is_zero() {
            return Err(LocalizationError::NotLinear(format!(
                "nonzero constant term {constant}"
            )));
        }
        let form = LinearForm::from_dense(&solution[..m]);
        let verification_points: Vec<(Vec<Rational>, Rational)> = samples[m + 1..]
            .iter()
            .zip(&values[m + 1..])
            .map(|(s, v)| (s.clone(), v - form.evaluate(s)))
            .collect();
        if let Some((s, r)) = verification_points.iter().find(|(_, r)| !r.is_zero()) {
            return Err(LocalizationError::NotLinear(format!(
                "residual {r} at sample {s:?}"
            )));
        }
        Ok(ObstructionResult {
            p,
            scaled_value: form,
            prefactor,
            interpolation_points: samples[..=m].to_vec(),
            verification_points,
        })
    }

    /// `f_td` for every degree `1..=m`.
    pub fn obstruction_report(&self, seed: u64) -> Result<ObstructionReport, LocalizationError> {
        let degrees: Vec<usize> = (1..=self.dim).collect();
        let results = self
            .exec
            .map(&degrees, |&p| self.f_td(p, seed))
            .into_iter()
            .collect::<Result<Vec<_>, _>>()?;
        let verdict = verdict(&results);
        Ok(ObstructionReport { results, verdict })
    }
}

fn homogenize(sample: &[Rational]) -> Vec<Rational> {
    let mut row = sample.to_vec();
    row.push(Rational::one());
    row
}

fn rank(rows: &Matrix) -> usize {
    let mut a = rows.clone();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[r][c];
            for k in c..cols {
                let delta = &f * &a[r][k];
                a[i][k] -= delta;
            }
        }
        r += 1;
    }
    r
}

pub fn localization_value(fan: &Fan, p: usize, sample: &[Rational]) -> Result<Rational, LocalizationError> {
    Localizer::new(fan, Execution::default())?.value(p, sample)
}

pub fn f_td(fan: &Fan, p: usize, seed: u64) -> Result<ObstructionResult, LocalizationError> {
    Localizer::new(fan, Execution::default())?.f_td(p, seed)
}

pub fn obstruction_report(fan: &Fan, seed: u64) -> Result<ObstructionReport, LocalizationError> {
    Localizer::new(fan, Execution::default())?.obstruction_report(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use crate::geometry::{build_fan, builtin, nill_paffenholz_symmetries};
    use proptest::prelude::*;

    fn fan(name: &str) -> Fan {
        build_fan(&builtin(name).unwrap()).unwrap()
    }

    fn form(coeffs: &[i64]) -> LinearForm {
        LinearForm::from_dense(&coeffs.iter().map(|&c| rat(c)).collect::<Vec<_>>())
    }

    fn weights_of(points: &[FixedPoint], generators: &[usize]) -> Vec<LinearForm> {
        let cone = MaximalCone::new(generators.to_vec());
        points
            .iter()
            .find(|q| q.cone() == &cone)
            .expect("cone present")
            .tangent_weights()
            .to_vec()
    }

    #[test]
    fn dual_basis_inverts_generators() {
        let f = fan("nill-paffenholz");
        for q in fixed_points(&f).unwrap() {
            let rows = q.cone().generator_rows(f.polytope());
            let prod = linalg::mul(q.dual_basis(), &linalg::transpose(&linalg::from_ints(&rows)));
            assert_eq!(prod, linalg::identity(7));
            assert!(q.dual_basis().iter().flatten().all(|x| x.is_integer()));
        }
    }

    #[test]
    fn weights_at_standard_cone() {
        let points = fixed_points(&fan("nill-paffenholz")).unwrap();
        // v1 v2 v3 v7 v8 v9 v11, zero-based
        let w = weights_of(&points, &[0, 1, 2, 6, 7, 8, 10]);
        let expected: Vec<LinearForm> = (0..7).map(LinearForm::variable).collect();
        assert_eq!(w, expected);
    }

    #[test]
    fn weights_at_mixed_cone() {
        let points = fixed_points(&fan("nill-paffenholz")).unwrap();
        // v2 v3 v6 v8 v9 v10 v11: sorted generator order differs from the
        // coordinate order, so compare as sets
        let mut w = weights_of(&points, &[1, 2, 5, 7, 8, 9, 10]);
        let mut expected = vec![
            form(&[-1, 0, 0, 0, 0, 0, 0]),
            form(&[0, 1, 0, 0, 0, 0, 0]),
            form(&[0, 0, 1, 0, 0, 0, 0]),
            form(&[0, 0, 0, -1, 0, 0, 0]),
            form(&[0, 0, 0, -1, 1, 0, 0]),
            form(&[0, 0, 0, -1, 0, 1, 0]),
            form(&[-1, 0, 0, 2, 0, 0, 1]),
        ];
        let key = |f: &LinearForm| format!("{:?}", f.dense(7));
        w.sort_by_key(key);
        expected.sort_by_key(key);
        assert_eq!(w, expected);
    }

    #[test]
    fn projective_line() {
        let f = fan("p1");
        let points = fixed_points(&f).unwrap();
        let weights: Vec<LinearForm> = points.iter().map(|q| q.tangent_weights()[0].clone()).collect();
        assert!(weights.contains(&form(&[1])) && weights.contains(&form(&[-1])));
        assert_eq!(localization_value(&f, 1, &[rat(1)]).unwrap(), rat(0));
        let report = obstruction_report(&f, DEFAULT_SEED).unwrap();
        assert!(report.results[0].is_zero());
        assert_eq!(report.verdict, VERDICT_VANISH);
    }

    #[test]
    fn first_obstruction_vanishes_on_a_sample() {
        let f = fan("nill-paffenholz");
        let sample: Vec<Rational> = [3, 5, 7, 11, 13, 17, 19].iter().map(|&x| rat(x)).collect();
        assert_eq!(localization_value(&f, 1, &sample).unwrap(), rat(0));
    }

    #[test]
    fn second_obstruction_vanishes_on_its_kernel() {
        let f = fan("nill-paffenholz");
        // b1 = b2 = b3 puts the point on the wall b2 - b1 = 0
        let wall = vec![rat(2), rat(3), rat(5), rat(1), rat(1), rat(1), ratio(7, 2)];
        assert!(localization_value(&f, 2, &wall).is_err());
        // sum a - sum b - 2c = 10 - 7 - 3 = 0
        let sample = vec![rat(2), rat(3), rat(5), rat(1), rat(2), rat(4), ratio(3, 2)];
        assert_eq!(localization_value(&f, 2, &sample).unwrap(), rat(0));
        assert_ne!(localization_value(&f, 2, &[rat(2), rat(3), rat(5), rat(1), rat(2), rat(4), ratio(1, 3)]).unwrap(), rat(0));
    }

    #[test]
    fn degenerate_sample_is_rejected() {
        let f = fan("nill-paffenholz");
        let sample = vec![rat(1); 7];
        assert!(matches!(
            localization_value(&f, 2, &sample),
            Err(LocalizationError::NonGenericSample { .. })
        ));
        assert_eq!(
            localization_value(&f, 2, &[rat(1)]).unwrap_err(),
            LocalizationError::SampleLength { expected: 7, found: 1 }
        );
    }

    #[test]
    fn second_obstruction_form() {
        let f = fan("nill-paffenholz");
        let result = f_td(&f, 2, DEFAULT_SEED).unwrap();
        assert_eq!(result.prefactor, rat(12));
        assert_eq!(result.scaled_value, form(&[1, 1, 1, -1, -1, -1, -2]).scale(&rat(13056)));
        assert_eq!(result.verification_points.len(), 3);
        assert!(result.verification_points.iter().all(|(_, r)| r.is_zero()));
        assert_eq!(result.value(), form(&[1, 1, 1, -1, -1, -1, -2]).scale(&rat(1088)));
    }

    #[test]
    fn invariant_under_fan_symmetries() {
        let f = fan("nill-paffenholz");
        let loc = Localizer::new(&f, Execution::default()).unwrap();
        let form = loc.f_td(3, 7).unwrap().scaled_value;
        for g in nill_paffenholz_symmetries() {
            assert_eq!(form.compose(&g), form);
        }
    }

    #[test]
    fn seed_does_not_change_the_form() {
        let f = fan("nill-paffenholz");
        let loc = Localizer::new(&f, Execution::Sequential).unwrap();
        let a = loc.f_td(2, 1).unwrap();
        let b = loc.f_td(2, 2).unwrap();
        assert_eq!(a.scaled_value, b.scaled_value);
        assert_ne!(a.interpolation_points, b.interpolation_points);
    }

    #[test]
    fn symmetric_fixtures_have_no_obstruction() {
        for name in ["p1xp1", "p2", "p1cubed"] {
            let report = obstruction_report(&fan(name), DEFAULT_SEED).unwrap();
            assert!(report.results.iter().all(ObstructionResult::is_zero), "{name}");
            assert_eq!(report.verdict, VERDICT_VANISH);
        }
    }

    #[test]
    fn sequential_matches_parallel() {
        let f = fan("p1cubed");
        let seq = Localizer::new(&f, Execution::Sequential).unwrap().obstruction_report(5).unwrap();
        let par = Localizer::new(&f, Execution::Parallel).unwrap().obstruction_report(5).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn verdict_lists_nonzero_degrees() {
        let mk = |p, zero: bool| ObstructionResult {
            p,
            scaled_value: if zero { LinearForm::zero() } else { form(&[1]) },
            prefactor: rat(1),
            interpolation_points: vec![],
            verification_points: vec![],
        };
        assert_eq!(verdict(&[mk(1, true), mk(2, true)]), VERDICT_VANISH);
        assert_eq!(
            verdict(&[mk(1, true), mk(2, false), mk(3, false)]),
            "asymptotically Chow unstable candidate: F_Td^p ≠ 0 for p = 2, 3"
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn localization_sum_is_homogeneous_of_degree_one(
            x in prop::collection::vec(-40i64..40, 3),
            p in 1usize..=3,
        ) {
            let f = fan("p1cubed");
            let loc = Localizer::new(&f, Execution::Sequential).unwrap();
            // a non-symmetric integrand keeps the sum nonzero
            let g = SymmetricPolynomial::chern(1).pow(3).mul(&SymmetricPolynomial::chern(1));
            let sample: Vec<Rational> = x.iter().map(|&v| rat(v)).collect();
            let tripled: Vec<Rational> = sample.iter().map(|v| v * rat(3)).collect();
            match (loc.sum(&g, &sample), loc.value(p, &tripled)) {
                (Ok(a), Ok(_)) => {
                    prop_assert_eq!(loc.sum(&g, &tripled).unwrap(), a * rat(3));
                }
                _ => prop_assume!(false),
            }
        }
    }
}
