//! Invariant polynomials in the Chern classes `c_1, c_2, ...`: Todd
//! polynomials, the localization integrands `Td^p * c_1^(m-p+1)`, and their
//! evaluation on diagonal weights.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{rational_to_string, LaurentSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChernError {
    #[error("degree p = {p} out of range 1..={m}")]
    DegreeOutOfRange { p: usize, m: usize },
    #[error("cannot parse chern polynomial: {0}")]
    Parse(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
}

/// Exponent vector of a monomial `c_1^a1 c_2^a2 ...`, without trailing zeros.
type Exponents = Vec<u32>;

fn weight(e: &Exponents) -> usize {
    e.iter()
        .enumerate()
        .map(|(i, &a)| (i + 1) * a as usize)
        .sum()
}

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn mul_exponents(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

type Terms = BTreeMap<Exponents, Rational>;

fn add_into(acc: &mut Terms, e: Exponents, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(e.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        acc.remove(&e);
    }
}

/// Product of two term maps, dropping monomials of weight above `max_weight`.
fn mul_terms(a: &Terms, b: &Terms, max_weight: usize) -> Terms {
    let mut out = Terms::new();
    for (ea, ca) in a {
        let wa = weight(ea);
        for (eb, cb) in b {
            if wa + weight(eb) > max_weight {
                continue;
            }
            add_into(&mut out, mul_exponents(ea, eb), ca * cb);
        }
    }
    out
}

/// A homogeneous invariant polynomial in the Chern classes, `c_i` having
/// weight `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricPolynomial {
    degree: usize,
    terms: Terms,
}

impl SymmetricPolynomial {
    fn from_terms(degree: usize, terms: Terms) -> Self {
        debug_assert!(terms.keys().all(|e| weight(e) == degree));
        SymmetricPolynomial { degree, terms }
    }

    /// The class `c_k` (`k >= 1`).
    pub fn chern(k: usize) -> Self {
        assert!(k >= 1, "chern classes start at c_1");
        let mut e = vec![0; k];
        e[k - 1] = 1;
        Self::from_terms(k, Terms::from([(e, Rational::one())]))
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = Terms::new();
        add_into(&mut terms, Vec::new(), c);
        Self::from_terms(0, terms)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `c_1^e[0] c_2^e[1] ...`.
    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(&trim(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        Self::from_terms(degree, mul_terms(&self.terms, &other.terms, degree))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut terms = Terms::new();
        for (e, a) in &self.terms {
            add_into(&mut terms, e.clone(), a * c);
        }
        Self::from_terms(self.degree, terms)
    }

    /// Sum of two polynomials of equal degree (either may be zero).
    pub fn add(&self, other: &Self) -> Self {
        let degree = if self.is_zero() { other.degree } else { self.degree };
        assert!(
            other.is_zero() || other.degree == degree,
            "adding polynomials of different degree"
        );
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_into(&mut terms, e.clone(), c.clone());
        }
        Self::from_terms(degree, terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Drops every monomial involving `c_k` for `k > m`.
    pub fn restrict_rank(&self, m: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.len() <= m)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Self::from_terms(self.degree, terms)
    }

    /// Least common denominator `k` of the coefficients, so that `k * self`
    /// has integer coefficients.
    pub fn prefactor(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()))
    }

    /// Parses expressions such as `-c_1^4+4c_1^2c_2+3c_2^2+c_1c_3-c_4`
    /// (optionally with `*` between factors and spaces anywhere).
    pub fn parse(text: &str) -> Result<Self, ChernError> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if cleaned.is_empty() {
            return Err(ChernError::Parse("empty expression".into()));
        }
        let bytes = cleaned.as_bytes();
        let mut pos = 0;
        let mut terms = Terms::new();
        let mut degree = None;
        let number = |pos: &mut usize| {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (start < *pos).then(|| cleaned[start..*pos].parse::<u64>().unwrap())
        };
        while pos < bytes.len() {
            let mut sign = 1i64;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            }
            let mut coeff = Rational::from_integer(sign.into());
            if let Some(n) = number(&mut pos) {
                coeff *= Rational::from_integer(n.into());
                if pos < bytes.len() && bytes[pos] == b'/' {
                    pos += 1;
                    let d = number(&mut pos)
                        .filter(|&d| d != 0)
                        .ok_or_else(|| ChernError::Parse(format!("bad denominator in {text}")))?;
                    coeff /= Rational::from_integer(d.into());
                }
            }
            let mut e: Exponents = Vec::new();
            while pos < bytes.len() && bytes[pos] == b'c' {
                pos += 1;
                if pos < bytes.len() && bytes[pos] == b'_' {
                    pos += 1;
                }
                let k = number(&mut pos)
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| ChernError::Parse(format!("bad class index in {text}")))?
                    as usize;
                let mut power = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    power = number(&mut pos)
                        .ok_or_else(|| ChernError::Parse(format!("bad exponent in {text}")))?
                        as u32;
                }
                if e.len() < k {
                    e.resize(k, 0);
                }
                e[k - 1] += power;
            }
            if pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                return Err(ChernError::Parse(format!(
                    "unexpected '{}' in {text}",
                    bytes[pos] as char
                )));
            }
            let e = trim(e);
            let w = weight(&e);
            if *degree.get_or_insert(w) != w {
                return Err(ChernError::NotHomogeneous);
            }
            add_into(&mut terms, e, coeff);
        }
        Ok(Self::from_terms(degree.unwrap_or(0), terms))
    }

    /// Exact value on the diagonal matrix with the given eigenvalues:
    /// `c_k` becomes the `k`-th elementary symmetric function of `weights`.
    pub fn evaluate(&self, weights: &[Rational]) -> Rational {
        let e = elementary_symmetric(weights);
        self.terms.iter().fold(Rational::zero(), |acc, (exps, c)| {
            let mut term = c.clone();
            for (k, &a) in exps.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                match e.get(k + 1) {
                    Some(ek) => term *= num_traits::pow(ek.clone(), a as usize),
                    None => return acc,
                }
            }
            acc + term
        })
    }

    fn monomial_string(e: &[u32]) -> String {
        e.iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("c_{}", i + 1)
                } else {
                    format!("c_{}^{}", i + 1, a)
                }
            })
            .collect()
    }

    /// Terms in print order: descending powers of `c_1`, then `c_2`, ...
    fn ordered_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.cmp(a.0));
        terms
    }

    fn render(&self, scale: &Rational) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.ordered_terms() {
            let c = c * scale;
            let mono = Self::monomial_string(e);
            out.push_str(match (out.is_empty(), c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            let abs = c.abs();
            if mono.is_empty() {
                out.push_str(&rational_to_string(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&rational_to_string(&abs));
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for SymmetricPolynomial {
    /// `(integer numerator)/prefactor`, e.g. `(c_1^2 + c_2)/12`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.prefactor();
        if k.is_one() {
            f.write_str(&self.render(&Rational::one()))
        } else {
            write!(
                f,
                "({})/{}",
                self.render(&Rational::from_integer(k.clone())),
                k
            )
        }
    }
}

/// `e_0 .. e_n` of the given values, from the product `prod (1 + w_i z)`.
pub fn elementary_symmetric(weights: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); weights.len() + 1];
    e[0] = Rational::one();
    for (i, w) in weights.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let delta = &e[k - 1] * w;
            e[k] += delta;
        }
    }
    e
}

/// Power sums `p_1 .. p_n` expressed in the elementary basis `c_k = e_k`
/// by Newton's identities.
fn power_sums(n: usize) -> Vec<SymmetricPolynomial> {
    let mut p: Vec<SymmetricPolynomial> = Vec::with_capacity(n);
    for k in 1..=n {
        let sign = |j: usize| if j % 2 == 0 { -Rational::one() } else { Rational::one() };
        let mut pk = SymmetricPolynomial::chern(k)
            .scale(&(sign(k) * Rational::from_integer(k.into())));
        for i in 1..k {
            pk = pk.add(&SymmetricPolynomial::chern(i).mul(&p[k - i - 1]).scale(&sign(i)));
        }
        p.push(pk);
    }
    p
}

/// Taylor coefficients of `log(x / (1 - e^{-x}))` up to `x^n`.
fn todd_log_coefficients(n: usize) -> Vec<Rational> {
    // (1 - e^{-x}) / x = sum (-1)^k x^k / (k+1)!
    let mut factorial = Rational::one();
    let mut quotient = Vec::with_capacity(n + 1);
    for k in 0..=n {
        factorial *= Rational::from_integer((k + 1).into());
        let term = factorial.recip();
        quotient.push(if k % 2 == 0 { term } else { -term });
    }
    let f = LaurentSeries::new(0, quotient)
        .invert()
        .expect("constant term is one");
    let f = f.coeffs();
    // f' = g' f  =>  k g_k = k f_k - sum_{i<k} i g_i f_{k-i}
    let mut g = vec![Rational::zero(); n + 1];
    for k in 1..=n {
        let mut acc = &f[k] * Rational::from_integer(k.into());
        for i in 1..k {
            acc -= &g[i] * Rational::from_integer(i.into()) * &f[k - i];
        }
        g[k] = acc / Rational::from_integer(k.into());
    }
    g
}

fn compute_todd(p: usize) -> SymmetricPolynomial {
    let g = todd_log_coefficients(p);
    let power = power_sums(p);
    let mut log_terms = Terms::new();
    for k in 1..=p {
        for (e, c) in &power[k - 1].terms {
            add_into(&mut log_terms, e.clone(), c * &g[k]);
        }
    }
    // exp of a series with no weight-0 part, truncated at weight p
    let mut total = Terms::from([(Vec::new(), Rational::one())]);
    let mut term = total.clone();
    for j in 1..=p {
        term = mul_terms(&term, &log_terms, p);
        let inv_j = Rational::new(BigInt::one(), BigInt::from(j));
        for c in term.values_mut() {
            *c *= &inv_j;
        }
        for (e, c) in &term {
            add_into(&mut total, e.clone(), c.clone());
        }
    }
    let homogeneous = total.into_iter().filter(|(e, _)| weight(e) == p).collect();
    SymmetricPolynomial::from_terms(p, homogeneous)
}

/// The degree-`p` Todd polynomial, for a rank-`m` bundle (`1 <= p <= m`).
pub fn todd_polynomial(p: usize, m: usize) -> Result<SymmetricPolynomial, ChernError> {
    if p == 0 || p > m {
        return Err(ChernError::DegreeOutOfRange { p, m });
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, SymmetricPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().expect("todd cache poisoned");
    Ok(guard.entry(p).or_insert_with(|| compute_todd(p)).clone())
}

/// `Td^p * c_1^(m-p+1)`, of weighted degree `m + 1`.
pub fn integrand(p: usize, m: usize) -> Result<SymmetricPolynomial, ChernError> {
    let td = todd_polynomial(p, m)?;
    Ok(td.mul(&SymmetricPolynomial::chern(1).pow((m - p + 1) as u32)))
}
