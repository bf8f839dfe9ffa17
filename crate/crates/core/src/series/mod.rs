//! Power-sum and prefix arithmetic for truncated log-evaluation.
//!
//! A partition function restricted to a disk with no roots is approximated
//! through the first m Taylor coefficients of its logarithm, which are the
//! inverse power sums of its roots up to sign and scaling. This module
//! converts between coefficient prefixes and power sums (Newton's
//! identities), picks the truncation order for a target accuracy, evaluates
//! the truncated log, composes prefixes, and checks multiplicative error.

pub mod fft;

use std::time::{Duration, Instant};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Leading coefficients e_0..e_m of a polynomial or power series.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialPrefix {
    pub coeffs: Vec<Complex64>,
}

impl PolynomialPrefix {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        PolynomialPrefix { coeffs }
    }

    pub fn from_reals(coeffs: &[f64]) -> Self {
        PolynomialPrefix {
            coeffs: coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        }
    }

    /// Coefficient of z^i, zero beyond the stored prefix.
    pub fn coeff(&self, i: usize) -> Complex64 {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Inverse power sums p_1..p_m of the roots: p_j = sum of zeta^(-j).
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSums {
    pub p: Vec<Complex64>,
}

impl PowerSums {
    pub fn new(p: Vec<Complex64>) -> Self {
        PowerSums { p }
    }

    pub fn zeros(m: usize) -> Self {
        PowerSums {
            p: vec![Complex64::default(); m],
        }
    }

    /// p_j for j >= 1, zero beyond the stored range.
    pub fn order(&self, j: usize) -> Complex64 {
        assert!(j >= 1);
        self.p.get(j - 1).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }
}

/// Outcome of a truncated evaluation, value = exp(log_value).
#[derive(Debug, Clone)]
pub struct ApproxResult {
    pub value: Complex64,
    pub log_value: Complex64,
    pub m: usize,
    /// Accuracy target of the surrounding contract; set by the caller.
    pub epsilon: f64,
    pub elapsed: Duration,
}

const UNIT_LEADING_TOL: f64 = 1e-12;
/// Above this order the quadratic Newton recurrences lose to FFT arithmetic.
const FFT_CUTOVER: usize = 2048;

/// Power sums p_1..p_m from coefficients e_0..: k e_k = -sum_{i<k} e_i p_{k-i}.
/// Coefficients beyond the stored prefix are zero, so m may exceed the
/// polynomial degree; that tail is then exact.
pub fn power_sums_from_coeffs(e: &PolynomialPrefix, m: usize) -> Result<PowerSums> {
    if (e.coeff(0) - Complex64::new(1.0, 0.0)).norm() > UNIT_LEADING_TOL {
        return Err(Error::Contract(format!(
            "power sums need a unit constant term, got {}",
            e.coeff(0)
        )));
    }
    if m >= FFT_CUTOVER {
        return Ok(fft::power_sums_via_log_derivative(e, m));
    }
    let mut p = Vec::with_capacity(m);
    for k in 1..=m {
        let mut s = Complex64::new(k as f64, 0.0) * e.coeff(k);
        for i in 1..k {
            s += e.coeff(i) * p[k - i - 1];
        }
        p.push(-s);
    }
    Ok(PowerSums::new(p))
}

/// Coefficients e_0..e_m from power sums: k a_k = -sum_{i<k} a_i p_{k-i},
/// a_0 = 1. Power sums beyond the stored range are treated as zero.
pub fn coeffs_from_power_sums(p: &PowerSums, m: usize) -> PolynomialPrefix {
    let mut a = Vec::with_capacity(m + 1);
    a.push(Complex64::new(1.0, 0.0));
    for k in 1..=m {
        let mut s = Complex64::default();
        for i in 0..k {
            s += a[i] * p.order(k - i);
        }
        a.push(-s / k as f64);
    }
    PolynomialPrefix::new(a)
}

/// Truncation order sufficient for multiplicative accuracy epsilon at t,
/// given d roots all of modulus at least big_m: ceil(C ln(d/(eps/2))) with
/// C = (1 - |t|/big_m)^(-1). Half of epsilon is budgeted for truncation,
/// the rest is floating-point headroom. At t = 0 a single term is exact.
pub fn taylor_order(t: Complex64, big_m: f64, d: u64, epsilon: f64) -> Result<usize> {
    if epsilon <= 0.0 || !epsilon.is_finite() {
        return Err(Error::InvalidInput(format!(
            "accuracy target must be positive and finite, got {epsilon}"
        )));
    }
    if d == 0 {
        return Err(Error::InvalidInput("need at least one root".into()));
    }
    let q = t.norm() / big_m;
    if q >= 1.0 || !q.is_finite() {
        return Err(Error::OutOfDisk(format!(
            "evaluation point has |t| = {} but the zero-free radius is {}",
            t.norm(),
            big_m
        )));
    }
    if t.norm() == 0.0 {
        return Ok(1);
    }
    let c = 1.0 / (1.0 - q);
    let eps_eff = epsilon / 2.0;
    let m = (c * (d as f64 / eps_eff).ln()).ceil() as i64;
    Ok(m.max(1) as usize)
}

/// Tail bound of the truncated log series: d q^(m+1) / ((m+1)(1-q)),
/// with q = |t| / big_m.
pub fn truncation_bound(d: u64, q: f64, m: usize) -> f64 {
    d as f64 * q.powi(m as i32 + 1) / ((m as f64 + 1.0) * (1.0 - q))
}

/// Evaluate the truncated log series ln(a0) - sum_{j=1..m} p_j t^j / j
/// and exponentiate. Terms are summed in ascending j, fixed order, so runs
/// are bit-reproducible.
pub fn evaluate_truncated(a0: Complex64, p: &PowerSums, t: Complex64) -> Result<ApproxResult> {
    if a0.norm() == 0.0 {
        return Err(Error::InvalidInput(
            "constant term is zero; log evaluation undefined".into(),
        ));
    }
    let start = Instant::now();
    let mut log_value = a0.ln();
    let mut t_pow = Complex64::new(1.0, 0.0);
    for (j, &pj) in p.p.iter().enumerate() {
        t_pow *= t;
        log_value -= pj * t_pow / (j as f64 + 1.0);
    }
    Ok(ApproxResult {
        value: log_value.exp(),
        log_value,
        m: p.len(),
        epsilon: 0.0,
        elapsed: start.elapsed(),
    })
}

/// First m+1 coefficients of outer(inner(z)). The inner series must have no
/// constant term; only then does the prefix of the composition depend only
/// on the prefixes of the inputs.
pub fn compose_truncate(
    outer: &PolynomialPrefix,
    inner: &PolynomialPrefix,
    m: usize,
) -> Result<PolynomialPrefix> {
    if inner.coeff(0).norm() != 0.0 {
        return Err(Error::Contract(format!(
            "inner series has constant term {}; composition prefix would be wrong",
            inner.coeff(0)
        )));
    }
    let len = m + 1;
    // Horner over the outer coefficients, highest first.
    let top = outer.len().min(len).max(1);
    let mut acc = vec![Complex64::default(); 1];
    acc[0] = outer.coeff(top - 1);
    for k in (0..top - 1).rev() {
        acc = fft::mul_trunc(&acc, &inner.coeffs, len);
        acc[0] += outer.coeff(k);
    }
    acc.resize(len, Complex64::default());
    Ok(PolynomialPrefix::new(acc))
}

/// Multiplicative epsilon-closeness: moduli within a factor e^epsilon and
/// arguments within epsilon of each other.
pub fn approx_matches(xi: Complex64, q: Complex64, epsilon: f64) -> Result<bool> {
    if xi.norm() == 0.0 || q.norm() == 0.0 {
        return Err(Error::InvalidInput(
            "multiplicative comparison needs nonzero values".into(),
        ));
    }
    let ratio = q / xi;
    Ok(ratio.norm().ln().abs() <= epsilon && ratio.arg().abs() <= epsilon)
}
