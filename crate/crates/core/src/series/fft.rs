//! Quasi-linear series arithmetic.
//!
//! The claw-free reduction can push the truncation order into the tens of
//! thousands, where the quadratic Newton recurrences stall. This module
//! provides truncated multiplication, series inversion, and power sums via
//! the logarithmic derivative, all in O(m log m). Small operands fall back
//! to schoolbook multiplication, which is both faster at that scale and
//! free of transform rounding.

use std::cell::RefCell;

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::{PolynomialPrefix, PowerSums};

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

const NAIVE_WORK_LIMIT: usize = 64 * 1024;

/// First out_len coefficients of a*b, zero-padded to exactly out_len.
pub(crate) fn mul_trunc(a: &[Complex64], b: &[Complex64], out_len: usize) -> Vec<Complex64> {
    let a = &a[..a.len().min(out_len)];
    let b = &b[..b.len().min(out_len)];
    let mut out = vec![Complex64::default(); out_len];
    if a.is_empty() || b.is_empty() || out_len == 0 {
        return out;
    }
    let full = a.len() + b.len() - 1;
    let kept = full.min(out_len);
    if a.len().min(b.len()) <= 16 || a.len() * b.len() <= NAIVE_WORK_LIMIT {
        for (i, &ai) in a.iter().enumerate() {
            if i >= kept {
                break;
            }
            for (j, &bj) in b.iter().enumerate() {
                if i + j >= kept {
                    break;
                }
                out[i + j] += ai * bj;
            }
        }
        return out;
    }
    let size = full.next_power_of_two();
    let mut fa = vec![Complex64::default(); size];
    let mut fb = vec![Complex64::default(); size];
    fa[..a.len()].copy_from_slice(a);
    fb[..b.len()].copy_from_slice(b);
    PLANNER.with(|planner| {
        let mut planner = planner.borrow_mut();
        let fwd = planner.plan_fft_forward(size);
        let inv = planner.plan_fft_inverse(size);
        fwd.process(&mut fa);
        fwd.process(&mut fb);
        for (x, y) in fa.iter_mut().zip(&fb) {
            *x *= y;
        }
        inv.process(&mut fa);
    });
    let scale = 1.0 / size as f64;
    for i in 0..kept {
        out[i] = fa[i] * scale;
    }
    out
}

/// First len coefficients of 1/f, by Newton iteration v <- v(2 - fv).
/// Requires a nonzero constant term.
pub(crate) fn inv_trunc(f: &[Complex64], len: usize) -> Vec<Complex64> {
    assert!(!f.is_empty() && f[0].norm() != 0.0, "series not invertible");
    if len == 0 {
        return Vec::new();
    }
    let mut v = vec![Complex64::new(1.0, 0.0) / f[0]];
    while v.len() < len {
        let target = (v.len() * 2).min(len);
        let fv = mul_trunc(f, &v, target);
        let mut corr = vec![Complex64::default(); target];
        corr[0] = Complex64::new(2.0, 0.0) - fv[0];
        for i in 1..target {
            corr[i] = -fv[i];
        }
        v = mul_trunc(&v, &corr, target);
    }
    v
}

/// Power sums p_1..p_m of the roots of f, read off the logarithmic
/// derivative: f'/f = -(p_1 + p_2 z + p_3 z^2 + ...). Requires f(0) = 1.
pub(crate) fn power_sums_via_log_derivative(e: &PolynomialPrefix, m: usize) -> PowerSums {
    debug_assert!((e.coeff(0) - Complex64::new(1.0, 0.0)).norm() < 1e-9);
    if m == 0 {
        return PowerSums::zeros(0);
    }
    let f: Vec<Complex64> = (0..=m).map(|i| e.coeff(i)).collect();
    let df: Vec<Complex64> = (1..=m).map(|i| e.coeff(i) * i as f64).collect();
    let inv = inv_trunc(&f, m);
    let h = mul_trunc(&df, &inv, m);
    PowerSums::new(h.into_iter().map(|z| -z).collect())
}
