//! The supported partition functions and their evaluation pipelines.
//!
//! Each model supplies pattern weights to the engine, a zero-free disk for
//! its evaluation point, input normalization, and the final rescaling.

pub mod edge_coloring;
pub mod spin;

use crate::series::{ApproxResult, PowerSums};

/// Largest disk radius with guaranteed root-free independence polynomials
/// on graphs of maximum degree delta: (delta-1)^(delta-1) / delta^delta.
/// Degree at most one means roots exactly at -1, radius 1.
pub fn lambda_star(delta: u32) -> f64 {
    if delta <= 1 {
        return 1.0;
    }
    let d = delta as f64;
    (d - 1.0).powi(delta as i32 - 1) / d.powi(delta as i32)
}

/// Caller-tunable knobs shared by all evaluation pipelines.
#[derive(Debug, Clone)]
pub struct EvalOptions {
    /// Multiplicative accuracy target.
    pub epsilon: f64,
    /// Assumed zero-free margin beyond |z| = 1 for the spin and
    /// edge-coloring series; the guarantee is conditional on it.
    pub delta_margin: f64,
    /// Zero-exclusion constant K for the Tutte model; required when
    /// |1+w| > 1, where no default is known.
    pub tutte_radius: Option<f64>,
    /// Evaluate even when an entry-bound check fails; a warning is
    /// recorded and the accuracy guarantee lapses.
    pub override_region_check: bool,
    /// Work cap forwarded to the engine; None = default cap.
    pub resource_cap: Option<u64>,
}

impl EvalOptions {
    pub fn new(epsilon: f64) -> Self {
        EvalOptions {
            epsilon,
            delta_margin: 0.05,
            tutte_radius: None,
            override_region_check: false,
            resource_cap: None,
        }
    }
}

/// A finished approximation plus the intermediate data worth reporting.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub result: ApproxResult,
    pub power_sums: PowerSums,
    pub warnings: Vec<String>,
}
