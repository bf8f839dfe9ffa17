//! Work accounting for the combinatorial stages.
//!
//! Pattern enumeration and subset decomposition can blow up combinatorially
//! on adversarial inputs long before they allocate anything interesting, so
//! the expensive loops charge abstract work units against a shared budget and
//! abort with an actionable error instead of hanging.

use crate::error::{Error, Result};

/// Sized so that a dense 16-vertex host at truncation order 16 fits with
/// several times headroom; one unit is roughly one arithmetic operation in
/// the subset recursion.
pub const DEFAULT_RESOURCE_CAP: u64 = 50_000_000_000;

#[derive(Debug, Clone)]
pub struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    pub fn new(cap: u64) -> Self {
        Budget { used: 0, cap }
    }

    pub fn standard() -> Self {
        Budget::new(DEFAULT_RESOURCE_CAP)
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Charges `amount` units; `stage` names the loop for the error message.
    pub fn charge(&mut self, amount: u64, stage: &str) -> Result<()> {
        self.used = self.used.saturating_add(amount);
        if self.used > self.cap {
            return Err(Error::ResourceLimit(format!(
                "{stage} exceeded the work cap of {} units; \
                 lower the truncation order or raise --resource-cap",
                self.cap
            )));
        }
        Ok(())
    }
}
