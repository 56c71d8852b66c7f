//! Outcomes of property checks and work budgets for exhaustive searches.

use std::fmt;

use crate::error::{Error, Result};

/// Result of checking a property: it holds, or it fails with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Fails(w) => Verdict::Fails(f(w)),
        }
    }
}

impl<W: fmt::Display> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(w) => write!(f, "fails: {w}"),
        }
    }
}

/// Upper limit on the estimated number of group operations a check may do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(u64);

impl Budget {
    pub const DEFAULT: u64 = 100_000_000;

    pub fn new(limit: u64) -> Budget {
        Budget(limit)
    }

    pub fn unlimited() -> Budget {
        Budget(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.0
    }

    /// Fails up front when `needed` exceeds the limit.
    pub fn charge(&self, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            Err(Error::BudgetExceeded { needed, budget: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget(Budget::DEFAULT)
    }
}
