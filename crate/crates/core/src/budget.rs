//! Cooperative cancellation and step budgets for the enumerations.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

/// Shared token checked by long-running enumerations.
///
/// A budget can be cancelled from another thread, and optionally caps the
/// number of steps charged against it. Cloning is not provided; share it by
/// reference.
#[derive(Debug, Default)]
pub struct Budget {
    cancelled: AtomicBool,
    used: AtomicU64,
    limit: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum Interrupted {
    #[error("cancelled")]
    Cancelled,
    #[error("step budget of {0} exhausted")]
    Exhausted(u64),
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_limit(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            ..Self::default()
        }
    }

    pub fn cancel(&self) {
        self.cancelled.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.cancelled.load(Ordering::Relaxed)
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Charges `steps` and reports whether the caller may continue.
    pub fn charge(&self, steps: u64) -> Result<(), Interrupted> {
        if self.is_cancelled() {
            return Err(Interrupted::Cancelled);
        }
        let total = self.used.fetch_add(steps, Ordering::Relaxed) + steps;
        match self.limit {
            Some(limit) if total > limit => Err(Interrupted::Exhausted(limit)),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limit_and_cancel() {
        let b = Budget::with_limit(3);
        assert!(b.charge(2).is_ok());
        assert_eq!(b.charge(2), Err(Interrupted::Exhausted(3)));
        let c = Budget::unlimited();
        c.cancel();
        assert_eq!(c.charge(1), Err(Interrupted::Cancelled));
    }
}
