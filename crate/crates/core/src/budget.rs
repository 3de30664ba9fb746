//! Forward-model call budgets with fractional forking for opponent models.

use crate::error::BudgetExpired;

/// A meter of forward-model work units. One unit is one simulated action
/// application or one random-action generation on a simulated state.
///
/// A fraction of the budget can be forked off for an opponent model; on
/// release the child's unspent units flow back, so the parent is depleted
/// only by what the child actually used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    capacity: u64,
    used: u64,
}

impl Budget {
    pub fn new(capacity: u64) -> Self {
        Budget { capacity, used: 0 }
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.capacity - self.used
    }

    pub fn is_exhausted(&self) -> bool {
        self.used >= self.capacity
    }

    /// Consume `units`, or fail without consuming anything.
    pub fn try_spend(&mut self, units: u64) -> Result<(), BudgetExpired> {
        if self.used + units > self.capacity {
            return Err(BudgetExpired);
        }
        self.used += units;
        Ok(())
    }

    /// Fork off `ceil(fraction * capacity)` units as a child meter, capped at
    /// what is still available. The units count as spent until the child is
    /// [`released`](Budget::release).
    pub fn fork(&mut self, fraction: f64) -> Budget {
        debug_assert!(fraction > 0.0 && fraction <= 1.0);
        // the small slack keeps exact products exact (0.05 * 1000 -> 50)
        let want = (self.capacity as f64 * fraction - 1e-9).ceil().max(0.0) as u64;
        let grant = want.min(self.remaining());
        self.used += grant;
        Budget::new(grant)
    }

    /// Return a forked child, refunding its unspent units.
    pub fn release(&mut self, child: Budget) {
        let refund = child.remaining();
        debug_assert!(refund <= self.used);
        self.used -= refund;
    }
}
