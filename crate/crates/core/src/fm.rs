//! The budget-metered forward model handed to agents.
//!
//! Every simulated action application and every random-action generation on
//! a simulated state costs exactly one budget unit. Once the budget is
//! spent, every further call fails with [`BudgetExpired`] before doing any
//! work.

use crate::action::{Action, ActionKind};
use crate::budget::Budget;
use crate::error::{BudgetExpired, FmError};
use crate::rag;
use crate::rules;
use crate::state::GameState;

pub struct ForwardModel<'b> {
    budget: &'b mut Budget,
}

impl<'b> ForwardModel<'b> {
    pub fn new(budget: &'b mut Budget) -> Self {
        ForwardModel { budget }
    }

    pub fn budget(&self) -> &Budget {
        self.budget
    }

    pub fn budget_mut(&mut self) -> &mut Budget {
        self.budget
    }

    pub fn remaining(&self) -> u64 {
        self.budget.remaining()
    }

    /// Apply an action to a simulated state. Costs 1 unit.
    pub fn apply(&mut self, state: &mut GameState, action: &Action) -> Result<(), FmError> {
        self.budget.try_spend(1)?;
        rules::apply(state, action)?;
        Ok(())
    }

    /// Sample a legal action of any kind. Costs 1 unit.
    pub fn random_action(
        &mut self,
        state: &GameState,
        player: usize,
        seed: u64,
    ) -> Result<Action, FmError> {
        self.budget.try_spend(1)?;
        Ok(rag::random_action(state, player, seed)?)
    }

    /// Sample a legal action of one kind. Costs 1 unit.
    pub fn generate(
        &mut self,
        kind: ActionKind,
        state: &GameState,
        player: usize,
        seed: u64,
    ) -> Result<Option<Action>, BudgetExpired> {
        self.budget.try_spend(1)?;
        Ok(rag::generate(kind, state, player, seed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::content::ContentSet;
    use crate::error::FmError;
    use crate::params::GameParams;
    use crate::state::new_game;

    #[test]
    fn calls_cost_one_unit_and_expire() {
        let state = new_game(&GameParams::default(), ContentSet::bundled(), 1).unwrap();
        let mut budget = Budget::new(3);
        let mut fm = ForwardModel::new(&mut budget);

        let action = fm.random_action(&state, 0, 11).unwrap();
        assert_eq!(fm.budget().used(), 1);

        let mut copy = state.clone();
        fm.apply(&mut copy, &action).unwrap();
        assert_eq!(fm.budget().used(), 2);

        fm.generate(ActionKind::PickSame, &state, 0, 5).unwrap();
        assert_eq!(fm.budget().used(), 3);

        assert!(matches!(
            fm.random_action(&state, 0, 6),
            Err(FmError::Budget(_))
        ));
        let mut copy2 = state.clone();
        assert!(matches!(
            fm.apply(&mut copy2, &action),
            Err(FmError::Budget(_))
        ));
        assert_eq!(copy2, state, "expired apply must not touch the state");
        assert_eq!(fm.budget().used(), 3, "no silent over-spends");
    }
}
