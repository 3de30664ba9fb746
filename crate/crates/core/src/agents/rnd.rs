//! The random baseline: play the first action the state generates.

use crate::action::Action;
use crate::budget::Budget;
use crate::engine::Agent;
use crate::error::AgentError;
use crate::fm::ForwardModel;
use crate::rng::Rng64;
use crate::state::GameState;

pub struct RndAgent {
    rng: Rng64,
}

impl RndAgent {
    pub fn new(seed: u64) -> Self {
        RndAgent {
            rng: Rng64::new(seed),
        }
    }
}

impl Agent for RndAgent {
    fn act(
        &mut self,
        state: &GameState,
        player: usize,
        budget: &mut Budget,
    ) -> Result<Action, AgentError> {
        let mut fm = ForwardModel::new(budget);
        Ok(fm.random_action(state, player, self.rng.next_u64())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::content::ContentSet;
    use crate::params::GameParams;
    use crate::rules;
    use crate::state::new_game;

    #[test]
    fn one_unit_per_decision() {
        let state = new_game(&GameParams::default(), ContentSet::bundled(), 1).unwrap();
        let mut agent = RndAgent::new(5);
        let mut budget = Budget::new(1000);
        let action = agent.act(&state, 0, &mut budget).unwrap();
        assert_eq!(budget.used(), 1);
        assert!(rules::validate(&state, &action).is_ok());
    }

    #[test]
    fn same_seed_same_action() {
        let state = new_game(&GameParams::default(), ContentSet::bundled(), 1).unwrap();
        let a = RndAgent::new(5)
            .act(&state, 0, &mut Budget::new(10))
            .unwrap();
        let b = RndAgent::new(5)
            .act(&state, 0, &mut Budget::new(10))
            .unwrap();
        assert_eq!(a, b);
    }
}
