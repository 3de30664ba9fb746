//! One-step look ahead: walk a copy of the state with random actions until
//! the budget runs out, keeping the single action whose immediate heuristic
//! gain was best.

use crate::action::Action;
use crate::budget::Budget;
use crate::engine::Agent;
use crate::error::{AgentError, BudgetExpired, FmError};
use crate::fm::ForwardModel;
use crate::rng::Rng64;
use crate::state::GameState;

use super::{prestige_heuristic, Heuristic};

pub struct OslaAgent {
    rng: Rng64,
    heuristic: Heuristic,
}

impl OslaAgent {
    pub fn new(seed: u64) -> Self {
        OslaAgent {
            rng: Rng64::new(seed),
            heuristic: prestige_heuristic,
        }
    }

    pub fn with_heuristic(seed: u64, heuristic: Heuristic) -> Self {
        OslaAgent {
            rng: Rng64::new(seed),
            heuristic,
        }
    }
}

impl Agent for OslaAgent {
    fn act(
        &mut self,
        state: &GameState,
        player: usize,
        budget: &mut Budget,
    ) -> Result<Action, AgentError> {
        osla_decide(state, player, budget, &mut self.rng, self.heuristic)
    }
}

/// The decision loop, shared with the om=2 opponent model.
///
/// A single copy of the state is rolled forward with random actions for
/// whoever is to move; the player's own sampled actions are scored by their
/// immediate heuristic delta and the best one is returned, first hit
/// winning ties. A finished or dead-ended walk restarts from a fresh copy.
/// Every step costs one unit to sample and one to apply.
pub(crate) fn osla_decide(
    state: &GameState,
    player: usize,
    budget: &mut Budget,
    rng: &mut Rng64,
    heuristic: Heuristic,
) -> Result<Action, AgentError> {
    let mut fm = ForwardModel::new(budget);
    let base = heuristic(state, player);
    let mut walk = state.clone();
    let mut at_root = true;
    let mut best: Option<(Action, f64)> = None;

    loop {
        let action = match fm.random_action(&walk, player, rng.next_u64()) {
            Ok(a) => a,
            Err(FmError::Stalemate(s)) => {
                if at_root {
                    return best.map(|(a, _)| a).ok_or(AgentError::Stalemate(s));
                }
                // the walk has dead-ended; start over from the root
                walk = state.clone();
                at_root = true;
                continue;
            }
            Err(_) => break,
        };
        if fm.apply(&mut walk, &action).is_err() {
            // the budget died between sample and apply; the sampled action
            // is all we have left to offer
            if best.is_none() {
                best = Some((action, f64::NEG_INFINITY));
            }
            break;
        }
        let value = heuristic(&walk, player) - base;
        if best.map_or(true, |(_, v)| value > v) {
            best = Some((action, value));
        }
        at_root = false;
        // the other seats pass while this player looks ahead
        while walk.current_player != player {
            crate::state::advance_turn(&mut walk);
        }
    }

    best.map(|(a, _)| a)
        .ok_or(AgentError::Budget(BudgetExpired))
}
