//! Game-playing agents and their shared machinery.

mod bmrh;
mod mcts;
mod mutation;
mod osla;
mod rnd;
mod spec;
mod srh;

pub use bmrh::{BmrhAgent, BmrhConfig};
pub use mcts::{ucb_value, MctsAgent, MctsConfig, MctsNode, MctsTree};
pub use mutation::mutation_point;
pub use osla::OslaAgent;
pub use rnd::RndAgent;
pub use spec::AgentSpec;
pub use srh::{SrhAgent, SrhConfig};

use crate::action::Action;
use crate::fm::ForwardModel;
use crate::rng::Rng64;
use crate::rules;
use crate::state::{advance_turn, GameState};
use serde::{Deserialize, Serialize};

/// State evaluation from one player's perspective.
pub type Heuristic = fn(&GameState, usize) -> f64;

/// The default heuristic: the player's own prestige points.
pub fn prestige_heuristic(state: &GameState, player: usize) -> f64 {
    state.players[player].prestige as f64
}

/// Options shared by all the search agents: the opponent model and the
/// budget share it may use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CommonConfig {
    /// Opponent model: 0 do-nothing, 1 random, 2 one-step look ahead.
    pub om: u8,
    /// Fraction of the agent's budget forked per opponent decision.
    pub omsb: f64,
}

impl Default for CommonConfig {
    fn default() -> Self {
        CommonConfig { om: 0, omsb: 0.05 }
    }
}

/// Let one simulated opponent take a turn according to the opponent model.
///
/// The model's decision runs on a budget forked by `omsb`; unspent units
/// flow back on release. A do-nothing model (om=0) forks nothing, touches
/// nothing and returns `None`; the caller advances the turn itself. Any
/// model failure (stalemate, starved fork) also falls back to `None`.
pub fn opponent_step(
    state: &mut GameState,
    opponent: usize,
    common: &CommonConfig,
    fm: &mut ForwardModel,
    rng: &mut Rng64,
    heuristic: Heuristic,
) -> Option<Action> {
    if common.om == 0 {
        return None;
    }
    let mut child = fm.budget_mut().fork(common.omsb);
    let decision = match common.om {
        1 => {
            let mut child_fm = ForwardModel::new(&mut child);
            child_fm.random_action(state, opponent, rng.next_u64()).ok()
        }
        _ => osla::osla_decide(state, opponent, &mut child, rng, heuristic).ok(),
    };
    fm.budget_mut().release(child);
    let action = decision?;
    match rules::apply(state, &action) {
        Ok(()) => Some(action),
        Err(_) => None,
    }
}

/// Run every opponent between the planner's simulated actions: each seat
/// takes one opponent-model turn until play returns to the planner (or the
/// game ends).
pub fn opponent_round(
    state: &mut GameState,
    planner: usize,
    common: &CommonConfig,
    fm: &mut ForwardModel,
    rng: &mut Rng64,
    heuristic: Heuristic,
) {
    while state.current_player != planner && !state.game_over() {
        let seat = state.current_player;
        if opponent_step(state, seat, common, fm, rng, heuristic).is_none() {
            advance_turn(state);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::content::ContentSet;
    use crate::params::GameParams;
    use crate::state::new_game;

    fn fresh() -> GameState {
        new_game(&GameParams::default(), ContentSet::bundled(), 42).unwrap()
    }

    #[test]
    fn do_nothing_model_changes_nothing() {
        let mut state = fresh();
        let snapshot = state.clone();
        let mut budget = Budget::new(1000);
        let mut fm = ForwardModel::new(&mut budget);
        let mut rng = Rng64::new(1);
        let common = CommonConfig { om: 0, omsb: 0.05 };
        let acted = opponent_step(&mut state, 1, &common, &mut fm, &mut rng, prestige_heuristic);
        assert!(acted.is_none());
        assert_eq!(state, snapshot);
        assert_eq!(budget.used(), 0, "om=0 forks no budget");
    }

    #[test]
    fn random_model_costs_one_unit() {
        let mut state = fresh();
        advance_turn(&mut state); // opponent 1 to move
        let mut budget = Budget::new(1000);
        let mut fm = ForwardModel::new(&mut budget);
        let mut rng = Rng64::new(1);
        let common = CommonConfig { om: 1, omsb: 0.05 };
        let acted = opponent_step(&mut state, 1, &common, &mut fm, &mut rng, prestige_heuristic);
        assert!(acted.is_some());
        assert_eq!(budget.used(), 1);
        assert_eq!(state.current_player, 2, "opponent's action advanced the turn");
    }

    #[test]
    fn osla_model_spends_at_most_its_share() {
        let mut state = fresh();
        advance_turn(&mut state);
        let mut budget = Budget::new(1000);
        let mut fm = ForwardModel::new(&mut budget);
        let mut rng = Rng64::new(2);
        let common = CommonConfig { om: 2, omsb: 0.05 };
        // the model's pick may or may not be applicable to the live state
        // (no-op either way); its spend is capped by the forked share
        let snapshot = state.clone();
        let acted = opponent_step(&mut state, 1, &common, &mut fm, &mut rng, prestige_heuristic);
        assert!(budget.used() <= 50, "used {}", budget.used());
        if acted.is_none() {
            assert_eq!(state, snapshot);
        } else {
            assert_eq!(state.current_player, 2);
        }
    }

    #[test]
    fn opponent_round_returns_play_to_planner() {
        let mut state = fresh();
        advance_turn(&mut state);
        let mut budget = Budget::new(1000);
        let mut fm = ForwardModel::new(&mut budget);
        let mut rng = Rng64::new(3);
        for om in [0u8, 1, 2] {
            let mut sim = state.clone();
            let common = CommonConfig { om, omsb: 0.02 };
            opponent_round(&mut sim, 0, &common, &mut fm, &mut rng, prestige_heuristic);
            assert_eq!(sim.current_player, 0);
            assert_eq!(sim.tick, state.tick + 3);
            if om == 0 {
                // do-nothing turns change nothing but the turn pointer
                assert_eq!(sim.table_tokens, state.table_tokens);
                assert_eq!(sim.players, state.players);
            }
        }
    }
}
