//! The turn loop: budgets, determinized observations, end conditions.

use crate::action::Action;
use crate::budget::Budget;
use crate::content::ContentSet;
use crate::error::{AgentError, SetupError};
use crate::params::GameParams;
use crate::rag;
use crate::rng::Rng64;
use crate::rules;
use crate::state::{copy_for_player, new_game, GameState};

/// A game-playing agent. Each turn it receives a determinized copy of the
/// state (a fresh hidden-information sample) and a fresh budget; it must
/// return an action for `player` without mutating the copy.
pub trait Agent: Send {
    fn act(
        &mut self,
        state: &GameState,
        player: usize,
        budget: &mut Budget,
    ) -> Result<Action, AgentError>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Someone reached the prestige goal and the round was completed.
    Normal,
    /// The player to move had no legal action.
    Stalemate,
    /// The tick limit cut the game off; winners taken from standings.
    Timeout,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GameResult {
    /// Winning player indices (empty exactly for stalemates).
    pub winners: Vec<usize>,
    pub prestige: Vec<u32>,
    /// Purchased-card counts, the tie-break statistic.
    pub card_counts: Vec<usize>,
    pub ticks: u32,
    pub outcome: Outcome,
    /// How often an agent's reply had to be replaced by a random action
    /// (illegal move, error, or any other failure). Diagnostic only.
    pub replaced_actions: u32,
}

/// Progress report for [`is_game_over`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameStatus {
    Continue,
    /// The prestige goal has been reached; the round is being completed.
    FinalRound,
    Over,
}

/// Check (and record) the end-game state: the final round starts when any
/// player reaches the prestige goal, and the game is over once the turn
/// pointer then wraps back to player 0, so every player gets the same
/// number of turns.
pub fn is_game_over(state: &mut GameState) -> GameStatus {
    state.refresh_final_round();
    if state.game_over() {
        GameStatus::Over
    } else if state.final_round {
        GameStatus::FinalRound
    } else {
        GameStatus::Continue
    }
}

/// Winners under the standing rules: highest prestige, ties broken by fewer
/// purchased cards, residual ties shared.
pub fn winners_by_standings(state: &GameState) -> Vec<usize> {
    let best_prestige = state.players.iter().map(|p| p.prestige).max().unwrap();
    let fewest_cards = state
        .players
        .iter()
        .filter(|p| p.prestige == best_prestige)
        .map(|p| p.purchased.len())
        .min()
        .unwrap();
    state
        .players
        .iter()
        .enumerate()
        .filter(|(_, p)| p.prestige == best_prestige && p.purchased.len() == fewest_cards)
        .map(|(i, _)| i)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameConfig {
    pub max_ticks: u32,
    pub per_tick_budget: u64,
}

impl Default for GameConfig {
    fn default() -> Self {
        GameConfig {
            max_ticks: 300,
            per_tick_budget: 1000,
        }
    }
}

/// Play one full game. Each turn the current agent sees a fresh
/// determinization and a fresh budget; an illegal or failed reply is
/// replaced by an engine-generated random action so experiments keep
/// running (counted in `replaced_actions`).
pub fn run_game(
    params: &GameParams,
    content: &ContentSet,
    agents: &mut [Box<dyn Agent>],
    seed: u64,
    config: &GameConfig,
) -> Result<GameResult, SetupError> {
    if agents.len() != params.players {
        return Err(SetupError::InvalidParams(format!(
            "{} agents for a {}-player game",
            agents.len(),
            params.players
        )));
    }
    let mut state = new_game(params, content, seed)?;
    // engine-side stream, distinct from the shuffle stream
    let mut master = Rng64::new(seed ^ 0xE9_5D_4F_00_C0_FF_EE_01);
    let mut replaced = 0u32;

    loop {
        if is_game_over(&mut state) == GameStatus::Over {
            return Ok(finish(&state, Outcome::Normal, replaced, &state_winners(&state)));
        }
        if state.tick >= config.max_ticks {
            return Ok(finish(&state, Outcome::Timeout, replaced, &state_winners(&state)));
        }

        let player = state.current_player;
        let observation = copy_for_player(&state, player, master.next_u64());
        let mut budget = Budget::new(config.per_tick_budget);
        let reply = agents[player].act(&observation, player, &mut budget);

        let action = match reply {
            Ok(a) if a.player == player && rules::validate(&state, &a).is_ok() => a,
            other => {
                // Any failure, including a claimed stalemate, falls back to an
                // engine-generated random action on the real state; only the
                // engine's own generators can prove a stalemate.
                if !matches!(other, Err(AgentError::Stalemate(_))) {
                    replaced += 1;
                }
                match rag::random_action(&state, player, master.next_u64()) {
                    Ok(a) => {
                        if matches!(other, Err(AgentError::Stalemate(_))) {
                            replaced += 1;
                        }
                        a
                    }
                    Err(_) => {
                        return Ok(finish(&state, Outcome::Stalemate, replaced, &[]));
                    }
                }
            }
        };
        rules::apply(&mut state, &action).expect("validated or engine-generated action");
    }
}

fn state_winners(state: &GameState) -> Vec<usize> {
    winners_by_standings(state)
}

fn finish(state: &GameState, outcome: Outcome, replaced: u32, winners: &[usize]) -> GameResult {
    GameResult {
        winners: winners.to_vec(),
        prestige: state.players.iter().map(|p| p.prestige).collect(),
        card_counts: state.players.iter().map(|p| p.purchased.len()).collect(),
        ticks: state.tick,
        outcome,
        replaced_actions: replaced,
    }
}
