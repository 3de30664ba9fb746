//! Branching-mutation rolling horizon: evolve explicit action sequences,
//! re-rolling the state through the kept prefix and re-sampling everything
//! after the branch point.

use crate::action::Action;
use crate::budget::Budget;
use crate::engine::Agent;
use crate::error::{AgentError, BudgetExpired, FmError, Stalemate};
use crate::fm::ForwardModel;
use crate::rng::Rng64;
use crate::state::GameState;
use serde::{Deserialize, Serialize};

use super::{mutation_point, opponent_round, prestige_heuristic, CommonConfig, Heuristic};

/// Hyper-parameters of the branching-mutation rolling-horizon agent.
/// Defaults are the tuned values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BmrhConfig {
    /// Sequence length.
    pub l: usize,
    /// Maximum sequences evaluated per decision.
    pub n: usize,
    /// Warm-start each decision from the previous best, shifted by one.
    pub usb: bool,
    /// One branch point per candidate; otherwise extra branch points are
    /// drawn with probability 1/2 each.
    pub mo: bool,
    /// Branch-point distribution: 0 uniform, 1 exponential decay, 2 gaussian.
    pub ms: u8,
    /// Decay parameter for ms=1.
    pub dcy: f64,
    /// Gaussian mean as a fraction of the sequence length, for ms=2.
    pub mu: f64,
    /// Gaussian standard deviation in genes, for ms=2.
    pub sigma: f64,
}

impl Default for BmrhConfig {
    fn default() -> Self {
        BmrhConfig {
            l: 2,
            n: 200,
            usb: true,
            mo: true,
            ms: 1,
            dcy: 0.8,
            mu: 0.1,
            sigma: 0.5,
        }
    }
}

pub struct BmrhAgent {
    cfg: BmrhConfig,
    common: CommonConfig,
    rng: Rng64,
    heuristic: Heuristic,
    shift: Option<Vec<Action>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stop {
    /// Rolled the full horizon (or the game ended en route).
    Done,
    /// The budget died mid-roll; the partial roll is not a fair sample.
    Budget,
    /// No legal action at the first step of the roll.
    RootStalemate,
}

struct Roll {
    actions: Vec<Action>,
    value: f64,
    stop: Stop,
}

impl BmrhAgent {
    pub fn new(cfg: BmrhConfig, common: CommonConfig, seed: u64) -> Self {
        BmrhAgent {
            cfg,
            common,
            rng: Rng64::new(seed),
            heuristic: prestige_heuristic,
            shift: None,
        }
    }

    /// Roll a candidate: replay `prefix` (substituting a fresh random action
    /// wherever a kept action has gone stale), then sample fresh actions up
    /// to the horizon. Opponents move between the planner's actions
    /// according to the opponent model. A stalemate truncates the roll and
    /// the state is evaluated as-is.
    fn roll(
        &mut self,
        root: &GameState,
        player: usize,
        fm: &mut ForwardModel,
        prefix: &[Action],
        base: f64,
    ) -> Roll {
        let horizon = self.cfg.l.max(1);
        let mut sim = root.clone();
        let mut actions = Vec::with_capacity(horizon);
        let mut stop = Stop::Done;

        'roll: for i in 0..horizon {
            if sim.game_over() || sim.current_player != player {
                break;
            }
            let kept = prefix
                .get(i)
                .and_then(|a| crate::rag::repair_action(&sim, a, &mut self.rng));
            let action = match kept {
                Some(a) => match fm.apply(&mut sim, &a) {
                    Ok(()) => a,
                    Err(FmError::Budget(_)) => {
                        stop = Stop::Budget;
                        break 'roll;
                    }
                    Err(_) => {
                        // stale prefix action: substitute a fresh one
                        match self.sample_and_apply(&mut sim, player, fm) {
                            Ok(a) => a,
                            Err(s) => {
                                stop = stop_for(s, i);
                                break 'roll;
                            }
                        }
                    }
                },
                None => match self.sample_and_apply(&mut sim, player, fm) {
                    Ok(a) => a,
                    Err(s) => {
                        stop = stop_for(s, i);
                        break 'roll;
                    }
                },
            };
            actions.push(action);
            opponent_round(
                &mut sim,
                player,
                &self.common,
                fm,
                &mut self.rng,
                self.heuristic,
            );
        }

        Roll {
            actions,
            value: (self.heuristic)(&sim, player) - base,
            stop,
        }
    }

    fn sample_and_apply(
        &mut self,
        sim: &mut GameState,
        player: usize,
        fm: &mut ForwardModel,
    ) -> Result<Action, Stop> {
        let action = match fm.random_action(sim, player, self.rng.next_u64()) {
            Ok(a) => a,
            Err(FmError::Stalemate(_)) => return Err(Stop::RootStalemate),
            Err(_) => return Err(Stop::Budget),
        };
        match fm.apply(sim, &action) {
            Ok(()) => Ok(action),
            Err(FmError::Budget(_)) => Err(Stop::Budget),
            Err(e) => unreachable!("generated action must be legal: {e}"),
        }
    }

    fn branch_point(&mut self, horizon: usize) -> usize {
        let cfg = self.cfg;
        let mut point = mutation_point(cfg.ms, horizon, cfg.dcy, cfg.mu, cfg.sigma, &mut self.rng);
        if !cfg.mo {
            // repeated independent branchings collapse to re-rolling from the
            // earliest point drawn
            while self.rng.chance(0.5) {
                point = point
                    .min(mutation_point(cfg.ms, horizon, cfg.dcy, cfg.mu, cfg.sigma, &mut self.rng));
            }
        }
        point
    }
}

/// A mid-roll stalemate is an ordinary truncation; only a stalemate on the
/// very first action means the player has no move.
fn stop_for(stop: Stop, position: usize) -> Stop {
    match stop {
        Stop::RootStalemate if position > 0 => Stop::Done,
        other => other,
    }
}

impl Agent for BmrhAgent {
    fn act(
        &mut self,
        state: &GameState,
        player: usize,
        budget: &mut Budget,
    ) -> Result<Action, AgentError> {
        let mut fm = ForwardModel::new(budget);
        let base = (self.heuristic)(state, player);
        let horizon = self.cfg.l.max(1);
        let max_evals = self.cfg.n.max(1);

        let warm_start: Vec<Action> = match (self.cfg.usb, self.shift.take()) {
            (true, Some(prev)) if prev.len() > 1 => prev[1..].to_vec(),
            _ => Vec::new(),
        };
        let mut best = self.roll(state, player, &mut fm, &warm_start, base);
        if best.actions.is_empty() {
            return Err(match best.stop {
                Stop::RootStalemate => AgentError::Stalemate(Stalemate { player }),
                _ => AgentError::Budget(BudgetExpired),
            });
        }

        let mut evals = 1usize;
        while evals < max_evals && !fm.budget().is_exhausted() {
            let point = self.branch_point(horizon);
            let keep = point.min(best.actions.len());
            let prefix: Vec<Action> = best.actions[..keep].to_vec();
            let candidate = self.roll(state, player, &mut fm, &prefix, base);
            if candidate.stop == Stop::Budget {
                break;
            }
            evals += 1;
            if !candidate.actions.is_empty() && candidate.value >= best.value {
                best = candidate;
            }
        }

        if self.cfg.usb {
            self.shift = Some(best.actions.clone());
        }
        Ok(best.actions[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::content::ContentSet;
    use crate::params::GameParams;
    use crate::rules;
    use crate::state::new_game;

    fn fresh(seed: u64) -> GameState {
        new_game(&GameParams::default(), ContentSet::bundled(), seed).unwrap()
    }

    #[test]
    fn returns_a_legal_action() {
        let state = fresh(21);
        let mut agent = BmrhAgent::new(BmrhConfig::default(), CommonConfig::default(), 5);
        let mut budget = Budget::new(1000);
        let action = agent.act(&state, 0, &mut budget).unwrap();
        assert!(rules::validate(&state, &action).is_ok());
        assert!(budget.used() > 0);
    }

    #[test]
    fn single_gene_degenerates_to_resampling() {
        let state = fresh(22);
        let cfg = BmrhConfig {
            l: 1,
            n: 50,
            ..BmrhConfig::default()
        };
        let mut agent = BmrhAgent::new(cfg, CommonConfig::default(), 7);
        let mut budget = Budget::new(1000);
        let action = agent.act(&state, 0, &mut budget).unwrap();
        assert!(rules::validate(&state, &action).is_ok());
    }

    #[test]
    fn deterministic_given_seed() {
        let state = fresh(23);
        let mk = || BmrhAgent::new(BmrhConfig::default(), CommonConfig::default(), 11);
        let a = mk().act(&state, 0, &mut Budget::new(800)).unwrap();
        let b = mk().act(&state, 0, &mut Budget::new(800)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn respects_budget_exactly() {
        let state = fresh(24);
        for cap in [2u64, 5, 17, 100] {
            let mut agent = BmrhAgent::new(BmrhConfig::default(), CommonConfig::default(), 3);
            let mut budget = Budget::new(cap);
            let _ = agent.act(&state, 0, &mut budget);
            assert!(budget.used() <= cap);
        }
    }

    #[test]
    fn opponent_model_rollouts_work() {
        let state = fresh(25);
        for om in [1u8, 2] {
            let common = CommonConfig { om, omsb: 0.02 };
            let mut agent = BmrhAgent::new(BmrhConfig::default(), common, 9);
            let mut budget = Budget::new(1000);
            let action = agent.act(&state, 0, &mut budget).unwrap();
            assert!(rules::validate(&state, &action).is_ok());
        }
    }
}
