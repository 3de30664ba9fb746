//! Seeding rolling horizon: evolve vectors of 64-bit seeds that decode
//! deterministically into action sequences through the random generators,
//! so mutation happens offline, away from the forward model.

use crate::action::Action;
use crate::budget::Budget;
use crate::engine::Agent;
use crate::error::{AgentError, BudgetExpired, FmError, Stalemate};
use crate::fm::ForwardModel;
use crate::rng::Rng64;
use crate::state::GameState;
use serde::{Deserialize, Serialize};

use super::{opponent_round, prestige_heuristic, CommonConfig, Heuristic};

/// Hyper-parameters of the seeding rolling-horizon agent. Defaults are the
/// tuned values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SrhConfig {
    /// Sequence length (seeds per genome).
    pub l: usize,
    /// Maximum sequences evaluated per decision.
    pub n: usize,
    /// Warm-start from the previous best genome, shifted by one.
    pub usb: bool,
    /// Replace exactly one uniformly-chosen gene instead of `mr`-Bernoulli.
    pub mo: bool,
    /// Per-gene replacement probability when `mo` is off.
    pub mr: f64,
}

impl Default for SrhConfig {
    fn default() -> Self {
        SrhConfig {
            l: 2,
            n: 200,
            usb: true,
            mo: false,
            mr: 0.9,
        }
    }
}

pub struct SrhAgent {
    cfg: SrhConfig,
    common: CommonConfig,
    rng: Rng64,
    heuristic: Heuristic,
    shift: Option<Vec<u64>>,
}

struct Decoded {
    first_action: Option<Action>,
    value: f64,
    budget_died: bool,
    root_stalemate: bool,
}

impl SrhAgent {
    pub fn new(cfg: SrhConfig, common: CommonConfig, seed: u64) -> Self {
        SrhAgent {
            cfg,
            common,
            rng: Rng64::new(seed),
            heuristic: prestige_heuristic,
            shift: None,
        }
    }

    /// Feed each gene to the random-action generator on the rolled state.
    /// The same genome on the same state always decodes to the same
    /// sequence.
    fn decode(
        &mut self,
        root: &GameState,
        player: usize,
        fm: &mut ForwardModel,
        genome: &[u64],
        base: f64,
    ) -> Decoded {
        let mut sim = root.clone();
        let mut first_action = None;
        let mut budget_died = false;
        let mut root_stalemate = false;

        for (i, &gene) in genome.iter().enumerate() {
            if sim.game_over() || sim.current_player != player {
                break;
            }
            let action = match fm.random_action(&sim, player, gene) {
                Ok(a) => a,
                Err(FmError::Stalemate(_)) => {
                    root_stalemate = i == 0;
                    break;
                }
                Err(_) => {
                    budget_died = true;
                    break;
                }
            };
            match fm.apply(&mut sim, &action) {
                Ok(()) => {}
                Err(FmError::Budget(_)) => {
                    budget_died = true;
                    break;
                }
                Err(e) => unreachable!("generated action must be legal: {e}"),
            }
            if i == 0 {
                first_action = Some(action);
            }
            opponent_round(
                &mut sim,
                player,
                &self.common,
                fm,
                &mut self.rng,
                self.heuristic,
            );
        }

        Decoded {
            first_action,
            value: (self.heuristic)(&sim, player) - base,
            budget_died,
            root_stalemate,
        }
    }

    fn mutate(&mut self, genome: &[u64]) -> Vec<u64> {
        let mut child = genome.to_vec();
        if self.cfg.mo {
            let i = self.rng.index(child.len());
            child[i] = self.rng.next_u64();
        } else {
            for gene in child.iter_mut() {
                if self.rng.chance(self.cfg.mr) {
                    *gene = self.rng.next_u64();
                }
            }
        }
        child
    }
}

impl Agent for SrhAgent {
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

        let mut genome: Vec<u64> = match (self.cfg.usb, self.shift.take()) {
            (true, Some(prev)) if prev.len() == horizon && horizon > 1 => {
                let mut g = prev[1..].to_vec();
                g.push(self.rng.next_u64());
                g
            }
            _ => (0..horizon).map(|_| self.rng.next_u64()).collect(),
        };

        let mut best = self.decode(state, player, &mut fm, &genome, base);
        if best.first_action.is_none() {
            return Err(if best.root_stalemate {
                AgentError::Stalemate(Stalemate { player })
            } else {
                AgentError::Budget(BudgetExpired)
            });
        }

        let mut evals = 1usize;
        while evals < max_evals && !fm.budget().is_exhausted() {
            let child = self.mutate(&genome);
            let decoded = self.decode(state, player, &mut fm, &child, base);
            if decoded.budget_died {
                break;
            }
            evals += 1;
            if decoded.first_action.is_some() && decoded.value >= best.value {
                best = decoded;
                genome = child;
            }
        }

        if self.cfg.usb {
            self.shift = Some(genome.clone());
        }
        Ok(best.first_action.expect("checked above"))
    }
}
