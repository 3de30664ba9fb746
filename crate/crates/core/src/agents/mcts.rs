//! Monte-Carlo tree search over a sampled action space.
//!
//! The action space cannot be enumerated, so nodes are widened by sampling:
//! expansion draws `ps` actions and adds a child per unique new action, and
//! an already-expanded node is widened again with probability `ep`. Child
//! states are stored in the nodes; opponent-model moves are played once,
//! when the child is created.

use crate::action::Action;
use crate::budget::Budget;
use crate::engine::Agent;
use crate::error::{AgentError, BudgetExpired, FmError, Stalemate};
use crate::fm::ForwardModel;
use crate::rng::Rng64;
use crate::state::GameState;
use serde::{Deserialize, Serialize};

use super::{opponent_round, prestige_heuristic, CommonConfig, Heuristic};

/// Hyper-parameters of the MCTS agent. Defaults are the tuned values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MctsConfig {
    /// Maximum depth (planner moves from the root) reached by the tree or
    /// the rollout.
    pub d: usize,
    /// UCB exploration constant.
    pub c: f64,
    /// UCB epsilon guarding the division by the child visit count.
    pub e: f64,
    /// Probability of widening an already-expanded node.
    pub ep: f64,
    /// Action samples drawn per expansion.
    pub ps: usize,
    /// Recommendation: 0 max child, 1 robust child, 2 secure child.
    pub rt: u8,
}

impl Default for MctsConfig {
    fn default() -> Self {
        MctsConfig {
            d: 2,
            c: 0.0,
            e: 1e-6,
            ep: 0.4,
            ps: 1,
            rt: 1,
        }
    }
}

/// UCB score of a child whose mean has been min-max normalized across its
/// siblings.
pub fn ucb_value(norm_mean: f64, child_visits: u64, parent_visits: u64, c: f64, e: f64) -> f64 {
    norm_mean + c * (((parent_visits as f64 + 1.0).ln()) / (child_visits as f64 + e)).sqrt()
}

#[derive(Debug)]
pub struct MctsNode {
    /// The planner action leading here (`None` at the root).
    pub action: Option<Action>,
    /// State after the action and the opponents' modelled replies.
    pub state: GameState,
    /// Planner moves from the root.
    pub depth: usize,
    pub children: Vec<usize>,
    pub visits: u64,
    /// Backpropagations that terminated at this node.
    pub self_visits: u64,
    pub reward_sum: f64,
    pub expanded: bool,
    /// Sampling here hit a stalemate: the node is terminal.
    pub stuck: bool,
}

impl MctsNode {
    pub fn mean(&self) -> f64 {
        if self.visits == 0 {
            0.0
        } else {
            self.reward_sum / self.visits as f64
        }
    }
}

pub struct MctsTree {
    pub nodes: Vec<MctsNode>,
}

pub struct MctsAgent {
    cfg: MctsConfig,
    common: CommonConfig,
    rng: Rng64,
    heuristic: Heuristic,
}

enum Expansion {
    Child(usize),
    NothingNew,
    Stuck,
    OutOfBudget,
}

impl MctsAgent {
    pub fn new(cfg: MctsConfig, common: CommonConfig, seed: u64) -> Self {
        MctsAgent {
            cfg,
            common,
            rng: Rng64::new(seed),
            heuristic: prestige_heuristic,
        }
    }

    /// Run the search and return the recommendation together with the tree
    /// (exposed for inspection in tests and tools).
    pub fn search(
        &mut self,
        state: &GameState,
        player: usize,
        budget: &mut Budget,
    ) -> (MctsTree, Result<Action, AgentError>) {
        let mut fm = ForwardModel::new(budget);
        let base = (self.heuristic)(state, player);
        let depth_cap = self.cfg.d.max(1);

        let mut tree = MctsTree {
            nodes: vec![MctsNode {
                action: None,
                state: state.clone(),
                depth: 0,
                children: Vec::new(),
                visits: 0,
                self_visits: 0,
                reward_sum: 0.0,
                expanded: false,
                stuck: false,
            }],
        };

        // Terminal hits cost no budget, so a hard iteration cap backstops
        // pathological all-terminal trees.
        let max_iterations = fm.budget().capacity().saturating_mul(64) + 1024;
        let mut iterations = 0u64;

        'search: while !fm.budget().is_exhausted() && iterations < max_iterations {
            iterations += 1;
            let mut path = vec![0usize];
            loop {
                let cur = *path.last().unwrap();
                let node = &tree.nodes[cur];
                let terminal =
                    node.stuck || node.state.game_over() || node.depth >= depth_cap;
                if terminal {
                    let reward = (self.heuristic)(&tree.nodes[cur].state, player) - base;
                    backprop(&mut tree, &path, reward);
                    break;
                }
                if !node.expanded || self.rng.chance(self.cfg.ep) {
                    match self.expand(&mut tree, cur, player, &mut fm) {
                        Expansion::Child(child) => {
                            path.push(child);
                            let reward = self.rollout(
                                tree.nodes[child].state.clone(),
                                tree.nodes[child].depth,
                                player,
                                depth_cap,
                                &mut fm,
                                base,
                            );
                            backprop(&mut tree, &path, reward);
                        }
                        Expansion::NothingNew => {
                            let reward =
                                (self.heuristic)(&tree.nodes[cur].state, player) - base;
                            backprop(&mut tree, &path, reward);
                        }
                        Expansion::Stuck => {
                            let reward =
                                (self.heuristic)(&tree.nodes[cur].state, player) - base;
                            backprop(&mut tree, &path, reward);
                        }
                        Expansion::OutOfBudget => break 'search,
                    }
                    break;
                }
                match self.select_child(&tree, cur) {
                    Some(child) => path.push(child),
                    None => {
                        // expanded but childless (every sample was a duplicate
                        // of a stuck sibling); treat as terminal
                        let reward = (self.heuristic)(&tree.nodes[cur].state, player) - base;
                        backprop(&mut tree, &path, reward);
                        break;
                    }
                }
            }
        }

        let recommendation = self.recommend(&tree, player);
        (tree, recommendation)
    }

    /// Draw up to `ps` action samples, add a child for every unique new
    /// action and hand back one of the new children.
    fn expand(
        &mut self,
        tree: &mut MctsTree,
        node_idx: usize,
        player: usize,
        fm: &mut ForwardModel,
    ) -> Expansion {
        let samples = self.cfg.ps.max(1);
        let mut new_children = Vec::new();
        for _ in 0..samples {
            let action = {
                let node = &tree.nodes[node_idx];
                match fm.random_action(&node.state, player, self.rng.next_u64()) {
                    Ok(a) => a,
                    Err(FmError::Stalemate(_)) => {
                        tree.nodes[node_idx].expanded = true;
                        tree.nodes[node_idx].stuck = true;
                        return Expansion::Stuck;
                    }
                    Err(_) => {
                        tree.nodes[node_idx].expanded = true;
                        return Expansion::OutOfBudget;
                    }
                }
            };
            let duplicate = tree.nodes[node_idx]
                .children
                .iter()
                .any(|&c| tree.nodes[c].action == Some(action));
            if duplicate {
                continue;
            }

            let mut child_state = tree.nodes[node_idx].state.clone();
            if fm.apply(&mut child_state, &action).is_err() {
                tree.nodes[node_idx].expanded = true;
                return Expansion::OutOfBudget;
            }
            opponent_round(
                &mut child_state,
                player,
                &self.common,
                fm,
                &mut self.rng,
                self.heuristic,
            );
            let child = MctsNode {
                action: Some(action),
                state: child_state,
                depth: tree.nodes[node_idx].depth + 1,
                children: Vec::new(),
                visits: 0,
                self_visits: 0,
                reward_sum: 0.0,
                expanded: false,
                stuck: false,
            };
            let idx = tree.nodes.len();
            tree.nodes.push(child);
            tree.nodes[node_idx].children.push(idx);
            new_children.push(idx);
        }
        tree.nodes[node_idx].expanded = true;
        if new_children.is_empty() {
            Expansion::NothingNew
        } else {
            Expansion::Child(new_children[self.rng.index(new_children.len())])
        }
    }

    /// Random playout of the planner's remaining moves down to the depth
    /// cap; stalemates and the end of the game truncate it.
    fn rollout(
        &mut self,
        mut sim: GameState,
        mut depth: usize,
        player: usize,
        depth_cap: usize,
        fm: &mut ForwardModel,
        base: f64,
    ) -> f64 {
        while depth < depth_cap && !sim.game_over() && sim.current_player == player {
            let action = match fm.random_action(&sim, player, self.rng.next_u64()) {
                Ok(a) => a,
                Err(_) => break,
            };
            if fm.apply(&mut sim, &action).is_err() {
                break;
            }
            opponent_round(
                &mut sim,
                player,
                &self.common,
                fm,
                &mut self.rng,
                self.heuristic,
            );
            depth += 1;
        }
        (self.heuristic)(&sim, player) - base
    }

    fn select_child(&self, tree: &MctsTree, node_idx: usize) -> Option<usize> {
        let node = &tree.nodes[node_idx];
        if node.children.is_empty() {
            return None;
        }
        let means: Vec<f64> = node
            .children
            .iter()
            .map(|&c| tree.nodes[c].mean())
            .collect();
        let lo = means.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = means.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mut best = None;
        let mut best_value = f64::NEG_INFINITY;
        for (i, &child) in node.children.iter().enumerate() {
            let norm = if hi > lo { (means[i] - lo) / (hi - lo) } else { 0.5 };
            let value = ucb_value(
                norm,
                tree.nodes[child].visits,
                node.visits,
                self.cfg.c,
                self.cfg.e,
            );
            if value > best_value {
                best_value = value;
                best = Some(child);
            }
        }
        best
    }

    fn recommend(&self, tree: &MctsTree, player: usize) -> Result<Action, AgentError> {
        let root = &tree.nodes[0];
        if root.children.is_empty() {
            return Err(if root.stuck {
                AgentError::Stalemate(Stalemate { player })
            } else {
                AgentError::Budget(BudgetExpired)
            });
        }
        let scored = root.children.iter().map(|&c| {
            let node = &tree.nodes[c];
            let score = match self.cfg.rt {
                0 => {
                    if node.visits == 0 {
                        f64::NEG_INFINITY
                    } else {
                        node.mean()
                    }
                }
                1 => node.visits as f64,
                _ => {
                    if node.visits == 0 {
                        f64::NEG_INFINITY
                    } else {
                        node.mean() - 1.0 / (node.visits as f64).sqrt()
                    }
                }
            };
            (c, score)
        });
        let mut best = None;
        let mut best_score = f64::NEG_INFINITY;
        for (c, score) in scored {
            if best.is_none() || score > best_score {
                best_score = score;
                best = Some(c);
            }
        }
        Ok(tree.nodes[best.expect("children checked non-empty")]
            .action
            .expect("non-root node has an action"))
    }
}

fn backprop(tree: &mut MctsTree, path: &[usize], reward: f64) {
    for &idx in path {
        tree.nodes[idx].visits += 1;
        tree.nodes[idx].reward_sum += reward;
    }
    tree.nodes[*path.last().unwrap()].self_visits += 1;
}

impl Agent for MctsAgent {
    fn act(
        &mut self,
        state: &GameState,
        player: usize,
        budget: &mut Budget,
    ) -> Result<Action, AgentError> {
        self.search(state, player, budget).1
    }
}
