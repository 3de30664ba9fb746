//! A parameterized engine for Splendor-like board games, with
//! budget-metered forward models, statistical forward planning agents
//! (random, one-step look ahead, two rolling-horizon variants and MCTS) and
//! a hyper-parameter tuning harness.

pub mod action;
pub mod agents;
pub mod bench;
pub mod budget;
pub mod content;
pub mod engine;
pub mod error;
pub mod fm;
pub mod params;
pub mod rag;
pub mod rng;
pub mod rules;
pub mod state;
pub mod tokens;
pub mod tuning;

pub use action::{Action, ActionBody, ActionKind};
pub use budget::Budget;
pub use content::{Card, ContentSet, Noble};
pub use engine::{run_game, Agent, GameConfig, GameResult, Outcome};
pub use error::{AgentError, BudgetExpired, FmError, RuleViolation, SetupError, Stalemate};
pub use fm::ForwardModel;
pub use params::GameParams;
pub use rng::Rng64;
pub use state::{copy_for_player, new_game, score, GameState, PlayerState};
pub use tokens::{SuitSet, TokenVector};
