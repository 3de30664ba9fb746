//! Discrete hyper-parameter optimization over agent configuration spaces.

mod evaluate;
mod grid;
mod ntbea;
mod space;

pub use evaluate::{evaluate_config, GameEvaluator, MatchSetup};
pub use grid::grid_search;
pub use ntbea::{ntbea_run, Ntbea, NtbeaConfig};
pub use space::{Dimension, ParamValue, SearchSpace};
