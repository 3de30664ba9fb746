//! Exhaustive evaluation of a (small) search space.

use super::evaluate::GameEvaluator;
use super::space::SearchSpace;
use rayon::prelude::*;

/// Evaluate every configuration of the space over `games_per_config` games
/// and rank them by win rate, best first (ties keep enumeration order).
/// The caller is responsible for keeping the space enumerable.
pub fn grid_search(
    space: &SearchSpace,
    evaluator: &GameEvaluator,
    games_per_config: u64,
) -> Vec<(Vec<usize>, f64)> {
    let points: Vec<Vec<usize>> = space.enumerate().collect();
    let mut ranked: Vec<(usize, Vec<usize>, f64)> = points
        .into_par_iter()
        .enumerate()
        .map(|(i, point)| {
            let rate = evaluator.win_rate(&point, games_per_config, i as u64);
            (i, point, rate)
        })
        .collect();
    ranked.sort_by(|a, b| b.2.partial_cmp(&a.2).unwrap().then(a.0.cmp(&b.0)));
    ranked.into_iter().map(|(_, p, r)| (p, r)).collect()
}
