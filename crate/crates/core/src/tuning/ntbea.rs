//! The n-tuple bandit evolutionary algorithm: a model-based optimizer for
//! noisy discrete landscapes. UCB statistics are kept over all 1-tuples,
//! all 2-tuples and the full tuple of dimensions.

use super::space::SearchSpace;
use crate::rng::Rng64;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NtbeaConfig {
    /// Exploration weight in the candidate score.
    pub k: f64,
    /// Per-dimension mutation probability for neighbour generation.
    pub mutation_prob: f64,
    /// Neighbours scored per step.
    pub neighbours: usize,
    /// Guard against division by zero in the exploration term.
    pub ucb_epsilon: f64,
}

impl Default for NtbeaConfig {
    fn default() -> Self {
        NtbeaConfig {
            k: 1.0,
            mutation_prob: 0.2,
            neighbours: 50,
            ucb_epsilon: 1e-6,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Stat {
    count: u64,
    sum: f64,
}

/// The fitness model: per-tuple statistics over evaluated points.
pub struct Ntbea {
    space: SearchSpace,
    cfg: NtbeaConfig,
    /// Tracked tuples as sorted dimension-index groups.
    tuples: Vec<Vec<usize>>,
    stats: Vec<HashMap<Vec<usize>, Stat>>,
    evaluations: u64,
    /// Distinct evaluated points (insertion order).
    evaluated: Vec<Vec<usize>>,
}

impl Ntbea {
    pub fn new(space: SearchSpace, cfg: NtbeaConfig) -> Self {
        let n = space.dims.len();
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            tuples.push(vec![i]);
        }
        for i in 0..n {
            for j in i + 1..n {
                tuples.push(vec![i, j]);
            }
        }
        let full: Vec<usize> = (0..n).collect();
        if !tuples.contains(&full) {
            tuples.push(full);
        }
        let stats = tuples.iter().map(|_| HashMap::new()).collect();
        Ntbea {
            space,
            cfg,
            tuples,
            stats,
            evaluations: 0,
            evaluated: Vec::new(),
        }
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    /// Count of samples recorded for one value combination of one tracked
    /// tuple (exposed for the consistency checks in tests).
    pub fn tuple_count(&self, dims: &[usize], values: &[usize]) -> u64 {
        self.tuples
            .iter()
            .position(|t| t == dims)
            .and_then(|i| self.stats[i].get(values))
            .map_or(0, |s| s.count)
    }

    pub fn record(&mut self, point: &[usize], fitness: f64) {
        self.evaluations += 1;
        for (tuple, stats) in self.tuples.iter().zip(&mut self.stats) {
            let key: Vec<usize> = tuple.iter().map(|&d| point[d]).collect();
            let stat = stats.entry(key).or_default();
            stat.count += 1;
            stat.sum += fitness;
        }
        if !self.evaluated.iter().any(|p| p == point) {
            self.evaluated.push(point.to_vec());
        }
    }

    /// Exploitation + exploration score used to pick the next point. Unseen
    /// tuple combinations contribute a first-play urgency of
    /// `k*sqrt(ln(evals+1))` in place of a mean, and their zero count makes
    /// the exploration term dominate.
    pub fn candidate_score(&self, point: &[usize]) -> f64 {
        let log_term = ((self.evaluations + 1) as f64).ln();
        let mut mean_part = 0.0;
        let mut explore_part = 0.0;
        for (tuple, stats) in self.tuples.iter().zip(&self.stats) {
            let key: Vec<usize> = tuple.iter().map(|&d| point[d]).collect();
            match stats.get(&key) {
                Some(stat) => {
                    mean_part += stat.sum / stat.count as f64;
                    explore_part +=
                        (log_term / (stat.count as f64 + self.cfg.ucb_epsilon)).sqrt();
                }
                None => {
                    mean_part += self.cfg.k * log_term.sqrt();
                    explore_part += (log_term / self.cfg.ucb_epsilon).sqrt();
                }
            }
        }
        let t = self.tuples.len() as f64;
        mean_part / t + self.cfg.k * explore_part / t
    }

    /// Exploration-free fitness estimate: the mean of the seen tuple means.
    pub fn model_estimate(&self, point: &[usize]) -> f64 {
        let mut total = 0.0;
        let mut seen = 0usize;
        for (tuple, stats) in self.tuples.iter().zip(&self.stats) {
            let key: Vec<usize> = tuple.iter().map(|&d| point[d]).collect();
            if let Some(stat) = stats.get(&key) {
                total += stat.sum / stat.count as f64;
                seen += 1;
            }
        }
        if seen == 0 {
            f64::NEG_INFINITY
        } else {
            total / seen as f64
        }
    }

    /// Mutate each dimension with probability `mutation_prob` (to a
    /// different value); at least one dimension is always changed.
    fn mutate(&self, point: &[usize], rng: &mut Rng64) -> Vec<usize> {
        let mut child = point.to_vec();
        for (i, dim) in self.space.dims.iter().enumerate() {
            if dim.values.len() > 1 && rng.chance(self.cfg.mutation_prob) {
                child[i] = different_value(dim.values.len(), child[i], rng);
            }
        }
        if child == point {
            let mutable: Vec<usize> = self
                .space
                .dims
                .iter()
                .enumerate()
                .filter(|(_, d)| d.values.len() > 1)
                .map(|(i, _)| i)
                .collect();
            if !mutable.is_empty() {
                let dim = mutable[rng.index(mutable.len())];
                child[dim] = different_value(self.space.dims[dim].values.len(), child[dim], rng);
            }
        }
        child
    }

    /// Recommendation: the best model estimate among points actually
    /// evaluated (never an unsampled point).
    pub fn recommend(&self) -> Vec<usize> {
        self.evaluated
            .iter()
            .max_by(|a, b| {
                self.model_estimate(a)
                    .partial_cmp(&self.model_estimate(b))
                    .unwrap()
            })
            .cloned()
            .expect("at least one evaluation recorded")
    }
}

fn different_value(len: usize, current: usize, rng: &mut Rng64) -> usize {
    debug_assert!(len > 1);
    let pick = rng.index(len - 1);
    if pick >= current {
        pick + 1
    } else {
        pick
    }
}

/// Run the optimizer: one fitness sample per step, then a hill-move to the
/// best-scored neighbour. Returns the recommended point after `budget`
/// evaluations.
pub fn ntbea_run(
    space: &SearchSpace,
    evaluator: &mut dyn FnMut(&[usize]) -> f64,
    budget: u64,
    cfg: &NtbeaConfig,
    seed: u64,
) -> Vec<usize> {
    assert!(budget >= 1, "need at least one evaluation");
    let mut rng = Rng64::new(seed);
    let mut model = Ntbea::new(space.clone(), *cfg);
    let mut current = space.random_point(&mut rng);

    for _ in 0..budget {
        let fitness = evaluator(&current);
        model.record(&current, fitness);

        let mut best: Option<(Vec<usize>, f64)> = None;
        for _ in 0..cfg.neighbours.max(1) {
            let candidate = model.mutate(&current, &mut rng);
            let score = model.candidate_score(&candidate);
            if best.as_ref().map_or(true, |(_, s)| score > *s) {
                best = Some((candidate, score));
            }
        }
        if let Some((next, _)) = best {
            current = next;
        }
    }
    model.recommend()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuning::space::SearchSpace;

    fn binary_space(dims: usize) -> SearchSpace {
        let dims = (0..dims)
            .map(|i| {
                serde_json::json!({
                    "name": format!("x{i}"),
                    "values": [0, 1]
                })
            })
            .collect::<Vec<_>>();
        SearchSpace::from_json_str(&serde_json::json!({ "dims": dims }).to_string()).unwrap()
    }

    #[test]
    fn finds_the_dominant_arm() {
        let space = SearchSpace::from_json_str(
            r#"{"dims":[{"name":"a","values":[0,1]}]}"#,
        )
        .unwrap();
        let mut eval = |point: &[usize]| point[0] as f64;
        let best = ntbea_run(&space, &mut eval, 10, &NtbeaConfig::default(), 1);
        assert_eq!(best, vec![1]);
    }

    #[test]
    fn one_tuple_counts_match_evaluations() {
        let space = binary_space(3);
        let mut model = Ntbea::new(space, NtbeaConfig::default());
        let points = [vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0], vec![0, 1, 0]];
        for p in &points {
            model.record(p, 0.5);
        }
        // dimension 0: value 0 seen 3 times, value 1 once
        assert_eq!(model.tuple_count(&[0], &[0]), 3);
        assert_eq!(model.tuple_count(&[0], &[1]), 1);
        assert_eq!(model.tuple_count(&[1], &[1]), 3);
        assert_eq!(model.tuple_count(&[0, 2], &[0, 0]), 2);
        assert_eq!(model.tuple_count(&[0, 1, 2], &[0, 1, 0]), 2);
        assert_eq!(model.evaluations(), 4);
    }

    #[test]
    fn greedy_when_k_is_zero() {
        // with k=0 and a deterministic fitness the recommendation is the
        // empirical best of the visited points
        let space = binary_space(2);
        let mut eval = |point: &[usize]| (point[0] + point[1]) as f64 / 2.0;
        let cfg = NtbeaConfig {
            k: 0.0,
            ..NtbeaConfig::default()
        };
        let best = ntbea_run(&space, &mut eval, 40, &cfg, 3);
        let value = (best[0] + best[1]) as f64 / 2.0;
        // the model estimate of the recommended point can never exceed the
        // true optimum, and hill-climbing must not recommend the worst point
        assert!(value > 0.0);
    }

    #[test]
    fn noisy_onemax_is_solved() {
        // 4-dimensional binary OneMax with gaussian noise; the optimum
        // (all ones) must be recovered in at least 90 of 100 repeats
        let space = binary_space(4);
        let mut solved = 0;
        for repeat in 0..100u64 {
            let mut noise = Rng64::new(900 + repeat);
            let mut eval = |point: &[usize]| {
                let ones: usize = point.iter().sum();
                ones as f64 / 4.0 + noise.normal(0.0, 0.1)
            };
            let best = ntbea_run(&space, &mut eval, 200, &NtbeaConfig::default(), repeat);
            if best == vec![1, 1, 1, 1] {
                solved += 1;
            }
        }
        assert!(solved >= 90, "solved {solved}/100");
    }

    #[test]
    fn single_value_dimensions_survive_mutation() {
        let space = SearchSpace::from_json_str(
            r#"{"dims":[{"name":"a","values":[7]},{"name":"b","values":[0,1]}]}"#,
        )
        .unwrap();
        let mut eval = |point: &[usize]| point[1] as f64;
        let best = ntbea_run(&space, &mut eval, 10, &NtbeaConfig::default(), 5);
        assert_eq!(best[0], 0, "single-value dimension is fixed");
        assert_eq!(best[1], 1);
    }
}
