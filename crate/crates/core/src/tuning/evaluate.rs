//! The noisy evaluator: win rate of a configured agent over seeded games.

use super::space::SearchSpace;
use crate::agents::AgentSpec;
use crate::content::ContentSet;
use crate::engine::{run_game, GameConfig, Outcome};
use crate::params::GameParams;
use crate::rng::Rng64;
use rayon::prelude::*;

/// How evaluation games are set up: rules, engine limits and the bench of
/// opponents the tuned agent plays against.
#[derive(Clone)]
pub struct MatchSetup {
    pub params: GameParams,
    pub game: GameConfig,
    pub opponents: Vec<AgentSpec>,
}

impl Default for MatchSetup {
    fn default() -> Self {
        MatchSetup {
            params: GameParams::default(),
            game: GameConfig::default(),
            opponents: vec![AgentSpec::Osla; 3],
        }
    }
}

impl MatchSetup {
    pub fn validate(&self) -> Result<(), String> {
        if self.opponents.len() + 1 != self.params.players {
            return Err(format!(
                "{} opponents for a {}-player game",
                self.opponents.len(),
                self.params.players
            ));
        }
        Ok(())
    }
}

/// Play one seeded game with the subject in a rotated seat and return its
/// credit: `1/|winners|` when among the winners, 0 otherwise (stalemates
/// pay nothing).
pub fn play_credit(
    subject: &AgentSpec,
    setup: &MatchSetup,
    content: &ContentSet,
    rotation: usize,
    seed: u64,
) -> f64 {
    let players = setup.params.players;
    let subject_seat = rotation % players;
    let mut seat_rng = Rng64::new(seed ^ 0xA5EED);
    let mut agents = Vec::with_capacity(players);
    let mut opponent_iter = setup.opponents.iter();
    for seat in 0..players {
        let spec = if seat == subject_seat {
            subject
        } else {
            opponent_iter.next().expect("validated opponent count")
        };
        agents.push(spec.build(seat_rng.next_u64()));
    }
    let result = run_game(&setup.params, content, &mut agents, seed, &setup.game)
        .expect("validated setup");
    if result.outcome == Outcome::Stalemate || !result.winners.contains(&subject_seat) {
        0.0
    } else {
        1.0 / result.winners.len() as f64
    }
}

/// Mean credit of `subject` over `n_games` seeded games with the subject's
/// seat rotating each game. Games run in parallel.
pub fn evaluate_config(
    subject: &AgentSpec,
    setup: &MatchSetup,
    content: &ContentSet,
    n_games: u64,
    seed: u64,
) -> f64 {
    assert!(n_games >= 1);
    setup.validate().expect("consistent match setup");
    let total: f64 = (0..n_games)
        .into_par_iter()
        .map(|g| {
            play_credit(
                subject,
                setup,
                content,
                g as usize,
                Rng64::stream_seed(seed, g),
            )
        })
        .sum();
    total / n_games as f64
}

/// A reusable bridge from search-space points to game outcomes, for both
/// the optimizer (single noisy samples) and grid search (batches).
pub struct GameEvaluator<'c> {
    pub kind: &'static str,
    pub space: SearchSpace,
    pub setup: MatchSetup,
    pub content: &'c ContentSet,
    pub seed: u64,
}

impl<'c> GameEvaluator<'c> {
    pub fn spec_for(&self, point: &[usize]) -> AgentSpec {
        let config = self.space.point_to_json(point);
        AgentSpec::from_kind_config(self.kind, &config)
            .expect("space dimensions map onto agent hyper-parameters")
    }

    /// One game, one fitness sample in [0,1].
    pub fn sample(&self, point: &[usize], index: u64) -> f64 {
        let spec = self.spec_for(point);
        play_credit(
            &spec,
            &self.setup,
            self.content,
            index as usize,
            Rng64::stream_seed(self.seed, index),
        )
    }

    /// Mean fitness over a batch of games (parallel).
    pub fn win_rate(&self, point: &[usize], n_games: u64, salt: u64) -> f64 {
        let spec = self.spec_for(point);
        let total: f64 = (0..n_games)
            .into_par_iter()
            .map(|g| {
                play_credit(
                    &spec,
                    &self.setup,
                    self.content,
                    g as usize,
                    Rng64::stream_seed(self.seed ^ salt, g),
                )
            })
            .sum();
        total / n_games.max(1) as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lone_winner_gets_full_credit() {
        let setup = MatchSetup {
            params: GameParams::default(),
            game: GameConfig::default(),
            opponents: vec![AgentSpec::Rnd; 3],
        };
        let rate = evaluate_config(
            &AgentSpec::Rnd,
            &setup,
            ContentSet::bundled(),
            1,
            12345,
        );
        assert!((0.0..=1.0).contains(&rate));
    }

    #[test]
    fn seats_rotate_fairly() {
        // over 8 games each of 4 seats hosts the subject exactly twice
        let players = 4;
        let mut seats = vec![0u32; players];
        for g in 0..8 {
            seats[g % players] += 1;
        }
        assert_eq!(seats, vec![2, 2, 2, 2]);
    }

    #[test]
    fn symmetric_lineup_shares_wins() {
        let setup = MatchSetup {
            params: GameParams::default(),
            game: GameConfig::default(),
            opponents: vec![AgentSpec::Rnd; 3],
        };
        let rate = evaluate_config(
            &AgentSpec::Rnd,
            &setup,
            ContentSet::bundled(),
            400,
            777,
        );
        // four identical agents: expected credit is (1 - stalemate rate)/4,
        // so comfortably inside (0.15, 0.30)
        assert!((0.15..0.30).contains(&rate), "rate {rate}");
    }
}
