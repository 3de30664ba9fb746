//! Forward-model throughput measurement.

use crate::content::ContentSet;
use crate::error::SetupError;
use crate::params::GameParams;
use crate::rag;
use crate::rng::Rng64;
use crate::rules;
use crate::state::new_game;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchReport {
    /// Applied actions per wall-clock second.
    pub states_per_sec: f64,
    pub games_per_sec: f64,
    pub applies: u64,
    pub games: u64,
    pub elapsed: Duration,
}

/// Run random-action games back to back for roughly `seconds` and report the
/// apply rate. Ticks are capped like a real game (300) so cyclic no-op play
/// cannot wedge a game.
pub fn bench_throughput(
    params: &GameParams,
    content: &ContentSet,
    seconds: f64,
    seed: u64,
) -> Result<BenchReport, SetupError> {
    // validate once up front so the hot loop can unwrap
    new_game(params, content, seed)?;
    let mut rng = Rng64::new(seed);
    let start = Instant::now();
    let mut applies = 0u64;
    let mut games = 0u64;

    loop {
        let mut state = new_game(params, content, rng.next_u64()).expect("validated");
        'game: loop {
            if state.game_over() || state.tick >= 300 {
                break 'game;
            }
            let player = state.current_player;
            match rag::random_action(&state, player, rng.next_u64()) {
                Ok(action) => {
                    rules::apply(&mut state, &action).expect("generated actions are legal");
                    applies += 1;
                }
                Err(_) => break 'game, // stalemate
            }
        }
        games += 1;
        if start.elapsed().as_secs_f64() >= seconds {
            break;
        }
    }

    let elapsed = start.elapsed();
    let secs = elapsed.as_secs_f64().max(1e-9);
    Ok(BenchReport {
        states_per_sec: applies as f64 / secs,
        games_per_sec: games as f64 / secs,
        applies,
        games,
        elapsed,
    })
}
