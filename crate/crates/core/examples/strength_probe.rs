//! Measure tuned-agent strength against three one-step-look-ahead players.

use splendor_core::agents::AgentSpec;
use splendor_core::tuning::{evaluate_config, MatchSetup};
use splendor_core::ContentSet;

fn main() {
    let n_games: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200);
    let seed: u64 = std::env::args()
        .nth(2)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let setup = MatchSetup::default();
    let content = ContentSet::bundled();

    for (name, spec) in [
        ("bmrh*", AgentSpec::bmrh_star()),
        ("srh*", AgentSpec::srh_star()),
        ("mcts*", AgentSpec::mcts_star()),
        ("rnd", AgentSpec::Rnd),
    ] {
        let start = std::time::Instant::now();
        let rate = evaluate_config(&spec, &setup, content, n_games, seed);
        println!(
            "{name:6} vs 3 OSLA: win rate {rate:.3} over {n_games} games ({:.1?})",
            start.elapsed()
        );
    }
}
