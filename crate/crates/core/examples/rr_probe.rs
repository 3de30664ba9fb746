//! Two-player round-robin probe between the tuned agents.

use splendor_core::agents::AgentSpec;
use splendor_core::engine::{run_game, GameConfig, Outcome};
use splendor_core::{ContentSet, GameParams, Rng64};

fn pair(a: &AgentSpec, b: &AgentSpec, games: u64, seed: u64) -> (f64, f64, f64) {
    let params = GameParams::for_players(2);
    let content = ContentSet::bundled();
    let config = GameConfig::default();
    let (mut wins_a, mut wins_b, mut stale) = (0.0, 0.0, 0u64);
    for g in 0..games {
        let game_seed = Rng64::stream_seed(seed, g);
        let mut agent_rng = Rng64::new(game_seed ^ 0xAB);
        // seats alternate between games
        let a_seat = (g % 2) as usize;
        let mut agents = Vec::new();
        for seat in 0..2 {
            let spec = if seat == a_seat { a } else { b };
            agents.push(spec.build(agent_rng.next_u64()));
        }
        let result = run_game(&params, content, &mut agents, game_seed, &config).unwrap();
        if result.outcome == Outcome::Stalemate {
            stale += 1;
            continue;
        }
        if result.winners.contains(&a_seat) {
            wins_a += 1.0 / result.winners.len() as f64;
        }
        if result.winners.contains(&(1 - a_seat)) {
            wins_b += 1.0 / result.winners.len() as f64;
        }
    }
    (
        wins_a / games as f64,
        wins_b / games as f64,
        stale as f64 / games as f64,
    )
}

fn main() {
    let games: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(400);
    let seed: u64 = std::env::args()
        .nth(2)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    for (name_a, a, name_b, b) in [
        ("mcts*", AgentSpec::mcts_star(), "bmrh*", AgentSpec::bmrh_star()),
        ("srh*", AgentSpec::srh_star(), "bmrh*", AgentSpec::bmrh_star()),
        ("srh*", AgentSpec::srh_star(), "mcts*", AgentSpec::mcts_star()),
    ] {
        let start = std::time::Instant::now();
        let (ra, rb, sm) = pair(&a, &b, games, seed);
        println!(
            "{name_a} vs {name_b}: {:.3} / {:.3}, SM {:.3} ({:.1?})",
            ra,
            rb,
            sm,
            start.elapsed()
        );
    }
}
