//! Inspect stalemated states under pure random play.

use splendor_core::agents::AgentSpec;
use splendor_core::engine::{GameConfig, Outcome};
use splendor_core::rag;
use splendor_core::{ContentSet, GameParams, Rng64};

fn main() {
    let params = GameParams::default();
    let content = ContentSet::bundled();
    let config = GameConfig::default();
    let mut dumped = 0;
    let mut stuck_others = Vec::new();

    for g in 0..2000u64 {
        let seed = Rng64::stream_seed(4242, g);
        let mut agents: Vec<_> = (0..4)
            .map(|i| AgentSpec::Rnd.build(seed ^ (i + 1) as u64))
            .collect();
        // re-run the game manually so we can stop at the stalemate
        let mut state = splendor_core::new_game(&params, content, seed).unwrap();
        let mut master = Rng64::new(seed ^ 0xE9_5D_4F_00_C0_FF_EE_01);
        let result = loop {
            if splendor_core::engine::is_game_over(&mut state) == splendor_core::engine::GameStatus::Over {
                break Outcome::Normal;
            }
            if state.tick >= config.max_ticks {
                break Outcome::Timeout;
            }
            let p = state.current_player;
            let obs = splendor_core::copy_for_player(&state, p, master.next_u64());
            let mut budget = splendor_core::Budget::new(config.per_tick_budget);
            let reply = agents[p].act(&obs, p, &mut budget);
            let action = match reply {
                Ok(a) => a,
                Err(_) => match rag::random_action(&state, p, master.next_u64()) {
                    Ok(a) => a,
                    Err(_) => break Outcome::Stalemate,
                },
            };
            splendor_core::rules::apply(&mut state, &action).unwrap();
        };
        if result == Outcome::Stalemate {
            let p = state.current_player;
            let others_stuck: usize = (0..4)
                .filter(|&q| rag::random_action(&state, q, 1).is_err())
                .count();
            stuck_others.push(others_stuck);
            if dumped < 5 {
                dumped += 1;
                println!("--- stalemate at tick {} (game {g}), player {p}", state.tick);
                println!("  table: {:?}", state.table_tokens);
                for (i, pl) in state.players.iter().enumerate() {
                    println!(
                        "  p{i}: hand={:?} total={} reserved={} purchased={} prestige={}",
                        pl.hand,
                        pl.hand.total(),
                        pl.reserved.len(),
                        pl.purchased.len(),
                        pl.prestige
                    );
                }
                println!("  players with no legal action: {others_stuck}/4");
            }
        }
    }
    let n = stuck_others.len();
    let all_stuck = stuck_others.iter().filter(|&&s| s == 4).count();
    println!("\nstalemates: {n}/2000 = {:.3}", n as f64 / 2000.0);
    println!(
        "of those, ALL four players stuck: {all_stuck} ({:.3} of games)",
        all_stuck as f64 / 2000.0
    );
    let hist: Vec<usize> = (1..=4)
        .map(|k| stuck_others.iter().filter(|&&s| s == k).count())
        .collect();
    println!("stuck-player histogram (1..4): {hist:?}");
}
