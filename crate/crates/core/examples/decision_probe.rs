//! Trace one tuned-BMRH decision stream against three OSLA opponents.

use splendor_core::agents::{AgentSpec, BmrhAgent, BmrhConfig, CommonConfig};
use splendor_core::engine::{Agent, GameStatus};
use splendor_core::rag;
use splendor_core::{copy_for_player, new_game, Budget, ContentSet, GameParams, Rng64};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let params = GameParams::default();
    let content = ContentSet::bundled();
    let mut state = new_game(&params, content, seed).unwrap();
    let mut master = Rng64::new(seed ^ 0x77);

    let mut bmrh = BmrhAgent::new(BmrhConfig::default(), CommonConfig::default(), seed + 1);
    let mut oslas: Vec<Box<dyn Agent>> = (0..3)
        .map(|i| AgentSpec::Osla.build(seed + 10 + i))
        .collect();

    loop {
        if splendor_core::engine::is_game_over(&mut state) == GameStatus::Over {
            break;
        }
        if state.tick >= 300 {
            break;
        }
        let p = state.current_player;
        let obs = copy_for_player(&state, p, master.next_u64());
        let mut budget = Budget::new(1000);
        let action = if p == 0 {
            let a = bmrh.act(&obs, 0, &mut budget);
            if state.tick < 120 {
                match &a {
                    Ok(act) => println!(
                        "tick {:3} prestige {:2} budget {:4}: {act}",
                        state.tick,
                        state.players[0].prestige,
                        budget.used(),
                    ),
                    Err(e) => println!("tick {:3} ERR {e}", state.tick),
                }
            }
            a
        } else {
            oslas[p - 1].act(&obs, p, &mut budget)
        };
        let action = match action {
            Ok(a) if splendor_core::rules::validate(&state, &a).is_ok() => a,
            _ => match rag::random_action(&state, p, master.next_u64()) {
                Ok(a) => a,
                Err(_) => break,
            },
        };
        splendor_core::rules::apply(&mut state, &action).unwrap();
    }

    println!("--- final (tick {})", state.tick);
    for (i, pl) in state.players.iter().enumerate() {
        println!(
            "p{i}: prestige {:2} cards {:2} reserved {} hand {:?}",
            pl.prestige,
            pl.purchased.len(),
            pl.reserved.len(),
            pl.hand
        );
    }
}
