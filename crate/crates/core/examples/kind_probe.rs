//! Measure per-turn action-kind frequencies and table pressure under
//! random play.

use splendor_core::action::ActionKind;
use splendor_core::rag;
use splendor_core::{ContentSet, GameParams, Rng64};

fn main() {
    let params = GameParams::default();
    let content = ContentSet::bundled();
    let mut counts = std::collections::HashMap::new();
    let mut turns = 0u64;
    let mut empty_table_turns = 0u64;
    let mut full_reserve_turns = 0u64;
    let mut buy_possible_turns = 0u64;
    let mut rng = Rng64::new(7);

    for g in 0..400u64 {
        let seed = Rng64::stream_seed(11, g);
        let mut state = splendor_core::new_game(&params, content, seed).unwrap();
        loop {
            if state.game_over() || state.tick >= 300 {
                break;
            }
            let p = state.current_player;
            turns += 1;
            if state.table_tokens.iter_suits().all(|(_, n)| n == 0) {
                empty_table_turns += 1;
            }
            if state.players[p].reserved.len() >= 3 {
                full_reserve_turns += 1;
            }
            let buyable = rag::generate(ActionKind::BuyTable, &state, p, 1).is_some()
                || rag::generate(ActionKind::BuyReserved, &state, p, 1).is_some();
            if buyable {
                buy_possible_turns += 1;
            }
            match rag::random_action(&state, p, rng.next_u64()) {
                Ok(action) => {
                    *counts.entry(format!("{:?}", action.kind())).or_insert(0u64) += 1;
                    splendor_core::rules::apply(&mut state, &action).unwrap();
                }
                Err(_) => break,
            }
        }
    }

    println!("turns: {turns}");
    let mut kinds: Vec<_> = counts.iter().collect();
    kinds.sort();
    for (k, c) in kinds {
        println!("{k:15} {:.3}", *c as f64 / turns as f64);
    }
    println!(
        "empty common table: {:.3}, acting player at reserve cap: {:.3}, buy possible: {:.3}",
        empty_table_turns as f64 / turns as f64,
        full_reserve_turns as f64 / turns as f64,
        buy_possible_turns as f64 / turns as f64
    );
}
