//! Conservation fuzzing: tokens, cards and nobles are neither created nor
//! destroyed by any sequence of applied actions, and the cached player
//! statistics stay consistent.

use splendor_core::rag;
use splendor_core::state::{check_invariants, new_game};
use splendor_core::{ContentSet, GameParams, Rng64};

#[test]
fn invariants_hold_across_random_play() {
    let content = ContentSet::bundled();
    let mut rng = Rng64::new(99);
    let mut actions_applied = 0u64;

    for &players in &[2usize, 3, 4] {
        let params = GameParams::for_players(players);
        while actions_applied < 10_000 * players as u64 / 4 {
            let mut state = new_game(&params, content, rng.next_u64()).unwrap();
            loop {
                if state.game_over() || state.tick >= 300 {
                    break;
                }
                let player = state.current_player;
                let action = match rag::random_action(&state, player, rng.next_u64()) {
                    Ok(a) => a,
                    Err(_) => break,
                };
                splendor_core::rules::apply(&mut state, &action).unwrap();
                actions_applied += 1;
                if actions_applied % 7 == 0 {
                    check_invariants(&state, content)
                        .unwrap_or_else(|e| panic!("after {actions_applied} actions: {e}"));
                }
            }
            check_invariants(&state, content).unwrap();
        }
        actions_applied = 0;
    }
}

#[test]
fn acting_player_score_never_decreases() {
    let content = ContentSet::bundled();
    let params = GameParams::default();
    let mut rng = Rng64::new(123);
    let mut games = 0;
    while games < 1000 {
        let mut state = new_game(&params, content, rng.next_u64()).unwrap();
        loop {
            if state.game_over() || state.tick >= 300 {
                break;
            }
            let player = state.current_player;
            let before = splendor_core::score(&state, player);
            let action = match rag::random_action(&state, player, rng.next_u64()) {
                Ok(a) => a,
                Err(_) => break,
            };
            splendor_core::rules::apply(&mut state, &action).unwrap();
            assert!(
                splendor_core::score(&state, player) >= before,
                "score dropped for the acting player"
            );
        }
        games += 1;
    }
}

#[test]
fn observer_copies_conserve_everything() {
    let content = ContentSet::bundled();
    let params = GameParams::default();
    let mut rng = Rng64::new(7);
    for _ in 0..50 {
        // roll a game to a random mid-point, then determinize for everyone
        let mut state = new_game(&params, content, rng.next_u64()).unwrap();
        let steps = rng.below(120);
        for _ in 0..steps {
            if state.game_over() {
                break;
            }
            match rag::random_action(&state, state.current_player, rng.next_u64()) {
                Ok(a) => splendor_core::rules::apply(&mut state, &a).unwrap(),
                Err(_) => break,
            }
        }
        for observer in 0..4 {
            let copy = splendor_core::copy_for_player(&state, observer, rng.next_u64());
            check_invariants(&copy, content).unwrap();
            // public knowledge is untouched
            assert_eq!(copy.table_tokens, state.table_tokens);
            assert_eq!(copy.face_up, state.face_up);
            for (a, b) in copy.players.iter().zip(&state.players) {
                assert_eq!(a.hand, b.hand);
                assert_eq!(a.purchased, b.purchased);
                assert_eq!(a.prestige, b.prestige);
                assert_eq!(a.reserved.len(), b.reserved.len());
            }
            // the observer's own knowledge is exact
            assert_eq!(copy.players[observer], state.players[observer]);
        }
    }
}
