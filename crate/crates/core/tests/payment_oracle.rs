//! Canonical payment versus a brute-force search over every joker
//! allocation: the canonical policy must find a payment exactly when one
//! exists, on every hand of up to six tokens.

use splendor_core::rules::{canonical_payment, discounted_price};
use splendor_core::state::new_game;
use splendor_core::tokens::TokenVector;
use splendor_core::{Card, ContentSet, GameParams};

const SUITS: usize = 5;

/// All token vectors over `slots` entries summing to at most `max_total`.
fn compositions(slots: usize, max_total: u16) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut current = vec![0u16; slots];
    fn rec(idx: usize, left: u16, current: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if idx == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=left {
            current[idx] = v;
            rec(idx + 1, left - v, current, out);
        }
    }
    rec(0, max_total, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Is there any way to split each suit's need between suit tokens and
/// jokers so the whole discounted price is covered?
fn affordable_by_brute_force(need: &TokenVector, hand: &TokenVector) -> bool {
    fn rec(suit: usize, need: &TokenVector, hand: &TokenVector, jokers_left: u16) -> bool {
        if suit == SUITS {
            return true;
        }
        let n = need.get(suit);
        let max_from_suit = n.min(hand.get(suit));
        for from_suit in 0..=max_from_suit {
            let from_jokers = n - from_suit;
            if from_jokers <= jokers_left
                && rec(suit + 1, need, hand, jokers_left - from_jokers)
            {
                return true;
            }
        }
        false
    }
    rec(0, need, hand, hand.jokers())
}

#[test]
fn canonical_payment_matches_brute_force() {
    let state = new_game(&GameParams::default(), ContentSet::bundled(), 1).unwrap();
    let mut player = state.players[0].clone();

    let hands = compositions(SUITS + 1, 6); // last slot holds the jokers
    let prices = compositions(SUITS, 4);
    let bonus_variants: [&[u16]; 3] = [&[0, 0, 0, 0, 0], &[1, 0, 0, 0, 0], &[0, 2, 0, 1, 0]];

    let mut checked = 0u64;
    for bonuses in bonus_variants {
        for (s, &b) in bonuses.iter().enumerate() {
            player.bonus_counts.set(s, b);
        }
        for price in &prices {
            let mut card_price = TokenVector::zero(SUITS);
            for (s, &v) in price.iter().enumerate() {
                card_price.set(s, v);
            }
            let card = Card {
                level: 1,
                bonus: 0,
                value: 0,
                price: card_price,
            };
            for hand in &hands {
                for (s, &v) in hand.iter().take(SUITS).enumerate() {
                    player.hand.set(s, v);
                }
                player.hand.set_jokers(hand[SUITS]);

                let need = discounted_price(&card, &player);
                let canonical = canonical_payment(&card, &player);
                let brute = affordable_by_brute_force(&need, &player.hand);
                assert_eq!(
                    canonical.is_some(),
                    brute,
                    "hand {:?} price {:?} bonuses {:?}",
                    player.hand,
                    card.price,
                    bonuses
                );
                if let Some(payment) = canonical {
                    // the payment itself covers the discounted price exactly
                    assert!(payment.fits_within(&player.hand));
                    let mut jokers_needed = 0u16;
                    for (s, n) in need.iter_suits() {
                        assert!(payment.get(s) <= n);
                        jokers_needed += n - payment.get(s);
                    }
                    assert_eq!(payment.jokers(), jokers_needed);
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 100_000, "checked only {checked} combinations");
}
