//! Random Action Generators: seeded samplers over the action space.
//!
//! One generator per action kind. Each is *exact*: it returns `None` if and
//! only if no legal action of its kind exists, which is what makes stalemate
//! detection sound. Given the same `(state, player, seed)` a generator
//! always returns the same action.

use crate::action::{Action, ActionBody, ActionKind};
use crate::error::Stalemate;
use crate::rng::Rng64;
use crate::rules::canonical_payment;
use crate::state::GameState;
use crate::tokens::{SuitSet, TokenVector};

/// Sample one legal action of the given kind, or `None` if none exists.
pub fn generate(
    kind: ActionKind,
    state: &GameState,
    player: usize,
    seed: u64,
) -> Option<Action> {
    debug_assert!(player < state.params.players);
    let mut rng = Rng64::new(seed);
    match kind {
        ActionKind::PickDifferent => pick_different(state, player, &mut rng),
        ActionKind::PickSame => pick_same(state, player, &mut rng),
        ActionKind::ReserveTable => reserve_table(state, player, &mut rng),
        ActionKind::ReserveDeck => reserve_deck(state, player, &mut rng),
        ActionKind::BuyTable => buy_table(state, player, &mut rng),
        ActionKind::BuyReserved => buy_reserved(state, player, &mut rng),
    }
}

/// Sample a legal action of any kind: the six generators are tried in a
/// seeded random order and the first hit wins. All six exhausted means the
/// player has no move at all.
pub fn random_action(state: &GameState, player: usize, seed: u64) -> Result<Action, Stalemate> {
    let mut rng = Rng64::new(seed);
    // Reserving is one action family with two sources, so its generators are
    // grouped for the order draw; every generator is still tried before a
    // stalemate is declared.
    let mut groups: [&[ActionKind]; 5] = [
        &[ActionKind::PickDifferent],
        &[ActionKind::PickSame],
        &[ActionKind::ReserveTable, ActionKind::ReserveDeck],
        &[ActionKind::BuyTable],
        &[ActionKind::BuyReserved],
    ];
    rng.shuffle(&mut groups);
    for group in groups {
        let flip = group.len() > 1 && rng.chance(0.5);
        for i in 0..group.len() {
            let kind = group[if flip { group.len() - 1 - i } else { i }];
            if let Some(action) = generate(kind, state, player, rng.next_u64()) {
                return Ok(action);
            }
        }
    }
    Err(Stalemate { player })
}

/// Sample the tokens to return when the action pushes the hand over the
/// limit: one uniformly chosen token at a time from the tokens the action
/// gained (so an at-limit pick can put back exactly what it picked), until
/// the hand fits. The hand can never be over the limit by more than it
/// gained, so this always terminates.
fn sample_give_back(pool: &TokenVector, over: u32, rng: &mut Rng64) -> TokenVector {
    let mut pool = *pool;
    let mut give_back = TokenVector::zero(pool.suit_count());
    for _ in 0..over {
        let mut pick = rng.below(pool.total() as u64) as u32;
        let mut chosen = None;
        for (s, n) in pool.iter_suits() {
            if pick < n as u32 {
                chosen = Some(s);
                break;
            }
            pick -= n as u32;
        }
        match chosen {
            Some(s) => {
                pool.sub(s, 1);
                give_back.add(s, 1);
            }
            None => {
                pool.sub_jokers(1);
                give_back.add_jokers(1);
            }
        }
    }
    give_back
}

fn finish(
    state: &GameState,
    player: usize,
    body: ActionBody,
    hand_after: TokenVector,
    rng: &mut Rng64,
) -> Action {
    let over = hand_after
        .total()
        .saturating_sub(state.params.max_tokens_held as u32);
    if over == 0 {
        return Action {
            player,
            body,
            give_back: TokenVector::zero(hand_after.suit_count()),
        };
    }
    // only gaining actions can overflow, so this cannot underflow
    let gained = {
        let mut g = hand_after;
        g.sub_all(&state.players[player].hand);
        g
    };
    Action {
        player,
        body,
        give_back: sample_give_back(&gained, over, rng),
    }
}

/// Rebuild the state-derived parts of an action (buy payments, give-backs)
/// so a plan kept from an earlier state can be replayed as long as its
/// intent is still available. `None` means the intent itself is gone.
pub fn repair_action(state: &GameState, action: &Action, rng: &mut Rng64) -> Option<Action> {
    let player = action.player;
    let me = &state.players[player];
    let body = match action.body {
        ActionBody::BuyTable { deck, slot, .. } => {
            let card = state.face_up.get(deck as usize)?.get(slot as usize)?;
            ActionBody::BuyTable {
                deck,
                slot,
                payment: crate::rules::canonical_payment(card, me)?,
            }
        }
        ActionBody::BuyReserved { slot, .. } => {
            let card = &me.reserved.get(slot as usize)?.card;
            ActionBody::BuyReserved {
                slot,
                payment: crate::rules::canonical_payment(card, me)?,
            }
        }
        other => other,
    };
    let probe = Action {
        player,
        body,
        give_back: TokenVector::zero(state.params.token_suits),
    };
    let hand_after = crate::rules::hand_after_effect(state, &probe).ok()?;
    let repaired = finish(state, player, body, hand_after, rng);
    crate::rules::validate(state, &repaired).ok()?;
    Some(repaired)
}

fn pick_different(state: &GameState, player: usize, rng: &mut Rng64) -> Option<Action> {
    let params = &state.params;
    let mut qualifying: Vec<usize> = state
        .table_tokens
        .iter_suits()
        .filter(|&(_, n)| n >= params.pick_different_per_suit)
        .map(|(s, _)| s)
        .collect();
    let k_max = qualifying.len().min(params.pick_different_max_suits);
    if k_max == 0 {
        return None;
    }
    // "up to" nTTPD suits: take as many as the table allows
    let k = k_max;
    for i in 0..k {
        let j = i + rng.index(qualifying.len() - i);
        qualifying.swap(i, j);
    }
    let suits = SuitSet::from_slice(&qualifying[..k]);
    let mut hand = state.players[player].hand;
    for s in suits.iter() {
        hand.add(s, params.pick_different_per_suit);
    }
    Some(finish(
        state,
        player,
        ActionBody::PickDifferent { suits },
        hand,
        rng,
    ))
}

fn pick_same(state: &GameState, player: usize, rng: &mut Rng64) -> Option<Action> {
    let params = &state.params;
    let qualifying: Vec<usize> = state
        .table_tokens
        .iter_suits()
        .filter(|&(_, n)| n >= params.pick_same_min_stack && n >= params.pick_same_count)
        .map(|(s, _)| s)
        .collect();
    if qualifying.is_empty() {
        return None;
    }
    let suit = *rng.pick(&qualifying);
    let mut hand = state.players[player].hand;
    hand.add(suit, params.pick_same_count);
    Some(finish(
        state,
        player,
        ActionBody::PickSame { suit: suit as u8 },
        hand,
        rng,
    ))
}

fn joker_grant_hand(state: &GameState, player: usize) -> TokenVector {
    let mut hand = state.players[player].hand;
    if state.table_tokens.jokers() > 0 {
        hand.add_jokers(1);
    }
    hand
}

fn reserve_table(state: &GameState, player: usize, rng: &mut Rng64) -> Option<Action> {
    if state.players[player].reserved.len() >= state.params.max_reserved {
        return None;
    }
    let slots: Vec<(u8, u8)> = state
        .face_up
        .iter()
        .enumerate()
        .flat_map(|(d, row)| (0..row.len()).map(move |i| (d as u8, i as u8)))
        .collect();
    if slots.is_empty() {
        return None;
    }
    let (deck, slot) = *rng.pick(&slots);
    let hand = joker_grant_hand(state, player);
    Some(finish(
        state,
        player,
        ActionBody::ReserveTable { deck, slot },
        hand,
        rng,
    ))
}

fn reserve_deck(state: &GameState, player: usize, rng: &mut Rng64) -> Option<Action> {
    if state.players[player].reserved.len() >= state.params.max_reserved {
        return None;
    }
    let decks: Vec<u8> = state
        .decks
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_empty())
        .map(|(i, _)| i as u8)
        .collect();
    if decks.is_empty() {
        return None;
    }
    let deck = *rng.pick(&decks);
    let hand = joker_grant_hand(state, player);
    Some(finish(
        state,
        player,
        ActionBody::ReserveDeck { deck },
        hand,
        rng,
    ))
}

fn buy_table(state: &GameState, player: usize, rng: &mut Rng64) -> Option<Action> {
    let me = &state.players[player];
    let affordable: Vec<(u8, u8, TokenVector)> = state
        .face_up
        .iter()
        .enumerate()
        .flat_map(|(d, row)| {
            row.iter().enumerate().filter_map(move |(i, card)| {
                canonical_payment(card, me).map(|pay| (d as u8, i as u8, pay))
            })
        })
        .collect();
    if affordable.is_empty() {
        return None;
    }
    let (deck, slot, payment) = *rng.pick(&affordable);
    let mut hand = me.hand;
    hand.sub_all(&payment);
    Some(finish(
        state,
        player,
        ActionBody::BuyTable {
            deck,
            slot,
            payment,
        },
        hand,
        rng,
    ))
}

fn buy_reserved(state: &GameState, player: usize, rng: &mut Rng64) -> Option<Action> {
    let me = &state.players[player];
    let affordable: Vec<(u8, TokenVector)> = me
        .reserved
        .iter()
        .enumerate()
        .filter_map(|(i, r)| canonical_payment(&r.card, me).map(|pay| (i as u8, pay)))
        .collect();
    if affordable.is_empty() {
        return None;
    }
    let (slot, payment) = *rng.pick(&affordable);
    let mut hand = me.hand;
    hand.sub_all(&payment);
    Some(finish(
        state,
        player,
        ActionBody::BuyReserved { slot, payment },
        hand,
        rng,
    ))
}
