//! The action rules: legality checking and state transition.

use crate::action::{Action, ActionBody};
use crate::content::Card;
use crate::error::RuleViolation;
use crate::state::{GameState, PlayerState, ReservedCard};
use crate::tokens::TokenVector;

/// Per-suit price after the player's bonus discounts, clamped at zero.
pub fn discounted_price(card: &Card, player: &PlayerState) -> TokenVector {
    let mut price = TokenVector::zero(card.price.suit_count());
    for (s, cost) in card.price.iter_suits() {
        price.set(s, cost.saturating_sub(player.bonus_counts.get(s)));
    }
    price
}

/// The engine's deterministic payment policy: pay each suit of the
/// discounted price from suit tokens first, cover any per-suit shortfall
/// with jokers. `None` means the card is not affordable.
pub fn canonical_payment(card: &Card, player: &PlayerState) -> Option<TokenVector> {
    let price = discounted_price(card, player);
    let mut payment = TokenVector::zero(price.suit_count());
    let mut shortfall: u16 = 0;
    for (s, need) in price.iter_suits() {
        let from_suit = need.min(player.hand.get(s));
        payment.set(s, from_suit);
        shortfall += need - from_suit;
    }
    if shortfall > player.hand.jokers() {
        return None;
    }
    payment.set_jokers(shortfall);
    Some(payment)
}

/// The tokens a player would hold right after the active effect of an
/// action, before any give-back.
pub(crate) fn hand_after_effect(state: &GameState, action: &Action) -> Result<TokenVector, RuleViolation> {
    let params = &state.params;
    let mut hand = state.players[action.player].hand;
    match &action.body {
        ActionBody::PickDifferent { suits } => {
            for s in suits.iter() {
                hand.add(s, params.pick_different_per_suit);
            }
        }
        ActionBody::PickSame { suit } => {
            hand.add(*suit as usize, params.pick_same_count);
        }
        ActionBody::ReserveTable { .. } | ActionBody::ReserveDeck { .. } => {
            if state.table_tokens.jokers() > 0 {
                hand.add_jokers(1);
            }
        }
        ActionBody::BuyTable { payment, .. } | ActionBody::BuyReserved { payment, .. } => {
            if !payment.fits_within(&hand) {
                return Err(RuleViolation::WrongPayment);
            }
            hand.sub_all(payment);
        }
    }
    Ok(hand)
}

fn check_give_back(
    hand_after: &TokenVector,
    give_back: &TokenVector,
    max_tokens: u16,
) -> Result<(), RuleViolation> {
    if !give_back.fits_within(hand_after) {
        return Err(RuleViolation::GiveBackExceedsHand);
    }
    let over = hand_after.total().saturating_sub(max_tokens as u32);
    if give_back.total() != over {
        return Err(RuleViolation::GiveBackWrongTotal);
    }
    Ok(())
}

/// Check an action against every rule. `Ok` means [`apply`] will succeed.
pub fn validate(state: &GameState, action: &Action) -> Result<(), RuleViolation> {
    let params = &state.params;
    if action.player >= params.players {
        return Err(RuleViolation::NoSuchPlayer);
    }
    if action.player != state.current_player {
        return Err(RuleViolation::NotPlayersTurn);
    }
    let player = &state.players[action.player];

    match &action.body {
        ActionBody::PickDifferent { suits } => {
            let k = suits.len();
            if k == 0 || k > params.pick_different_max_suits {
                return Err(RuleViolation::PickDifferentSuitCount);
            }
            for s in suits.iter() {
                if s >= params.token_suits {
                    return Err(RuleViolation::SuitOutOfRange);
                }
                if state.table_tokens.get(s) < params.pick_different_per_suit {
                    return Err(RuleViolation::PickDifferentStackTooSmall);
                }
            }
        }
        ActionBody::PickSame { suit } => {
            let s = *suit as usize;
            if s >= params.token_suits {
                return Err(RuleViolation::SuitOutOfRange);
            }
            let stack = state.table_tokens.get(s);
            if stack < params.pick_same_min_stack || stack < params.pick_same_count {
                return Err(RuleViolation::PickSameStackTooSmall);
            }
        }
        ActionBody::ReserveTable { deck, slot } => {
            if player.reserved.len() >= params.max_reserved {
                return Err(RuleViolation::ReserveLimitReached);
            }
            let row = state
                .face_up
                .get(*deck as usize)
                .ok_or(RuleViolation::NoSuchDeck)?;
            if (*slot as usize) >= row.len() {
                return Err(RuleViolation::NoSuchSlot);
            }
        }
        ActionBody::ReserveDeck { deck } => {
            if player.reserved.len() >= params.max_reserved {
                return Err(RuleViolation::ReserveLimitReached);
            }
            let deck = state
                .decks
                .get(*deck as usize)
                .ok_or(RuleViolation::NoSuchDeck)?;
            if deck.is_empty() {
                return Err(RuleViolation::EmptyDeck);
            }
        }
        ActionBody::BuyTable {
            deck,
            slot,
            payment,
        } => {
            let row = state
                .face_up
                .get(*deck as usize)
                .ok_or(RuleViolation::NoSuchDeck)?;
            let card = row.get(*slot as usize).ok_or(RuleViolation::NoSuchSlot)?;
            let canon = canonical_payment(card, player).ok_or(RuleViolation::Unaffordable)?;
            if *payment != canon {
                return Err(RuleViolation::WrongPayment);
            }
        }
        ActionBody::BuyReserved { slot, payment } => {
            let slot = player
                .reserved
                .get(*slot as usize)
                .ok_or(RuleViolation::NoSuchReservedSlot)?;
            let canon =
                canonical_payment(&slot.card, player).ok_or(RuleViolation::Unaffordable)?;
            if *payment != canon {
                return Err(RuleViolation::WrongPayment);
            }
        }
    }

    let hand_after = hand_after_effect(state, action)?;
    check_give_back(&hand_after, &action.give_back, params.max_tokens_held)
}

/// Move a purchased card into a player's tableau and update the caches.
fn take_card(player: &mut PlayerState, card: Card) {
    player.bonus_counts.add(card.bonus as usize, 1);
    player.prestige += card.value as u32;
    player.purchased.push(card);
}

/// Refill a face-up slot from its deck; the row shrinks when the deck is
/// empty.
fn refill_slot(state: &mut GameState, deck: usize, slot: usize) {
    if let Some(card) = state.decks[deck].pop() {
        state.face_up[deck].insert(slot, card);
    }
}

/// The passive noble rule for one player at the end of their turn: if at
/// least one table noble's requirement is covered by the player's bonus
/// cards, exactly one noble (the lowest table index) moves to the player.
pub fn noble_pass(state: &mut GameState, player: usize) {
    let bonuses = state.players[player].bonus_counts;
    let qualified = state
        .nobles
        .iter()
        .position(|n| n.requirement.fits_within(&bonuses));
    if let Some(idx) = qualified {
        let noble = state.nobles.remove(idx);
        let p = &mut state.players[player];
        p.prestige += noble.value as u32;
        p.nobles.push(noble);
    }
}

/// Apply a validated action: active effect, give-back, the passive noble
/// rule, then the tick/turn advance.
pub fn apply(state: &mut GameState, action: &Action) -> Result<(), RuleViolation> {
    validate(state, action)?;
    let acting = action.player;

    match &action.body {
        ActionBody::PickDifferent { suits } => {
            let n = state.params.pick_different_per_suit;
            for s in suits.iter() {
                state.table_tokens.sub(s, n);
                state.players[acting].hand.add(s, n);
            }
        }
        ActionBody::PickSame { suit } => {
            let n = state.params.pick_same_count;
            state.table_tokens.sub(*suit as usize, n);
            state.players[acting].hand.add(*suit as usize, n);
        }
        ActionBody::ReserveTable { deck, slot } => {
            let card = state.face_up[*deck as usize].remove(*slot as usize);
            state.players[acting].reserved.push(ReservedCard {
                card,
                from_deck: false,
            });
            if state.table_tokens.jokers() > 0 {
                state.table_tokens.sub_jokers(1);
                state.players[acting].hand.add_jokers(1);
            }
            refill_slot(state, *deck as usize, *slot as usize);
        }
        ActionBody::ReserveDeck { deck } => {
            let card = state.decks[*deck as usize].pop().expect("validated");
            state.players[acting].reserved.push(ReservedCard {
                card,
                from_deck: true,
            });
            if state.table_tokens.jokers() > 0 {
                state.table_tokens.sub_jokers(1);
                state.players[acting].hand.add_jokers(1);
            }
        }
        ActionBody::BuyTable {
            deck,
            slot,
            payment,
        } => {
            let card = state.face_up[*deck as usize].remove(*slot as usize);
            state.players[acting].hand.sub_all(payment);
            state.table_tokens.add_all(payment);
            take_card(&mut state.players[acting], card);
            refill_slot(state, *deck as usize, *slot as usize);
        }
        ActionBody::BuyReserved { slot, payment } => {
            let card = state.players[acting].reserved.remove(*slot as usize).card;
            state.players[acting].hand.sub_all(payment);
            state.table_tokens.add_all(payment);
            take_card(&mut state.players[acting], card);
        }
    }

    if action.give_back.total() > 0 {
        state.players[acting].hand.sub_all(&action.give_back);
        state.table_tokens.add_all(&action.give_back);
    }

    noble_pass(state, acting);
    state.refresh_final_round();
    state.tick += 1;
    state.current_player = (state.current_player + 1) % state.params.players;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::content::ContentSet;
    use crate::params::GameParams;
    use crate::state::new_game;
    use crate::tokens::SuitSet;

    fn fresh() -> GameState {
        new_game(&GameParams::default(), ContentSet::bundled(), 42).unwrap()
    }

    fn pick_same(player: usize, suit: usize) -> Action {
        Action {
            player,
            body: ActionBody::PickSame { suit: suit as u8 },
            give_back: TokenVector::zero(5),
        }
    }

    #[test]
    fn pick_same_moves_two_tokens() {
        let mut state = fresh();
        state.table_tokens.set(2, 4);
        apply(&mut state, &pick_same(0, 2)).unwrap();
        assert_eq!(state.players[0].hand.get(2), 2);
        assert_eq!(state.table_tokens.get(2), 2);
        assert_eq!(state.tick, 1);
        assert_eq!(state.current_player, 1);
    }

    #[test]
    fn pick_same_needs_min_stack() {
        let mut state = fresh();
        state.table_tokens.set(2, 3);
        assert_eq!(
            validate(&state, &pick_same(0, 2)),
            Err(RuleViolation::PickSameStackTooSmall)
        );
    }

    #[test]
    fn pick_different_respects_token_cap() {
        let mut state = fresh();
        // hand of 9 tokens, then pick 3: must give exactly 2 back
        state.players[0].hand.add(0, 9);
        for s in 0..5 {
            state.table_tokens.set(s, 2);
        }
        let mut give_back = TokenVector::zero(5);
        give_back.add(0, 2);
        let action = Action {
            player: 0,
            body: ActionBody::PickDifferent {
                suits: SuitSet::from_slice(&[1, 2, 3]),
            },
            give_back,
        };
        assert!(validate(&state, &action).is_ok());
        let mut state2 = state.clone();
        apply(&mut state2, &action).unwrap();
        assert_eq!(state2.players[0].hand.total(), 10);

        // wrong give-back totals are rejected
        let mut bad = action;
        bad.give_back = TokenVector::zero(5);
        assert_eq!(
            validate(&state, &bad),
            Err(RuleViolation::GiveBackWrongTotal)
        );
    }

    #[test]
    fn reserve_without_jokers_still_succeeds() {
        let mut state = fresh();
        state.table_tokens.set_jokers(0);
        let action = Action {
            player: 0,
            body: ActionBody::ReserveTable { deck: 0, slot: 0 },
            give_back: TokenVector::zero(5),
        };
        apply(&mut state, &action).unwrap();
        assert_eq!(state.players[0].hand.jokers(), 0);
        assert_eq!(state.players[0].reserved.len(), 1);
        // slot refilled from the deck
        assert_eq!(state.face_up[0].len(), 4);
    }

    #[test]
    fn reserve_grants_joker() {
        let mut state = fresh();
        let action = Action {
            player: 0,
            body: ActionBody::ReserveDeck { deck: 1 },
            give_back: TokenVector::zero(5),
        };
        apply(&mut state, &action).unwrap();
        assert_eq!(state.players[0].hand.jokers(), 1);
        assert_eq!(state.table_tokens.jokers(), 4);
        assert!(state.players[0].reserved[0].from_deck);
    }

    #[test]
    fn discount_examples() {
        let mut player = PlayerState_with_bonuses(&[(4, 1)]);
        let card = card_with_price(&[(4, 3)], 0);
        assert_eq!(discounted_price(&card, &player).get(4), 2);

        player = PlayerState_with_bonuses(&[(4, 5)]);
        let card = card_with_price(&[(4, 2)], 0);
        assert_eq!(discounted_price(&card, &player).get(4), 0);

        player = PlayerState_with_bonuses(&[(3, 1)]);
        let card = card_with_price(&[(4, 2), (3, 1)], 0);
        let d = discounted_price(&card, &player);
        assert_eq!((d.get(4), d.get(3)), (2, 0));
    }

    #[allow(non_snake_case)]
    fn PlayerState_with_bonuses(bonuses: &[(usize, u16)]) -> PlayerState {
        let mut state = fresh();
        for &(s, n) in bonuses {
            state.players[0].bonus_counts.set(s, n);
        }
        state.players[0].clone()
    }

    fn card_with_price(price: &[(usize, u16)], value: u8) -> Card {
        let mut p = TokenVector::zero(5);
        for &(s, n) in price {
            p.set(s, n);
        }
        Card {
            level: 1,
            bonus: 0,
            value,
            price: p,
        }
    }

    #[test]
    fn canonical_payment_fills_shortfall_with_jokers() {
        let mut state = fresh();
        state.players[0].hand.add(4, 1);
        state.players[0].hand.add_jokers(1);
        let card = card_with_price(&[(4, 2)], 0);
        let pay = canonical_payment(&card, &state.players[0]).unwrap();
        assert_eq!(pay.get(4), 1);
        assert_eq!(pay.jokers(), 1);

        state.players[0].hand.sub(4, 1);
        assert_eq!(canonical_payment(&card, &state.players[0]), None);

        let free = card_with_price(&[], 1);
        let pay = canonical_payment(&free, &state.players[0]).unwrap();
        assert_eq!(pay.total(), 0);
    }

    #[test]
    fn noble_pass_takes_exactly_one() {
        let mut state = fresh();
        // qualify for the first two table nobles
        let (a, b) = (state.nobles[0], state.nobles[1]);
        let mut bonuses = TokenVector::zero(5);
        for (s, n) in a.requirement.iter_suits() {
            bonuses.set(s, bonuses.get(s).max(n));
        }
        for (s, n) in b.requirement.iter_suits() {
            bonuses.set(s, bonuses.get(s).max(n));
        }
        state.players[0].bonus_counts = bonuses;
        let before = state.nobles.len();
        noble_pass(&mut state, 0);
        assert_eq!(state.players[0].nobles.len(), 1);
        assert_eq!(state.players[0].nobles[0], a, "lowest table index first");
        assert_eq!(state.nobles.len(), before - 1);
        assert_eq!(state.players[0].prestige, a.value as u32);
    }

    #[test]
    fn noble_pass_without_qualification_is_noop() {
        let mut state = fresh();
        let snapshot = state.clone();
        noble_pass(&mut state, 0);
        assert_eq!(state, snapshot);
    }

    #[test]
    fn noble_requirement_is_a_threshold() {
        let mut state = fresh();
        let noble = state.nobles[0];
        let mut bonuses = TokenVector::zero(5);
        for (s, n) in noble.requirement.iter_suits() {
            bonuses.set(s, n + 2); // surplus bonuses still qualify
        }
        state.players[0].bonus_counts = bonuses;
        noble_pass(&mut state, 0);
        assert_eq!(state.players[0].nobles.len(), 1);
    }

    #[test]
    fn buy_requires_canonical_payment() {
        let mut state = fresh();
        let card = state.face_up[0][0];
        // give the player exact suit tokens plus a spare joker
        for (s, n) in card.price.iter_suits() {
            state.players[0].hand.add(s, n);
            state.table_tokens.sub(s, n.min(state.table_tokens.get(s)));
        }
        state.players[0].hand.add_jokers(1);
        let canon = canonical_payment(&card, &state.players[0]).unwrap();
        assert_eq!(canon.jokers(), 0, "suit tokens first");

        let mut wrong = canon;
        if canon.total() > 0 {
            // swap one suit token for a joker: rejected as non-canonical
            let (s, _) = canon.iter_suits().find(|&(_, n)| n > 0).unwrap();
            wrong.sub(s, 1);
            wrong.add_jokers(1);
            let action = Action {
                player: 0,
                body: ActionBody::BuyTable {
                    deck: 0,
                    slot: 0,
                    payment: wrong,
                },
                give_back: TokenVector::zero(5),
            };
            assert_eq!(validate(&state, &action), Err(RuleViolation::WrongPayment));
        }

        let action = Action {
            player: 0,
            body: ActionBody::BuyTable {
                deck: 0,
                slot: 0,
                payment: canon,
            },
            give_back: TokenVector::zero(5),
        };
        apply(&mut state, &action).unwrap();
        assert_eq!(state.players[0].purchased.len(), 1);
        assert_eq!(state.players[0].prestige, card.value as u32);
        assert_eq!(
            state.players[0].bonus_counts.get(card.bonus as usize),
            1
        );
    }

    #[test]
    fn turn_check_enforced() {
        let state = fresh();
        assert_eq!(
            validate(&state, &pick_same(1, 0)),
            Err(RuleViolation::NotPlayersTurn)
        );
        assert_eq!(
            validate(&state, &pick_same(9, 0)),
            Err(RuleViolation::NoSuchPlayer)
        );
    }
}
