//! Mutable game state, setup, scoring and hidden-information sampling.

use crate::content::{Card, ContentSet, Noble};
use crate::error::SetupError;
use crate::params::GameParams;
use crate::rng::Rng64;
use crate::tokens::TokenVector;

/// A card in a player's reserve. `from_deck` marks cards drawn face-down
/// from a deck, hidden from the other players until purchased.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReservedCard {
    pub card: Card,
    pub from_deck: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlayerState {
    pub hand: TokenVector,
    pub purchased: Vec<Card>,
    pub reserved: Vec<ReservedCard>,
    pub nobles: Vec<Noble>,
    /// Cached per-suit counts of purchased-card bonuses.
    pub bonus_counts: TokenVector,
    /// Cached sum of purchased-card and noble values.
    pub prestige: u32,
}

impl PlayerState {
    fn new(suits: usize) -> Self {
        PlayerState {
            hand: TokenVector::zero(suits),
            purchased: Vec::new(),
            reserved: Vec::new(),
            nobles: Vec::new(),
            bonus_counts: TokenVector::zero(suits),
            prestige: 0,
        }
    }

    /// Prestige recomputed from owned cards and nobles (cache check).
    pub fn recomputed_prestige(&self) -> u32 {
        self.purchased.iter().map(|c| c.value as u32).sum::<u32>()
            + self.nobles.iter().map(|n| n.value as u32).sum::<u32>()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    pub params: GameParams,
    pub table_tokens: TokenVector,
    /// Hidden, ordered decks; the top card is the last element.
    pub decks: Vec<Vec<Card>>,
    /// Face-up rows, one per deck, each at most FUC cards.
    pub face_up: Vec<Vec<Card>>,
    pub nobles: Vec<Noble>,
    pub players: Vec<PlayerState>,
    /// Turn counter: one tick per player turn.
    pub tick: u32,
    pub current_player: usize,
    /// Set once any player reaches the prestige goal; the game ends when the
    /// turn pointer next wraps to player 0.
    pub final_round: bool,
    pub rng: Rng64,
}

/// Set up a fresh game. Identical `(params, content, seed)` produce
/// identical states.
pub fn new_game(
    params: &GameParams,
    content: &ContentSet,
    seed: u64,
) -> Result<GameState, SetupError> {
    params.validate()?;
    content.validate_for(params)?;

    let mut rng = Rng64::new(seed);
    let suits = params.token_suits;

    let mut decks: Vec<Vec<Card>> = content.decks.clone();
    for deck in &mut decks {
        rng.shuffle(deck);
    }
    let mut face_up = Vec::with_capacity(decks.len());
    for deck in &mut decks {
        let mut row = Vec::with_capacity(params.face_up_per_deck);
        for _ in 0..params.face_up_per_deck {
            row.push(deck.pop().expect("validated deck size"));
        }
        face_up.push(row);
    }

    let mut nobles = content.nobles.clone();
    rng.shuffle(&mut nobles);
    nobles.truncate(params.nobles_on_table());

    let mut table_tokens = TokenVector::zero(suits);
    for s in 0..suits {
        table_tokens.set(s, params.table_tokens_per_suit());
    }
    table_tokens.set_jokers(params.jokers);

    Ok(GameState {
        params: *params,
        table_tokens,
        decks,
        face_up,
        nobles,
        players: (0..params.players).map(|_| PlayerState::new(suits)).collect(),
        tick: 0,
        current_player: 0,
        final_round: false,
        rng,
    })
}

/// A player's prestige points. Panics on an out-of-range index.
pub fn score(state: &GameState, player: usize) -> u32 {
    assert!(
        player < state.players.len(),
        "player {player} out of range for {}-player game",
        state.players.len()
    );
    state.players[player].prestige
}

/// Deep-copy the state for one observer, re-sampling everything that player
/// cannot see: remaining deck orders and the other players' face-down
/// reserved cards (swapped through the decks so all counts are conserved).
/// The observer's own information is preserved exactly.
pub fn copy_for_player(state: &GameState, observer: usize, seed: u64) -> GameState {
    let mut copy = state.clone();
    copy.rng = Rng64::new(seed);

    // Return every hidden opponent card to its deck...
    for (pi, player) in copy.players.iter_mut().enumerate() {
        if pi == observer {
            continue;
        }
        for slot in player.reserved.iter_mut().filter(|r| r.from_deck) {
            copy.decks[slot.card.level as usize - 1].push(slot.card);
        }
    }
    // ...shuffle all decks, then draw fresh replacements in a fixed order.
    for deck in &mut copy.decks {
        let mut r = copy.rng.split();
        r.shuffle(deck);
    }
    for (pi, player) in copy.players.iter_mut().enumerate() {
        if pi == observer {
            continue;
        }
        for slot in player.reserved.iter_mut().filter(|r| r.from_deck) {
            slot.card = copy.decks[slot.card.level as usize - 1]
                .pop()
                .expect("a card was returned to this deck");
        }
    }
    copy
}

/// Advance the turn pointer without any player action (a do-nothing turn
/// inside simulations).
pub fn advance_turn(state: &mut GameState) {
    state.tick += 1;
    state.current_player = (state.current_player + 1) % state.params.players;
}

impl GameState {
    /// True once the final round has completed: the prestige goal was
    /// reached and the turn pointer has wrapped back to player 0.
    pub fn game_over(&self) -> bool {
        self.final_round && self.current_player == 0
    }

    /// Record whether any player has reached the prestige goal.
    pub fn refresh_final_round(&mut self) {
        if !self.final_round
            && self
                .players
                .iter()
                .any(|p| p.prestige >= self.params.prestige_goal)
        {
            self.final_round = true;
        }
    }
}

/// Verify every conservation invariant against the content set the state
/// was built from. Intended for tests and fuzz harnesses.
pub fn check_invariants(state: &GameState, content: &ContentSet) -> Result<(), String> {
    let params = &state.params;

    for s in 0..params.token_suits {
        let held: u32 = state.players.iter().map(|p| p.hand.get(s) as u32).sum();
        let expected = params.table_tokens_per_suit() as u32;
        if state.table_tokens.get(s) as u32 + held != expected {
            return Err(format!(
                "suit {s}: table {} + hands {held} != {expected}",
                state.table_tokens.get(s)
            ));
        }
    }
    let held_jokers: u32 = state.players.iter().map(|p| p.hand.jokers() as u32).sum();
    if state.table_tokens.jokers() as u32 + held_jokers != params.jokers as u32 {
        return Err("joker count not conserved".into());
    }

    let in_decks: usize = state.decks.iter().map(Vec::len).sum();
    let face_up: usize = state.face_up.iter().map(Vec::len).sum();
    let owned: usize = state
        .players
        .iter()
        .map(|p| p.purchased.len() + p.reserved.len())
        .sum();
    if in_decks + face_up + owned != content.total_cards() {
        return Err(format!(
            "cards not conserved: decks {in_decks} + face-up {face_up} + owned {owned} != {}",
            content.total_cards()
        ));
    }

    let noble_count: usize =
        state.nobles.len() + state.players.iter().map(|p| p.nobles.len()).sum::<usize>();
    if noble_count != params.nobles_on_table() {
        return Err(format!(
            "nobles not conserved: {noble_count} != {}",
            params.nobles_on_table()
        ));
    }

    for (pi, player) in state.players.iter().enumerate() {
        if player.hand.total() > params.max_tokens_held as u32 {
            return Err(format!("player {pi} holds too many tokens"));
        }
        if player.reserved.len() > params.max_reserved {
            return Err(format!("player {pi} reserves too many cards"));
        }
        if player.prestige != player.recomputed_prestige() {
            return Err(format!("player {pi} prestige cache is stale"));
        }
        for s in 0..params.token_suits {
            let bonuses = player
                .purchased
                .iter()
                .filter(|c| c.bonus as usize == s)
                .count() as u16;
            if player.bonus_counts.get(s) != bonuses {
                return Err(format!("player {pi} bonus cache wrong for suit {s}"));
            }
        }
    }
    Ok(())
}
