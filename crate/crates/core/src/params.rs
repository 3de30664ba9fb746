//! The rule/setup parameter vector that governs every game mechanic.

use crate::error::SetupError;
use crate::tokens::MAX_SUITS;
use serde::{Deserialize, Serialize};

/// All thirteen rule and setup parameters of the game family.
///
/// Defaults are the base four-player game. Every mechanic in the engine
/// reads these rather than hard-coded constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(default)]
pub struct GameParams {
    /// Number of players (P).
    pub players: usize,
    /// Number of common token suits (nTT).
    pub token_suits: usize,
    /// Number of joker tokens in play (nJT).
    pub jokers: u16,
    /// Number of card decks (D).
    pub decks: usize,
    /// Face-up cards dealt per deck (FUC).
    pub face_up_per_deck: usize,
    /// Nobles on the table beyond the player count (EN).
    pub extra_nobles: usize,
    /// Maximum tokens a player may hold after a resolved action (maxT).
    pub max_tokens_held: u16,
    /// Maximum simultaneously reserved cards (maxRC).
    pub max_reserved: usize,
    /// Prestige threshold that triggers the final round (PP).
    pub prestige_goal: u32,
    /// Maximum distinct suits in one pick-different action (nTTPD).
    pub pick_different_max_suits: usize,
    /// Tokens taken per chosen suit in pick-different (nTPD).
    pub pick_different_per_suit: u16,
    /// Tokens taken in pick-same (nTPS).
    pub pick_same_count: u16,
    /// Minimum stack size for pick-same to be legal (minTPS).
    pub pick_same_min_stack: u16,
}

impl Default for GameParams {
    fn default() -> Self {
        GameParams {
            players: 4,
            token_suits: 5,
            jokers: 5,
            decks: 3,
            face_up_per_deck: 4,
            extra_nobles: 1,
            max_tokens_held: 10,
            max_reserved: 3,
            prestige_goal: 15,
            pick_different_max_suits: 3,
            pick_different_per_suit: 1,
            pick_same_count: 2,
            pick_same_min_stack: 4,
        }
    }
}

impl GameParams {
    /// Default rules for a given player count.
    pub fn for_players(players: usize) -> Self {
        GameParams {
            players,
            ..GameParams::default()
        }
    }

    pub fn validate(&self) -> Result<(), SetupError> {
        if self.players < 2 {
            return Err(SetupError::InvalidParams(format!(
                "at least 2 players required, got {}",
                self.players
            )));
        }
        if self.token_suits < 1 {
            return Err(SetupError::InvalidParams(
                "at least one token suit required".into(),
            ));
        }
        if self.token_suits > MAX_SUITS {
            return Err(SetupError::InvalidParams(format!(
                "engine supports at most {MAX_SUITS} token suits, got {}",
                self.token_suits
            )));
        }
        if self.decks < 1 {
            return Err(SetupError::InvalidParams(
                "at least one deck required".into(),
            ));
        }
        if self.prestige_goal < 1 {
            return Err(SetupError::InvalidParams(
                "prestige goal must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Common tokens placed on the table per suit at setup: the published
    /// supply table (4 for two players, 5 for three, all 7 otherwise).
    pub fn table_tokens_per_suit(&self) -> u16 {
        match self.players {
            2 => 4,
            3 => 5,
            _ => 7,
        }
    }

    /// Nobles drawn onto the table at setup.
    pub fn nobles_on_table(&self) -> usize {
        self.players + self.extra_nobles
    }
}
