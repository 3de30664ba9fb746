//! Error types shared across the engine.

use thiserror::Error;

/// Problems detected while setting up a game.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetupError {
    #[error("invalid game parameters: {0}")]
    InvalidParams(String),
    #[error("content set incompatible with parameters: {0}")]
    UnsupportedContent(String),
    #[error("content set too small: {0}")]
    ContentTooSmall(String),
    #[error("bad content file: {0}")]
    BadContentFile(String),
}

/// A rejected action, naming the rule it violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RuleViolation {
    #[error("player index out of range")]
    NoSuchPlayer,
    #[error("not this player's turn")]
    NotPlayersTurn,
    #[error("pick-different must name 1..=nTTPD distinct suits")]
    PickDifferentSuitCount,
    #[error("suit index out of range")]
    SuitOutOfRange,
    #[error("table stack too small for pick-different")]
    PickDifferentStackTooSmall,
    #[error("table stack below the pick-same minimum")]
    PickSameStackTooSmall,
    #[error("deck index out of range")]
    NoSuchDeck,
    #[error("face-up slot index out of range")]
    NoSuchSlot,
    #[error("deck is empty")]
    EmptyDeck,
    #[error("reserved-card limit reached")]
    ReserveLimitReached,
    #[error("no card in that reserved slot")]
    NoSuchReservedSlot,
    #[error("payment does not match the canonical payment for the card")]
    WrongPayment,
    #[error("card is not affordable")]
    Unaffordable,
    #[error("give-back exceeds tokens held after the action")]
    GiveBackExceedsHand,
    #[error("give-back must bring the hand exactly down to the token limit")]
    GiveBackWrongTotal,
}

/// Raised when the player to move has no legal action of any kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("player {player} has no legal action")]
pub struct Stalemate {
    pub player: usize,
}

/// Raised by any forward-model use after the budget is spent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("forward-model budget expired")]
pub struct BudgetExpired;

/// Errors surfaced by budget-metered forward-model calls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FmError {
    #[error(transparent)]
    Budget(#[from] BudgetExpired),
    #[error(transparent)]
    Stalemate(#[from] Stalemate),
    #[error(transparent)]
    Rule(#[from] RuleViolation),
}

/// What an agent can report back instead of an action.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AgentError {
    #[error(transparent)]
    Stalemate(#[from] Stalemate),
    #[error(transparent)]
    Budget(#[from] BudgetExpired),
    #[error("agent failed: {0}")]
    Failed(String),
}

impl From<FmError> for AgentError {
    fn from(e: FmError) -> Self {
        match e {
            FmError::Budget(b) => AgentError::Budget(b),
            FmError::Stalemate(s) => AgentError::Stalemate(s),
            FmError::Rule(r) => AgentError::Failed(r.to_string()),
        }
    }
}
