//! Player actions: the six active action kinds with their payloads.

use crate::tokens::{SuitSet, TokenVector};
use std::fmt;

/// Tag for the six active action kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionKind {
    PickDifferent,
    PickSame,
    ReserveTable,
    ReserveDeck,
    BuyTable,
    BuyReserved,
}

/// All six action kinds in a fixed order.
pub const ACTION_KINDS: [ActionKind; 6] = [
    ActionKind::PickDifferent,
    ActionKind::PickSame,
    ActionKind::ReserveTable,
    ActionKind::ReserveDeck,
    ActionKind::BuyTable,
    ActionKind::BuyReserved,
];

/// Kind-specific payload of an action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionBody {
    /// Take tokens of 1..=nTTPD distinct suits from the table.
    PickDifferent { suits: SuitSet },
    /// Take nTPS tokens of one suit whose stack is at least minTPS.
    PickSame { suit: u8 },
    /// Reserve a face-up card (deck row, slot within the row).
    ReserveTable { deck: u8, slot: u8 },
    /// Reserve the top card of a deck, face-down.
    ReserveDeck { deck: u8 },
    /// Buy a face-up card, paying `payment` (jokers allowed).
    BuyTable {
        deck: u8,
        slot: u8,
        payment: TokenVector,
    },
    /// Buy one of the player's own reserved cards.
    BuyReserved { slot: u8, payment: TokenVector },
}

/// One player action: payload plus the tokens given back to the table when
/// the action would leave the hand over the token limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Action {
    pub player: usize,
    pub body: ActionBody,
    pub give_back: TokenVector,
}

impl Action {
    pub fn kind(&self) -> ActionKind {
        match self.body {
            ActionBody::PickDifferent { .. } => ActionKind::PickDifferent,
            ActionBody::PickSame { .. } => ActionKind::PickSame,
            ActionBody::ReserveTable { .. } => ActionKind::ReserveTable,
            ActionBody::ReserveDeck { .. } => ActionKind::ReserveDeck,
            ActionBody::BuyTable { .. } => ActionKind::BuyTable,
            ActionBody::BuyReserved { .. } => ActionKind::BuyReserved,
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{} ", self.player)?;
        match &self.body {
            ActionBody::PickDifferent { suits } => write!(f, "pick-different {suits:?}")?,
            ActionBody::PickSame { suit } => write!(f, "pick-same suit {suit}")?,
            ActionBody::ReserveTable { deck, slot } => {
                write!(f, "reserve-table deck {deck} slot {slot}")?
            }
            ActionBody::ReserveDeck { deck } => write!(f, "reserve-deck {deck}")?,
            ActionBody::BuyTable { deck, slot, .. } => {
                write!(f, "buy-table deck {deck} slot {slot}")?
            }
            ActionBody::BuyReserved { slot, .. } => write!(f, "buy-reserved slot {slot}")?,
        }
        if self.give_back.total() > 0 {
            write!(f, " give-back {:?}", self.give_back)?;
        }
        Ok(())
    }
}
