//! Token arithmetic: per-suit counts plus the joker slot.

use std::fmt;

/// Hard engine capacity for common token suits. Rule parameters beyond this
/// are rejected at setup.
pub const MAX_SUITS: usize = 7;

/// Index of the joker slot inside a [`TokenVector`].
pub const JOKER: usize = MAX_SUITS;

/// Per-suit token counts plus a joker count, for a game with `suits`
/// common suits. Stored inline so states copy cheaply.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TokenVector {
    counts: [u16; MAX_SUITS + 1],
    suits: u8,
}

impl TokenVector {
    pub fn zero(suits: usize) -> Self {
        debug_assert!(suits <= MAX_SUITS);
        TokenVector {
            counts: [0; MAX_SUITS + 1],
            suits: suits as u8,
        }
    }

    /// Number of common suits this vector is sized for.
    pub fn suit_count(&self) -> usize {
        self.suits as usize
    }

    pub fn get(&self, suit: usize) -> u16 {
        debug_assert!(suit < self.suits as usize);
        self.counts[suit]
    }

    pub fn set(&mut self, suit: usize, n: u16) {
        debug_assert!(suit < self.suits as usize);
        self.counts[suit] = n;
    }

    pub fn jokers(&self) -> u16 {
        self.counts[JOKER]
    }

    pub fn set_jokers(&mut self, n: u16) {
        self.counts[JOKER] = n;
    }

    pub fn add(&mut self, suit: usize, n: u16) {
        debug_assert!(suit < self.suits as usize);
        self.counts[suit] += n;
    }

    pub fn add_jokers(&mut self, n: u16) {
        self.counts[JOKER] += n;
    }

    /// Subtract `n` from a suit; panics in debug builds on underflow.
    pub fn sub(&mut self, suit: usize, n: u16) {
        debug_assert!(suit < self.suits as usize);
        self.counts[suit] -= n;
    }

    pub fn sub_jokers(&mut self, n: u16) {
        self.counts[JOKER] -= n;
    }

    /// Total across suits and jokers.
    pub fn total(&self) -> u32 {
        let mut t = self.counts[JOKER] as u32;
        for s in 0..self.suits as usize {
            t += self.counts[s] as u32;
        }
        t
    }

    /// Suit entries only (joker excluded), as `(suit, count)` pairs.
    pub fn iter_suits(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        (0..self.suits as usize).map(move |s| (s, self.counts[s]))
    }

    /// True if every entry of `self` (suits and jokers) is <= `other`'s.
    pub fn fits_within(&self, other: &TokenVector) -> bool {
        (0..self.suits as usize)
            .all(|s| self.counts[s] <= other.counts[s])
            && self.counts[JOKER] <= other.counts[JOKER]
    }

    /// Entry-wise add of `other` into `self`.
    pub fn add_all(&mut self, other: &TokenVector) {
        for s in 0..self.suits as usize {
            self.counts[s] += other.counts[s];
        }
        self.counts[JOKER] += other.counts[JOKER];
    }

    /// Entry-wise subtract of `other` from `self`; caller guarantees fit.
    pub fn sub_all(&mut self, other: &TokenVector) {
        for s in 0..self.suits as usize {
            self.counts[s] -= other.counts[s];
        }
        self.counts[JOKER] -= other.counts[JOKER];
    }
}

impl fmt::Debug for TokenVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suits: Vec<u16> = (0..self.suits as usize).map(|s| self.counts[s]).collect();
        write!(f, "{:?}+{}j", suits, self.counts[JOKER])
    }
}

/// A set of distinct suit indices, stored as a bitmask (suits < [`MAX_SUITS`]).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SuitSet(u8);

impl SuitSet {
    pub fn empty() -> Self {
        SuitSet(0)
    }

    pub fn insert(&mut self, suit: usize) {
        debug_assert!(suit < 8);
        self.0 |= 1 << suit;
    }

    pub fn contains(&self, suit: usize) -> bool {
        self.0 & (1 << suit) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..8).filter(move |&s| self.contains(s))
    }

    pub fn from_slice(suits: &[usize]) -> Self {
        let mut set = SuitSet::empty();
        for &s in suits {
            set.insert(s);
        }
        set
    }
}

impl fmt::Debug for SuitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
