//! Immutable game content: development cards and noble tiles.
//!
//! Content is loaded from CSV files. The bundled set replicates the published
//! 90-card / 10-noble game; suit indices follow the data files
//! (0=emerald, 1=diamond, 2=sapphire, 3=onyx, 4=ruby).

use crate::error::SetupError;
use crate::params::GameParams;
use crate::tokens::TokenVector;
use std::sync::OnceLock;

const BUNDLED_CARDS: &str = include_str!("../data/cards.csv");
const BUNDLED_NOBLES: &str = include_str!("../data/nobles.csv");

/// A development card: deck level (1-based), bonus suit, prestige value and
/// a joker-free price.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Card {
    pub level: u8,
    pub bonus: u8,
    pub value: u8,
    pub price: TokenVector,
}

/// A noble tile: prestige value and the per-suit bonus-card counts that
/// attract it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Noble {
    pub value: u8,
    pub requirement: TokenVector,
}

/// A full card-and-noble set, grouped by deck level.
#[derive(Debug, Clone, PartialEq)]
pub struct ContentSet {
    /// `decks[d]` holds the cards of level `d+1` in file order.
    pub decks: Vec<Vec<Card>>,
    pub nobles: Vec<Noble>,
    /// Number of common suits the files were written for.
    pub suits: usize,
}

static BUNDLED: OnceLock<ContentSet> = OnceLock::new();

impl ContentSet {
    /// The built-in 90-card / 10-noble set.
    pub fn bundled() -> &'static ContentSet {
        BUNDLED.get_or_init(|| {
            ContentSet::from_csv(BUNDLED_CARDS, BUNDLED_NOBLES)
                .expect("bundled content files are well-formed")
        })
    }

    pub fn from_files(cards_path: &str, nobles_path: &str) -> Result<ContentSet, SetupError> {
        let cards = std::fs::read_to_string(cards_path)
            .map_err(|e| SetupError::BadContentFile(format!("{cards_path}: {e}")))?;
        let nobles = std::fs::read_to_string(nobles_path)
            .map_err(|e| SetupError::BadContentFile(format!("{nobles_path}: {e}")))?;
        ContentSet::from_csv(&cards, &nobles)
    }

    /// Parse card and noble CSVs. Cards: `level,bonus,value,cost_suit0,...`;
    /// nobles: `value,req_suit0,...`. The suit count is inferred from the
    /// header column count.
    pub fn from_csv(cards_csv: &str, nobles_csv: &str) -> Result<ContentSet, SetupError> {
        let bad = |m: String| SetupError::BadContentFile(m);

        let mut reader = csv::Reader::from_reader(cards_csv.as_bytes());
        let suits = reader
            .headers()
            .map_err(|e| bad(format!("cards header: {e}")))?
            .len()
            .checked_sub(3)
            .ok_or_else(|| bad("cards header too short".into()))?;
        if suits == 0 || suits > crate::tokens::MAX_SUITS {
            return Err(bad(format!("unsupported suit count {suits} in cards file")));
        }

        let mut max_level = 0usize;
        let mut cards = Vec::new();
        for (i, row) in reader.records().enumerate() {
            let row = row.map_err(|e| bad(format!("cards row {i}: {e}")))?;
            let field = |j: usize| -> Result<u16, SetupError> {
                row.get(j)
                    .ok_or_else(|| bad(format!("cards row {i}: missing column {j}")))?
                    .trim()
                    .parse::<u16>()
                    .map_err(|e| bad(format!("cards row {i} col {j}: {e}")))
            };
            let level = field(0)?;
            let bonus = field(1)?;
            let value = field(2)?;
            if level == 0 {
                return Err(bad(format!("cards row {i}: level must be 1-based")));
            }
            if (bonus as usize) >= suits {
                return Err(bad(format!("cards row {i}: bonus suit out of range")));
            }
            let mut price = TokenVector::zero(suits);
            for s in 0..suits {
                price.set(s, field(3 + s)?);
            }
            max_level = max_level.max(level as usize);
            cards.push(Card {
                level: level as u8,
                bonus: bonus as u8,
                value: value as u8,
                price,
            });
        }
        if cards.is_empty() {
            return Err(bad("cards file has no data rows".into()));
        }

        let mut decks = vec![Vec::new(); max_level];
        for card in cards {
            decks[card.level as usize - 1].push(card);
        }

        let mut reader = csv::Reader::from_reader(nobles_csv.as_bytes());
        let noble_suits = reader
            .headers()
            .map_err(|e| bad(format!("nobles header: {e}")))?
            .len()
            .checked_sub(1)
            .ok_or_else(|| bad("nobles header too short".into()))?;
        if noble_suits != suits {
            return Err(bad(format!(
                "nobles file has {noble_suits} suits, cards file has {suits}"
            )));
        }
        let mut nobles = Vec::new();
        for (i, row) in reader.records().enumerate() {
            let row = row.map_err(|e| bad(format!("nobles row {i}: {e}")))?;
            let field = |j: usize| -> Result<u16, SetupError> {
                row.get(j)
                    .ok_or_else(|| bad(format!("nobles row {i}: missing column {j}")))?
                    .trim()
                    .parse::<u16>()
                    .map_err(|e| bad(format!("nobles row {i} col {j}: {e}")))
            };
            let value = field(0)?;
            let mut requirement = TokenVector::zero(suits);
            for s in 0..suits {
                requirement.set(s, field(1 + s)?);
            }
            if value == 0 || requirement.total() == 0 {
                return Err(bad(format!(
                    "nobles row {i}: value and requirement must be positive"
                )));
            }
            nobles.push(Noble {
                value: value as u8,
                requirement,
            });
        }

        Ok(ContentSet {
            decks,
            nobles,
            suits,
        })
    }

    pub fn total_cards(&self) -> usize {
        self.decks.iter().map(Vec::len).sum()
    }

    /// Check that a parameter vector can be played with this content.
    pub fn validate_for(&self, params: &GameParams) -> Result<(), SetupError> {
        if params.token_suits != self.suits {
            return Err(SetupError::UnsupportedContent(format!(
                "content has {} suits but nTT={}",
                self.suits, params.token_suits
            )));
        }
        if params.decks != self.decks.len() {
            return Err(SetupError::UnsupportedContent(format!(
                "content has {} decks but D={}",
                self.decks.len(),
                params.decks
            )));
        }
        for (d, deck) in self.decks.iter().enumerate() {
            if deck.len() < params.face_up_per_deck {
                return Err(SetupError::ContentTooSmall(format!(
                    "deck {} has {} cards, cannot deal {} face-up",
                    d + 1,
                    deck.len(),
                    params.face_up_per_deck
                )));
            }
        }
        if self.nobles.len() < params.nobles_on_table() {
            return Err(SetupError::ContentTooSmall(format!(
                "{} nobles available, {} needed",
                self.nobles.len(),
                params.nobles_on_table()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_set_shape() {
        let content = ContentSet::bundled();
        assert_eq!(content.suits, 5);
        assert_eq!(content.decks.len(), 3);
        assert_eq!(content.decks[0].len(), 40);
        assert_eq!(content.decks[1].len(), 30);
        assert_eq!(content.decks[2].len(), 20);
        assert_eq!(content.total_cards(), 90);
        assert_eq!(content.nobles.len(), 10);
        // prices never include jokers
        for deck in &content.decks {
            for card in deck {
                assert_eq!(card.price.jokers(), 0);
                assert!(card.price.total() > 0);
                assert!((card.bonus as usize) < 5);
            }
        }
        // total prestige in cards and nobles of the published set
        let card_points: u32 = content
            .decks
            .iter()
            .flatten()
            .map(|c| c.value as u32)
            .sum();
        assert_eq!(card_points, 140);
        let noble_points: u32 = content.nobles.iter().map(|n| n.value as u32).sum();
        assert_eq!(noble_points, 30);
    }

    #[test]
    fn bundled_set_accepts_default_params() {
        let content = ContentSet::bundled();
        assert!(content.validate_for(&GameParams::default()).is_ok());
        assert!(content.validate_for(&GameParams::for_players(2)).is_ok());
    }

    #[test]
    fn rejects_mismatched_params() {
        let content = ContentSet::bundled();
        let mut p = GameParams::default();
        p.token_suits = 4;
        assert!(matches!(
            content.validate_for(&p),
            Err(SetupError::UnsupportedContent(_))
        ));
        p = GameParams::default();
        p.decks = 2;
        assert!(matches!(
            content.validate_for(&p),
            Err(SetupError::UnsupportedContent(_))
        ));
        p = GameParams::default();
        p.extra_nobles = 20;
        assert!(matches!(
            content.validate_for(&p),
            Err(SetupError::ContentTooSmall(_))
        ));
    }

    #[test]
    fn rejects_malformed_csv() {
        assert!(ContentSet::from_csv("level,bonus,value\n", "value,req_suit0\n").is_err());
        assert!(ContentSet::from_csv(
            "level,bonus,value,cost_suit0\n1,0,0,x\n",
            "value,req_suit0\n3,1\n"
        )
        .is_err());
    }
}
