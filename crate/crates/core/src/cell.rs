//! The eight cell types and the strand symbols they are built from.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// What a single strand does when it leaves its cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// `s`: keeps its position.
    Straight,
    /// `l`: moves one position to the left.
    Left,
    /// `r`: moves one position to the right.
    Right,
}

impl Symbol {
    /// Change of absolute position across one step (rightward positive).
    pub const fn displacement(self) -> i64 {
        match self {
            Symbol::Straight => 0,
            Symbol::Left => -1,
            Symbol::Right => 1,
        }
    }

    pub const fn class(self) -> Class {
        match self {
            Symbol::Straight => Class::S,
            Symbol::Left | Symbol::Right => Class::T,
        }
    }

    pub const fn mirrored(self) -> Symbol {
        match self {
            Symbol::Straight => Symbol::Straight,
            Symbol::Left => Symbol::Right,
            Symbol::Right => Symbol::Left,
        }
    }

    pub const fn letter(self) -> char {
        match self {
            Symbol::Straight => 's',
            Symbol::Left => 'l',
            Symbol::Right => 'r',
        }
    }
}

/// Which strand is on top in a crossing cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// The rightmost strand goes over the leftmost one.
    Z,
    /// The leftmost strand goes over the rightmost one.
    S,
}

impl Orientation {
    pub const fn mirrored(self) -> Orientation {
        match self {
            Orientation::Z => Orientation::S,
            Orientation::S => Orientation::Z,
        }
    }

    /// Crossing-rule bit value that selects this orientation.
    pub const fn bit(self) -> bool {
        matches!(self, Orientation::Z)
    }

    pub const fn from_bit(bit: bool) -> Orientation {
        if bit {
            Orientation::Z
        } else {
            Orientation::S
        }
    }
}

/// Coarse content class used to index rule bits: straight, empty or turning.
///
/// The discriminants are the base-3 digits of a rule bit index, so
/// `bit = 3 * left + right` gives SS=0, SE=1, ST=2, ES=3, EE=4, ET=5, TS=6,
/// TE=7 and TT=8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    S = 0,
    E = 1,
    T = 2,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::S, Class::E, Class::T];

    pub const fn letter(self) -> char {
        match self {
            Class::S => 'S',
            Class::E => 'E',
            Class::T => 'T',
        }
    }
}

/// Rule bit addressed by a (left, right) class pair.
pub const fn bit_index(left: Class, right: Class) -> usize {
    3 * left as usize + right as usize
}

/// Inverse of [`bit_index`].
pub const fn bit_classes(bit: usize) -> (Class, Class) {
    (Class::ALL[bit / 3], Class::ALL[bit % 3])
}

/// Two-letter name of a rule bit, e.g. `"ET"` for bit 5.
pub fn bit_name(bit: usize) -> String {
    let (l, r) = bit_classes(bit);
    format!("{}{}", l.letter(), r.letter())
}

/// Contents of one two-slot cell.
///
/// Only the eight admissible forms are representable; a left slot can hold
/// `s` or `r` and a right slot `s` or `l`, and two strands only share a cell
/// as `[s,s]` or as a crossing `[r,l]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum CellContent {
    /// `[n,n]`
    #[default]
    Empty,
    /// `[s,n]`
    LeftStraight,
    /// `[n,s]`
    RightStraight,
    /// `[s,s]`
    DoubleStraight,
    /// `[r,n]`
    RightTurn,
    /// `[n,l]`
    LeftTurn,
    /// `[r,l]`, either Z or S.
    Crossing(Orientation),
}

impl CellContent {
    pub const ALL: [CellContent; 8] = [
        CellContent::Empty,
        CellContent::LeftStraight,
        CellContent::RightStraight,
        CellContent::DoubleStraight,
        CellContent::RightTurn,
        CellContent::LeftTurn,
        CellContent::Crossing(Orientation::Z),
        CellContent::Crossing(Orientation::S),
    ];

    /// Strand in the left slot (`s` or `r`), if any.
    pub const fn left(self) -> Option<Symbol> {
        match self {
            CellContent::LeftStraight | CellContent::DoubleStraight => Some(Symbol::Straight),
            CellContent::RightTurn | CellContent::Crossing(_) => Some(Symbol::Right),
            _ => None,
        }
    }

    /// Strand in the right slot (`s` or `l`), if any.
    pub const fn right(self) -> Option<Symbol> {
        match self {
            CellContent::RightStraight | CellContent::DoubleStraight => Some(Symbol::Straight),
            CellContent::LeftTurn | CellContent::Crossing(_) => Some(Symbol::Left),
            _ => None,
        }
    }

    /// Builds a cell from its two slots. Returns `None` for the forbidden
    /// mixed forms; `orientation` is only consulted for `[r,l]`.
    pub fn from_slots(
        left: Option<Symbol>,
        right: Option<Symbol>,
        orientation: Orientation,
    ) -> Option<CellContent> {
        use Symbol::*;
        Some(match (left, right) {
            (None, None) => CellContent::Empty,
            (Some(Straight), None) => CellContent::LeftStraight,
            (None, Some(Straight)) => CellContent::RightStraight,
            (Some(Straight), Some(Straight)) => CellContent::DoubleStraight,
            (Some(Right), None) => CellContent::RightTurn,
            (None, Some(Left)) => CellContent::LeftTurn,
            (Some(Right), Some(Left)) => CellContent::Crossing(orientation),
            _ => return None,
        })
    }

    pub const fn strand_count(self) -> usize {
        match self {
            CellContent::Empty => 0,
            CellContent::DoubleStraight | CellContent::Crossing(_) => 2,
            _ => 1,
        }
    }

    pub const fn is_empty(self) -> bool {
        matches!(self, CellContent::Empty)
    }

    pub const fn is_crossing(self) -> bool {
        matches!(self, CellContent::Crossing(_))
    }

    /// Raw class of the whole cell: empty, straight or turning.
    pub const fn class(self) -> Class {
        match self {
            CellContent::Empty => Class::E,
            CellContent::LeftStraight
            | CellContent::RightStraight
            | CellContent::DoubleStraight => Class::S,
            _ => Class::T,
        }
    }

    /// Left-right mirror image: slots swap, `r` and `l` swap, Z and S swap.
    pub fn mirrored(self) -> CellContent {
        match self {
            CellContent::Crossing(o) => CellContent::Crossing(o.mirrored()),
            other => CellContent::from_slots(
                other.right().map(Symbol::mirrored),
                other.left().map(Symbol::mirrored),
                Orientation::Z,
            )
            .expect("mirror of an admissible cell is admissible"),
        }
    }

    /// Two-character text token (`--`, `s-`, `-s`, `ss`, `r-`, `-l`, `rl`, `RL`).
    pub const fn token(self) -> &'static str {
        match self {
            CellContent::Empty => "--",
            CellContent::LeftStraight => "s-",
            CellContent::RightStraight => "-s",
            CellContent::DoubleStraight => "ss",
            CellContent::RightTurn => "r-",
            CellContent::LeftTurn => "-l",
            CellContent::Crossing(Orientation::Z) => "rl",
            CellContent::Crossing(Orientation::S) => "RL",
        }
    }
}

impl fmt::Display for CellContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for CellContent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CellContent::ALL
            .into_iter()
            .find(|c| c.token() == s)
            .ok_or_else(|| ParseError::new(0, 0, s, "unknown cell token"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_index_matches_named_bits() {
        let names: Vec<String> = (0..9).map(bit_name).collect();
        assert_eq!(
            names,
            ["SS", "SE", "ST", "ES", "EE", "ET", "TS", "TE", "TT"]
        );
        for bit in 0..9 {
            let (l, r) = bit_classes(bit);
            assert_eq!(bit_index(l, r), bit);
        }
    }

    #[test]
    fn mixed_cells_are_unrepresentable() {
        use Symbol::*;
        let o = Orientation::Z;
        assert_eq!(CellContent::from_slots(Some(Straight), Some(Left), o), None);
        assert_eq!(
            CellContent::from_slots(Some(Right), Some(Straight), o),
            None
        );
        assert_eq!(CellContent::from_slots(Some(Left), None, o), None);
        assert_eq!(CellContent::from_slots(None, Some(Right), o), None);
    }

    #[test]
    fn slots_round_trip() {
        for cell in CellContent::ALL {
            let o = match cell {
                CellContent::Crossing(o) => o,
                _ => Orientation::Z,
            };
            assert_eq!(
                CellContent::from_slots(cell.left(), cell.right(), o),
                Some(cell)
            );
            assert_eq!(cell.token().parse::<CellContent>().unwrap(), cell);
            assert_eq!(cell.mirrored().mirrored(), cell);
        }
    }

    #[test]
    fn mirror_swaps_turns_and_crossings() {
        assert_eq!(CellContent::RightTurn.mirrored(), CellContent::LeftTurn);
        assert_eq!(
            CellContent::LeftStraight.mirrored(),
            CellContent::RightStraight
        );
        assert_eq!(
            CellContent::DoubleStraight.mirrored(),
            CellContent::DoubleStraight
        );
        assert_eq!(
            CellContent::Crossing(Orientation::Z).mirrored(),
            CellContent::Crossing(Orientation::S)
        );
    }
}
