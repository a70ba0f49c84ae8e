//! Concrete and generic turning/crossing rules.
//!
//! Rule strings are nine characters with bit 0 leftmost, so `XXXX01XXX`
//! fixes bit 4 to 0 and bit 5 (ET) to 1.

use std::fmt;
use std::str::FromStr;

use crate::cell::{bit_classes, bit_index, Class};
use crate::error::{Contradiction, ParseError};

/// Index of the EE bit, which is always 0 in a turning rule.
pub const EMPTY_BIT: usize = 4;

/// Character order of a rule string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RuleOrder {
    /// Bit 0 is the first character.
    #[default]
    Canonical,
    /// Bit 8 is the first character.
    Reversed,
}

impl RuleOrder {
    fn canonical(self, s: &str) -> String {
        match self {
            RuleOrder::Canonical => s.to_string(),
            RuleOrder::Reversed => s.chars().rev().collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleKind {
    Turning,
    Crossing,
}

/// Bit index reached by swapping the left and right classes.
pub const fn mirror_bit(bit: usize) -> usize {
    let (l, r) = bit_classes(bit);
    bit_index(r, l)
}

fn parse_bits(s: &str, order: RuleOrder, allow_x: bool) -> Result<[Trit; 9], ParseError> {
    let canonical = order.canonical(s);
    if canonical.chars().count() != 9 {
        return Err(ParseError::new(
            0,
            0,
            s,
            "rule must have exactly 9 characters",
        ));
    }
    let mut out = [Trit::Any; 9];
    for (i, ch) in canonical.chars().enumerate() {
        out[i] = match ch {
            '0' => Trit::Zero,
            '1' => Trit::One,
            'X' | 'x' if allow_x => Trit::Any,
            _ => {
                let column = match order {
                    RuleOrder::Canonical => i,
                    RuleOrder::Reversed => 8 - i,
                };
                return Err(ParseError::new(
                    0,
                    column + 1,
                    s,
                    format!("bad rule character `{ch}`"),
                ));
            }
        };
    }
    Ok(out)
}

fn bits_to_u16(trits: &[Trit; 9]) -> u16 {
    trits
        .iter()
        .enumerate()
        .filter(|(_, t)| **t == Trit::One)
        .fold(0, |acc, (i, _)| acc | (1 << i))
}

/// A fully determined turning rule. Bit 4 is always 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TurningRule(u16);

impl TurningRule {
    /// Fails when bit 4 is set or bits beyond 8 are present.
    pub fn new(bits: u16) -> Result<Self, ParseError> {
        if bits >> 9 != 0 {
            return Err(ParseError::new(
                0,
                0,
                &bits.to_string(),
                "rule has more than 9 bits",
            ));
        }
        if bits & (1 << EMPTY_BIT) != 0 {
            return Err(ParseError::new(
                0,
                5,
                &bits.to_string(),
                "turning rule bit 4 must be 0",
            ));
        }
        Ok(TurningRule(bits))
    }

    /// All 256 turning rules.
    pub fn all() -> impl Iterator<Item = TurningRule> {
        (0u16..512)
            .filter(|b| b & (1 << EMPTY_BIT) == 0)
            .map(TurningRule)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    pub const fn bit(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn turns(self, left: Class, right: Class) -> bool {
        self.bit(bit_index(left, right))
    }

    pub fn parse_with_order(s: &str, order: RuleOrder) -> Result<Self, ParseError> {
        let trits = parse_bits(s, order, false)?;
        TurningRule::new(bits_to_u16(&trits)).map_err(|e| ParseError {
            token: s.into(),
            ..e
        })
    }

    /// The rule acting on mirrored patterns.
    pub fn mirrored(self) -> TurningRule {
        let mut out = 0;
        for i in 0..9 {
            if self.bit(i) {
                out |= 1 << mirror_bit(i);
            }
        }
        TurningRule(out)
    }

    pub fn to_generic(self) -> GenericRule {
        GenericRule::from_bits(RuleKind::Turning, self.0)
    }
}

/// A fully determined crossing rule; bit value 1 selects a Z crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingRule(u16);

impl CrossingRule {
    /// The rule with every bit 0, so every crossing is an S crossing.
    pub const ZERO: CrossingRule = CrossingRule(0);

    pub fn new(bits: u16) -> Result<Self, ParseError> {
        if bits >> 9 != 0 {
            return Err(ParseError::new(
                0,
                0,
                &bits.to_string(),
                "rule has more than 9 bits",
            ));
        }
        Ok(CrossingRule(bits))
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    pub const fn bit(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn parse_with_order(s: &str, order: RuleOrder) -> Result<Self, ParseError> {
        let trits = parse_bits(s, order, false)?;
        Ok(CrossingRule(bits_to_u16(&trits)))
    }

    /// Mirroring swaps the conditioning classes and exchanges Z with S.
    pub fn mirrored(self) -> CrossingRule {
        let mut out = 0;
        for i in 0..9 {
            if !self.bit(i) {
                out |= 1 << mirror_bit(i);
            }
        }
        CrossingRule(out)
    }

    pub fn to_generic(self) -> GenericRule {
        GenericRule::from_bits(RuleKind::Crossing, self.0)
    }
}

macro_rules! concrete_rule_text {
    ($ty:ty) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for i in 0..9 {
                    f.write_str(if self.bit(i) { "1" } else { "0" })?;
                }
                Ok(())
            }
        }

        impl FromStr for $ty {
            type Err = ParseError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                Self::parse_with_order(s, RuleOrder::Canonical)
            }
        }
    };
}

concrete_rule_text!(TurningRule);
concrete_rule_text!(CrossingRule);

/// One position of a generic rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Trit {
    Zero,
    One,
    /// Undetermined (`X`).
    Any,
}

impl Trit {
    pub const fn from_bool(b: bool) -> Trit {
        if b {
            Trit::One
        } else {
            Trit::Zero
        }
    }

    pub const fn admits(self, b: bool) -> bool {
        match self {
            Trit::Any => true,
            Trit::One => b,
            Trit::Zero => !b,
        }
    }

    const fn flipped(self) -> Trit {
        match self {
            Trit::Zero => Trit::One,
            Trit::One => Trit::Zero,
            Trit::Any => Trit::Any,
        }
    }

    pub const fn letter(self) -> char {
        match self {
            Trit::Zero => '0',
            Trit::One => '1',
            Trit::Any => 'X',
        }
    }
}

/// A rule with undetermined bits; stands for the set of its completions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenericRule {
    kind: RuleKind,
    trits: [Trit; 9],
}

impl GenericRule {
    /// Every bit undetermined (bit 4 of a turning rule is still 0).
    pub fn unconstrained(kind: RuleKind) -> Self {
        let mut trits = [Trit::Any; 9];
        if kind == RuleKind::Turning {
            trits[EMPTY_BIT] = Trit::Zero;
        }
        GenericRule { kind, trits }
    }

    fn from_bits(kind: RuleKind, bits: u16) -> Self {
        let mut trits = [Trit::Zero; 9];
        for (i, t) in trits.iter_mut().enumerate() {
            *t = Trit::from_bool(bits & (1 << i) != 0);
        }
        GenericRule { kind, trits }
    }

    /// Builds a rule from explicit trits. Bit 4 of a turning rule is forced to 0.
    pub fn new(kind: RuleKind, mut trits: [Trit; 9]) -> Result<Self, Contradiction> {
        if kind == RuleKind::Turning {
            if trits[EMPTY_BIT] == Trit::One {
                return Err(Contradiction {
                    bits: vec![EMPTY_BIT],
                });
            }
            trits[EMPTY_BIT] = Trit::Zero;
        }
        Ok(GenericRule { kind, trits })
    }

    pub fn parse(kind: RuleKind, s: &str) -> Result<Self, ParseError> {
        Self::parse_with_order(kind, s, RuleOrder::Canonical)
    }

    pub fn parse_with_order(kind: RuleKind, s: &str, order: RuleOrder) -> Result<Self, ParseError> {
        let trits = parse_bits(s, order, true)?;
        GenericRule::new(kind, trits)
            .map_err(|_| ParseError::new(0, 5, s, "turning rule bit 4 must be 0"))
    }

    pub const fn kind(&self) -> RuleKind {
        self.kind
    }

    pub const fn trits(&self) -> [Trit; 9] {
        self.trits
    }

    pub const fn get(&self, bit: usize) -> Trit {
        self.trits[bit]
    }

    /// Fixes one bit, failing if it is already fixed to the other value.
    pub fn with_bit(mut self, bit: usize, value: bool) -> Result<Self, Contradiction> {
        match self.trits[bit] {
            Trit::Any => {
                if self.kind == RuleKind::Turning && bit == EMPTY_BIT && value {
                    return Err(Contradiction { bits: vec![bit] });
                }
                self.trits[bit] = Trit::from_bool(value);
                Ok(self)
            }
            t if t.admits(value) => Ok(self),
            _ => Err(Contradiction { bits: vec![bit] }),
        }
    }

    /// Positionwise meet; `0 ⊓ 1` is a contradiction.
    pub fn meet(&self, other: &GenericRule) -> Result<GenericRule, Contradiction> {
        assert_eq!(
            self.kind, other.kind,
            "meet of a turning rule with a crossing rule"
        );
        let mut trits = self.trits;
        let mut bad = Vec::new();
        for (i, t) in trits.iter_mut().enumerate() {
            *t = match (*t, other.trits[i]) {
                (Trit::Any, x) | (x, Trit::Any) => x,
                (a, b) if a == b => a,
                _ => {
                    bad.push(i);
                    Trit::Any
                }
            };
        }
        if bad.is_empty() {
            Ok(GenericRule {
                kind: self.kind,
                trits,
            })
        } else {
            Err(Contradiction { bits: bad })
        }
    }

    pub fn is_compatible(&self, other: &GenericRule) -> bool {
        self.meet(other).is_ok()
    }

    /// True if `bits` (a concrete rule) is one of the completions.
    pub fn admits(&self, bits: u16) -> bool {
        self.trits
            .iter()
            .enumerate()
            .all(|(i, t)| t.admits(bits & (1 << i) != 0))
    }

    /// True if every completion of `other` is a completion of `self`.
    pub fn subsumes(&self, other: &GenericRule) -> bool {
        self.trits
            .iter()
            .zip(other.trits.iter())
            .all(|(a, b)| *a == Trit::Any || a == b)
    }

    pub fn undetermined(&self) -> impl Iterator<Item = usize> + '_ {
        (0..9).filter(|&i| self.trits[i] == Trit::Any)
    }

    pub fn completion_count(&self) -> usize {
        1 << self.undetermined().count()
    }

    /// All concrete rules obtained by fixing each `X` independently, in
    /// increasing numeric order.
    pub fn completions(&self) -> Vec<u16> {
        let free: Vec<usize> = self.undetermined().collect();
        let base = self
            .trits
            .iter()
            .enumerate()
            .filter(|(_, t)| **t == Trit::One)
            .fold(0u16, |acc, (i, _)| acc | (1 << i));
        let mut out: Vec<u16> = (0u32..(1 << free.len()))
            .map(|mask| {
                free.iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << j) != 0)
                    .fold(base, |acc, (_, &bit)| acc | (1 << bit))
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn turning_completions(&self) -> Vec<TurningRule> {
        assert_eq!(self.kind, RuleKind::Turning);
        self.completions().into_iter().map(TurningRule).collect()
    }

    pub fn crossing_completions(&self) -> Vec<CrossingRule> {
        assert_eq!(self.kind, RuleKind::Crossing);
        self.completions().into_iter().map(CrossingRule).collect()
    }

    /// The rule describing the mirrored pattern.
    pub fn mirrored(&self) -> GenericRule {
        let mut trits = [Trit::Any; 9];
        for (i, t) in self.trits.iter().enumerate() {
            trits[mirror_bit(i)] = match self.kind {
                RuleKind::Turning => *t,
                RuleKind::Crossing => t.flipped(),
            };
        }
        GenericRule {
            kind: self.kind,
            trits,
        }
    }
}

impl fmt::Display for GenericRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.trits {
            write!(f, "{}", t.letter())?;
        }
        Ok(())
    }
}
