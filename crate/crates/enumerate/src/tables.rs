//! Built-in expected classifications of one- and two-stranded repeating
//! patterns.
//!
//! Rows are per-row normalized cell sequences; the absolute layout is rebuilt
//! by threading strand moves.

use sca_analysis::{LayoutError, Period, Speed};
use sca_core::{CellContent, GenericRule, RuleKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    /// Item number in the reference list.
    pub item: usize,
    /// Generations separated by `;`, cells by spaces.
    pub rows: &'static str,
    pub turning: &'static str,
    pub crossing: &'static str,
    pub displacement: i64,
    pub period_len: usize,
}

impl TableEntry {
    pub fn period(&self) -> Result<Period, LayoutError> {
        let keys: Vec<Vec<CellContent>> = self
            .rows
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| t.parse().expect("table tokens are valid"))
                    .collect()
            })
            .collect();
        Period::from_keys(&keys)
    }

    pub fn turning_rule(&self) -> GenericRule {
        GenericRule::parse(RuleKind::Turning, self.turning).expect("table rule is valid")
    }

    pub fn crossing_rule(&self) -> GenericRule {
        GenericRule::parse(RuleKind::Crossing, self.crossing).expect("table rule is valid")
    }

    pub fn speed(&self) -> Speed {
        Speed {
            displacement: self.displacement,
            period_len: self.period_len,
        }
    }
}

const TRIVIAL: &str = "XXXXXXXXX";

macro_rules! entry {
    ($item:expr, $rows:expr, $t:expr, $c:expr, $d:expr, $p:expr) => {
        TableEntry {
            item: $item,
            rows: $rows,
            turning: $t,
            crossing: $c,
            displacement: $d,
            period_len: $p,
        }
    };
}

pub const ONE_STRAND: [TableEntry; 6] = [
    entry!(1, "s-;-s", "X0X00XXXX", TRIVIAL, 0, 2),
    entry!(2, "r-", "XXXX0XX1X", TRIVIAL, -1, 1),
    entry!(3, "-s;r-;s-", "X1X00XX0X", TRIVIAL, -1, 3),
    entry!(4, "-l", "XXXX01XXX", TRIVIAL, 1, 1),
    entry!(5, "s-;-l;-s", "X0X100XXX", TRIVIAL, 1, 3),
    entry!(6, "s-;-l;-s;r-", "X1X100X0X", TRIVIAL, 0, 4),
];

pub const TWO_STRAND: [TableEntry; 31] = [
    entry!(1, "rl;-s s-", "1XXX00X0X", "XXXX1XXXX", 0, 2),
    entry!(2, "RL;-s s-", "1XXX00X0X", "XXXX0XXXX", 0, 2),
    entry!(
        3,
        "rl;-s s-;ss;-l r-;-s -- s-;r- -l",
        "01X100X01",
        "XXXX1XXXX",
        0,
        6
    ),
    entry!(
        4,
        "RL;-s s-;ss;-l r-;-s -- s-;r- -l",
        "01X100X01",
        "XXXX0XXXX",
        0,
        6
    ),
    entry!(5, "ss;-l r-;-s -- s-;r- -l", "X1X100X00", TRIVIAL, 0, 4),
    entry!(6, "ss;-l s-;-s -s;r- s-", "10X1000XX", TRIVIAL, 0, 4),
    entry!(7, "ss;-s r-;s- s-;-s -l", "11000XX0X", TRIVIAL, 0, 4),
    entry!(
        8,
        "s- r-;-l -- s-;-s -- -l;r- -s",
        "X1X10000X",
        TRIVIAL,
        0,
        4
    ),
    entry!(
        9,
        "s- -l;-l -s;-s -- r-;r- -- s-",
        "X10100X0X",
        TRIVIAL,
        0,
        4
    ),
    entry!(
        10,
        "s- -s;-l -- r-;-s -- -- s-;r- -- -l",
        "X1X100X0X",
        TRIVIAL,
        0,
        4
    ),
    entry!(11, "-s -s;s- s-", "00X00XXXX", TRIVIAL, 0, 2),
    entry!(12, "-s s-;ss", "00X00XXXX", TRIVIAL, 0, 2),
    entry!(13, "s- -s;-s -- s-", "X0X00XXXX", TRIVIAL, 0, 2),
    entry!(
        14,
        "rl;-s s-;ss;-l s-;-s -l",
        "00110010X",
        "XXXX1XXXX",
        1,
        5
    ),
    entry!(
        15,
        "RL;-s s-;ss;-l s-;-s -l",
        "00110010X",
        "XXXX0XXXX",
        1,
        5
    ),
    entry!(
        16,
        "rl;-s s-;ss;-s r-;r- s-",
        "01100010X",
        "XXXX1XXXX",
        -1,
        5
    ),
    entry!(
        17,
        "RL;-s s-;ss;-s r-;r- s-",
        "01100010X",
        "XXXX0XXXX",
        -1,
        5
    ),
    entry!(18, "ss;-l s-;-s -l", "X001001XX", TRIVIAL, 1, 3),
    entry!(19, "-l -s;-s -- s-;s- -l", "X00100XXX", TRIVIAL, 1, 3),
    entry!(20, "s- -s;-l -- s-;-s -- -l", "X0X100XXX", TRIVIAL, 1, 3),
    entry!(21, "s- r-;-s -- s-;r- -s", "X1X00X00X", TRIVIAL, -1, 3),
    entry!(22, "ss;-s r-;r- s-", "X1100X00X", TRIVIAL, -1, 3),
    entry!(23, "s- -s;-s -- r-;r- -- s-", "X1X00XX0X", TRIVIAL, -1, 3),
    entry!(
        24,
        "-s -s;s- s-;-l -s;-s -- s-;s- -l;-l -l",
        "001100XX0",
        TRIVIAL,
        2,
        6
    ),
    entry!(
        25,
        "s- s-;-s -s;s- r-;-s -- s-;r- -s;r- r-",
        "01X00X100",
        TRIVIAL,
        -2,
        6
    ),
    entry!(
        26,
        "rl;-s s-;ss;-l s-;-s -s;s- s-;-l -s;-s -- s-;s- -l;-l -l;-s -l",
        "001100001",
        "XXXX1XXXX",
        3,
        11
    ),
    entry!(
        27,
        "RL;-s s-;ss;-l s-;-s -s;s- s-;-l -s;-s -- s-;s- -l;-l -l;-s -l",
        "001100001",
        "XXXX0XXXX",
        3,
        11
    ),
    entry!(
        28,
        "rl;-s s-;ss;-s r-;s- s-;-s -s;s- r-;-s -- s-;r- -s;r- r-;r- s-",
        "010000101",
        "XXXX1XXXX",
        -3,
        11
    ),
    entry!(
        29,
        "RL;-s s-;ss;-s r-;s- s-;-s -s;s- r-;-s -- s-;r- -s;r- r-;r- s-",
        "010000101",
        "XXXX0XXXX",
        -3,
        11
    ),
    entry!(30, "-l -l", "XXXX01XX1", TRIVIAL, 1, 1),
    entry!(31, "r- r-", "XXXX0XX11", TRIVIAL, -1, 1),
];
