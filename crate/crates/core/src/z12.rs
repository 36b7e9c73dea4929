//! Pitch-class sets over Z/12 and the seven modes of limited transposition.
//!
//! A [`PcSet`] is stored as its 12-bit characteristic value: bit `k` is set
//! when pitch class `k` is a member. Transposition by `t` is a left rotation
//! of those twelve bits.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

const FULL_MASK: u16 = 0x0fff;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Z12Error {
    #[error("degenerate pitch-class set {0}")]
    DegenerateSet(PcSet),
    #[error("pitch-class parse error: {0}")]
    Parse(String),
}

impl Z12Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Z12Error::Parse(_))
    }
}

/// A subset of Z/12.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PcSet(u16);

impl PcSet {
    pub const EMPTY: PcSet = PcSet(0);
    pub const CHROMATIC: PcSet = PcSet(FULL_MASK);

    /// Builds a set from its characteristic value. Bits above 11 are rejected.
    pub fn from_bits(bits: u16) -> Option<PcSet> {
        (bits & !FULL_MASK == 0).then_some(PcSet(bits))
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    /// Members are reduced modulo 12; duplicates collapse.
    pub fn from_members<I: IntoIterator<Item = i64>>(members: I) -> PcSet {
        PcSet(
            members
                .into_iter()
                .fold(0, |acc, pc| acc | 1 << pc.rem_euclid(12)),
        )
    }

    pub fn contains(self, pc: u8) -> bool {
        pc < 12 && self.0 & (1 << pc) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Empty, full chromatic, or a single pitch class.
    pub fn is_degenerate(self) -> bool {
        self.0 == 0 || self.0 == FULL_MASK || self.len() == 1
    }

    /// Ascending member list.
    pub fn members(self) -> Vec<u8> {
        (0..12).filter(|&pc| self.contains(pc)).collect()
    }

    pub fn transpose(self, t: i64) -> PcSet {
        let t = t.rem_euclid(12) as u32;
        if t == 0 {
            return self;
        }
        PcSet(((self.0 << t) | (self.0 >> (12 - t))) & FULL_MASK)
    }

    /// Smallest `t` in 1..=12 with `transpose(t) == self`; also the number of
    /// distinct transpositions.
    pub fn minimal_period(self) -> Result<u8, Z12Error> {
        if self.is_empty() {
            return Err(Z12Error::DegenerateSet(self));
        }
        Ok(self.period_unchecked())
    }

    // The empty set is fixed by every translation and gets period 1 here.
    fn period_unchecked(self) -> u8 {
        (1..=12u8)
            .find(|&t| self.transpose(t as i64) == self)
            .unwrap_or(12)
    }

    pub fn is_limited_transposition(self) -> Result<bool, Z12Error> {
        Ok(self.minimal_period()? < 12)
    }

    /// Finds the catalogued mode this set is a transposition of.
    ///
    /// Mode numbers are tried in ascending order and offsets from 0, so the
    /// smallest mode number and then the smallest offset win.
    pub fn classify_mode(self) -> Result<Option<ModeId>, Z12Error> {
        self.minimal_period()?;
        for mode in &MODES {
            let root = mode.pcset();
            if root.len() != self.len() {
                continue;
            }
            let period = root.period_unchecked();
            if let Some(offset) = (0..period).find(|&t| root.transpose(t as i64) == self) {
                return Ok(Some(ModeId {
                    mode_number: mode.number,
                    transposition_offset: offset,
                }));
            }
        }
        Ok(None)
    }

    /// Limited transposition but not a transposition of any catalogued mode.
    pub fn is_truncated_mode(self) -> Result<bool, Z12Error> {
        if self.is_empty() || self == PcSet::CHROMATIC {
            return Err(Z12Error::DegenerateSet(self));
        }
        Ok(self.is_limited_transposition()? && self.classify_mode()?.is_none())
    }

    /// All distinct transpositions, starting from `self`.
    pub fn transpositions(self) -> Vec<PcSet> {
        (0..self.period_unchecked())
            .map(|t| self.transpose(t as i64))
            .collect()
    }
}

impl fmt::Display for PcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, pc) in self.members().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{pc}")?;
        }
        f.write_str("}")
    }
}

/// Whitespace-separated integers 0..=11 or note names.
///
/// Note names are a letter `A`..`G` (any case) followed by any number of `#`
/// or `b` accidentals. A repeated pitch class is an error.
impl FromStr for PcSet {
    type Err = Z12Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = 0u16;
        for token in s.split_whitespace() {
            let pc = parse_pitch_class(token)?;
            if bits & (1 << pc) != 0 {
                return Err(Z12Error::Parse(format!("duplicate pitch class `{token}`")));
            }
            bits |= 1 << pc;
        }
        Ok(PcSet(bits))
    }
}

/// Space-separated ascending integers, the inverse of [`FromStr`].
pub fn format_members(set: PcSet) -> String {
    set.members()
        .iter()
        .map(u8::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_pitch_class(token: &str) -> Result<u8, Z12Error> {
    if token.bytes().all(|b| b.is_ascii_digit()) {
        return match token.parse::<u8>() {
            Ok(pc) if pc < 12 => Ok(pc),
            _ => Err(Z12Error::Parse(format!("pitch class `{token}` not in 0..11"))),
        };
    }
    let mut chars = token.chars();
    let letter = chars.next().map(|c| c.to_ascii_uppercase());
    let natural: i32 = match letter {
        Some('C') => 0,
        Some('D') => 2,
        Some('E') => 4,
        Some('F') => 5,
        Some('G') => 7,
        Some('A') => 9,
        Some('B') => 11,
        _ => return Err(Z12Error::Parse(format!("bad pitch class `{token}`"))),
    };
    let mut pc = natural;
    for c in chars {
        match c {
            '#' => pc += 1,
            'b' | 'B' => pc -= 1,
            _ => return Err(Z12Error::Parse(format!("bad accidental in `{token}`"))),
        }
    }
    Ok(pc.rem_euclid(12) as u8)
}

/// A catalogued mode at a given transposition.
///
/// `transposition_offset` is 0-based; human output renders it 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModeId {
    pub mode_number: u8,
    pub transposition_offset: u8,
}

impl ModeId {
    pub fn mode(&self) -> &'static Mode {
        &MODES[self.mode_number as usize - 1]
    }

    pub fn pcset(&self) -> PcSet {
        self.mode().pcset().transpose(self.transposition_offset as i64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mode {
    pub number: u8,
    pub name: &'static str,
    pub members: &'static [u8],
}

impl Mode {
    pub fn pcset(&self) -> PcSet {
        PcSet::from_members(self.members.iter().map(|&m| m as i64))
    }

    pub fn transposition_count(&self) -> u8 {
        self.pcset().period_unchecked()
    }
}

/// The seven modes at their first transposition.
pub const MODES: [Mode; 7] = [
    Mode { number: 1, name: "Premier mode", members: &[0, 2, 4, 6, 8, 10] },
    Mode { number: 2, name: "Second mode", members: &[0, 1, 3, 4, 6, 7, 9, 10] },
    Mode { number: 3, name: "Troisième mode", members: &[0, 2, 3, 4, 6, 7, 8, 10, 11] },
    Mode { number: 4, name: "Quatrième mode", members: &[0, 1, 2, 5, 6, 7, 8, 11] },
    Mode { number: 5, name: "Cinquième mode", members: &[0, 1, 5, 6, 7, 11] },
    Mode { number: 6, name: "Sixième mode", members: &[0, 2, 4, 5, 6, 8, 10, 11] },
    Mode { number: 7, name: "Septième mode", members: &[0, 1, 2, 3, 5, 6, 7, 8, 9, 11] },
];

pub fn mode(number: u8) -> Option<&'static Mode> {
    MODES.get((number as usize).checked_sub(1)?)
}

/// Every subset of Z/12 fixed by some translation in 1..=11, ascending by
/// characteristic value. Includes the empty and full chromatic sets.
pub fn enumerate_limited() -> Vec<PcSet> {
    (0..=FULL_MASK)
        .map(PcSet)
        .filter(|s| s.period_unchecked() < 12)
        .collect()
}
