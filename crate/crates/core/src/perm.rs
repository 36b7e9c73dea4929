//! Finite permutations in reading order, their cycles and orders, and the
//! orbit tables obtained by re-reading a sequence through the same
//! permutation until it comes back.
//!
//! A [`Perm`] with mapping `m` reorders a sequence so that
//! `out[i] = seq[m[i]]`: position `i` of the result reads position `m[i]` of
//! the input. Text forms are 1-based, everything internal is 0-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

use crate::rhythm::{Dur, Rhythm};

/// Default iteration cap for [`orbit_table`].
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("a permutation needs at least one point")]
    Empty,
    #[error("not a bijection: {0}")]
    NotBijection(String),
    #[error("size mismatch: permutation on {expected} points, sequence of length {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("orbit did not close within {0} iterations")]
    CapExceeded(usize),
    #[error("permutation parse error: {0}")]
    Parse(String),
}

impl PermError {
    pub fn is_parse(&self) -> bool {
        matches!(self, PermError::Parse(_) | PermError::NotBijection(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    mapping: Vec<usize>,
}

impl Perm {
    /// Validates that `mapping` is a bijection on `0..mapping.len()`.
    pub fn new(mapping: Vec<usize>) -> Result<Perm, PermError> {
        if mapping.is_empty() {
            return Err(PermError::Empty);
        }
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &m in &mapping {
            if m >= n {
                return Err(PermError::NotBijection(format!("image {} out of range 1..{n}", m + 1)));
            }
            if std::mem::replace(&mut seen[m], true) {
                return Err(PermError::NotBijection(format!("image {} repeated", m + 1)));
            }
        }
        Ok(Perm { mapping })
    }

    pub fn identity(n: usize) -> Result<Perm, PermError> {
        Perm::new((0..n).collect())
    }

    /// From 1-based images, as written in scores and tables.
    pub fn from_one_based(images: &[usize]) -> Result<Perm, PermError> {
        let mapping = images
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| PermError::NotBijection("image 0 in a 1-based list".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Perm::new(mapping)
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.mapping.iter().map(|m| m + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &m)| i == m)
    }

    /// `out[i] = seq[mapping[i]]`.
    pub fn apply<T: Clone>(&self, seq: &[T]) -> Result<Vec<T>, PermError> {
        if seq.len() != self.mapping.len() {
            return Err(PermError::SizeMismatch { expected: self.mapping.len(), got: seq.len() });
        }
        Ok(self.mapping.iter().map(|&m| seq[m].clone()).collect())
    }

    pub fn apply_rhythm(&self, rhythm: &Rhythm) -> Result<Rhythm, PermError> {
        let durations = self.apply(rhythm.durations())?;
        // Same length as a nonempty rhythm, so construction cannot fail.
        Ok(Rhythm::new(durations, rhythm.unit()).expect("nonempty"))
    }

    /// Applying the result equals applying `first`, then `self`.
    pub fn after(&self, first: &Perm) -> Result<Perm, PermError> {
        if first.len() != self.len() {
            return Err(PermError::SizeMismatch { expected: self.len(), got: first.len() });
        }
        // out[i] = first(seq)[self[i]] = seq[first[self[i]]]
        Ok(Perm { mapping: self.mapping.iter().map(|&m| first.mapping[m]).collect() })
    }

    /// Converts between the reading-order convention used here and the
    /// image convention (`out[mapping[i]] = seq[i]`); both have the same order.
    pub fn inverse(&self) -> Perm {
        let mut mapping = vec![0; self.mapping.len()];
        for (i, &m) in self.mapping.iter().enumerate() {
            mapping[m] = i;
        }
        Perm { mapping }
    }

    /// Disjoint cycles, fixed points included. Each cycle starts at its
    /// smallest point and cycles are sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.mapping.len()];
        let mut cycles = Vec::new();
        for start in 0..self.mapping.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                cycle.push(at);
                at = self.mapping[at];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle lengths in descending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> BigUint {
        self.cycles()
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }
}

/// Whitespace-separated 1-based images, e.g. `3 28 5 30 …`.
impl FromStr for Perm {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split_whitespace()
            .map(|t| {
                if !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(PermError::Parse(format!("bad image `{t}`")));
                }
                t.parse::<usize>().map_err(|_| PermError::Parse(format!("bad image `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if images.is_empty() {
            return Err(PermError::Parse("no images".into()));
        }
        Perm::from_one_based(&images)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.mapping.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", m + 1)?;
        }
        Ok(())
    }
}

/// Which side of the center a fan permutation reads first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FanDirection {
    #[default]
    LeftFirst,
    RightFirst,
}

/// Center-outward reading: start in the middle, then take one object on each
/// side alternately until both ends are reached.
///
/// With `LeftFirst`, odd `n = 2m+1` reads `m, m-1, m+1, m-2, m+2, …` and even
/// `n = 2m` reads `m-1, m, m-2, m+1, …`. `RightFirst` is the mirror image.
pub fn fan(n: usize, direction: FanDirection) -> Result<Perm, PermError> {
    if n == 0 {
        return Err(PermError::Empty);
    }
    let mut order = Vec::with_capacity(n);
    // `left` is the next position to take on the left, `right` on the right.
    let (mut left, mut right) = if n % 2 == 1 {
        order.push(n / 2);
        (n / 2, n / 2 + 1)
    } else {
        (n / 2, n / 2)
    };
    while order.len() < n {
        left -= 1;
        order.push(left);
        if right < n {
            order.push(right);
            right += 1;
        }
    }
    if direction == FanDirection::RightFirst {
        order.iter_mut().for_each(|p| *p = n - 1 - *p);
    }
    Perm::new(order)
}

/// The 32-point permutation applied to the chromatic scale of durations in
/// *Chronochromie*, as 1-based images.
pub const CHRONOCHROMIE_IMAGES: [usize; 32] = [
    3, 28, 5, 30, 7, 32, 26, 2, 25, 1, 8, 24, 9, 23, 16, 17, 18, 22, 21, 19, 20, 4, 31, 6, 29,
    10, 27, 11, 15, 14, 12, 13,
];

pub fn chronochromie() -> Perm {
    Perm::from_one_based(&CHRONOCHROMIE_IMAGES).expect("constant table is a bijection")
}

/// Durations `1, 2, …, n` in thirty-second notes.
pub fn chromatic_durations(n: usize) -> Result<Rhythm, PermError> {
    if n == 0 {
        return Err(PermError::Empty);
    }
    let durations = (1..=n as u64).map(|k| Dur::from_int(k).expect("positive")).collect();
    Ok(Rhythm::new(durations, "triple croche").expect("nonempty"))
}

/// Successive re-readings of a base sequence through one permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable<T> {
    pub base: Vec<T>,
    /// `rows[k]` is the permutation applied `k + 1` times; the last row
    /// equals `base`.
    pub rows: Vec<Vec<T>>,
}

impl<T> OrbitTable<T> {
    /// Number of applications needed to return to the base.
    pub fn order(&self) -> usize {
        self.rows.len()
    }
}

/// Applies `perm` repeatedly until `base` reappears.
///
/// When the base entries are pairwise distinct the row count equals
/// [`Perm::order`]; repeated entries can close the orbit earlier.
pub fn orbit_table<T: Clone + PartialEq>(
    perm: &Perm,
    base: &[T],
    cap: usize,
) -> Result<OrbitTable<T>, PermError> {
    let mut rows = Vec::new();
    let mut current = perm.apply(base)?;
    loop {
        if rows.len() >= cap {
            return Err(PermError::CapExceeded(cap));
        }
        let done = current == base;
        let next = perm.apply(&current)?;
        rows.push(current);
        if done {
            break;
        }
        current = next;
    }
    Ok(OrbitTable { base: base.to_vec(), rows })
}

/// `n!`
pub fn permutation_count(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}
