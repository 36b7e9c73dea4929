//! Duration sequences with exact rational values and the transformations
//! applied to them: retrogradation, augmentation and diminution, symmetric
//! amplification, elimination of extremes, central-value scaling and
//! rhythmic canons.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, Rational};

/// Unit label used when a rhythm does not name one.
pub const DEFAULT_UNIT: &str = "double croche";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RhythmError {
    #[error("a rhythm needs at least one duration")]
    Empty,
    #[error("ratio must be positive, got {0}")]
    BadRatio(String),
    #[error("delay must not be negative, got {0}")]
    NegativeDelay(String),
    #[error("unit mismatch: `{left}` vs `{right}`")]
    UnitMismatch { left: String, right: String },
    #[error("rhythm of length {len} is too short (need {need})")]
    TooShort { len: usize, need: usize },
    #[error("rhythm of even length {0} has no central value")]
    NoCenter(usize),
    #[error("total duration {0} is not a whole number of units")]
    NonIntegerTotal(String),
    #[error("a canon needs at least one voice")]
    NoVoices,
    #[error("rhythm parse error: {0}")]
    Parse(String),
}

impl RhythmError {
    pub fn is_parse(&self) -> bool {
        matches!(self, RhythmError::Parse(_))
    }
}

/// A strictly positive duration in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dur(Rational);

impl Dur {
    pub fn new(value: Rational) -> Option<Dur> {
        value.is_positive().then_some(Dur(value))
    }

    pub fn from_int(n: u64) -> Option<Dur> {
        Dur::new(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(numer: u64, denom: u64) -> Option<Dur> {
        if denom == 0 {
            return None;
        }
        Dur::new(Rational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }

    // Caller guarantees `ratio` is positive.
    fn scaled(&self, ratio: &Rational) -> Dur {
        Dur(&self.0 * ratio)
    }
}

impl fmt::Display for Dur {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rational::format(&self.0))
    }
}

impl FromStr for Dur {
    type Err = RhythmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        rational::parse_positive(s)
            .map(Dur)
            .map_err(|e| RhythmError::Parse(e.to_string()))
    }
}

/// Whether a ratio lengthens or shortens the values it multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scaling {
    Augmentation,
    Diminution,
    Identity,
}

impl Scaling {
    pub fn of(ratio: &Rational) -> Scaling {
        if ratio > &Rational::one() {
            Scaling::Augmentation
        } else if ratio < &Rational::one() {
            Scaling::Diminution
        } else {
            Scaling::Identity
        }
    }
}

fn check_ratio(ratio: &Rational) -> Result<(), RhythmError> {
    if ratio.is_positive() {
        Ok(())
    } else {
        Err(RhythmError::BadRatio(rational::format(ratio)))
    }
}

/// A nonempty sequence of durations in a named base unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rhythm {
    durations: Vec<Dur>,
    unit: String,
}

impl Rhythm {
    pub fn new(durations: Vec<Dur>, unit: impl Into<String>) -> Result<Rhythm, RhythmError> {
        if durations.is_empty() {
            return Err(RhythmError::Empty);
        }
        Ok(Rhythm { durations, unit: unit.into() })
    }

    /// Integer durations in the default unit. Zero entries are rejected.
    pub fn from_ints(values: &[u64]) -> Result<Rhythm, RhythmError> {
        let durations = values
            .iter()
            .map(|&v| Dur::from_int(v).ok_or_else(|| RhythmError::Parse(format!("non-positive duration {v}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Rhythm::new(durations, DEFAULT_UNIT)
    }

    pub fn durations(&self) -> &[Dur] {
        &self.durations
    }

    pub fn unit(&self) -> &str {
        &self.unit
    }

    pub fn with_unit(mut self, unit: impl Into<String>) -> Rhythm {
        self.unit = unit.into();
        self
    }

    pub fn len(&self) -> usize {
        self.durations.len()
    }

    // A Rhythm is never empty; this exists for clippy's len_without_is_empty.
    pub fn is_empty(&self) -> bool {
        self.durations.is_empty()
    }

    pub fn retrograde(&self) -> Rhythm {
        Rhythm {
            durations: self.durations.iter().rev().cloned().collect(),
            unit: self.unit.clone(),
        }
    }

    /// Reads the same in both directions.
    pub fn is_non_retrogradable(&self) -> bool {
        let n = self.durations.len();
        (0..n / 2).all(|i| self.durations[i] == self.durations[n - 1 - i])
    }

    /// Multiplies every duration by `ratio`. See [`Scaling::of`] for whether
    /// this is an augmentation or a diminution.
    pub fn augment(&self, ratio: &Rational) -> Result<Rhythm, RhythmError> {
        check_ratio(ratio)?;
        Ok(Rhythm {
            durations: self.durations.iter().map(|d| d.scaled(ratio)).collect(),
            unit: self.unit.clone(),
        })
    }

    /// `wing ++ self ++ retrograde(wing)`.
    pub fn symmetric_amplification(&self, wing: &Rhythm) -> Result<Rhythm, RhythmError> {
        if self.unit != wing.unit {
            return Err(RhythmError::UnitMismatch {
                left: self.unit.clone(),
                right: wing.unit.clone(),
            });
        }
        let durations = wing
            .durations
            .iter()
            .chain(&self.durations)
            .chain(wing.durations.iter().rev())
            .cloned()
            .collect();
        Ok(Rhythm { durations, unit: self.unit.clone() })
    }

    /// Drops `k` durations from each end. At least one must remain.
    pub fn eliminate_extremes(&self, k: usize) -> Result<Rhythm, RhythmError> {
        let n = self.durations.len();
        if k.checked_mul(2).is_none_or(|two_k| two_k >= n) {
            return Err(RhythmError::TooShort {
                len: n,
                need: k.saturating_mul(2).saturating_add(1),
            });
        }
        Ok(Rhythm {
            durations: self.durations[k..n - k].to_vec(),
            unit: self.unit.clone(),
        })
    }

    /// Multiplies the middle duration of an odd-length rhythm by `ratio`.
    pub fn scale_central(&self, ratio: &Rational) -> Result<Rhythm, RhythmError> {
        let n = self.durations.len();
        if n.is_multiple_of(2) {
            return Err(RhythmError::NoCenter(n));
        }
        check_ratio(ratio)?;
        let mut durations = self.durations.clone();
        durations[n / 2] = durations[n / 2].scaled(ratio);
        Ok(Rhythm { durations, unit: self.unit.clone() })
    }

    pub fn total_duration(&self) -> Rational {
        self.durations
            .iter()
            .fold(Rational::zero(), |acc, d| acc + d.value())
    }

    pub fn is_prime_total(&self) -> Result<bool, RhythmError> {
        let total = self.total_duration();
        if !total.is_integer() {
            return Err(RhythmError::NonIntegerTotal(rational::format(&total)));
        }
        // Totals are positive, so the conversion cannot fail.
        let n = total.to_integer().to_biguint().unwrap_or_default();
        Ok(is_prime(&n))
    }

    /// Splits the rhythm into blocks `P, r1·P, r2·P, …` where each block is a
    /// strict augmentation or diminution of the one before it, always in the
    /// same direction.
    ///
    /// The prefix has at least two durations and there are at least two
    /// blocks. Among valid decompositions the one with the most blocks, hence
    /// the shortest prefix, is returned.
    pub fn detect_augmentation_chain(&self) -> Option<AugmentationChain> {
        let n = self.durations.len();
        (2..=n / 2)
            .filter(|block| n.is_multiple_of(*block))
            .find_map(|block| self.chain_with_block(block))
    }

    fn chain_with_block(&self, block: usize) -> Option<AugmentationChain> {
        let prefix = &self.durations[..block];
        let mut ratios: Vec<Rational> = Vec::new();
        for chunk in self.durations.chunks(block).skip(1) {
            let ratio = chunk[0].value() / prefix[0].value();
            if chunk.iter().zip(prefix).any(|(d, p)| d.value() != &(p.value() * &ratio)) {
                return None;
            }
            ratios.push(ratio);
        }
        let one = Rational::one();
        let steps: Vec<Rational> = std::iter::once(one.clone())
            .chain(ratios.iter().cloned())
            .collect::<Vec<_>>()
            .windows(2)
            .map(|w| &w[1] / &w[0])
            .collect();
        let growing = steps.iter().all(|s| s > &one);
        let shrinking = steps.iter().all(|s| s < &one);
        if !(growing || shrinking) {
            return None;
        }
        Some(AugmentationChain {
            prefix: Rhythm { durations: prefix.to_vec(), unit: self.unit.clone() },
            ratios,
        })
    }

    /// Profiles the odd-position and even-position subsequences (1-based).
    pub fn interleave_profile(&self) -> Result<InterleaveProfile, RhythmError> {
        if self.durations.len() < 2 {
            return Err(RhythmError::TooShort { len: self.durations.len(), need: 2 });
        }
        let odd: Vec<Dur> = self.durations.iter().step_by(2).cloned().collect();
        let even: Vec<Dur> = self.durations.iter().skip(1).step_by(2).cloned().collect();
        Ok(InterleaveProfile {
            odd: SubsequenceProfile::of(odd),
            even: SubsequenceProfile::of(even),
        })
    }

    /// Durations only, space-separated.
    pub fn format_durations(&self) -> String {
        self.durations
            .iter()
            .map(Dur::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Durations followed by `@unit=<label>`; parses back with [`FromStr`].
impl fmt::Display for Rhythm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @unit={}", self.format_durations(), self.unit)
    }
}

/// Whitespace-separated `n` or `n/d` tokens, optionally followed by
/// `@unit=<label>` where the label runs to the end of the input.
impl FromStr for Rhythm {
    type Err = RhythmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (body, unit) = match s.find("@unit=") {
            Some(at) => {
                let label = s[at + "@unit=".len()..].trim();
                if label.is_empty() {
                    return Err(RhythmError::Parse("empty unit label".into()));
                }
                (&s[..at], label)
            }
            None => (s, DEFAULT_UNIT),
        };
        let durations = body
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Dur>, _>>()?;
        if durations.is_empty() {
            return Err(RhythmError::Parse("no durations".into()));
        }
        Rhythm::new(durations, unit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationChain {
    pub prefix: Rhythm,
    /// Ratio of each block after the first, relative to the prefix.
    pub ratios: Vec<Rational>,
}

impl AugmentationChain {
    pub fn block_count(&self) -> usize {
        self.ratios.len() + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsequenceProfile {
    pub values: Vec<Dur>,
    pub constant: bool,
    /// Strictly rises to a single peak, then strictly falls; both parts present.
    pub unimodal: bool,
    /// Non-decreasing or non-increasing.
    pub monotone: bool,
}

impl SubsequenceProfile {
    fn of(values: Vec<Dur>) -> SubsequenceProfile {
        let constant = values.windows(2).all(|w| w[0] == w[1]);
        let monotone =
            values.windows(2).all(|w| w[0] <= w[1]) || values.windows(2).all(|w| w[0] >= w[1]);
        let rise = values.windows(2).take_while(|w| w[0] < w[1]).count();
        let fall = values[rise..].windows(2).take_while(|w| w[0] > w[1]).count();
        let unimodal = rise > 0 && fall > 0 && rise + fall + 1 == values.len();
        SubsequenceProfile { values, constant, unimodal, monotone }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterleaveProfile {
    pub odd: SubsequenceProfile,
    pub even: SubsequenceProfile,
}

impl InterleaveProfile {
    /// One subsequence constant while the other rises then falls.
    pub fn is_constant_against_unimodal(&self) -> bool {
        (self.odd.constant && self.even.unimodal) || (self.even.constant && self.odd.unimodal)
    }
}

/// One canon voice: the subject scaled by `ratio`, entering at `delay`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Voice {
    pub delay: Rational,
    pub ratio: Rational,
}

impl Voice {
    pub fn new(delay: Rational, ratio: Rational) -> Voice {
        Voice { delay, ratio }
    }
}

/// `delay:ratio`, e.g. `1:3/2`. A zero ratio parses and is rejected by
/// [`build_canon`].
impl FromStr for Voice {
    type Err = RhythmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |e: rational::ParseRationalError| RhythmError::Parse(e.to_string());
        let (delay, ratio) = s
            .split_once(':')
            .ok_or_else(|| RhythmError::Parse(format!("voice `{s}` is not delay:ratio")))?;
        Ok(Voice {
            delay: rational::parse_nonnegative(delay).map_err(parse_err)?,
            ratio: rational::parse_nonnegative(ratio).map_err(parse_err)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonEvent {
    pub time: Rational,
    pub voice: usize,
    pub index: usize,
    pub duration: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canon {
    /// Onset times per voice, in subject order.
    pub onsets: Vec<Vec<Rational>>,
    /// All notes sorted by onset; simultaneous onsets keep voice order.
    pub events: Vec<CanonEvent>,
    /// Time at which the last voice finishes.
    pub end: Rational,
}

pub fn build_canon(subject: &Rhythm, voices: &[Voice]) -> Result<Canon, RhythmError> {
    if voices.is_empty() {
        return Err(RhythmError::NoVoices);
    }
    let mut onsets = Vec::with_capacity(voices.len());
    let mut events = Vec::new();
    let mut end = Rational::zero();
    for (v, voice) in voices.iter().enumerate() {
        check_ratio(&voice.ratio)?;
        if voice.delay.is_negative() {
            return Err(RhythmError::NegativeDelay(rational::format(&voice.delay)));
        }
        let mut elapsed = Rational::zero();
        let mut times = Vec::with_capacity(subject.len());
        for (i, d) in subject.durations.iter().enumerate() {
            let time = &voice.delay + &voice.ratio * &elapsed;
            events.push(CanonEvent {
                time: time.clone(),
                voice: v,
                index: i,
                duration: &voice.ratio * d.value(),
            });
            times.push(time);
            elapsed += d.value();
        }
        let voice_end = &voice.delay + &voice.ratio * &elapsed;
        if voice_end > end {
            end = voice_end;
        }
        onsets.push(times);
    }
    // Stable sort: events were pushed voice by voice.
    events.sort_by(|a, b| a.time.cmp(&b.time));
    Ok(Canon { onsets, events, end })
}

const WITNESSES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Miller-Rabin with the first twelve primes as witnesses; exact below
/// 3.3·10^24, which covers every `u64`.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        if let Some(&p) = WITNESSES.iter().find(|&&p| small % p as u64 == 0) {
            return small == p as u64;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let twos = n_minus_one.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_one >> twos;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&odd, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..twos {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_frac, from_int};

    fn r(s: &str) -> Rhythm {
        s.parse().unwrap()
    }

    #[test]
    fn retrograde_examples() {
        assert_eq!(r("2 2 1").retrograde(), r("1 2 2"));
        assert_eq!(r("2 1 2").retrograde(), r("2 1 2"));
        assert_eq!(r("5").retrograde(), r("5"));
        assert_eq!(r("1 2 @unit=triple croche").retrograde().unit(), "triple croche");
    }

    #[test]
    fn palindromes() {
        assert!(r("3 5 8 5 3").is_non_retrogradable());
        assert!(!r("1 3 2 3 3 3 2 3 1 3").is_non_retrogradable());
        assert!(r("1").is_non_retrogradable());
        assert!(r("2 2").is_non_retrogradable());
        assert!(r("1/2 2/4").is_non_retrogradable());
    }

    #[test]
    fn augment_examples() {
        assert_eq!(r("1 1 1").augment(&from_int(2)).unwrap(), r("2 2 2"));
        assert_eq!(r("2 1 2").augment(&from_frac(3, 2)).unwrap(), r("3 3/2 3"));
        assert_eq!(r("2 1 2").augment(&from_int(1)).unwrap(), r("2 1 2"));
        assert!(matches!(r("2").augment(&from_int(0)), Err(RhythmError::BadRatio(_))));
        assert!(matches!(r("2").augment(&from_int(-2)), Err(RhythmError::BadRatio(s)) if s == "-2"));
        assert_eq!(Scaling::of(&from_frac(3, 2)), Scaling::Augmentation);
        assert_eq!(Scaling::of(&from_frac(1, 2)), Scaling::Diminution);
        assert_eq!(Scaling::of(&from_int(1)), Scaling::Identity);
    }

    #[test]
    fn amplification_examples() {
        let once = r("2 1 2").symmetric_amplification(&r("2 2")).unwrap();
        assert_eq!(once, r("2 2 2 1 2 2 2"));
        // The nine-value line is the theme inside the wing 2 3/2 2.
        let wide = r("2 1 2").symmetric_amplification(&r("2 3/2 2")).unwrap();
        assert_eq!(wide, r("2 3/2 2 2 1 2 2 3/2 2"));
        let twice = once.symmetric_amplification(&r("2 3/2")).unwrap();
        assert_eq!(twice, r("2 3/2 2 2 2 1 2 2 2 3/2 2"));
        assert_eq!(r("1").symmetric_amplification(&r("1")).unwrap(), r("1 1 1"));
        assert!(matches!(
            r("1").symmetric_amplification(&r("1 @unit=noire")),
            Err(RhythmError::UnitMismatch { .. })
        ));
    }

    #[test]
    fn elimination_examples() {
        assert_eq!(r("2 2 2 1 2 2 2").eliminate_extremes(2).unwrap(), r("2 1 2"));
        assert_eq!(r("3 5 8 5 3").eliminate_extremes(0).unwrap(), r("3 5 8 5 3"));
        assert_eq!(r("3 5 8 5 3").eliminate_extremes(2).unwrap(), r("8"));
        assert!(matches!(r("3 5 8 5 3").eliminate_extremes(3), Err(RhythmError::TooShort { .. })));
        assert!(matches!(r("1 1").eliminate_extremes(1), Err(RhythmError::TooShort { .. })));
        assert!(r("1").eliminate_extremes(usize::MAX).is_err());
    }

    #[test]
    fn central_scaling() {
        assert_eq!(r("2 1 2").scale_central(&from_int(3)).unwrap(), r("2 3 2"));
        assert_eq!(r("2 1 2").scale_central(&from_int(1)).unwrap(), r("2 1 2"));
        assert_eq!(r("1 1 1 1").scale_central(&from_int(2)), Err(RhythmError::NoCenter(4)));
    }

    #[test]
    fn totals_and_primes() {
        let nineteen = r("1 1 3 2 2 1 2 2 3 1 1");
        assert_eq!(nineteen.total_duration(), from_int(19));
        assert_eq!(nineteen.is_prime_total(), Ok(true));
        assert_eq!(r("2 1 1 1 3 1 1 1 2").total_duration(), from_int(13));
        assert_eq!(r("2 1 2").is_prime_total(), Ok(true));
        assert_eq!(r("1 1 1 1").is_prime_total(), Ok(false));
        assert_eq!(
            r("1 1 1 3/2").is_prime_total(),
            Err(RhythmError::NonIntegerTotal("9/2".into()))
        );
        assert_eq!(r("1/2 1/2").is_prime_total(), Ok(false));
    }

    #[test]
    fn primality_against_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000u64 {
            assert_eq!(is_prime(&BigUint::from(n)), trial(n), "{n}");
        }
        // 2^61 - 1 is prime, 2^61 + 1 is divisible by 3.
        assert!(is_prime(&BigUint::from((1u64 << 61) - 1)));
        assert!(!is_prime(&BigUint::from((1u64 << 61) + 1)));
        // Strong pseudoprime to bases 2, 3, 5, 7.
        assert!(!is_prime(&BigUint::from(3_215_031_751u64)));
    }

    #[test]
    fn augmentation_chains() {
        let chain = r("1 1 1 2 2 2").detect_augmentation_chain().unwrap();
        assert_eq!(chain.prefix, r("1 1 1"));
        assert_eq!(chain.ratios, vec![from_int(2)]);

        let chain = r("4 4 2 2 1 1").detect_augmentation_chain().unwrap();
        assert_eq!(chain.prefix, r("4 4"));
        assert_eq!(chain.ratios, vec![from_frac(1, 2), from_frac(1, 4)]);
        assert_eq!(chain.block_count(), 3);

        assert_eq!(r("2 1 2").detect_augmentation_chain(), None);
        // Plain repetition and back-and-forth scaling are not chains.
        assert_eq!(r("1 1 1 1").detect_augmentation_chain(), None);
        assert_eq!(r("2 2 1 1 2 2").detect_augmentation_chain(), None);
        assert_eq!(r("1 1 2 2 1 1").detect_augmentation_chain(), None);
    }

    #[test]
    fn interleave_examples() {
        let p = r("1 3 2 3 3 3 2 3 1 3").interleave_profile().unwrap();
        assert_eq!(p.odd.values, r("1 2 3 2 1").durations());
        assert!(p.odd.unimodal && !p.odd.monotone);
        assert!(p.even.constant);
        assert!(p.is_constant_against_unimodal());

        let p = r("2 2 2 2").interleave_profile().unwrap();
        assert!(p.odd.constant && p.even.constant);
        assert!(!p.is_constant_against_unimodal());

        let p = r("1 5 2 5 4 5").interleave_profile().unwrap();
        assert!(p.odd.monotone && !p.odd.unimodal && !p.odd.constant);
        assert!(p.even.constant);

        assert!(matches!(r("1").interleave_profile(), Err(RhythmError::TooShort { .. })));
    }

    #[test]
    fn canon_examples() {
        let subject = r("2 1 2");
        let canon = build_canon(&subject, &[Voice::new(from_int(0), from_int(1))]).unwrap();
        assert_eq!(canon.onsets, vec![vec![from_int(0), from_int(2), from_int(3)]]);
        assert_eq!(canon.end, from_int(5));

        let voices = [
            Voice::new(from_int(0), from_int(1)),
            Voice::new(from_int(1), from_frac(3, 2)),
        ];
        let canon = build_canon(&subject, &voices).unwrap();
        assert_eq!(canon.onsets[1], vec![from_int(1), from_int(4), from_frac(11, 2)]);
        let order: Vec<(usize, usize)> = canon.events.iter().map(|e| (e.voice, e.index)).collect();
        assert_eq!(order, vec![(0, 0), (1, 0), (0, 1), (0, 2), (1, 1), (1, 2)]);

        let canon = build_canon(&r("1"), &vec![Voice::new(from_int(0), from_int(1)); 2]).unwrap();
        assert_eq!(canon.events.len(), 2);
        assert_eq!((canon.events[0].voice, canon.events[1].voice), (0, 1));

        assert_eq!(build_canon(&subject, &[]), Err(RhythmError::NoVoices));
        assert!(build_canon(&subject, &[Voice::new(from_int(-1), from_int(1))]).is_err());
        assert!("1:3/2".parse::<Voice>().is_ok());
        assert!("1-3/2".parse::<Voice>().is_err());
    }

    #[test]
    fn parse_rules() {
        let rhythm = r("1 1 1 3/2 @unit=triple croche");
        assert_eq!(rhythm.unit(), "triple croche");
        assert_eq!(rhythm.durations()[3], Dur::from_frac(3, 2).unwrap());
        assert_eq!(r(&rhythm.to_string()), rhythm);
        assert_eq!(r("2 1 2").unit(), DEFAULT_UNIT);
        for bad in ["", "   ", "@unit=x", "1 0 1", "1.5", "1 @unit=", "1 -2"] {
            assert!(bad.parse::<Rhythm>().is_err(), "{bad:?} accepted");
        }
        assert!(Rhythm::new(vec![], "x").is_err());
    }
}
