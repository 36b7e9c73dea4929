//! Non-retrogradable rhythms, modes of limited transposition over Z/12 and
//! symmetric permutations with their orbit tables.
//!
//! All durations are exact rationals ([`rational::Rational`]); nothing here
//! uses floating point.

pub mod catalog;
pub mod cli;
pub mod perm;
pub mod rational;
pub mod rhythm;
pub mod z12;

pub use catalog::{AnalysisReport, TalaEntry};
pub use perm::{OrbitTable, Perm};
pub use rational::Rational;
pub use rhythm::{Dur, Rhythm};
pub use z12::{ModeId, PcSet};
