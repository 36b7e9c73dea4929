//! Seed catalogs of quoted rhythms and modes, and per-entry analysis reports.
//!
//! Catalog files are UTF-8, one entry per line:
//!
//! ```text
//! id|name|gloss|durations[|source note]
//! ```
//!
//! `durations` uses the rhythm text format (`2 1 2`, `1 1 1 3/2`, optional
//! trailing `@unit=<label>`). Blank lines and lines starting with `#` are
//! ignored. The mode catalog uses the same layout with pitch classes in the
//! fourth field.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::io::BufRead;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, Rational};
use crate::rhythm::{AugmentationChain, InterleaveProfile, Rhythm, SubsequenceProfile, DEFAULT_UNIT};
use crate::z12::PcSet;

pub const SEED_TALAS: &str = include_str!("../data/talas.cat");
pub const SEED_QUATUOR: &str = include_str!("../data/quatuor.cat");
pub const SEED_MODES: &str = include_str!("../data/modes.cat");

pub const TALAS_FILE: &str = "talas.cat";
pub const QUATUOR_FILE: &str = "quatuor.cat";
pub const MODES_FILE: &str = "modes.cat";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate id {id}")]
    DuplicateId { line: usize, id: u32 },
    #[error("unknown predicate `{0}` (expected nonretro, prime, augchain or interleave)")]
    BadPredicate(String),
    #[error("{0}")]
    Io(String),
    #[error("no entry with id {0}")]
    UnknownId(u32),
}

impl CatalogError {
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            CatalogError::Parse { .. } | CatalogError::DuplicateId { .. } | CatalogError::BadPredicate(_)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TalaEntry {
    pub id: u32,
    pub name: String,
    pub gloss: String,
    pub rhythm: Rhythm,
    pub source_note: String,
}

struct RawLine<'a> {
    line: usize,
    id: u32,
    name: &'a str,
    gloss: &'a str,
    body: &'a str,
    note: &'a str,
}

fn split_lines(text: &str) -> impl Iterator<Item = Result<RawLine<'_>, CatalogError>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let fields: Vec<&str> = trimmed.split('|').collect();
        if !(4..=5).contains(&fields.len()) {
            return Some(Err(CatalogError::Parse {
                line,
                message: format!("expected 4 or 5 `|`-separated fields, found {}", fields.len()),
            }));
        }
        let id_field = fields[0].trim();
        let id = match id_field.parse::<u32>() {
            Ok(id) if id > 0 && id_field.bytes().all(|b| b.is_ascii_digit()) => id,
            _ => {
                return Some(Err(CatalogError::Parse {
                    line,
                    message: format!("bad id `{id_field}`"),
                }))
            }
        };
        Some(Ok(RawLine {
            line,
            id,
            name: fields[1].trim(),
            gloss: fields[2].trim(),
            body: fields[3].trim(),
            note: fields.get(4).map_or("", |n| n.trim()),
        }))
    })
}

/// Parses catalog text. Entries keep file order; ids must be unique.
pub fn parse_catalog(text: &str) -> Result<Vec<TalaEntry>, CatalogError> {
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for raw in split_lines(text) {
        let raw = raw?;
        if !seen.insert(raw.id) {
            return Err(CatalogError::DuplicateId { line: raw.line, id: raw.id });
        }
        let rhythm = Rhythm::from_str(raw.body).map_err(|e| CatalogError::Parse {
            line: raw.line,
            message: e.to_string(),
        })?;
        entries.push(TalaEntry {
            id: raw.id,
            name: raw.name.to_owned(),
            gloss: raw.gloss.to_owned(),
            rhythm,
            source_note: raw.note.to_owned(),
        });
    }
    Ok(entries)
}

pub fn load_catalog<R: BufRead>(mut reader: R) -> Result<Vec<TalaEntry>, CatalogError> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(|e| CatalogError::Io(e.to_string()))?;
    parse_catalog(&text)
}

/// Canonical text: one line per entry, no comments. The unit is written only
/// when it differs from the default.
pub fn serialize_catalog(entries: &[TalaEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let mut body = e.rhythm.format_durations();
        if e.rhythm.unit() != DEFAULT_UNIT {
            let _ = write!(body, " @unit={}", e.rhythm.unit());
        }
        let _ = write!(out, "{}|{}|{}|{}", e.id, e.name, e.gloss, body);
        if !e.source_note.is_empty() {
            let _ = write!(out, "|{}", e.source_note);
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeEntry {
    pub number: u32,
    pub name: String,
    pub gloss: String,
    pub pitch_classes: PcSet,
}

pub fn parse_modes(text: &str) -> Result<Vec<ModeEntry>, CatalogError> {
    let mut seen = HashSet::new();
    let mut modes = Vec::new();
    for raw in split_lines(text) {
        let raw = raw?;
        if !seen.insert(raw.id) {
            return Err(CatalogError::DuplicateId { line: raw.line, id: raw.id });
        }
        let pitch_classes = PcSet::from_str(raw.body).map_err(|e| CatalogError::Parse {
            line: raw.line,
            message: e.to_string(),
        })?;
        modes.push(ModeEntry {
            number: raw.id,
            name: raw.name.to_owned(),
            gloss: raw.gloss.to_owned(),
            pitch_classes,
        });
    }
    Ok(modes)
}

/// The three seed catalogs, either shipped or loaded from a directory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedData {
    pub talas: Vec<TalaEntry>,
    pub quatuor: Vec<TalaEntry>,
    pub modes: Vec<ModeEntry>,
}

impl SeedData {
    pub fn shipped() -> SeedData {
        SeedData {
            talas: parse_catalog(SEED_TALAS).expect("shipped talas.cat parses"),
            quatuor: parse_catalog(SEED_QUATUOR).expect("shipped quatuor.cat parses"),
            modes: parse_modes(SEED_MODES).expect("shipped modes.cat parses"),
        }
    }

    /// Reads `talas.cat`, `quatuor.cat` and `modes.cat` from `dir`.
    pub fn load_dir(dir: &Path) -> Result<SeedData, CatalogError> {
        let read = |name: &str| {
            let path = dir.join(name);
            fs::read_to_string(&path).map_err(|e| CatalogError::Io(format!("{}: {e}", path.display())))
        };
        let in_file = |name: &'static str| {
            move |e: CatalogError| match e {
                CatalogError::Parse { line, message } => CatalogError::Parse {
                    line,
                    message: format!("{name}: {message}"),
                },
                other => other,
            }
        };
        Ok(SeedData {
            talas: parse_catalog(&read(TALAS_FILE)?).map_err(in_file(TALAS_FILE))?,
            quatuor: parse_catalog(&read(QUATUOR_FILE)?).map_err(in_file(QUATUOR_FILE))?,
            modes: parse_modes(&read(MODES_FILE)?).map_err(in_file(MODES_FILE))?,
        })
    }
}

/// The outputs of the rhythm analyses for one entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub id: u32,
    pub rhythm: Rhythm,
    pub non_retrogradable: bool,
    pub total: Rational,
    /// Absent when the total is not a whole number of units.
    pub prime_total: Option<bool>,
    pub augmentation_chain: Option<AugmentationChain>,
    /// Absent for single-duration rhythms.
    pub interleave: Option<InterleaveProfile>,
}

pub fn analyze_rhythm(id: u32, rhythm: &Rhythm) -> AnalysisReport {
    AnalysisReport {
        id,
        rhythm: rhythm.clone(),
        non_retrogradable: rhythm.is_non_retrogradable(),
        total: rhythm.total_duration(),
        prime_total: rhythm.is_prime_total().ok(),
        augmentation_chain: rhythm.detect_augmentation_chain(),
        interleave: rhythm.interleave_profile().ok(),
    }
}

pub fn analyze_entry(entry: &TalaEntry) -> AnalysisReport {
    analyze_rhythm(entry.id, &entry.rhythm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    NonRetrogradable,
    PrimeTotal,
    AugmentationChain,
    /// One interleaved subsequence constant, the other rising then falling.
    Interleave,
}

impl Predicate {
    pub fn holds(self, report: &AnalysisReport) -> bool {
        match self {
            Predicate::NonRetrogradable => report.non_retrogradable,
            Predicate::PrimeTotal => report.prime_total == Some(true),
            Predicate::AugmentationChain => report.augmentation_chain.is_some(),
            Predicate::Interleave => report
                .interleave
                .as_ref()
                .is_some_and(InterleaveProfile::is_constant_against_unimodal),
        }
    }
}

impl FromStr for Predicate {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nonretro" => Ok(Predicate::NonRetrogradable),
            "prime" => Ok(Predicate::PrimeTotal),
            "augchain" => Ok(Predicate::AugmentationChain),
            "interleave" => Ok(Predicate::Interleave),
            other => Err(CatalogError::BadPredicate(other.to_owned())),
        }
    }
}

/// Entries whose report satisfies the named predicate, in catalog order.
pub fn filter_catalog<'a>(
    entries: &'a [TalaEntry],
    predicate: &str,
) -> Result<Vec<&'a TalaEntry>, CatalogError> {
    let predicate = Predicate::from_str(predicate)?;
    Ok(entries
        .iter()
        .filter(|e| predicate.holds(&analyze_entry(e)))
        .collect())
}

// Machine form. Rationals and rhythms are strings in their text formats.

#[derive(Serialize, Deserialize)]
struct ChainJson {
    prefix: String,
    ratios: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct SubsequenceJson {
    values: String,
    constant: bool,
    unimodal: bool,
    monotone: bool,
}

#[derive(Serialize, Deserialize)]
struct InterleaveJson {
    odd: SubsequenceJson,
    even: SubsequenceJson,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    id: u32,
    rhythm: String,
    non_retrogradable: bool,
    total: String,
    prime_total: Option<bool>,
    augmentation_chain: Option<ChainJson>,
    interleave: Option<InterleaveJson>,
}

fn join_values(values: &[crate::rhythm::Dur]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

impl AnalysisReport {
    fn to_wire(&self) -> ReportJson {
        let sub = |p: &SubsequenceProfile| SubsequenceJson {
            values: join_values(&p.values),
            constant: p.constant,
            unimodal: p.unimodal,
            monotone: p.monotone,
        };
        ReportJson {
            id: self.id,
            rhythm: self.rhythm.to_string(),
            non_retrogradable: self.non_retrogradable,
            total: rational::format(&self.total),
            prime_total: self.prime_total,
            augmentation_chain: self.augmentation_chain.as_ref().map(|c| ChainJson {
                prefix: c.prefix.to_string(),
                ratios: c.ratios.iter().map(rational::format).collect(),
            }),
            interleave: self.interleave.as_ref().map(|p| InterleaveJson {
                odd: sub(&p.odd),
                even: sub(&p.even),
            }),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wire()).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("report serializes")
    }

    pub fn from_json_value(value: serde_json::Value) -> Result<AnalysisReport, String> {
        let wire: ReportJson = serde_json::from_value(value).map_err(|e| e.to_string())?;
        let rhythm = Rhythm::from_str(&wire.rhythm).map_err(|e| e.to_string())?;
        let parse_ratio = |s: &str| rational::parse_nonnegative(s).map_err(|e| e.to_string());
        let sub = |w: SubsequenceJson| -> Result<SubsequenceProfile, String> {
            let values = w
                .values
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e: crate::rhythm::RhythmError| e.to_string())?;
            Ok(SubsequenceProfile {
                values,
                constant: w.constant,
                unimodal: w.unimodal,
                monotone: w.monotone,
            })
        };
        Ok(AnalysisReport {
            id: wire.id,
            rhythm,
            non_retrogradable: wire.non_retrogradable,
            total: parse_ratio(&wire.total)?,
            prime_total: wire.prime_total,
            augmentation_chain: match wire.augmentation_chain {
                Some(c) => Some(AugmentationChain {
                    prefix: Rhythm::from_str(&c.prefix).map_err(|e| e.to_string())?,
                    ratios: c.ratios.iter().map(|r| parse_ratio(r)).collect::<Result<_, _>>()?,
                }),
                None => None,
            },
            interleave: match wire.interleave {
                Some(p) => Some(InterleaveProfile { odd: sub(p.odd)?, even: sub(p.even)? }),
                None => None,
            },
        })
    }

    pub fn from_json(text: &str) -> Result<AnalysisReport, String> {
        let value = serde_json::from_str(text).map_err(|e| e.to_string())?;
        AnalysisReport::from_json_value(value)
    }

    /// `key: value` block with French labels.
    pub fn render_human(&self) -> String {
        let yes_no = |b: bool| if b { "oui" } else { "non" };
        let mut out = String::new();
        let _ = writeln!(out, "id: {}", self.id);
        let _ = writeln!(out, "durées: {}", self.rhythm.format_durations());
        let _ = writeln!(out, "unité: {}", self.rhythm.unit());
        let _ = writeln!(out, "non rétrogradable: {}", yes_no(self.non_retrogradable));
        let _ = writeln!(out, "durée totale: {}", rational::format(&self.total));
        let prime = match self.prime_total {
            Some(b) => yes_no(b).to_owned(),
            None => "sans objet (total non entier)".to_owned(),
        };
        let _ = writeln!(out, "total premier: {prime}");
        let chain = match &self.augmentation_chain {
            Some(c) => format!(
                "{} puis ×{}",
                c.prefix.format_durations(),
                c.ratios.iter().map(rational::format).collect::<Vec<_>>().join(", ×")
            ),
            None => "aucune".to_owned(),
        };
        let _ = writeln!(out, "chaîne d'augmentation: {chain}");
        match &self.interleave {
            Some(p) => {
                let _ = writeln!(out, "ordre impair: {}", describe(&p.odd));
                let _ = writeln!(out, "ordre pair: {}", describe(&p.even));
            }
            None => {
                let _ = writeln!(out, "entrelacement: sans objet");
            }
        }
        out
    }
}

fn describe(p: &SubsequenceProfile) -> String {
    let shape = if p.constant {
        "constante"
    } else if p.unimodal {
        "croissante puis décroissante"
    } else if p.monotone {
        "monotone"
    } else {
        "irrégulière"
    };
    format!("{} ({shape})", join_values(&p.values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_int;

    #[test]
    fn parses_example_lines() {
        let entries = parse_catalog("58|râgavardhana-ersatz-name|…|2 1 2\n").unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].id, 58);
        assert_eq!(entries[0].rhythm, Rhythm::from_ints(&[2, 1, 2]).unwrap());
        assert_eq!(entries[0].source_note, "");

        assert_eq!(parse_catalog("").unwrap(), vec![]);
        assert_eq!(parse_catalog("# only a comment\n\n").unwrap(), vec![]);

        let entries = parse_catalog("18|gajalîla||1 1 1 3/2").unwrap();
        assert_eq!(entries[0].rhythm.durations()[3], "3/2".parse().unwrap());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "# header\n1|a||2 1 2\n2|b||2 x 2\n";
        assert!(matches!(parse_catalog(text), Err(CatalogError::Parse { line: 3, .. })));
        assert!(matches!(parse_catalog("1|a|2 1 2"), Err(CatalogError::Parse { line: 1, .. })));
        assert!(matches!(parse_catalog("0|a||1"), Err(CatalogError::Parse { line: 1, .. })));
        assert!(matches!(parse_catalog("+3|a||1"), Err(CatalogError::Parse { line: 1, .. })));
        assert!(matches!(parse_catalog("1|a||"), Err(CatalogError::Parse { line: 1, .. })));
        assert_eq!(
            parse_catalog("5|a||1\n\n5|b||2\n"),
            Err(CatalogError::DuplicateId { line: 3, id: 5 })
        );
    }

    #[test]
    fn analysis_examples() {
        let seed = SeedData::shipped();
        let by_id = |id| seed.talas.iter().find(|e| e.id == id).unwrap();
        assert!(analyze_entry(by_id(26)).non_retrogradable);
        let gaja = analyze_entry(by_id(99));
        assert_eq!(gaja.total, from_int(4));
        assert_eq!(gaja.prime_total, Some(false));
        let candrakala = analyze_entry(by_id(105));
        assert_eq!(candrakala.total, from_int(16));
        assert!(!candrakala.non_retrogradable);
        assert_eq!(analyze_entry(by_id(18)).prime_total, None);
        assert!(analyze_rhythm(1, &Rhythm::from_ints(&[4]).unwrap()).interleave.is_none());
    }

    #[test]
    fn filters() {
        let talas = SeedData::shipped().talas;
        let ids = |p: &str| -> Vec<u32> {
            filter_catalog(&talas, p).unwrap().iter().map(|e| e.id).collect()
        };
        assert_eq!(ids("nonretro"), vec![26, 58, 80, 99, 111]);
        assert!(ids("prime").contains(&58));
        assert_eq!(ids("augchain"), vec![73, 115]);
        assert_eq!(ids("interleave"), vec![27]);
        assert_eq!(
            filter_catalog(&talas, "palindrome"),
            Err(CatalogError::BadPredicate("palindrome".into()))
        );
    }

    #[test]
    fn report_json_round_trip() {
        for entry in SeedData::shipped().talas {
            let report = analyze_entry(&entry);
            assert_eq!(AnalysisReport::from_json(&report.to_json()).unwrap(), report);
        }
    }

    #[test]
    fn human_report_labels() {
        let talas = SeedData::shipped().talas;
        let text = analyze_entry(talas.iter().find(|e| e.id == 27).unwrap()).render_human();
        assert!(text.contains("non rétrogradable: non"));
        assert!(text.contains("ordre impair: 1 2 3 2 1 (croissante puis décroissante)"));
        assert!(text.contains("ordre pair: 3 3 3 3 3 (constante)"));
    }
}
