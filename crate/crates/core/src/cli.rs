//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 for usage and parse errors, 3 for domain
//! errors. Human output is 1-based with French labels; `--format machine`
//! prints one JSON object whose values use the library text formats.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{self, AnalysisReport, CatalogError, ModeEntry, SeedData, TalaEntry};
use crate::perm::{self, FanDirection, Perm, PermError};
use crate::rational::{self, Rational};
use crate::rhythm::{self, Rhythm, RhythmError, Scaling, Voice};
use crate::z12::{self, PcSet, Z12Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Domain(m) => m,
        }
    }
}

macro_rules! classify_errors {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                if e.is_parse() {
                    CliError::Parse(e.to_string())
                } else {
                    CliError::Domain(e.to_string())
                }
            }
        }
    )*};
}

classify_errors!(RhythmError, Z12Error, PermError, CatalogError);

impl From<rational::ParseRationalError> for CliError {
    fn from(e: rational::ParseRationalError) -> Self {
        CliError::Parse(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "messiaen",
    version,
    about = "Non-retrogradable rhythms, modes of limited transposition and symmetric permutations"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Unit label for rhythms that do not carry `@unit=`.
    #[arg(long, global = true)]
    pub unit: Option<String>,
    /// Iteration cap for orbit tables.
    #[arg(long, default_value_t = perm::DEFAULT_ORBIT_CAP, global = true)]
    pub cap: usize,
    /// Directory holding talas.cat, quatuor.cat and modes.cat.
    #[arg(long, global = true)]
    pub data: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Duration sequences.
    #[command(subcommand)]
    Rhythm(RhythmCmd),
    /// Pitch-class sets modulo 12.
    #[command(subcommand)]
    Pcset(PcsetCmd),
    /// Permutations in reading order.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Seed catalogs.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Debug, Subcommand)]
pub enum RhythmCmd {
    /// Palindrome, total, primality, augmentation chain and interleaving.
    Analyze { rhythm: String },
    /// Reverse the durations.
    Retrograde { rhythm: String },
    /// Multiply every duration by a ratio.
    Augment { rhythm: String, ratio: String },
    /// Wrap with a wing and its retrograde.
    Amplify { core: String, wing: String },
    /// Remove k durations from both ends.
    Eliminate { rhythm: String, k: usize },
    /// Scale the central duration.
    Central { rhythm: String, ratio: String },
    /// Onset schedule for voices given as `delay:ratio`.
    Canon {
        subject: String,
        #[arg(required = true)]
        voices: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PcsetCmd {
    /// Identify a catalogued mode and its transposition.
    Classify { set: String },
    /// Number of distinct transpositions.
    Period { set: String },
    /// All sets with fewer than 12 transpositions.
    Enumerate,
    /// Limited transposition but none of the seven modes.
    Truncated { set: String },
}

#[derive(Debug, Args)]
pub struct PermSource {
    /// 1-based images, e.g. "3 28 5 30 …".
    pub perm: Option<String>,
    /// The 32-point Chronochromie permutation.
    #[arg(long, conflicts_with_all = ["perm", "fan"])]
    pub chronochromie: bool,
    /// Center-outward permutation on n points.
    #[arg(long, value_name = "N", conflicts_with = "perm")]
    pub fan: Option<usize>,
    /// Read the right neighbour of the center first.
    #[arg(long, requires = "fan")]
    pub right_first: bool,
}

#[derive(Debug, Subcommand)]
pub enum PermCmd {
    Order(PermSource),
    Cycles(PermSource),
    /// Print the center-outward permutation on n points.
    Fan {
        n: usize,
        #[arg(long)]
        right_first: bool,
    },
    /// Apply the permutation repeatedly until the base returns.
    Orbit {
        #[command(flatten)]
        source: PermSource,
        /// Base rhythm; defaults to the chromatic durations 1..n.
        #[arg(long)]
        base: Option<String>,
    },
    /// n! as an exact integer.
    Count { n: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum CatalogSet {
    #[default]
    Talas,
    Quatuor,
    Modes,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    List {
        #[arg(long, value_enum, default_value_t = CatalogSet::Talas)]
        set: CatalogSet,
    },
    /// Reports for the given ids, or every entry.
    Analyze {
        ids: Vec<u32>,
        #[arg(long, value_enum, default_value_t = CatalogSet::Talas)]
        set: CatalogSet,
    },
    /// Entries satisfying nonretro, prime, augchain or interleave.
    Filter {
        predicate: String,
        #[arg(long, value_enum, default_value_t = CatalogSet::Talas)]
        set: CatalogSet,
    },
}

/// Parses `argv` (including the program name), runs the command and writes
/// to the given streams. Returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_PARSE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(Output { human, machine }) => {
            let text = match cli.format {
                Format::Human => human,
                Format::Machine => format!("{machine}\n"),
            };
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}

pub struct Output {
    pub human: String,
    pub machine: Value,
}

fn out(human: String, machine: Value) -> Result<Output, CliError> {
    Ok(Output { human, machine })
}

impl Cli {
    fn rhythm(&self, text: &str) -> Result<Rhythm, CliError> {
        let rhythm = Rhythm::from_str(text)?;
        Ok(match &self.unit {
            Some(unit) if !text.contains("@unit=") => rhythm.with_unit(unit.as_str()),
            _ => rhythm,
        })
    }

    fn seed(&self) -> Result<SeedData, CliError> {
        match &self.data {
            Some(dir) => Ok(SeedData::load_dir(dir)?),
            None => Ok(SeedData::shipped()),
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Rhythm(cmd) => rhythm_cmd(cli, cmd),
        Command::Pcset(cmd) => pcset_cmd(cmd),
        Command::Perm(cmd) => perm_cmd(cli, cmd),
        Command::Catalog(cmd) => catalog_cmd(cli, cmd),
    }
}

fn rhythm_result(label: &str, r: &Rhythm, extra: Option<(&str, Value)>) -> Result<Output, CliError> {
    let mut machine = json!({ "rhythm": r.to_string() });
    let mut human = format!("{label}: {}\n", r.format_durations());
    let nonretro = if r.is_non_retrogradable() { "oui" } else { "non" };
    human.push_str(&format!("non rétrogradable: {nonretro}\n"));
    if let Some((key, value)) = extra {
        machine[key] = value;
    }
    out(human, machine)
}

fn rhythm_cmd(cli: &Cli, cmd: &RhythmCmd) -> Result<Output, CliError> {
    match cmd {
        RhythmCmd::Analyze { rhythm } => {
            let report = catalog::analyze_rhythm(0, &cli.rhythm(rhythm)?);
            out(report.render_human(), report.to_json_value())
        }
        RhythmCmd::Retrograde { rhythm } => {
            rhythm_result("rétrograde", &cli.rhythm(rhythm)?.retrograde(), None)
        }
        RhythmCmd::Augment { rhythm, ratio } => {
            let ratio = rational::parse_nonnegative(ratio)?;
            let result = cli.rhythm(rhythm)?.augment(&ratio)?;
            let scaling = Scaling::of(&ratio);
            let label = match scaling {
                Scaling::Augmentation => "augmentation",
                Scaling::Diminution => "diminution",
                Scaling::Identity => "identité",
            };
            let mut o = rhythm_result(label, &result, Some(("scaling", json!(scaling))))?;
            o.machine["ratio"] = json!(rational::format(&ratio));
            Ok(o)
        }
        RhythmCmd::Amplify { core, wing } => {
            let result = cli.rhythm(core)?.symmetric_amplification(&cli.rhythm(wing)?)?;
            rhythm_result("amplification symétrique", &result, None)
        }
        RhythmCmd::Eliminate { rhythm, k } => {
            let result = cli.rhythm(rhythm)?.eliminate_extremes(*k)?;
            rhythm_result("élimination des extrêmes", &result, None)
        }
        RhythmCmd::Central { rhythm, ratio } => {
            let ratio = rational::parse_nonnegative(ratio)?;
            let result = cli.rhythm(rhythm)?.scale_central(&ratio)?;
            rhythm_result("valeur centrale", &result, None)
        }
        RhythmCmd::Canon { subject, voices } => {
            let subject = cli.rhythm(subject)?;
            let voices = voices
                .iter()
                .map(|v| Voice::from_str(v))
                .collect::<Result<Vec<_>, _>>()?;
            let canon = rhythm::build_canon(&subject, &voices)?;
            render_canon(&subject, &voices, &canon)
        }
    }
}

fn join_rationals(values: &[Rational]) -> String {
    values.iter().map(rational::format).collect::<Vec<_>>().join(" ")
}

fn render_canon(subject: &Rhythm, voices: &[Voice], canon: &rhythm::Canon) -> Result<Output, CliError> {
    let mut human = format!("sujet: {}\n", subject.format_durations());
    let mut machine_voices = Vec::new();
    for (i, (voice, onsets)) in voices.iter().zip(&canon.onsets).enumerate() {
        human.push_str(&format!(
            "voix {} (départ {}, rapport {}): attaques {}\n",
            i + 1,
            rational::format(&voice.delay),
            rational::format(&voice.ratio),
            join_rationals(onsets)
        ));
        machine_voices.push(json!({
            "delay": rational::format(&voice.delay),
            "ratio": rational::format(&voice.ratio),
            "onsets": join_rationals(onsets),
        }));
    }
    human.push_str("événements:\n");
    let mut events = Vec::new();
    for e in &canon.events {
        human.push_str(&format!(
            "  {} voix {} note {} durée {}\n",
            rational::format(&e.time),
            e.voice + 1,
            e.index + 1,
            rational::format(&e.duration)
        ));
        events.push(json!({
            "time": rational::format(&e.time),
            "voice": e.voice + 1,
            "index": e.index + 1,
            "duration": rational::format(&e.duration),
        }));
    }
    human.push_str(&format!("fin: {}\n", rational::format(&canon.end)));
    out(
        human,
        json!({ "voices": machine_voices, "events": events, "end": rational::format(&canon.end) }),
    )
}

fn parse_set(text: &str) -> Result<PcSet, CliError> {
    Ok(PcSet::from_str(text)?)
}

fn pcset_cmd(cmd: &PcsetCmd) -> Result<Output, CliError> {
    match cmd {
        PcsetCmd::Classify { set } => {
            let set = parse_set(set)?;
            let period = set.minimal_period()?;
            let found = set.classify_mode()?;
            let human = match found {
                Some(id) => format!(
                    "Mode {}, transposition {} (of {})\n",
                    id.mode_number,
                    id.transposition_offset + 1,
                    period
                ),
                None => format!("aucun des sept modes ({period} transpositions)\n"),
            };
            out(
                human,
                json!({
                    "set": z12::format_members(set),
                    "mode": found.map(|m| m.mode_number),
                    "transposition": found.map(|m| m.transposition_offset + 1),
                    "transpositions": period,
                }),
            )
        }
        PcsetCmd::Period { set } => {
            let set = parse_set(set)?;
            let period = set.minimal_period()?;
            let mut human = format!("{set}: {period} transpositions\n");
            if period < 12 {
                human.push_str("mode à transpositions limitées\n");
            }
            if set.is_degenerate() {
                human.push_str("ensemble dégénéré\n");
            }
            out(
                human,
                json!({
                    "set": z12::format_members(set),
                    "transpositions": period,
                    "limited": period < 12,
                    "degenerate": set.is_degenerate(),
                }),
            )
        }
        PcsetCmd::Enumerate => {
            let sets = z12::enumerate_limited();
            let mut human = String::new();
            for s in &sets {
                let period = s.minimal_period().map(|p| p.to_string()).unwrap_or_else(|_| "-".into());
                let flag = if s.is_degenerate() { " (dégénéré)" } else { "" };
                human.push_str(&format!("{:>4} {s} transpositions {period}{flag}\n", s.bits()));
            }
            human.push_str(&format!("total: {}\n", sets.len()));
            let listed: Vec<String> = sets.iter().map(|s| z12::format_members(*s)).collect();
            out(human, json!({ "sets": listed, "count": sets.len() }))
        }
        PcsetCmd::Truncated { set } => {
            let set = parse_set(set)?;
            let truncated = set.is_truncated_mode()?;
            let human = format!("{set}: mode tronqué: {}\n", if truncated { "oui" } else { "non" });
            out(human, json!({ "set": z12::format_members(set), "truncated": truncated }))
        }
    }
}

fn direction(right_first: bool) -> FanDirection {
    if right_first {
        FanDirection::RightFirst
    } else {
        FanDirection::LeftFirst
    }
}

fn resolve_perm(source: &PermSource) -> Result<Perm, CliError> {
    match (&source.perm, source.chronochromie, source.fan) {
        (Some(text), false, None) => Ok(Perm::from_str(text)?),
        (None, true, None) => Ok(perm::chronochromie()),
        (None, false, Some(n)) => Ok(perm::fan(n, direction(source.right_first))?),
        _ => Err(CliError::Parse(
            "give exactly one of a permutation, --chronochromie or --fan N".into(),
        )),
    }
}

fn one_based_cycles(p: &Perm) -> Vec<String> {
    p.cycles()
        .iter()
        .map(|c| c.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" "))
        .collect()
}

fn perm_cmd(cli: &Cli, cmd: &PermCmd) -> Result<Output, CliError> {
    match cmd {
        PermCmd::Order(source) => {
            let p = resolve_perm(source)?;
            let order = p.order();
            out(
                format!("{p}\norder = {order}\n"),
                json!({ "perm": p.to_string(), "order": order.to_string() }),
            )
        }
        PermCmd::Cycles(source) => {
            let p = resolve_perm(source)?;
            let cycles = one_based_cycles(&p);
            let mut human = String::new();
            for c in &cycles {
                human.push_str(&format!("({c})\n"));
            }
            human.push_str(&format!("order = {}\n", p.order()));
            out(
                human,
                json!({ "perm": p.to_string(), "cycles": cycles, "order": p.order().to_string() }),
            )
        }
        PermCmd::Fan { n, right_first } => {
            let p = perm::fan(*n, direction(*right_first))?;
            out(
                format!("{p}\norder = {}\n", p.order()),
                json!({ "perm": p.to_string(), "order": p.order().to_string() }),
            )
        }
        PermCmd::Orbit { source, base } => {
            let p = resolve_perm(source)?;
            let base = match base {
                Some(text) => cli.rhythm(text)?,
                None => {
                    let scale = perm::chromatic_durations(p.len())?;
                    match &cli.unit {
                        Some(unit) => scale.with_unit(unit.as_str()),
                        None => scale,
                    }
                }
            };
            let table = perm::orbit_table(&p, base.durations(), cli.cap)?;
            let rows: Vec<Rhythm> = table
                .rows
                .iter()
                .map(|row| Rhythm::new(row.clone(), base.unit()).expect("nonempty row"))
                .collect();
            let width = rows.len().to_string().len();
            let mut human = String::new();
            for (k, row) in rows.iter().enumerate() {
                human.push_str(&format!("{:>width$}: {}\n", k + 1, row.format_durations()));
            }
            // Writing out the start and every iterate up to its return lists
            // one suite more than the order.
            human.push_str(&format!(
                "suites listées, départ et retour compris: {}\n",
                table.order() + 1
            ));
            human.push_str(&format!("order = {}\n", table.order()));
            out(
                human,
                json!({
                    "perm": p.to_string(),
                    "base": base.to_string(),
                    "rows": rows.iter().map(Rhythm::to_string).collect::<Vec<_>>(),
                    "order": table.order(),
                }),
            )
        }
        PermCmd::Count { n } => {
            let count = perm::permutation_count(*n);
            out(format!("{n}! = {count}\n"), json!({ "n": n, "count": count.to_string() }))
        }
    }
}

fn entry_json(e: &TalaEntry) -> Value {
    json!({
        "id": e.id,
        "name": e.name,
        "gloss": e.gloss,
        "rhythm": e.rhythm.to_string(),
        "source_note": e.source_note,
    })
}

fn mode_json(m: &ModeEntry) -> Value {
    json!({
        "number": m.number,
        "name": m.name,
        "gloss": m.gloss,
        "pitch_classes": z12::format_members(m.pitch_classes),
    })
}

fn rhythms(seed: &SeedData, set: CatalogSet) -> Result<&[TalaEntry], CliError> {
    match set {
        CatalogSet::Talas => Ok(&seed.talas),
        CatalogSet::Quatuor => Ok(&seed.quatuor),
        CatalogSet::Modes => Err(CliError::Parse("the modes catalog holds pitch-class sets, not rhythms".into())),
    }
}

fn reports_output(reports: &[AnalysisReport], mut machine: Value) -> Result<Output, CliError> {
    let human = reports
        .iter()
        .map(AnalysisReport::render_human)
        .collect::<Vec<_>>()
        .join("\n");
    machine["reports"] = reports.iter().map(AnalysisReport::to_json_value).collect();
    out(human, machine)
}

fn catalog_cmd(cli: &Cli, cmd: &CatalogCmd) -> Result<Output, CliError> {
    let seed = cli.seed()?;
    match cmd {
        CatalogCmd::List { set: CatalogSet::Modes } => {
            let mut human = String::new();
            for m in &seed.modes {
                human.push_str(&format!("{}: {}  [{}]\n", m.number, m.name, z12::format_members(m.pitch_classes)));
            }
            out(human, json!({ "modes": seed.modes.iter().map(mode_json).collect::<Vec<_>>() }))
        }
        CatalogCmd::List { set } => {
            let entries = rhythms(&seed, *set)?;
            let mut human = String::new();
            for e in entries {
                let mut label = e.name.clone();
                if !e.gloss.is_empty() {
                    if !label.is_empty() {
                        label.push_str(" = ");
                    }
                    label.push_str(&e.gloss);
                }
                human.push_str(&format!("{:>4}  {:<28} {}\n", e.id, label, e.rhythm.format_durations()));
            }
            out(human, json!({ "entries": entries.iter().map(entry_json).collect::<Vec<_>>() }))
        }
        CatalogCmd::Analyze { ids, set } => {
            let entries = rhythms(&seed, *set)?;
            let selected: Vec<&TalaEntry> = if ids.is_empty() {
                entries.iter().collect()
            } else {
                ids.iter()
                    .map(|id| {
                        entries
                            .iter()
                            .find(|e| e.id == *id)
                            .ok_or(CliError::Domain(CatalogError::UnknownId(*id).to_string()))
                    })
                    .collect::<Result<_, _>>()?
            };
            let reports: Vec<AnalysisReport> = selected.into_iter().map(catalog::analyze_entry).collect();
            reports_output(&reports, json!({}))
        }
        CatalogCmd::Filter { predicate, set } => {
            let entries = rhythms(&seed, *set)?;
            let matched = catalog::filter_catalog(entries, predicate)?;
            let reports: Vec<AnalysisReport> = matched.iter().map(|e| catalog::analyze_entry(e)).collect();
            let ids: Vec<u32> = matched.iter().map(|e| e.id).collect();
            reports_output(&reports, json!({ "predicate": predicate, "ids": ids }))
        }
    }
}
