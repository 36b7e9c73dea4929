use std::process::Command;

use messiaen::catalog::{analyze_entry, analyze_rhythm, AnalysisReport, SeedData};
use messiaen::perm::{chronochromie, fan, orbit_table, permutation_count, FanDirection, Perm, DEFAULT_ORBIT_CAP};
use messiaen::rational::{format as fmt_rat, parse_nonnegative};
use messiaen::rhythm::{build_canon, Voice};
use messiaen::z12::{enumerate_limited, format_members, PcSet};
use messiaen::Rhythm;
use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("messiaen").chain(args.iter().copied());
    let code = messiaen::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn machine(args: &[&str]) -> Value {
    let mut full = vec!["--format", "machine"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}"))
}

fn r(text: &str) -> Rhythm {
    text.parse().unwrap()
}

fn p(text: &str) -> Perm {
    text.parse().unwrap()
}

fn s(text: &str) -> PcSet {
    text.parse().unwrap()
}

fn rhythm_json(r: &Rhythm) -> Value {
    json!({ "rhythm": r.to_string() })
}

fn scaled_json(r: &Rhythm, ratio: &str) -> Value {
    let ratio = parse_nonnegative(ratio).unwrap();
    let scaling = messiaen::rhythm::Scaling::of(&ratio);
    json!({
        "rhythm": r.augment(&ratio).unwrap().to_string(),
        "ratio": fmt_rat(&ratio),
        "scaling": serde_json::to_value(scaling).unwrap(),
    })
}

fn classify_json(set: &str) -> Value {
    let set = s(set);
    let id = set.classify_mode().unwrap().unwrap();
    json!({
        "set": format_members(set),
        "mode": id.mode_number,
        "transposition": id.transposition_offset + 1,
        "transpositions": set.minimal_period().unwrap(),
    })
}

fn period_json(set: &str) -> Value {
    let set = s(set);
    json!({
        "set": format_members(set),
        "transpositions": set.minimal_period().unwrap(),
        "limited": set.is_limited_transposition().unwrap(),
        "degenerate": set.is_degenerate(),
    })
}

fn perm_json(perm: &Perm, with_cycles: bool) -> Value {
    let mut v = json!({ "perm": perm.to_string(), "order": perm.order().to_string() });
    if with_cycles {
        let cycles: Vec<String> = perm
            .cycles()
            .iter()
            .map(|c| c.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        v["cycles"] = json!(cycles);
    }
    v
}

fn orbit_json(perm: &Perm, base: &Rhythm) -> Value {
    let table = orbit_table(perm, base.durations(), DEFAULT_ORBIT_CAP).unwrap();
    let rows: Vec<String> = table
        .rows
        .iter()
        .map(|row| Rhythm::new(row.clone(), base.unit()).unwrap().to_string())
        .collect();
    json!({ "perm": perm.to_string(), "base": base.to_string(), "rows": rows, "order": table.order() })
}

fn reports_json(reports: &[AnalysisReport]) -> Value {
    json!({ "reports": reports.iter().map(AnalysisReport::to_json_value).collect::<Vec<_>>() })
}

fn filter_json(pred: &str) -> Value {
    let seed = SeedData::shipped();
    let entries = messiaen::catalog::filter_catalog(&seed.talas, pred).unwrap();
    let reports: Vec<AnalysisReport> = entries.iter().map(|e| analyze_entry(e)).collect();
    let mut v = reports_json(&reports);
    v["predicate"] = json!(pred);
    v["ids"] = json!(entries.iter().map(|e| e.id).collect::<Vec<_>>());
    v
}

#[test]
fn golden_matrix() {
    let seed = SeedData::shipped();
    let talas = |id: u32| seed.talas.iter().find(|e| e.id == id).unwrap().clone();
    let chrom32 = messiaen::perm::chromatic_durations(32).unwrap();
    let chrom4 = messiaen::perm::chromatic_durations(4).unwrap();
    let canon = build_canon(&r("1 2"), &["0:1".parse::<Voice>().unwrap(), "1:3/2".parse().unwrap()]).unwrap();

    let cases: Vec<(Vec<&str>, Value)> = vec![
        (vec!["rhythm", "analyze", "3 5 8 5 3"], analyze_rhythm(0, &r("3 5 8 5 3")).to_json_value()),
        (vec!["rhythm", "analyze", "1 1 1 3/2"], analyze_rhythm(0, &r("1 1 1 3/2")).to_json_value()),
        (vec!["rhythm", "analyze", "4 4 2 2 1 1"], analyze_rhythm(0, &r("4 4 2 2 1 1")).to_json_value()),
        (vec!["rhythm", "retrograde", "1 3 2 3 3"], rhythm_json(&r("1 3 2 3 3").retrograde())),
        (vec!["rhythm", "augment", "2 1 2", "3/2"], scaled_json(&r("2 1 2"), "3/2")),
        (vec!["rhythm", "augment", "4 4 2", "1/2"], scaled_json(&r("4 4 2"), "1/2")),
        (vec!["rhythm", "augment", "1 1", "1"], scaled_json(&r("1 1"), "1")),
        (
            vec!["rhythm", "amplify", "2 1 2", "2 2"],
            rhythm_json(&r("2 1 2").symmetric_amplification(&r("2 2")).unwrap()),
        ),
        (
            vec!["rhythm", "amplify", "2 2 2 1 2 2 2", "2 3/2"],
            rhythm_json(&r("2 2 2 1 2 2 2").symmetric_amplification(&r("2 3/2")).unwrap()),
        ),
        (
            vec!["rhythm", "eliminate", "2 2 2 1 2 2 2", "2"],
            rhythm_json(&r("2 2 2 1 2 2 2").eliminate_extremes(2).unwrap()),
        ),
        (
            vec!["rhythm", "central", "3 5 8 5 3", "3/8"],
            rhythm_json(&r("3 5 8 5 3").scale_central(&parse_nonnegative("3/8").unwrap()).unwrap()),
        ),
        (
            vec!["rhythm", "canon", "1 2", "0:1", "1:3/2"],
            json!({
                "end": fmt_rat(&canon.end),
                "voices": [
                    {"delay": "0", "ratio": "1", "onsets": "0 1"},
                    {"delay": "1", "ratio": "3/2", "onsets": "1 5/2"},
                ],
                "events": canon.events.iter().map(|e| json!({
                    "time": fmt_rat(&e.time),
                    "voice": e.voice + 1,
                    "index": e.index + 1,
                    "duration": fmt_rat(&e.duration),
                })).collect::<Vec<_>>(),
            }),
        ),
        (vec!["pcset", "classify", "0 2 4 6 8 10"], classify_json("0 2 4 6 8 10")),
        (vec!["pcset", "classify", "1 2 4 5 7 8 10 11"], classify_json("1 2 4 5 7 8 10 11")),
        (vec!["pcset", "classify", "C D E F# G# A#"], classify_json("0 2 4 6 8 10")),
        (vec!["pcset", "period", "0 4 8"], period_json("0 4 8")),
        (vec!["pcset", "period", "0 1 2"], period_json("0 1 2")),
        (
            vec!["pcset", "truncated", "0 6"],
            json!({"set": "0 6", "truncated": s("0 6").is_truncated_mode().unwrap()}),
        ),
        (
            vec!["pcset", "enumerate"],
            json!({
                "sets": enumerate_limited().into_iter().map(format_members).collect::<Vec<_>>(),
                "count": enumerate_limited().len(),
            }),
        ),
        (vec!["perm", "order", "--chronochromie"], perm_json(&chronochromie(), false)),
        (vec!["perm", "order", "2 3 1 5 4"], perm_json(&p("2 3 1 5 4"), false)),
        (vec!["perm", "cycles", "2 3 1 4"], perm_json(&p("2 3 1 4"), true)),
        (vec!["perm", "fan", "4"], perm_json(&fan(4, FanDirection::LeftFirst).unwrap(), false)),
        (vec!["perm", "fan", "5", "--right-first"], perm_json(&fan(5, FanDirection::RightFirst).unwrap(), false)),
        (vec!["perm", "orbit", "--fan", "4"], orbit_json(&fan(4, FanDirection::LeftFirst).unwrap(), &chrom4)),
        (vec!["perm", "orbit", "--chronochromie"], orbit_json(&chronochromie(), &chrom32)),
        (
            vec!["perm", "count", "32"],
            json!({"n": 32, "count": permutation_count(32).to_string()}),
        ),
        (vec!["catalog", "analyze", "18"], reports_json(&[analyze_entry(&talas(18))])),
        (vec!["catalog", "filter", "augchain"], filter_json("augchain")),
        (vec!["catalog", "filter", "nonretro"], filter_json("nonretro")),
    ];
    assert_eq!(cases.len(), 30);
    for (args, expected) in cases {
        assert_eq!(machine(&args), expected, "{args:?}");
    }
}

/// Every string in machine output is one of the library's text forms.
#[test]
fn machine_output_reparses() {
    let v = machine(&["rhythm", "analyze", "1 3 2 3 3 3 2 3 1 3"]);
    let report = AnalysisReport::from_json_value(v.clone()).unwrap();
    assert_eq!(report.to_json_value(), v);

    for args in [
        vec!["rhythm", "retrograde", "1 2 3/4"],
        vec!["rhythm", "amplify", "2 1 2", "2 2"],
        vec!["rhythm", "eliminate", "1 2 3 2 1", "1"],
        vec!["rhythm", "central", "1 2 1", "3/2"],
        vec!["--unit", "croche", "rhythm", "augment", "1 2", "2"],
    ] {
        let v = machine(&args);
        r(v["rhythm"].as_str().unwrap());
        if let Some(ratio) = v.get("ratio") {
            parse_nonnegative(ratio.as_str().unwrap()).unwrap();
        }
    }

    let v = machine(&["rhythm", "canon", "2 1 2", "0:1", "3/2:2"]);
    parse_nonnegative(v["end"].as_str().unwrap()).unwrap();
    for voice in v["voices"].as_array().unwrap() {
        for t in voice["onsets"].as_str().unwrap().split(' ') {
            parse_nonnegative(t).unwrap();
        }
        format!("{}:{}", voice["delay"].as_str().unwrap(), voice["ratio"].as_str().unwrap())
            .parse::<Voice>()
            .unwrap();
    }

    for args in [
        vec!["pcset", "classify", "0 1 3 4 6 7 9 10"],
        vec!["pcset", "period", "0 3 6 9"],
        vec!["pcset", "truncated", "0 4 8"],
    ] {
        s(machine(&args)["set"].as_str().unwrap());
    }
    for set in machine(&["pcset", "enumerate"])["sets"].as_array().unwrap() {
        s(set.as_str().unwrap());
    }

    for args in [
        vec!["perm", "order", "3 1 2"],
        vec!["perm", "cycles", "--chronochromie"],
        vec!["perm", "fan", "9"],
    ] {
        let v = machine(&args);
        let perm = p(v["perm"].as_str().unwrap());
        assert_eq!(v["order"].as_str().unwrap(), perm.order().to_string());
    }
    let v = machine(&["perm", "orbit", "3 1 2", "--base", "1 2 3/2"]);
    r(v["base"].as_str().unwrap());
    for row in v["rows"].as_array().unwrap() {
        r(row.as_str().unwrap());
    }
    let v = machine(&["perm", "count", "40"]);
    v["count"].as_str().unwrap().parse::<num_bigint::BigUint>().unwrap();

    let v = machine(&["catalog", "list"]);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 10);
    for e in entries {
        r(e["rhythm"].as_str().unwrap());
    }
    for m in machine(&["catalog", "list", "--set", "modes"])["modes"].as_array().unwrap() {
        s(m["pitch_classes"].as_str().unwrap());
    }
    for args in [vec!["catalog", "analyze", "--set", "quatuor"], vec!["catalog", "filter", "interleave"]] {
        for rep in machine(&args)["reports"].as_array().unwrap() {
            AnalysisReport::from_json_value(rep.clone()).unwrap();
        }
    }
}

#[test]
fn exit_code_zero_iff_stderr_empty() {
    let cases: &[(&[&str], i32)] = &[
        (&["rhythm", "analyze", "1 2 1"], 0),
        (&["--format", "machine", "perm", "orbit", "--fan", "4"], 0),
        (&["catalog", "list", "--set", "quatuor"], 0),
        (&["--help"], 0),
        (&["rhythm", "analyze", "1 x 2"], 2),
        (&["rhythm", "analyze", ""], 2),
        (&["rhythm", "augment", "1 2", "-1"], 2),
        (&["pcset", "classify", "0 0 4"], 2),
        (&["pcset", "classify", "12"], 2),
        (&["perm", "order", "1 1 2"], 2),
        (&["frobnicate"], 2),
        (&["--format", "yaml", "perm", "count", "3"], 2),
        (&["catalog", "filter", "nonsense"], 2),
        (&["rhythm", "augment", "1 2", "0"], 3),
        (&["rhythm", "central", "1 2", "2"], 3),
        (&["rhythm", "eliminate", "1 2 1", "2"], 3),
        (&["rhythm", "interleave", "1"], 2),
        (&["pcset", "period", ""], 3),
        (&["pcset", "truncated", "0 1 2 3 4 5 6 7 8 9 10 11"], 3),
        (&["perm", "orbit", "--chronochromie", "--cap", "10"], 3),
        (&["catalog", "analyze", "9999"], 3),
        (&["--data", "/nonexistent/dir", "catalog", "list"], 3),
    ];
    for (args, want) in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, *want, "{args:?}: out={out} err={err}");
        assert_eq!(code == 0, err.is_empty(), "{args:?}: {err}");
        if code != 0 {
            assert!(out.is_empty(), "{args:?} wrote to stdout on failure");
        }
    }
}

#[test]
fn data_override() {
    let dir = std::env::temp_dir().join(format!("messiaen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("talas.cat"), "# custom\n7|x|y|1 2 1\n8|||3 1 3/2 @unit=croche\n").unwrap();
    std::fs::write(dir.join("quatuor.cat"), "1|||2 2\n").unwrap();
    std::fs::write(dir.join("modes.cat"), messiaen::catalog::SEED_MODES).unwrap();

    let d = dir.to_str().unwrap();
    let v = machine(&["--data", d, "catalog", "list"]);
    let ids: Vec<u64> = v["entries"].as_array().unwrap().iter().map(|e| e["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, [7, 8]);
    assert_eq!(v["entries"][1]["rhythm"], "3 1 3/2 @unit=croche");
    let v = machine(&["--data", d, "catalog", "filter", "nonretro"]);
    assert_eq!(v["ids"], json!([7]));

    std::fs::write(dir.join("talas.cat"), "7|||1 2\n7|||2 1\n").unwrap();
    let (code, _, err) = run(&["--data", d, "catalog", "list"]);
    assert_eq!(code, 2);
    assert!(err.contains('7'), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unit_flag_and_human_output() {
    let v = machine(&["--unit", "croche", "rhythm", "retrograde", "1 2"]);
    assert_eq!(v["rhythm"], "2 1 @unit=croche");

    let (code, out, _) = run(&["rhythm", "analyze", "3 5 8 5 3"]);
    assert_eq!(code, 0);
    assert!(out.contains("non rétrogradable: oui"), "{out}");
    assert!(out.contains("durée totale: 24"), "{out}");

    let (_, out, _) = run(&["pcset", "classify", "1 2 4 5 7 8 10 11"]);
    assert!(out.contains("Mode 2, transposition 2 (of 3)"), "{out}");

    let (_, out, _) = run(&["perm", "orbit", "--chronochromie"]);
    assert!(out.trim_end().ends_with("order = 36"), "{out}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_messiaen");
    let ok = Command::new(bin).args(["perm", "count", "12"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("479001600"));
    assert!(ok.stderr.is_empty());

    let parse = Command::new(bin).args(["rhythm", "analyze", "1/0"]).output().unwrap();
    assert_eq!(parse.status.code(), Some(2));
    assert!(!parse.stderr.is_empty());

    let domain = Command::new(bin).args(["rhythm", "central", "1 1", "2"]).output().unwrap();
    assert_eq!(domain.status.code(), Some(3));
    assert!(!domain.stderr.is_empty());
}
