use std::path::PathBuf;
use std::process::Command;

use minuscule_cli::run;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Golden file cases: (file name, arguments after the binary name).
const GOLDEN: &[(&str, &[&str])] = &[
    (
        "example.json",
        &["analyze", "--space", "A6/4", "--partition", "3,2,1,1"],
    ),
    (
        "example.txt",
        &[
            "analyze",
            "--space",
            "A6/4",
            "λ=3,2,1,1",
            "--format",
            "text",
        ],
    ),
    (
        "example_render.txt",
        &["render", "--space", "A6/4", "--partition", "3,2,1,1"],
    ),
    (
        "example.svg",
        &[
            "render",
            "--space",
            "A6/4",
            "--partition",
            "3,2,1,1",
            "--format",
            "svg",
        ],
    ),
    (
        "empty_render.txt",
        &["render", "--space", "A6/4", "--ideal", "0x0"],
    ),
    ("d4_full_render.txt", &["render", "--space", "D4/4"]),
    (
        "d4_full.svg",
        &["render", "--space", "D4/4", "--format", "svg"],
    ),
    (
        "e6_full.json",
        &["analyze", "--space", "E6/1", "ideal=0xFFFF"],
    ),
    ("a6_4_enumerate.txt", &["enumerate", "--space", "A6/4"]),
];

fn cli(args: &[&str]) -> minuscule_cli::Outcome {
    run(std::iter::once("minuscule").chain(args.iter().copied()))
}

/// Set `UPDATE_GOLDEN=1` to rewrite the files.
#[test]
fn golden_files_match() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in GOLDEN {
        let out = cli(args);
        assert_eq!(out.code, 0, "{name}: {}", out.stderr);
        let path = golden_dir().join(name);
        if update {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &out.stdout).unwrap();
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(out.stdout, expected, "{name} differs from golden file");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_minuscule");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let ok = status(&["analyze", "--space", "E6/1", "--ideal", "0xFFFF"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("\"smooth\": true"));

    for bad in [
        &["analyze", "--space", "E8/1"][..],
        &["analyze", "--space", "A6/4", "--partition", "5"],
        &["analyze", "--space", "D4/4", "--partition", "1"],
        &["analyze", "--space", "A6/4", "--ideal", "0x2"],
        &["analyze", "--space", "A6/4", "--word", "4,4"],
        &["frobnicate"],
        &["verify", "--suite", "nope"],
    ] {
        let out = status(bad);
        assert_eq!(out.status.code(), Some(1), "{bad:?}");
        assert!(!out.stderr.is_empty(), "{bad:?} printed no diagnostic");
    }

    let verify = status(&["verify", "--space", "A1/1", "--suite", "all"]);
    assert_eq!(verify.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&verify.stdout).ends_with("PASS\n"));
}

#[test]
fn enumerate_counts() {
    for (space, n) in [("A6/4", 35), ("E7/7", 56), ("A1/1", 2), ("D5/5", 16)] {
        let out = cli(&["enumerate", "--space", space]);
        assert_eq!(out.stdout.lines().count(), n, "{space}");
        let json = cli(&["enumerate", "--space", space, "--format", "json"]);
        let docs: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
        assert_eq!(docs.as_array().unwrap().len(), n);
    }
}

#[test]
fn json_round_trips_through_the_mask() {
    for (space, spec) in [
        ("A6/4", "λ=3,2,1,1"),
        ("D5/5", "ideal=0x3f4"),
        ("E6/1", "word=6,5,4,3,1"),
    ] {
        let first = cli(&["analyze", "--space", space, spec]);
        assert_eq!(first.code, 0, "{space} {spec}: {}", first.stderr);
        let doc: serde_json::Value = serde_json::from_str(&first.stdout).unwrap();
        let mask = doc["ideal_mask"].as_str().unwrap();
        let second = cli(&["analyze", "--space", space, "--ideal", mask]);
        assert_eq!(first.stdout, second.stdout);
    }
}

#[test]
fn example_json_schema() {
    let out = cli(&["analyze", "--space", "A6/4", "--partition", "3,2,1,1"]);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["permutation"], "2357146");
    assert_eq!(doc["dimension"], 7);
    assert_eq!(doc["holes"].as_array().unwrap().len(), 2);
    assert_eq!(doc["non_gorenstein_holes"].as_array().unwrap().len(), 1);
    let dims: Vec<u64> = doc["singular_components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["dimension"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![4, 3]);
    let hole = &doc["holes"][0];
    let keys: Vec<&str> = hole
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys.len(), 5);
    for k in ["vertex", "color", "virtual", "essential", "gorenstein"] {
        assert!(keys.contains(&k));
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("minuscule-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("render.svg");
    let out = cli(&[
        "render",
        "--space",
        "D4/4",
        "--format",
        "svg",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("<svg"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn help_is_not_an_error() {
    let out = cli(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("analyze"));
}
