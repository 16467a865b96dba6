//! End-to-end checks of the `qd` binary: determinism, output fixtures,
//! schema validity of every JSON emitter, DOT well-formedness and the exit
//! code table.

use std::path::Path;
use std::process::{Command, Output};

fn qd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = qd(args);
    assert!(
        out.status.success(),
        "`qd {}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/schemas")
        .join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("reading {}: {e}", path.display()));
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft7)
        .compile(&value)
        .expect("schema compiles")
}

fn assert_valid(schema_name: &str, payload: &str) {
    let value: serde_json::Value = serde_json::from_str(payload).expect("JSON output");
    let compiled = schema(schema_name);
    let messages: Vec<String> = match compiled.validate(&value) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| e.to_string()).collect(),
    };
    assert!(
        messages.is_empty(),
        "{schema_name} violations: {messages:?}"
    );
}

const DOCUMENTED_COMMANDS: &[&[&str]] = &[
    &["analyze", "--n", "8", "(1 3)(2 8)(4 6)(5 7)"],
    &["analyze", "--n", "4", "(1 2)"],
    &["analyze", "--n", "2", "id"],
    &[
        "enumerate",
        "--n",
        "8",
        "--filter",
        "maximal-chord",
        "--count-only",
    ],
    &["enumerate", "--n", "4", "--filter", "rotreg"],
    &[
        "enumerate",
        "--n",
        "6",
        "--filter",
        "maximal-chord",
        "--count-only",
    ],
    &["enumerate", "--n", "4", "--format", "json"],
    &["orbits", "--n", "8"],
    &["orbits", "--n", "8", "--format", "text"],
    &[
        "orbits",
        "--n",
        "4",
        "--filter",
        "rotreg",
        "--group",
        "rotations",
    ],
    &["dual", "--n", "5", "(1 3)(2 4)"],
    &["dual", "--n", "5", "(1 3)(2 4)", "--format", "json"],
    &["expand", "--n", "4", "--at", "2", "(1 3)(2 4)"],
    &["contract", "--n", "5", "--at", "1", "(2 4)(3 5)"],
    &["quiver", "--n", "4", "(1 3)(2 4)", "--format", "dot"],
    &["quiver", "--n", "5", "(1 3)(2 4)", "--format", "json"],
    &["draw", "--n", "4", "(1 3)(2 4)"],
    &["draw", "--n", "7", "(1 7)(2 4)(3 5)", "--size", "320"],
    &["oracle-check", "--n", "7"],
    &["counts", "--n", "6"],
];

#[test]
fn every_documented_command_is_byte_deterministic() {
    for args in DOCUMENTED_COMMANDS {
        let first = qd(args);
        let second = qd(args);
        assert!(first.status.success(), "`qd {}` failed", args.join(" "));
        assert_eq!(
            first.stdout,
            second.stdout,
            "stdout differs between runs of `qd {}`",
            args.join(" ")
        );
    }
}

#[test]
fn fixture_outputs() {
    assert_eq!(
        stdout_of(&["dual", "--n", "5", "(1 3)(2 4)"]),
        "(2 4)(3 5)\n"
    );
    assert_eq!(
        stdout_of(&["expand", "--n", "4", "--at", "2", "(1 3)(2 4)"]),
        "(1 4)(3 5)\n"
    );
    assert_eq!(
        stdout_of(&["contract", "--n", "5", "--at", "1", "(2 4)(3 5)"]),
        "(1 3)(2 4)\n"
    );
    assert_eq!(
        stdout_of(&[
            "enumerate",
            "--n",
            "8",
            "--filter",
            "maximal-chord",
            "--count-only"
        ]),
        "21\n"
    );
    assert_eq!(
        stdout_of(&[
            "enumerate",
            "--n",
            "6",
            "--filter",
            "maximal-chord",
            "--count-only"
        ]),
        "0\n"
    );
    assert_eq!(stdout_of(&["oracle-check", "--n", "7"]), "232-of-232: OK\n");
    assert_eq!(stdout_of(&["dual", "--n", "2", "id"]), "id\n");

    let r4 = stdout_of(&["enumerate", "--n", "4", "--filter", "rotreg"]);
    assert_eq!(r4, "id\n(2 4)\n(1 3)\n(1 3)(2 4)\n");

    let counts = stdout_of(&["counts", "--n", "4"]);
    let mut lines = counts.lines();
    assert_eq!(
        lines.next(),
        Some("n,involutions,chord,maximal,maximal_chord,regular,rotreg")
    );
    assert_eq!(counts.lines().count(), 5);
    assert!(counts.lines().last().unwrap().starts_with("4,10,3,2,1,"));
}

#[test]
fn analyze_report_values() {
    let report: serde_json::Value =
        serde_json::from_str(&stdout_of(&["analyze", "--n", "8", "(1 3)(2 8)(4 6)(5 7)"])).unwrap();
    assert_eq!(report["gldim"], serde_json::json!(7));
    assert_eq!(report["koszul"]["type"], serde_json::json!("A"));
    assert_eq!(report["koszul"]["dual"], report["diagram"]);
    assert_eq!(report["surface"]["genus"], serde_json::json!(2));

    let report: serde_json::Value =
        serde_json::from_str(&stdout_of(&["analyze", "--n", "4", "(1 2)"])).unwrap();
    assert_eq!(report["gldim"], serde_json::json!("inf"));
    assert_eq!(report["regular"], serde_json::json!(false));

    let report: serde_json::Value =
        serde_json::from_str(&stdout_of(&["analyze", "--n", "2", "id"])).unwrap();
    assert_eq!(report["gldim"], serde_json::json!(1));
    assert_eq!(
        report["koszul"]["dual"]["isolated"],
        serde_json::json!([1, 2])
    );
}

#[test]
fn json_outputs_validate_against_shipped_schemas() {
    for args in [
        &["analyze", "--n", "8", "(1 3)(2 8)(4 6)(5 7)"] as &[&str],
        &["analyze", "--n", "4", "(1 2)"],
        &["analyze", "--n", "5", "(1 2)(4 5)"],
    ] {
        assert_valid("analysis.schema.json", &stdout_of(args));
    }
    assert_valid("orbits.schema.json", &stdout_of(&["orbits", "--n", "8"]));
    assert_valid(
        "orbits.schema.json",
        &stdout_of(&[
            "orbits",
            "--n",
            "4",
            "--filter",
            "rotreg",
            "--group",
            "rotations",
        ]),
    );
    assert_valid(
        "presentation.schema.json",
        &stdout_of(&["quiver", "--n", "5", "(1 3)(2 4)", "--format", "json"]),
    );
    assert_valid(
        "diagram.schema.json",
        &stdout_of(&["dual", "--n", "5", "(1 3)(2 4)", "--format", "json"]),
    );
    assert_valid(
        "diagram-list.schema.json",
        &stdout_of(&["enumerate", "--n", "4", "--format", "json"]),
    );
}

/// A deliberately small DOT well-formedness check: one digraph block, and
/// every statement is a node declaration, an edge, or an attribute line.
#[test]
fn dot_output_parses() {
    for args in [
        &["quiver", "--n", "4", "(1 3)(2 4)", "--format", "dot"] as &[&str],
        &["quiver", "--n", "4", "(1 2)", "--format", "dot"],
        &["quiver", "--n", "2", "id", "--format", "dot"],
    ] {
        let dot = stdout_of(args);
        let mut lines = dot.lines();
        assert_eq!(lines.next(), Some("digraph gentle {"));
        let mut closed = false;
        for line in lines {
            if line == "}" {
                closed = true;
                continue;
            }
            assert!(!closed, "content after closing brace: {line}");
            let line = line.trim();
            let is_attr = line == "rankdir=LR;";
            let is_node = line.starts_with('c')
                && line.contains("[label=")
                && line.ends_with("];")
                && !line.contains("->");
            let is_edge = line.starts_with('c') && line.contains(" -> ") && line.ends_with("];");
            assert!(
                is_attr || is_node || is_edge,
                "unexpected DOT statement: {line}"
            );
        }
        assert!(closed, "digraph block never closed");
    }
}

#[test]
fn svg_output_shape() {
    let svg = stdout_of(&["draw", "--n", "4", "(1 3)(2 4)"]);
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<line").count(), 2, "one line per chord");
    assert_eq!(svg.matches("<text").count(), 4, "one label per side");

    let svg = stdout_of(&["draw", "--n", "5", "(1 2)(4 5)"]);
    assert_eq!(svg.matches("<line").count(), 2);
    assert_eq!(
        svg.matches("<circle").count(),
        1,
        "one dot per isolated point"
    );
}

#[test]
fn exit_codes_match_the_table() {
    let cases: &[(&[&str], i32)] = &[
        // Parse errors.
        (&["analyze", "--n", "4", "(1 5)"], 2),
        (&["analyze", "--n", "4", "(1"], 2),
        (&["analyze", "--n", "4", "(1 2)(2 3)"], 2),
        // Invariant violations.
        (&["analyze", "--n", "3", "(1 2 3)"], 3),
        (&["quiver", "--n", "3", "(1 2 3)"], 3),
        // Domain and bound errors.
        (&["enumerate", "--n", "99"], 4),
        (&["orbits", "--n", "11"], 4),
        (&["oracle-check", "--n", "12"], 4),
        (&["dual", "--n", "4", "(1 2)"], 4),
        (&["dual", "--n", "3", "id"], 4),
        (&["contract", "--n", "4", "--at", "1", "(1 2)"], 4),
        (&["expand", "--n", "4", "--at", "9", "(1 2)"], 4),
        // The regular class is not rotation-closed (a rotation of (1 4) is
        // the non-regular (1 2)), so partitioning it is a domain error.
        (&["orbits", "--n", "4", "--filter", "regular"], 4),
        // Usage errors from the argument parser.
        (&["analyze", "--nope", "4", "id"], 2),
        (&["enumerate", "--n", "4", "--filter", "bogus"], 2),
        (&["orbits", "--n", "4", "--group", "cyclic"], 2),
    ];
    for (args, expected) in cases {
        let out = qd(args);
        assert_eq!(
            out.status.code(),
            Some(*expected),
            "`qd {}` exited {:?}, expected {expected}; stderr: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(out.stdout.is_empty(), "error paths must not write stdout");
    }
}

#[test]
fn raising_the_bound_unlocks_sweeps() {
    let out = qd(&[
        "--max-degree",
        "12",
        "enumerate",
        "--n",
        "12",
        "--filter",
        "maximal-chord",
        "--count-only",
    ]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1485\n");
}
