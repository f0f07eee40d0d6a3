use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn torus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = torus(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "schemas",
        &format!("{name}.schema.json"),
    ]
    .iter()
    .collect();
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&raw).expect("schema compiles")
}

fn assert_valid(name: &str, v: &Value) {
    let s = schema(name);
    let msgs: Vec<String> = match s.validate(v) {
        Ok(()) => return,
        Err(errors) => errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect(),
    };
    panic!("{name} report violates its schema: {msgs:?}");
}

#[test]
fn info_examples() {
    let r = report(&["info", "--dim", "3", "--size", "2"]);
    assert_eq!(r["result"]["counts"]["edge_count"], 24);
    assert_eq!(r["result"]["ground_energy"], -32);
    let r = report(&["info", "--dim", "2", "--size", "4"]);
    assert_eq!(r["result"]["counts"]["edge_count"], 32);
    assert_eq!(r["result"]["ground_energy"], -32);
    assert_eq!(r["config"]["sizes"], serde_json::json!([4, 4]));
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["info", "--dim", "2", "--size", "1"][..],
        &["info", "--dim", "4", "--size", "3"],
        &["info", "--dim", "3", "--size", "3,3"],
        &["info", "--size", "3"],
        &["syndrome", "--dim", "2", "--size", "3", "--op", "Z:18"],
        &["syndrome", "--dim", "2", "--size", "3", "--op", "Q:1"],
        &["fuse", "e", "q"],
        &["braid", "--dim", "2", "--size", "3", "--pair", "e-x"],
    ] {
        assert_eq!(torus(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn resource_cap_exits_3() {
    assert_eq!(
        torus(&["spectrum", "--dim", "2", "--size", "3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        torus(&["spectrum", "--dim", "3", "--size", "2"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn degeneracy_reports_agree() {
    for (dim, size, deg) in [
        ("2", "3", 4),
        ("2", "4,6", 4),
        ("3", "2", 8),
        ("3", "3,4,5", 8),
    ] {
        let r = report(&["degeneracy", "--dim", dim, "--size", size]);
        assert_eq!(r["result"]["degeneracy"], deg);
        assert_eq!(r["result"]["agreement"], true);
        assert_valid("degeneracy", &r);
    }
}

#[test]
fn syndrome_examples() {
    let r = report(&["syndrome", "--dim", "2", "--size", "4", "--op", "Z:(1,1,0)"]);
    assert_eq!(
        r["result"]["violated_vertices"].as_array().unwrap().len(),
        2
    );
    assert_eq!(r["result"]["energy"], -32 + 4);
    let r = report(&["syndrome", "--dim", "3", "--size", "3", "--op", "X:5"]);
    assert_eq!(r["result"]["violated_faces"].as_array().unwrap().len(), 4);
    assert_eq!(
        r["result"]["energy"],
        r["result"]["ground_energy"].as_i64().unwrap() + 8
    );
    // Boundary of the face at the origin in the (0,1) plane.
    let r = report(&[
        "syndrome",
        "--dim",
        "2",
        "--size",
        "4",
        "--op",
        "Z:(0,0,0),(1,0,1),(0,1,0),(0,0,1)",
    ]);
    assert_eq!(r["result"]["excitation_energy"], 0);
    assert_eq!(r["config"]["ops"][0], "Z:0,20,1,16");
    // Two specs multiply: Z then Z on the same edge cancels.
    let r = report(&[
        "syndrome", "--dim", "2", "--size", "3", "--op", "Z:4", "--op", "Z:4",
    ]);
    assert_eq!(r["result"]["operator"]["weight"], 0);
}

#[test]
fn braid_fuse_spectrum_examples() {
    let r = report(&["braid", "--dim", "2", "--size", "2", "--pair", "e-m"]);
    assert_eq!(r["result"]["phase"], -1);
    assert_eq!(r["result"]["dense_phase"], -1);
    for pair in ["e-e", "m-m"] {
        let r = report(&["braid", "--dim", "2", "--size", "2", "--pair", pair]);
        assert_eq!(r["result"]["phase"], 1);
        assert_eq!(r["result"]["dense_phase"], 1);
    }
    let r = report(&["braid", "--dim", "3", "--size", "3"]);
    assert_eq!(r["result"]["phase"], -1);
    assert!(r["result"]["dense_phase"].is_null());

    let r = report(&["fuse", "e", "m"]);
    assert_eq!(r["result"]["result"], "ε");
    assert_eq!(r["result"]["statistics"]["self_statistics"], "fermion");

    let r = report(&["spectrum", "--dim", "2", "--size", "2"]);
    assert_eq!(r["result"]["ground_energy"], -8);
    assert_eq!(r["result"]["ground_multiplicity"], 4);
    assert_eq!(r["result"]["max_energy"], 8);
}

#[test]
fn every_subcommand_matches_its_schema() {
    let cases: [(&str, &[&str]); 9] = [
        ("info", &["info", "--dim", "2", "--size", "3"]),
        ("info", &["info", "--dim", "3", "--size", "2,3,4"]),
        ("degeneracy", &["degeneracy", "--dim", "3", "--size", "3"]),
        (
            "syndrome",
            &[
                "syndrome",
                "--dim",
                "3",
                "--size",
                "2",
                "--op",
                "Y:(0,1,1,2),3",
            ],
        ),
        (
            "syndrome",
            &["syndrome", "--dim", "2", "--size", "5", "--seed", "17"],
        ),
        (
            "braid",
            &["braid", "--dim", "3", "--size", "2", "--pair", "m-m"],
        ),
        ("fuse", &["fuse"]),
        ("fuse", &["fuse", "e", "ε", "m"]),
        ("spectrum", &["spectrum", "--dim", "2", "--size", "2"]),
    ];
    for (name, args) in cases {
        assert_valid(name, &report(args));
    }
    let mut broken = report(&["info", "--dim", "2", "--size", "3"]);
    broken["result"]["stabilizer_weights"]["face"] = 5.into();
    assert!(!schema("info").is_valid(&broken));
    let mut broken = report(&["fuse", "e"]);
    broken["result"]["result"] = "q".into();
    assert!(!schema("fuse").is_valid(&broken));
}

#[test]
fn output_is_deterministic_and_sorted() {
    for args in [
        &["syndrome", "--dim", "3", "--size", "3", "--seed", "42"][..],
        &["spectrum", "--dim", "2", "--size", "2"],
        &["fuse", "e", "m", "--format", "table"],
    ] {
        let (a, b) = (torus(args), torus(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let text = String::from_utf8(a.stdout).unwrap();
        assert!(text.lines().all(|l| l == l.trim_end()));
    }
    let seeded = |s: &str| {
        report(&["syndrome", "--dim", "2", "--size", "4", "--seed", s])["result"]["operator"]
            .clone()
    };
    assert_ne!(seeded("1"), seeded("2"));

    let raw = torus(&["braid", "--dim", "2", "--size", "2"]).stdout;
    let text = String::from_utf8(raw).unwrap();
    // Keys at each indentation level of the pretty output appear in order
    // within their object; check the two outermost levels directly.
    for indent in ["  \"", "    \""] {
        let mut keys = Vec::new();
        for line in text.lines() {
            if line.starts_with(indent) {
                keys.push(line.trim_start().to_string());
            } else if line.trim_start().starts_with('}')
                && line.len() - line.trim_start().len() < indent.len() - 1
            {
                let mut sorted = keys.clone();
                sorted.sort();
                assert_eq!(keys, sorted);
                keys.clear();
            }
        }
    }
}
