use std::path::Path;

use frobweight::cli::{run, split_top_level, EXIT_OK, EXIT_USAGE};
use frobweight::extension::ScenarioReport;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut argv = vec!["frobweight"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn labels_with_commas_survive_splitting() {
    assert_eq!(split_top_level("(1,0),(0,1),0"), ["(1,0)", "(0,1)", "0"]);
    assert_eq!(split_top_level("0,6,3"), ["0", "6", "3"]);
}

#[test]
fn ring_info_reports_units_and_generating_characters() {
    let dir = tempfile::tempdir().unwrap();
    let z4 = write(dir.path(), "z4.json", r#"{"kind":"zn","n":4}"#);
    let (code, out) = call(&["ring", "info", &z4]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["frobenius"], true);
    assert_eq!(v["units"], 2);
    assert_eq!(v["unit_list"], serde_json::json!(["1", "3"]));
    assert_eq!(v["generating_characters"].as_array().unwrap().len(), 2);

    let local = write(
        dir.path(),
        "local.json",
        r#"{"kind":"quotient","chars":2,"gens":["x","y"],"relations":["x^2","y^2","x*y"]}"#,
    );
    let v: Value = serde_json::from_str(&call(&["ring", "info", &local]).1).unwrap();
    assert_eq!(v["frobenius"], false);
    assert_eq!(v["units"], 4);
    assert_eq!(v["character_module"]["generating_characters"], 4);
}

#[test]
fn weight_values() {
    let dir = tempfile::tempdir().unwrap();
    let z24 = write(dir.path(), "z24.json", r#"{"kind":"zn","n":24}"#);
    let (code, out) = call(&[
        "weight",
        "wt-n",
        &z24,
        "--vector",
        "0,6,3",
        "--submodule",
        "6",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 2);

    let f4 = write(
        dir.path(),
        "f4.json",
        r#"{"kind":"gf","p":2,"poly":[1,1,1]}"#,
    );
    let v: Value =
        serde_json::from_str(&call(&["weight", "homogeneous", &f4, "--vector", "1,0"]).1).unwrap();
    assert_eq!(v["value"], "4/3");

    let z2 = write(
        dir.path(),
        "z2z2.json",
        r#"{"kind":"product","factors":[{"kind":"zn","n":2},{"kind":"zn","n":2}]}"#,
    );
    let v: Value =
        serde_json::from_str(&call(&["weight", "rt", &z2, "--vector", "(1,0),(0,0),(1,1)"]).1)
            .unwrap();
    assert_eq!(v["value"], 3);
}

#[test]
fn scenario_report_round_trips_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let (code, _) = call(&[
        "scenario",
        "wt-n-counterexample",
        "--json",
        a.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let (code, _) = call(&[
        "--jobs",
        "1",
        "scenario",
        "wt-n-counterexample",
        "--json",
        b.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());

    let reports: Vec<ScenarioReport> = serde_json::from_str(&text).unwrap();
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    assert_eq!(r.schema_version, 1);
    assert!(r.passed());
    assert_eq!(r.counterexamples[0].eliminated_family_size, 331_776);
    assert_eq!(serde_json::to_string_pretty(&reports).unwrap() + "\n", text);
}

#[test]
fn orbit_counts_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let local = write(
        dir.path(),
        "local.json",
        r#"{"kind":"quotient","chars":2,"gens":["x","y"],"relations":["x^2","y^2","x*y"]}"#,
    );
    let gens = write(
        dir.path(),
        "gens.json",
        r#"[[["1","1"],["0","1"]],[["1","x"],["0","1"]],[["1","y"],["0","1"]],[["1","0"],["0","1+x"]],[["1","0"],["0","1+y"]]]"#,
    );
    for (side, count) in [("right", 18), ("left", 21), ("transpose", 21)] {
        let (code, out) = call(&[
            "orbits",
            &local,
            "--n",
            "2",
            "--group",
            &gens,
            "--side",
            side,
            "--duality",
        ]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["group_order"], 32);
        assert_eq!(v["orbit_count"], count, "{side}");
        assert_eq!(v["nonzero_orbit_count"], count - 1);
    }
}

#[test]
fn dual_partition_of_hamming() {
    let dir = tempfile::tempdir().unwrap();
    let z4 = write(dir.path(), "z4.json", r#"{"kind":"zn","n":4}"#);
    let (code, out) = call(&[
        "dual-partition",
        &z4,
        "--n",
        "2",
        "--weight",
        "hamming",
        "--module",
        "r",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reflexive"], true);
    assert_eq!(v["left_dual"].as_array().unwrap().len(), 3);

    // a non-reflexive partition of Z4: {0}, {1,2}, {3}
    let p = write(dir.path(), "p.json", r#"[[["0"]],[["1"],["2"]],[["3"]]]"#);
    let (code, out) = call(&[
        "dual-partition",
        &z4,
        "--n",
        "1",
        "--partition",
        &p,
        "--module",
        "r",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reflexive"], false);
    assert_eq!(v["inequalities"]["bidual_refines"], true);
}

#[test]
fn usage_and_cap_errors_exit_2() {
    assert_eq!(call(&["scenario", "no-such-scenario"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["--cap", "10", "scenario", "wt-n-counterexample"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        call(&["ring", "info", "/nonexistent/ring.json"]).0,
        EXIT_USAGE
    );
}

#[test]
fn reports_match_the_published_schema_keys() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap();
    let def = &schema["$defs"]["report"];
    let allowed: Vec<&str> = def["properties"]
        .as_object()
        .unwrap()
        .keys()
        .map(|k| k.as_str())
        .collect();
    let required: Vec<&str> = def["required"]
        .as_array()
        .unwrap()
        .iter()
        .map(|k| k.as_str().unwrap())
        .collect();
    let names: Vec<&str> = def["properties"]["scenario"]["enum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|k| k.as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        frobweight::extension::Scenario::ALL.map(|s| s.name())
    );

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    call(&[
        "scenario",
        "wt-n-counterexample",
        "--json",
        out.to_str().unwrap(),
    ]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    for rep in v.as_array().unwrap() {
        let obj = rep.as_object().unwrap();
        assert!(obj.keys().all(|k| allowed.contains(&k.as_str())));
        assert!(required.iter().all(|k| obj.contains_key(*k)));
        assert_eq!(
            rep["schema_version"],
            schema["$defs"]["report"]["properties"]["schema_version"]["const"]
        );
    }
}

#[test]
fn corpus_rings_follow_the_ring_spec_schema_kinds() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../docs/ring-spec.schema.json")).unwrap();
    let kinds: Vec<String> = ["zn", "gf", "quotient", "product", "matrix"]
        .iter()
        .map(|k| {
            schema["$defs"][k]["properties"]["kind"]["const"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    let corpus = frobweight::corpus::Corpus::default();
    for r in &corpus.rings {
        let v = serde_json::to_value(r).unwrap();
        assert!(kinds.contains(&v["kind"].as_str().unwrap().to_string()));
    }
}
