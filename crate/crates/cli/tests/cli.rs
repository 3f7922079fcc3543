use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE: &str = "++0+\\n000+\\n0+++";

fn cauchon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cauchon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn ok(args: &[&str]) -> String {
    let out = cauchon(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&ok(&all)).unwrap()
}

#[test]
fn golden_outputs() {
    assert_eq!(ok(&["necklace", "--grid", EXAMPLE]), "123,234,346,246,256,267,237");
    assert_eq!(ok(&["permutation", "--grid", EXAMPLE]), "3 1 4 6 2 5 7");
    assert_eq!(ok(&["enumerate", "--m", "2", "--n", "2", "--count"]), "14");
}

#[test]
fn real_newlines_are_accepted() {
    assert_eq!(ok(&["permutation", "--grid", "++0+\n000+\n0+++"]), "3 1 4 6 2 5 7");
}

#[test]
fn chains_listing() {
    let text = ok(&["chains", "--grid", EXAMPLE]);
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        [
            "1: (1,1)",
            "2: (3,2), (1,1)",
            "3: (3,3), (1,2)",
            "4: (3,4), (1,2)",
            "5: (2,4), (1,2)",
            "6: (1,4)"
        ]
    );
    assert_eq!(ok(&["chains", "--grid", EXAMPLE, "--square", "2,3"]), "(1,2)");
}

#[test]
fn permutation_round_trip() {
    for (m, n) in [(2, 2), (2, 3), (3, 2), (1, 4)] {
        let (ms, ns) = (m.to_string(), n.to_string());
        let listing = ok(&["enumerate", "--m", &ms, "--n", &ns]);
        for grid in listing.lines() {
            let v = ok(&["permutation", "--grid", grid]);
            let back = ok(&["diagram", "--perm", &v, "--m", &ms, "--n", &ns]);
            assert_eq!(back.replace('\n', "/"), grid);
        }
    }
}

#[test]
fn gl_and_sl_goldens() {
    let gl = ok(&["gl", "--grid", "+0/++"]);
    assert!(gl.contains("[2|1]") && gl.contains("[12|12]") && gl.contains("[1|1]"));
    let pruned = ok(&["gl", "--prune", "--grid", "+0/++"]);
    assert!(pruned.contains("[2|1]") && pruned.contains("[12|12]") && !pruned.contains("[1|1]"));
    let sl = ok(&["sl", "--grid", "+0/++"]);
    assert!(sl.contains("[2|1]") && sl.contains("[1|1]") && !sl.contains("[12|12]"));
    let out = cauchon(&["sl", "--grid", "00/00"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cauchon(&["gl", "--grid", "++0+/000+/0+++"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ore_set_report_schema_and_witness() {
    let k = "+++0/+++0/+++0/++++";
    let v = json(&["ore-set", "--grid", k]);
    assert_eq!(v["separating"], true);
    assert_eq!(v["K"]["rows"][0], "+++0");
    let generators = v["generators"].as_array().unwrap();
    let six = generators.iter().find(|g| g["k"] == 6).unwrap();
    assert_eq!(six["minor"]["S"], serde_json::json!([1, 2]));
    assert_eq!(six["minor"]["T"], serde_json::json!([2, 3]));
    let witness = v["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .find(|w| w["L"]["rows"] == serde_json::json!(["+00+", "++++", "++++", "++++"]))
        .unwrap();
    assert_eq!(witness["generator_k"], 6);
}

#[test]
fn minors_and_vanishing_queries() {
    let l = "+00+/++++/++++/++++";
    let k = "+++0/+++0/+++0/++++";
    assert_eq!(ok(&["minors-in", "--grid", l, "--minor", "[12|23]"]), "true");
    assert_eq!(ok(&["minors-in", "--grid", k, "--minor", "[12|23]"]), "false");
    assert_eq!(ok(&["vanishing", "--grid", k, "--plucker", "3467"]), "false");
    let in_b = ok(&["minors-in", "--grid", "+0/++"]);
    assert_eq!(in_b, "[1|2]");
}

#[test]
fn validate_reports_violations() {
    let out = cauchon(&["validate", "--grid", "++/+0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("(2,2)"));
    assert_eq!(ok(&["validate", "--grid", EXAMPLE]), "valid Cauchon diagram");
    let v = {
        let out = cauchon(&["--json", "validate", "--grid", "++/+0"]);
        serde_json::from_str::<Value>(&stdout(&out)).unwrap()
    };
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"].as_array().unwrap().len(), 1);
}

#[test]
fn input_errors_exit_two_with_one_line() {
    for args in [
        &["necklace", "--grid", "++/+x"][..],
        &["necklace", "--grid", "++/+0"],
        &["necklace"],
        &["diagram", "--perm", "5 1 2 3 4 6 7", "--m", "3", "--n", "4"],
        &["diagram", "--perm", "1 2 3"],
        &["expand-minor", "--minor", "[12|1]"],
        &["chains", "--grid", EXAMPLE, "--square", "9,9"],
        &["not-a-command"],
    ] {
        let out = cauchon(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join(format!("cauchon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = dir.join("grid.txt");
    std::fs::write(&text, "++0+\n000+\n0+++\n").unwrap();
    assert_eq!(ok(&["permutation", "--file", text.to_str().unwrap()]), "3 1 4 6 2 5 7");
    let js = dir.join("grid.json");
    std::fs::write(&js, r#"{"m":3,"n":4,"rows":["++0+","000+","0+++"]}"#).unwrap();
    assert_eq!(
        ok(&["necklace", "--file", js.to_str().unwrap()]),
        "123,234,346,246,256,267,237"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verification_commands_are_deterministic() {
    let args = ["verify-equivalence", "--max-d", "6"];
    let first = cauchon(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = Command::new(env!("CARGO_BIN_EXE_cauchon"))
        .args(args)
        .env("NECKLACE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).lines().all(|l| l.starts_with("ok ")));
    let sep = ok(&["verify-separating", "--max-d", "6", "--max-mn", "8"]);
    assert!(sep.lines().all(|l| l.starts_with("ok ")), "{sep}");
    let v = json(&["verify-separating", "--max-d", "5"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn bad_thread_count_is_an_input_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_cauchon"))
        .args(["necklace", "--grid", EXAMPLE])
        .env("NECKLACE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn poset_and_render() {
    let p = ok(&["poset", "--m", "2", "--n", "2"]);
    assert!(p.starts_with("elements: 14\n"));
    let art = ok(&["render", "--grid", EXAMPLE]);
    assert!(art.contains("[6]") && art.contains("[1]"));
    let pipes = ok(&["render", "--pipedream", "--grid", EXAMPLE]);
    assert_eq!(pipes.matches('┼').count(), 5);
    let expansion = ok(&["expand-minor", "--minor", "[12|12]"]);
    assert_eq!(expansion, "X11 X22 - q X12 X21");
}
