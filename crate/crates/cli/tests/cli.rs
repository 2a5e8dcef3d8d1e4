use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["arq"];
    full.extend_from_slice(args);
    let code = arq_cli::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary(args: &[&str]) -> (i32, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_arq")).args(args).output().unwrap();
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap())
}

#[test]
fn twisted_a5_cluster_count() {
    let (code, out) = binary(&["cluster", "--type", "A", "--rank", "5", "--kind", "twisted", "--count"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "16");
}

#[test]
fn b2_denominators_pass() {
    let (code, out, _) = run(&["verify", "denom", "--affine", "B", "--n", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|l| l.starts_with("PASS")), "{out}");
}

#[test]
fn d4_word_to_dot() {
    let (code, out) = binary(&["quiver", "--word", "123124123124", "--type", "D", "--rank", "4", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    let nodes = out.lines().filter(|l| l.contains("[label=")).count();
    assert_eq!(nodes, 12);
    // α₂+α₄ → α₁+α₂+α₄ and α₄ → α₂+α₄, as drawn
    assert!(out.contains("\"0.1.0.1\" -> \"1.1.0.1\""), "{out}");
    assert!(out.contains("\"0.0.0.1\" -> \"0.1.0.1\""), "{out}");
}

#[test]
fn dot_is_deterministic() {
    let args = ["quiver", "--type", "E", "--class", "126354631263546312635463126354631263", "--format", "dot"];
    let first = run(&args);
    assert_eq!(first.0, 0, "{}", first.2);
    assert_eq!(first, run(&args));
}

#[test]
fn json_round_trip_is_byte_identical() {
    let dir = std::env::temp_dir().join(format!("arq-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    let (code, _, err) = run(&[
        "--format",
        "json",
        "--out",
        a.to_str().unwrap(),
        "quiver",
        "--type",
        "D",
        "--rank",
        "5",
        "--kind",
        "twisted",
        "--class",
        "12341235123412351234",
    ]);
    assert_eq!(code, 0, "{err}");
    let (code, _, err) =
        run(&["--format", "json", "--out", b.to_str().unwrap(), "quiver", "--import", a.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);

    let doc: serde_json::Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["d"], 2);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 20);

    // a document whose vertices disagree with its word is refused
    let tampered = String::from_utf8(x).unwrap().replacen("\"residue\": 1", "\"residue\": 2", 1);
    std::fs::write(&a, tampered).unwrap();
    let (code, _, _) = run(&["quiver", "--import", a.to_str().unwrap()]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(binary(&["cluster", "--bogus"]).0, 2);
    assert_eq!(binary(&["cluster", "--type", "Q", "--rank", "3"]).0, 2);
    assert_eq!(binary(&["cluster", "--type", "E", "--rank", "9"]).0, 2);
    assert_eq!(run(&["quiver", "--type", "A", "--rank", "2", "--class", "1212"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn verification_mismatch_exits_1() {
    let (code, out, err) = run(&["verify", "denom", "--affine", "F"]);
    assert_eq!(code, 1);
    assert_eq!(out.lines().filter(|l| l.starts_with("FAIL")).count(), 3);
    assert!(err.contains("13/16"), "{err}");
}

#[test]
fn tcox_listing_sizes() {
    let (code, out, _) = run(&["tcox", "--type", "A", "--rank", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 12);
    let (code, out, _) = run(&["tcox", "--type", "D", "--rank", "4", "--kind", "triply"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 12);
}

#[test]
fn json_records_for_dorey() {
    let (code, out, _) = run(&["--format", "json", "verify", "dorey", "--affine", "C", "--n", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let recs = v["records"].as_array().unwrap();
    assert!(!recs.is_empty());
    assert!(recs.iter().all(|r| r["match"] == true));
}
