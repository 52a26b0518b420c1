use std::process::{Command, Output};

use serde_json::Value;

const Z23: &str = r#"{"family":"integer_scaled","multipliers":[2,3]}"#;
const Z24: &str = r#"{"family":"integer_scaled","multipliers":[2,4]}"#;
const COSET12: &str = r#"{"family":"modular_coset","modulus":12,"coset":[0,6]}"#;

fn hyperlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlab"))
        .args(args)
        .env("HYPERLAB_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn describe_flags() {
    let o = hyperlab(&["describe", "--ring", Z23, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["axioms"]["strongly_distributive"], false);
    assert_eq!(v["axioms"]["proper"], true);

    let v = json(&hyperlab(&["describe", "--ring", COSET12, "--format", "json"]));
    assert_eq!(v["axioms"]["strongly_distributive"], true);

    let single = r#"{"family":"modular_scaled","modulus":6,"multipliers":[1]}"#;
    assert!(stdout(&hyperlab(&["describe", "--ring", single])).contains("proper: false"));
}

#[test]
fn describe_reads_ring_from_file() {
    let dir = std::env::temp_dir().join(format!("hyperlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ring.json");
    std::fs::write(&path, COSET12).unwrap();
    let o = hyperlab(&["describe", "--ring", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Z12[+{0,6}]"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn describe_hom() {
    let hom = format!(r#"{{"projection":{{"ring":{Z24},"ideal":{{"principal":4}}}}}}"#);
    let o = hyperlab(&["describe", "--hom", &hom]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("target Z4[K={0,2}]"));
    assert!(stdout(&o).contains("kernel 4Z"));
}

#[test]
fn classify_12z() {
    let o = hyperlab(&[
        "classify", "--ring", Z23, "--ideal", "12Z", "--format", "json",
        "--expect", "prime=false,primary=false,2a=false,2ap=true,radical=6Z,min_primes=2Z|3Z",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["classification"]["2ap"]["holds"], true);
    assert_eq!(v["classification"]["primary"]["witness"]["kind"], "pair");
    assert!(v["expectations"].as_array().unwrap().iter().all(|e| e["ok"] == true));
}

#[test]
fn classify_mismatch_exits_1() {
    let o = hyperlab(&["classify", "--ring", Z24, "--ideal", "2Z", "--expect", "cu=false"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("expect cu MISMATCH"));
}

#[test]
fn classify_flags_divergence() {
    let v = json(&hyperlab(&["classify", "--ring", Z24, "--ideal", "120Z", "--format", "json"]));
    assert_eq!(v["classification"]["2ap"]["holds"], false);
    let div = v["divergences"].as_array().unwrap();
    assert!(div.iter().any(|d| d["claim"] == "z24-120-2ap"));
}

#[test]
fn classify_z6_zero() {
    let z6 = r#"{"family":"modular_scaled","modulus":6,"multipliers":[1,2,3,4,5]}"#;
    let o = hyperlab(&["classify", "--ring", z6, "--ideal", "{0}", "--expect", "2a=true,primary=false,prime=false"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn printed_specs_reparse() {
    let v = json(&hyperlab(&["classify", "--ring", COSET12, "--ideal", "{0,6}", "--format", "json"]));
    let ring = v["ring_spec"].to_string();
    let ideal = v["ideal_spec"].to_string();
    let again = json(&hyperlab(&["classify", "--ring", &ring, "--ideal", &ideal, "--format", "json"]));
    assert_eq!(v, again);
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(hyperlab(&["describe", "--ring", "{nope"]).status.code(), Some(2));
    assert_eq!(hyperlab(&["classify", "--ring", Z23, "--ideal", "twelve"]).status.code(), Some(2));
    assert_eq!(hyperlab(&["laws", "--law", "X9.9"]).status.code(), Some(2));
    assert_eq!(hyperlab(&["laws"]).status.code(), Some(2));
    assert_eq!(hyperlab(&["search", "--holds", "2ap", "--fails", "bogus"]).status.code(), Some(2));
    assert_eq!(hyperlab(&["laws", "--law", "T3.18", "--ring", Z23]).status.code(), Some(2));
}

#[test]
fn search_finds_12z() {
    let o = hyperlab(&["search", "--ring", Z23, "--holds", "2ap", "--fails", "2a", "--grid", "dmax=30", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let found = json(&o)["found"].as_array().unwrap().clone();
    assert!(found.iter().any(|s| s["instance"] == "12Z"));
}

#[test]
fn laws_t3_18_on_coset() {
    let o = hyperlab(&["laws", "--law", "T3.18", "--ring", COSET12, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v[0]["law"], "T3.18");
    assert_eq!(v[0]["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn laws_all_is_deterministic() {
    let args = ["laws", "--all", "--grid", "dmax=20,nmax=9", "--seed", "3", "--format", "json"];
    let a = hyperlab(&args);
    assert_eq!(a.status.code(), Some(0));
    let reports = json(&a);
    assert_eq!(reports.as_array().unwrap().len(), 18);
    for id in ["T3.5", "T3.8", "L3.10", "T3.12"] {
        let r = reports.as_array().unwrap().iter().find(|r| r["law"] == id).unwrap();
        assert_eq!(r["companion_found"], true, "{id}");
    }
    assert_eq!(a.stdout, hyperlab(&args).stdout);
}

#[test]
fn laws_list() {
    let o = hyperlab(&["laws", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 18);
}
