use std::path::Path;
use std::process::{Command, Output};

use hopfforge::file::PresentationFile;
use hopfforge::run::{sweep, verify, Checks, Options, Target};
use hopfforge_core::catalog::{instantiate, parameter_grid, smallest_admissible_primes, CaseId, DimClass, Mode};
use serde_json::Value;

fn hopfforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfforge")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_str().unwrap().to_string()
}

#[test]
fn verify_a1_passes_with_dimension_twelve() {
    let out = hopfforge(&["verify", "--case", "A1", "--p", "2", "--q", "3", "--set", "lambda=1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimension"]["computed"], 12);
    assert_eq!(v["dimension"]["expected"], 12);
    assert_eq!(v["antipode"]["order"], 2);
    assert_eq!(v["passed"], true);
    assert!(v.get("wall_time_ms").is_none());
}

#[test]
fn verify_a2_reports_the_obstruction_and_exit_codes() {
    let out = hopfforge(&["verify", "--case", "A2", "--p", "2", "--q", "3", "--set", "lambda=1", "--permissive", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["confluence"]["confluent"], false);
    assert_eq!(v["confluence"]["obstructions"][0]["word"], "g*x^2");
    assert_eq!(v["confluence"]["obstructions"][0]["kind"], "overlap");
    assert_eq!(v["violations"].as_array().unwrap().len(), 1);
    let strict = hopfforge(&["verify", "--case", "A2", "--p", "2", "--q", "3", "--set", "lambda=1"]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&strict.stderr).contains("fails"));
}

#[test]
fn verify_ad_passes_with_dimension_eighteen() {
    let out = hopfforge(&["verify", "--case", "AD", "--p", "2", "--q", "3", "--set", "lambda1=1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dimension"]["computed"], 18);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "--case", "Z9"][..],
        &["verify", "--case", "A1", "--p", "2"][..],
        &["verify", "--case", "A1", "--set", "mu=1"][..],
        &["verify", "--case", "A1", "--set", "lambda"][..],
        &["list", "--dim", "p3"][..],
        &["frobnicate"][..],
    ] {
        assert_eq!(hopfforge(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unset_parameters_warn() {
    let out = hopfforge(&["verify", "--case", "A3", "--p", "2", "--q", "3", "--check", "dim"]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("lambda1 is unset") && err.contains("lambda2 is unset"), "{err}");
}

#[test]
fn check_selection_limits_the_report() {
    let out = hopfforge(&["verify", "--case", "A1", "--set", "lambda=0", "--check", "confluence,dim", "--json"]);
    let v = json(&out);
    assert!(v.get("confluence").is_some() && v.get("dimension").is_some());
    assert!(v.get("hopf").is_none() && v.get("antipode").is_none());
    let out = hopfforge(&["verify", "--case", "A1", "--set", "lambda=0", "--check", "all", "--json"]);
    let v = json(&out);
    assert_eq!(out.status.code(), Some(0));
    let h = v["cohomology"].as_array().unwrap();
    assert!(h.iter().all(|c| c.get("dimH").is_some()));
}

#[test]
fn list_filters_by_dimension_class() {
    let v = json(&hopfforge(&["list", "--json"]));
    assert_eq!(v.as_array().unwrap().len(), CaseId::ALL.len());
    let v = json(&hopfforge(&["list", "--dim", "p2q", "--json"]));
    let cases: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["case"].as_str().unwrap()).collect();
    assert!(!cases.is_empty());
    assert!(cases.iter().all(|c| ["A", "B", "C", "D"].iter().any(|p| c.starts_with(p)) && c.len() <= 4));
    assert!(cases.iter().all(|c| CaseId::ALL.iter().any(|id| id.name() == *c && id.entry().class == DimClass::P2Q)));
}

#[test]
fn cohomology_command_examples() {
    let out = hopfforge(&["cohomology", "--file", &data("nichols2.json"), "--n", "2", "--graded", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimH"], 1);
    assert_eq!(v["adams"]["2"], 1);
    let v = json(&hopfforge(&["cohomology", "--file", &data("taft3.json"), "--h", "g", "--n", "2", "--json"]));
    assert_eq!(v["dimH"], 0);
    for (g, h, want) in [("1", "1", 1), ("g", "g^2", 0), ("g^2", "g^2", 1)] {
        let v = json(&hopfforge(&["cohomology", "--file", &data("taft3.json"), "--g", g, "--h", h, "--n", "0", "--json"]));
        assert_eq!(v["dimH"], want, "({g}, {h})");
    }
    let bad = hopfforge(&["cohomology", "--file", &data("taft3.json"), "--h", "x"]);
    assert_eq!(bad.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_hopfforge"))
        .args(["cohomology", "--file", &data("taft3.json"), "--n", "2"])
        .env("HOPFFORGE_MEM_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn sweep_selections() {
    let out = hopfforge(&["sweep", "--dim", "pq", "--p", "3", "--q", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["case"].as_str().unwrap().starts_with("CA") && e["passed"] == true));
    let out = hopfforge(&["sweep", "--dim", "pqr", "--p", "2", "--q", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["summary"]["entries"], 0);
    let out = hopfforge(&["sweep", "--case", "A1", "--case", "AD", "--json"]);
    let v = json(&out);
    let cases: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["case"].as_str().unwrap()).collect();
    let last_a1 = cases.iter().rposition(|c| *c == "A1").unwrap();
    let first_ad = cases.iter().position(|c| *c == "AD").unwrap();
    assert!(last_a1 < first_ad, "{cases:?}");
}

#[test]
fn sweep_is_ordered_and_deterministic_across_thread_counts() {
    let opts = Options { checks: Checks::standard(), ..Options::default() };
    let a = sweep(Some(DimClass::PQ2), None, &[], &opts);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let b = pool.install(|| sweep(Some(DimClass::PQ2), None, &[], &opts));
    let (ja, jb) = (hopfforge::report::to_json(&a), hopfforge::report::to_json(&b));
    assert_eq!(ja, jb);
    let order: Vec<usize> = a
        .entries
        .iter()
        .map(|e| CaseId::ALL.iter().position(|c| c.name() == e.case).unwrap())
        .collect();
    assert!(order.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn presentation_files_round_trip_every_case() {
    for &id in CaseId::ALL {
        let pr = smallest_admissible_primes(id)[0];
        let grid = parameter_grid(id, pr).unwrap();
        let gp = grid.iter().rev().find(|g| g.satisfied).unwrap();
        let inst = instantiate(id, &gp.params, Mode::Strict).unwrap();
        let file = PresentationFile::from_spec(&inst.spec);
        let parsed: PresentationFile = serde_json::from_str(&file.to_json()).unwrap();
        assert_eq!(parsed, file, "{id}");
        let spec = parsed.to_spec().unwrap();
        let opts = Options { checks: Checks::from_list(&[hopfforge::run::Check::Dim]), ..Options::default() };
        let from_file = verify(&Target::from_spec(spec), &opts);
        assert_eq!(from_file.dimension.unwrap().computed, Some(inst.expected_dim()), "{id}");
    }
}

#[test]
fn exported_files_verify_through_check_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d1b.json");
    let out = hopfforge(&["export", "--case", "D1b", "--p", "3", "--q", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = hopfforge(&["check-file", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["dimension"]["computed"], 18);
    let all = dir.path().join("all");
    assert_eq!(hopfforge(&["export", "--all", "--out", all.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(std::fs::read_dir(&all).unwrap().count(), CaseId::ALL.len());
}

#[test]
fn malformed_presentation_files_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{ "field": { "p": 2 }, "generators": [ { "name": "g", "grouplike": true } ], "relations": [] }"#)
        .unwrap();
    let out = hopfforge(&["check-file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("needs an order"));
    std::fs::write(&path, r#"{ "field": { "p": 2 }, "generators": [], "relations": [], "extra": 1 }"#).unwrap();
    assert_eq!(hopfforge(&["check-file", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn timing_is_opt_in() {
    let out = hopfforge(&["verify", "--case", "A1", "--set", "lambda=1", "--json", "--timing"]);
    assert!(json(&out).get("wall_time_ms").is_some());
}
