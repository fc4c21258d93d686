mod common;

use std::process::Command as Process;

use cli::*;
use common::{fixture, perturbed_w};
use exact_algebra::json::PolynomialJson;
use exact_algebra::Polynomial;
use polyvector::{pushforward_diffeo, superpotential, FormalDiffeo, Polyvector};

fn cfg(c: Command, g: u32) -> RunConfig {
    RunConfig::new(c).genus(g)
}

#[test]
fn perturbed_fixture_is_the_pushforward() {
    let s = std::fs::read_to_string(fixture("perturbed_w.json")).unwrap();
    let j: PolynomialJson = serde_json::from_str(&s).unwrap();
    assert_eq!(Polynomial::try_from(&j).unwrap(), perturbed_w());
    assert_ne!(perturbed_w(), superpotential(3));
}

#[test]
fn normalize_recovers_w_from_the_fixture() {
    let c = RunConfig { input: Some(fixture("perturbed_w.json")), ..cfg(Command::Normalize, 3) };
    let r = cmd_normalize(&c).unwrap();
    assert!(r.passed, "{:?}", r.clauses);
    assert_eq!(r.fixtures.len(), 1);
    // forward then invert: the emitted diffeo carries the input back to W
    let logs: Vec<PolynomialJson> = serde_json::from_value(r.data["diffeo"].clone()).unwrap();
    let d = FormalDiffeo::from_json(3, &logs).unwrap();
    let back = pushforward_diffeo(&d, &Polyvector::function(&perturbed_w()), 12).unwrap();
    assert_eq!(back, Polyvector::function(&superpotential(3)).truncate(12));
    assert_eq!(r.data["certificate"]["verified"], true);
}

#[test]
fn normalize_of_w_is_the_identity() {
    let r = cmd_normalize(&cfg(Command::Normalize, 3)).unwrap();
    assert!(r.passed);
    assert_eq!(r.data["diffeo"], serde_json::json!([]));
}

#[test]
fn missing_cubic_is_rejected_with_the_term() {
    let c = RunConfig { input: Some(fixture("missing_cubic.json")), ..cfg(Command::Normalize, 3) };
    match cmd_normalize(&c) {
        Err(CliError::Input(m)) => assert!(m.contains("1 z^[1, 1, 1]"), "{m}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn transfer_at_genus_two() {
    let c = RunConfig { samples: Some(20), ..cfg(Command::Transfer, 2) };
    let r = cmd_transfer(&c).unwrap();
    assert!(r.passed, "{:?}", r.clauses);
    assert_eq!(r.data["diagonals"]["top"], "z3^5 + z2^5 + z1^5");
}

#[test]
fn transfer_with_arity_two_is_partial() {
    let c = RunConfig { max_arity: Some(2), ..cfg(Command::Transfer, 3) };
    let r = cmd_transfer(&c).unwrap();
    assert!(r.passed);
    assert_eq!(r.data["partial"], true);
    let names: Vec<&str> = r.clauses.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, [QUADRATIC]);
}

#[test]
fn transfer_reports_do_not_depend_on_workers() {
    let base = RunConfig { samples: Some(15), max_arity: Some(7), ..cfg(Command::Transfer, 3) };
    let one = cmd_transfer(&base).unwrap().render(Format::Json);
    let three = cmd_transfer(&RunConfig { workers: 3, ..base.clone() }).unwrap().render(Format::Json);
    assert_eq!(one, three);
    let other_seed = cmd_transfer(&RunConfig { seed: 1, ..base }).unwrap().render(Format::Json);
    assert_ne!(one, other_seed);
}

#[test]
fn residual_sweep_flags_nothing_on_the_transferred_structure() {
    let mf = matrix_factorization::MFData::for_genus(2);
    let t = sample_tuples(3, 3..=5, 10);
    assert_eq!(t.len(), 30);
    assert!(residual_sweep(&mf, &t, 4).iter().all(|&b| b));
}

#[test]
fn fan_and_fukaya_pass_at_genus_three() {
    let f = cmd_fan(&cfg(Command::Fan, 3)).unwrap();
    assert!(f.passed);
    assert_eq!(f.data["fan"]["cones"].as_array().unwrap().len(), 7);
    assert!(f.render(Format::Text).contains("dual complex: V=4 E=6 F=4 chi=2"));
    let k = cmd_fukaya(&cfg(Command::Fukaya, 3)).unwrap();
    assert!(k.passed, "{:?}", k.first_failure());
    assert_eq!(k.fixtures["fukaya-table/table.json"], fukaya_table::TABLE_SHA256);
}

#[test]
fn dgla_runs_the_fixture() {
    let c = RunConfig { input: Some(fixture("heisenberg.json")), ..cfg(Command::Dgla, 3) };
    let r = cmd_dgla(&c).unwrap();
    assert!(r.passed, "{:?}", r.clauses);
    assert_eq!(r.data["cases"].as_array().unwrap().len(), DEFAULT_DGLA_SAMPLES);
}

#[test]
fn input_errors() {
    assert!(matches!(cmd_dgla(&cfg(Command::Dgla, 3)), Err(CliError::Input(_))));
    let bad = RunConfig { input: Some(fixture("perturbed_w.json")), ..cfg(Command::Dgla, 3) };
    assert!(matches!(cmd_dgla(&bad), Err(CliError::Input(_))));
    assert!(matches!(cmd_fan(&cfg(Command::Fan, 2)), Err(CliError::Input(_))));
    assert!(matches!(cmd_transfer(&cfg(Command::Transfer, 1)), Err(CliError::Input(_))));
    let missing = RunConfig { input: Some(fixture("nope.json")), ..cfg(Command::Normalize, 3) };
    assert!(matches!(cmd_normalize(&missing), Err(CliError::Input(_))));
}

fn exe(args: &[&str]) -> (i32, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_lgcheck")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn binary_exit_codes() {
    let (code, out) = exe(&["fan", "--genus", "3", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("maximal cones: 7"));
    let (code, out) = exe(&["fan", "--genus", "2"]);
    assert_eq!((code, out.as_str()), (2, ""));
    let missing = fixture("missing_cubic.json");
    assert_eq!(exe(&["normalize", "--input", missing.to_str().unwrap()]).0, 2);
    let (code, out) = exe(&["transfer", "--max-arity", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["config"]["max_arity"], 2);
    assert_eq!(v["version"], VERSION);
}

#[test]
fn output_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("lgcheck-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fan.json");
    let (code, out) = exe(&["fan", "--output", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, cmd_fan(&RunConfig::new(Command::Fan)).unwrap().render(Format::Json));
    std::fs::remove_dir_all(dir).unwrap();
}
