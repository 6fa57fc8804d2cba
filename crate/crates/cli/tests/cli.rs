use std::process::Command;

use voawb_cli::{run, ConfigError, Format, Level, Report, RunConfig, Status};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_voawb"))
}

fn cfg(suites: &[&str]) -> RunConfig {
    let mut c = RunConfig::default();
    for s in suites {
        c.add_suite(s).unwrap();
    }
    c
}

#[test]
fn levels_parse() {
    assert_eq!(Level::parse("formal").unwrap(), Level::Formal);
    assert_eq!(Level::parse("6/-4").unwrap(), Level::Rational(-3, 2));
    assert_eq!(Level::parse("2").unwrap().to_string(), "2");
    assert!(Level::parse("1/0").is_err());
    assert!(Level::parse("x").is_err());
}

#[test]
fn config_text_and_overrides() {
    let mut c = RunConfig::default();
    c.apply_text("# desk\nlevel = 1/3\nmax_degree = 2\nsuite = lie, char\nsuite = lie\n").unwrap();
    assert_eq!(c.level, Level::Rational(1, 3));
    assert_eq!(c.max_degree, 2);
    assert_eq!(c.suites, vec!["lie", "char"]);
    assert_eq!(c.max_weight, 4);
    assert_eq!(c.order, 6);
    assert_eq!(c.apply_text("seed 3"), Err(ConfigError::Syntax(1)));
    assert_eq!(c.set("suite", "nope"), Err(ConfigError::UnknownSuite("nope".into())));
    assert!(matches!(c.set("algebra", "sl3"), Err(ConfigError::Value(..))));
    assert!(matches!(c.set("colour", "red"), Err(ConfigError::UnknownKey(_))));
}

#[test]
fn empty_run() {
    let r = run(&RunConfig::default());
    assert!(r.checks.is_empty());
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn lie_suite_and_formats() {
    let r = run(&cfg(&["lie", "char"]));
    assert_eq!(r.summary.fail, 0);
    assert!(r.checks.iter().all(|c| c.ms == 0));
    assert_eq!(r.checks[0].suite, "lie");
    let json = r.emit(Format::Json);
    let back: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
    let csv = r.emit(Format::Csv);
    assert_eq!(csv.lines().count(), r.checks.len() + 1);
    assert!(r.emit(Format::Text).ends_with(&format!("pass {} fail 0 skip 0\n", r.summary.pass)));
}

#[test]
fn numeric_level_skips_generic_suites() {
    let mut c = cfg(&["zhu", "lie"]);
    c.level = Level::Rational(1, 1);
    let r = run(&c);
    let zhu: Vec<_> = r.checks.iter().filter(|x| x.suite == "zhu").collect();
    assert_eq!(zhu.len(), 1);
    assert_eq!(zhu[0].status, Status::Skip);
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn critical_level_fails_without_aborting() {
    let mut c = cfg(&["weyl-virasoro", "lie"]);
    c.level = Level::Rational(-2, 1);
    c.max_degree = 1;
    let r = run(&c);
    assert!(r.summary.fail > 0);
    assert!(r.checks.iter().any(|x| x.suite == "lie" && x.status == Status::Pass));
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn binary_exit_codes_and_determinism() {
    let out = bin().args(["run", "--suite", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["run", "--level", "a/b"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["run"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let args = ["run", "--suite", "lie", "--suite", "regfun", "--jobs", "2"];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["config"]["suites"], "lie,regfun");
    assert_eq!(v["summary"]["fail"], 0);
    let list = bin().arg("list-suites").output().unwrap();
    assert_eq!(String::from_utf8(list.stdout).unwrap().lines().count(), 12);
}

#[test]
fn config_file_and_out() {
    let dir = std::env::temp_dir().join(format!("voawb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let conf = dir.join("run.conf");
    let out = dir.join("report.csv");
    std::fs::write(&conf, "suite = lie\nformat = csv\n").unwrap();
    let s = bin().args(["run", "--config"]).arg(&conf).arg("--out").arg(&out).status().unwrap();
    assert_eq!(s.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.starts_with("suite,id,anchor,status,witness,ms"));
    std::fs::remove_dir_all(&dir).ok();
}
