//! End-to-end runs of the `qshuffle` binary.

use std::process::{Command, Output};

use qshuffle::{QElement, QSeries};

fn qshuffle(args: &[&str]) -> Output {
    qshuffle_env(args, &[])
}

fn qshuffle_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qshuffle"));
    cmd.args(args);
    for var in ["QSHUFFLE_CUTOFF", "QSHUFFLE_THREADS", "QSHUFFLE_CACHE"] {
        cmd.env_remove(var);
    }
    cmd.envs(env.iter().copied());
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_named_elements() {
    let o = qshuffle(&["compute", "C", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "[2]_q^2 xyxy + [2]_q^2[3]_q xxyy\n");
    let o = qshuffle(&["compute", "delta", "--m", "-1", "--n", "3"]);
    assert_eq!(stdout(&o), "-xyxyxy\n");
}

#[test]
fn compute_json_round_trips() {
    let o = qshuffle(&["compute", "nabla", "--m", "0", "--n", "2", "--format", "json"]);
    assert!(o.status.success());
    let e: QElement = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(e, QElement::parse_expansion("[2]_q xxyy").unwrap());

    let o = qshuffle(&["compute", "series:delta", "--m", "2", "--cutoff", "3", "--format", "json"]);
    let s: QSeries = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(s.cutoff(), 3);
    assert_eq!(s.coeff(2), &QElement::parse_expansion("[2]_q^2 xyxy + [2]_q^2[3]_q xxyy").unwrap());
}

#[test]
fn compute_rejects_bad_input() {
    assert_eq!(qshuffle(&["compute", "bogus", "1"]).status.code(), Some(2));
    assert_eq!(qshuffle(&["compute", "delta", "--n", "2"]).status.code(), Some(2));
    assert_eq!(qshuffle(&["compute", "damiani", "--n", "1"]).status.code(), Some(2));
    assert_eq!(qshuffle(&["compute", "C", "40"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = qshuffle(&["verify", "check_qserre"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("check_qserre  pass"));
    assert_eq!(qshuffle(&["verify", "bogus_name"]).status.code(), Some(2));
    assert_eq!(qshuffle(&["verify"]).status.code(), Some(2));
    let o = qshuffle(&["verify", "check_qserre", "--drop-serre-factor", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports[0]["status"], "fail");
    assert!(reports[0]["witness"]["difference"].is_array());
}

#[test]
fn verify_all_at_cutoff_four() {
    let o = qshuffle(&["verify", "--all", "--cutoff", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("20 checks, 0 failed\n"));
}

#[test]
fn verify_table_perturbation() {
    let o = qshuffle(&["verify", "check_golden_tables", "--perturb-table", "nabla:xxyxyy:-2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness: nabla table (degree 3, m = -2)"));
    let o = qshuffle(&["verify", "check_golden_tables", "--perturb-table", "nabla:xz:1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_words() {
    let o = qshuffle(&["enumerate", "3"]);
    assert_eq!(stdout(&o), "xxxyyy\nxxyxyy\nxxyyxy\nxyxxyy\nxyxyxy\n");
    assert_eq!(stdout(&qshuffle(&["enumerate", "0"])), "1\n");
    assert_eq!(stdout(&qshuffle(&["enumerate", "6", "--count-only"])), "132\n");
    let o = qshuffle(&["enumerate", "2", "--profiles", "--elevations", "--format", "csv"]);
    assert_eq!(stdout(&o), "word,profile,elevations\nxxyy,0 2 0,0 1 2 1 0\nxyxy,0 1 0 1 0,0 1 0 1 0\n");
}

#[test]
fn plot_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.svg");
    let o = qshuffle(&["plot", "xxyy", path.to_str().unwrap()]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains(r#"points="30,110 70,70 110,30 150,70 190,110""#));

    let o = qshuffle(&["plot", ""]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("<circle"));
    assert_eq!(qshuffle(&["plot", "xz"]).status.code(), Some(2));
}

#[test]
fn tables() {
    let o = qshuffle(&["table", "delta", "-3", "3", "3", "--format", "latex"]);
    let text = stdout(&o);
    assert!(text.starts_with("\\begin{tabular}{ c|c|c|c|c|c|c|c }\n$w$ & $\\Delta^{(-3)}(w)$"));
    assert!(text.contains("$xy$ & $-[3]_q$ & $-[2]_q$ & $-1$ & $0$ & $1$ & $[2]_q$ & $[3]_q$\\\\[1mm]\n"));
    let o = qshuffle(&["table", "nabla", "-3", "3", "3", "--format", "csv"]);
    assert!(stdout(&o).starts_with("w,-3,-2,-1,0,1,2,3\nxy,1,1,1,1,1,1,1\n"));
    let o = qshuffle(&["table", "delta", "0", "0", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), "w,0\n1,1\nxy,0\nxyxy,0\nxxyy,0\n");
    assert_eq!(qshuffle(&["table", "delta", "2", "1", "2"]).status.code(), Some(2));
}

#[test]
fn config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("q.toml");
    std::fs::write(&file, "cutoff = 1\noutput_format = \"csv\"\n").unwrap();
    let cfg = file.to_str().unwrap();
    let degrees = |o: &Output| stdout(o).lines().skip(1).map(|l| l.split(',').next().unwrap().to_string()).max();

    let o = qshuffle(&["compute", "series:C", "--config", cfg]);
    assert_eq!(degrees(&o).as_deref(), Some("1"));
    let o = qshuffle_env(&["compute", "series:C", "--config", cfg], &[("QSHUFFLE_CUTOFF", "2")]);
    assert_eq!(degrees(&o).as_deref(), Some("2"));
    let o = qshuffle_env(&["compute", "series:C", "--config", cfg, "--cutoff", "3"], &[("QSHUFFLE_CUTOFF", "2")]);
    assert_eq!(degrees(&o).as_deref(), Some("3"));

    assert_eq!(qshuffle_env(&["enumerate", "1"], &[("QSHUFFLE_THREADS", "zero")]).status.code(), Some(2));
    std::fs::write(&file, "unknown_key = 1\n").unwrap();
    assert_eq!(qshuffle(&["enumerate", "1", "--config", cfg]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "check_commutation", "check_zeta_suite", "--format", "json", "--n-max", "3"];
    let a = qshuffle_env(&args, &[("QSHUFFLE_THREADS", "1"), ("QSHUFFLE_CACHE", "off")]);
    let b = qshuffle_env(&args, &[("QSHUFFLE_THREADS", "4"), ("QSHUFFLE_CACHE", "on")]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = qshuffle_env(&["compute", "series:D", "--cutoff", "4"], &[("QSHUFFLE_THREADS", "1")]);
    let d = qshuffle_env(&["compute", "series:D", "--cutoff", "4"], &[("QSHUFFLE_THREADS", "3")]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.txt");
    let o = qshuffle(&["compute", "C", "1", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "[2]_q xy\n");
}
