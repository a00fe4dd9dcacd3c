//! Acceptance criteria 1 to 11.
//!
//! Every comparison is exact; the tolerance is zero everywhere. Each test
//! prints one `PASS`/`FAIL` line with its runtime and limit.

use std::time::{Duration, Instant};

use qshuffle::verify::golden::{DELTA_TABLE, NABLA_TABLE, TABLE_M};
use qshuffle::verify::{self, CheckReport, Perturbation, VerifyConfig};

const SECOND: Duration = Duration::from_secs(1);
const MINUTE: Duration = Duration::from_secs(60);

fn report_line(id: u32, title: &str, ok: bool, elapsed: Duration, limit: Duration, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} {verdict} {title} ({:.3}s, limit {}s){detail}", elapsed.as_secs_f64(), limit.as_secs());
}

fn describe(reports: &[CheckReport]) -> String {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("\n  {} failed: {:?}", r.check_name, r.witness))
        .collect()
}

fn criterion(id: u32, title: &str, names: &[&str], cfg: &VerifyConfig, limit: Duration) {
    let start = Instant::now();
    let reports = verify::run_selected(names, cfg).unwrap();
    let elapsed = start.elapsed();
    let ok = reports.len() == names.len() && verify::all_passed(&reports) && elapsed < limit;
    let detail = describe(&reports);
    report_line(id, title, ok, elapsed, limit, &detail);
    assert!(verify::all_passed(&reports), "criterion {id}: {detail}");
    assert!(elapsed < limit, "criterion {id}: {elapsed:?} exceeds {limit:?}");
}

#[test]
fn criterion_01_golden_tables() {
    criterion(1, "golden tables", &["check_golden_tables"], &VerifyConfig::default(), SECOND);
}

#[test]
fn criterion_02_examples() {
    criterion(2, "C_0..C_3 and D_0..D_3 expansions", &["check_examples"], &VerifyConfig::default(), SECOND);
}

#[test]
fn criterion_03_qserre() {
    criterion(3, "q-Serre relations", &["check_qserre"], &VerifyConfig::default(), SECOND);
}

#[test]
fn criterion_04_series_inversion() {
    criterion(4, "series inversion up to t^5", &["check_series_inversion"], &VerifyConfig::default(), 10 * SECOND);
}

#[test]
fn criterion_05_exp_theorem() {
    let cfg = VerifyConfig::default();
    assert_eq!((cfg.m_min, cfg.m_max, cfg.cutoff), (-3, 3, 5));
    criterion(5, "exponential form, m in -3..3, up to t^5", &["check_exp_theorem"], &cfg, 2 * MINUTE);
}

#[test]
fn criterion_06_factorizations() {
    let cfg = VerifyConfig { main_m_max: 3, main_cutoff: Some(4), ..VerifyConfig::default() };
    criterion(6, "rescaled factorizations, m in 1..3, up to t^4", &["check_main_theorems"], &cfg, 2 * MINUTE);
}

#[test]
fn criterion_07_generating_functions() {
    let names = ["check_genfuns", "check_recurrences_expderivative"];
    criterion(7, "generating-function identities up to t^5", &names, &VerifyConfig::default(), MINUTE);
}

#[test]
fn criterion_08_recursion_and_commutation() {
    let names = [
        "check_nabla_recursion",
        "check_commutation",
        "check_yinv_calculus",
        "check_ode",
        "check_insertion",
    ];
    criterion(8, "recursion and commutation, m in -3..3, n <= 5", &names, &VerifyConfig::default(), 5 * MINUTE);
}

#[test]
fn criterion_09_structural() {
    let cfg = VerifyConfig::default();
    assert_eq!((cfg.qint_range, cfg.n_max), (6, 5));
    let names = [
        "check_qint_identities",
        "check_rise_fall",
        "check_catalan_closure",
        "check_telescoping",
        "check_zeta_suite",
        "check_delta_nabla",
    ];
    criterion(9, "structural properties", &names, &cfg, MINUTE);
}

#[test]
fn criterion_10_integrality() {
    criterion(10, "integrality through exp, m in -3..3, n <= 5", &["check_integrality"], &VerifyConfig::default(), MINUTE);
}

#[test]
fn criterion_11_negative_controls() {
    let limit = MINUTE;
    let start = Instant::now();
    let mut misses = Vec::new();
    let mut entries = 0;
    for (family, table) in [("delta", DELTA_TABLE), ("nabla", NABLA_TABLE)] {
        for (word, _) in table {
            for m in TABLE_M {
                entries += 1;
                let perturbation = Perturbation::TableEntry { family: family.into(), word: word.to_string(), m };
                let cfg = VerifyConfig { perturbation, ..VerifyConfig::default() };
                let r = verify::check_golden_tables(&cfg);
                let caught = !r.passed()
                    && r.witness.as_ref().and_then(|w| w.difference.as_ref()).is_some_and(|d| !d.is_zero());
                if !caught {
                    misses.push(format!("{family} {word} m={m}"));
                }
            }
        }
    }
    let cfg = VerifyConfig { perturbation: Perturbation::DropSerreFactor, ..VerifyConfig::default() };
    let r = verify::check_qserre(&cfg);
    if r.passed() || r.witness.as_ref().and_then(|w| w.difference.as_ref()).is_none_or(|d| d.is_zero()) {
        misses.push("q-Serre without [3]_q".into());
    }
    let elapsed = start.elapsed();
    let ok = misses.is_empty() && elapsed < limit;
    let detail = format!(" [{entries} table entries and one q-Serre fault]");
    report_line(11, "negative controls", ok, elapsed, limit, &detail);
    assert!(misses.is_empty(), "undetected faults: {misses:?}");
    assert!(elapsed < limit);
}
