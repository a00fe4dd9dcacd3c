//! Named identity checks over a finite grid of `m` and degrees.
//!
//! Every check compares two independently computed sides exactly. A check
//! passes when every difference is the zero element; otherwise it reports the
//! failing case of smallest degree.

mod algebra;
pub mod golden;
mod series_checks;
mod structural;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalan::Family;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::series::Series;
use crate::word::Word;
use crate::Rational;

pub use algebra::{
    check_commutation, check_insertion, check_nabla_recursion, check_qserre, check_qserre_with,
    check_yinv_calculus, check_zeta_suite,
};
pub use series_checks::{
    check_exp_theorem, check_genfuns, check_integrality, check_main_theorems, check_ode,
    check_recurrences_expderivative, check_series_inversion,
};
pub use structural::{
    check_catalan_closure, check_delta_nabla, check_examples, check_golden_tables,
    check_qint_identities, check_rise_fall, check_telescoping,
};

type E = Element<Rational>;
type P = LaurentPoly<Rational>;
type S = Series<Rational>;

/// A deliberate fault, used to confirm that checks can fail.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Perturbation {
    #[default]
    None,
    /// Adds 1 to the computed table entry for `word` at `m`.
    TableEntry { family: String, word: String, m: i64 },
    /// Replaces the `[3]_q` coefficients of the q-Serre relations by 1.
    DropSerreFactor,
}

impl Perturbation {
    /// The family, word and `m` of a table perturbation, if it names a valid entry.
    pub fn table_entry(&self) -> Option<(Family, Word, i64)> {
        match self {
            Perturbation::TableEntry { family, word, m } => {
                Some((family.parse().ok()?, Word::parse(word).ok()?, *m))
            }
            _ => None,
        }
    }
}

/// The grid a run covers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub m_min: i64,
    pub m_max: i64,
    /// Largest degree `n` of the elements compared.
    pub n_max: usize,
    /// Truncation degree of every series identity.
    pub cutoff: usize,
    /// Largest `m` in the factorization identities.
    pub main_m_max: i64,
    /// Cutoff for the factorization identities; `None` uses `cutoff`.
    pub main_cutoff: Option<usize>,
    /// Arguments of the q-integer identities range over `-r..=r`.
    pub qint_range: i64,
    pub perturbation: Perturbation,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            m_min: -3,
            m_max: 3,
            n_max: 5,
            cutoff: 5,
            main_m_max: 3,
            main_cutoff: None,
            qint_range: 6,
            perturbation: Perturbation::None,
        }
    }
}

impl VerifyConfig {
    pub fn m_values(&self) -> impl Iterator<Item = i64> {
        self.m_min..=self.m_max
    }

    pub fn main_cutoff(&self) -> usize {
        self.main_cutoff.unwrap_or(self.cutoff)
    }

    fn params(&self) -> Params {
        Params {
            m_min: self.m_min,
            m_max: self.m_max,
            n_max: self.n_max,
            cutoff: self.cutoff,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub m_min: i64,
    pub m_max: i64,
    pub n_max: usize,
    pub cutoff: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first failing case of a check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Which identity of the check failed.
    pub case: String,
    pub m: Option<i64>,
    pub n: Option<usize>,
    /// Degree of the failing case (half the word length, or the power of `t`).
    pub degree: usize,
    /// Left side minus right side; nonzero. Absent only when a side could not
    /// be computed, in which case `error` says why.
    pub difference: Option<Element<Rational>>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub params: Params,
    pub status: Status,
    /// Number of individual comparisons made.
    pub cases: usize,
    pub witness: Option<Witness>,
    #[serde(with = "millis")]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

mod millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_millis(u64::deserialize(d)?))
    }
}

/// Identifies one comparison inside a check.
#[derive(Debug, Clone)]
pub(crate) struct Case {
    pub label: &'static str,
    pub m: Option<i64>,
    pub n: Option<usize>,
    pub degree: usize,
}

pub(crate) fn case(label: &'static str, m: Option<i64>, n: Option<usize>, degree: usize) -> Case {
    Case { label, m, n, degree }
}

/// Accumulates comparisons and keeps the failure of smallest degree.
pub(crate) struct Tally {
    name: &'static str,
    params: Params,
    cases: usize,
    witness: Option<Witness>,
    start: Instant,
}

impl Tally {
    pub fn new(name: &'static str, cfg: &VerifyConfig) -> Self {
        Tally {
            name,
            params: cfg.params(),
            cases: 0,
            witness: None,
            start: Instant::now(),
        }
    }

    fn fail(&mut self, c: &Case, difference: Option<E>, error: Option<String>) {
        if self.witness.as_ref().is_some_and(|w| w.degree <= c.degree) {
            return;
        }
        self.witness = Some(Witness {
            case: c.label.to_string(),
            m: c.m,
            n: c.n,
            degree: c.degree,
            difference,
            error,
        });
    }

    /// Compares two elements.
    pub fn elements(&mut self, c: Case, lhs: &E, rhs: &E) {
        self.cases += 1;
        let diff = lhs - rhs;
        if !diff.is_zero() {
            self.fail(&c, Some(diff), None);
        }
    }

    /// Requires an element to vanish.
    pub fn zero(&mut self, c: Case, value: &E) {
        self.elements(c, value, &E::zero());
    }

    /// Compares two scalars attached to a word; the witness is
    /// `(lhs - rhs) w`.
    pub fn scalars(&mut self, c: Case, w: &Word, lhs: &P, rhs: &P) {
        self.cases += 1;
        let diff = lhs - rhs;
        if !diff.is_zero() {
            self.fail(&c, Some(E::term(*w, diff)), None);
        }
    }

    /// Records a boolean property of a word; a failure carries `w` itself.
    pub fn holds(&mut self, c: Case, w: &Word, ok: bool) {
        self.cases += 1;
        if !ok {
            self.fail(&c, Some(E::word(*w)), None);
        }
    }

    /// Compares two series degree by degree; the degree of each case is the
    /// power of `t`.
    pub fn series(&mut self, label: &'static str, m: Option<i64>, lhs: &S, rhs: &S) {
        if lhs.cutoff() != rhs.cutoff() {
            let c = case(label, m, None, 0);
            self.cases += 1;
            let e = Error::CutoffMismatch {
                left: lhs.cutoff(),
                right: rhs.cutoff(),
            };
            self.fail(&c, None, Some(e.to_string()));
            return;
        }
        for n in 0..=lhs.cutoff() {
            self.elements(case(label, m, Some(n), n), lhs.coeff(n), rhs.coeff(n));
        }
    }

    /// Unwraps a computation, turning an error into a failure at `c`.
    pub fn attempt<T>(&mut self, c: Case, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.fail(&c, None, Some(e.to_string()));
                None
            }
        }
    }

    pub fn finish(self) -> CheckReport {
        CheckReport {
            check_name: self.name.to_string(),
            params: self.params,
            status: if self.witness.is_some() { Status::Fail } else { Status::Pass },
            cases: self.cases,
            witness: self.witness,
            elapsed: self.start.elapsed(),
        }
    }
}

type CheckFn = fn(&VerifyConfig) -> CheckReport;

/// Every check in report order.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("check_golden_tables", check_golden_tables),
    ("check_examples", check_examples),
    ("check_qserre", check_qserre),
    ("check_series_inversion", check_series_inversion),
    ("check_exp_theorem", check_exp_theorem),
    ("check_main_theorems", check_main_theorems),
    ("check_genfuns", check_genfuns),
    ("check_nabla_recursion", check_nabla_recursion),
    ("check_commutation", check_commutation),
    ("check_yinv_calculus", check_yinv_calculus),
    ("check_ode", check_ode),
    ("check_recurrences_expderivative", check_recurrences_expderivative),
    ("check_qint_identities", check_qint_identities),
    ("check_rise_fall", check_rise_fall),
    ("check_catalan_closure", check_catalan_closure),
    ("check_telescoping", check_telescoping),
    ("check_zeta_suite", check_zeta_suite),
    ("check_delta_nabla", check_delta_nabla),
    ("check_insertion", check_insertion),
    ("check_integrality", check_integrality),
];

pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|(n, _)| *n)
}

fn lookup(name: &str) -> Result<CheckFn> {
    CHECKS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| *f)
        .ok_or_else(|| Error::Domain(format!("unknown check `{name}`")))
}

pub fn run_check(name: &str, cfg: &VerifyConfig) -> Result<CheckReport> {
    Ok(lookup(name)?(cfg))
}

/// Runs the named checks concurrently; reports come back in the order given.
pub fn run_selected(names: &[&str], cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let fns = names.iter().map(|n| lookup(n)).collect::<Result<Vec<_>>>()?;
    if cfg.m_min > cfg.m_max {
        return Ok(Vec::new());
    }
    Ok(fns.par_iter().map(|f| f(cfg)).collect())
}

/// Runs every check. An empty `m` range yields no reports.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckReport> {
    let names: Vec<&str> = check_names().collect();
    run_selected(&names, cfg).expect("registered names resolve")
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

// Shared constructors; every check builds its sides from these.

fn qp(k: i64) -> P {
    P::q_pow(k)
}

fn qi(k: i64) -> P {
    crate::laurent::q_int(k)
}

fn int(k: i64) -> P {
    P::from_int(k)
}

fn delta(m: i64, n: usize) -> Result<E> {
    crate::catalan::delta_element(m, n)
}

fn nabla(m: i64, n: usize) -> Result<E> {
    crate::catalan::nabla_element(m, n)
}

fn named(kind: crate::catalan::Named, n: usize) -> Result<E> {
    crate::catalan::named_element(kind, n)
}

/// `x C_{n-1} y` as a free product, from the closed form of `C_{n-1}`.
fn xcy(n: usize) -> Result<E> {
    E::x().free_mul(&named(crate::catalan::Named::C, n - 1)?)?.free_mul(&E::y())
}

/// The series `t x`.
fn tx(cutoff: usize) -> S {
    S::monomial(cutoff, E::x(), 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_range_gives_no_reports() {
        let cfg = VerifyConfig { m_min: 1, m_max: 0, ..VerifyConfig::default() };
        assert!(run_all(&cfg).is_empty());
    }

    #[test]
    fn unknown_check_is_an_error() {
        assert!(run_check("bogus_name", &VerifyConfig::default()).is_err());
        assert_eq!(check_names().count(), CHECKS.len());
    }

    #[test]
    fn witness_has_smallest_degree() {
        let cfg = VerifyConfig::default();
        let mut t = Tally::new("t", &cfg);
        let w = Word::parse("xy").unwrap();
        t.holds(case("late", None, None, 3), &w, false);
        t.holds(case("early", None, None, 1), &w, false);
        t.holds(case("later", None, None, 2), &w, false);
        let r = t.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.cases, 3);
        assert_eq!(r.witness.unwrap().case, "early");
    }

    #[test]
    fn qserre_report_and_control() {
        let cfg = VerifyConfig::default();
        let r = check_qserre(&cfg);
        assert!(r.passed());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["status"], "pass");
        assert_eq!(json["check_name"], "check_qserre");
        let bad = VerifyConfig { perturbation: Perturbation::DropSerreFactor, ..cfg };
        let r = check_qserre(&bad);
        assert!(!r.passed());
        assert!(!r.witness.unwrap().difference.unwrap().is_zero());
    }

    #[test]
    fn perturbation_parses_from_json() {
        let p: Perturbation =
            serde_json::from_str(r#"{"kind":"table_entry","family":"delta","word":"xxyy","m":2}"#).unwrap();
        assert_eq!(p.table_entry(), Some((Family::Delta, Word::parse("xxyy").unwrap(), 2)));
    }
}
