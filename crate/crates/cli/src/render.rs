//! Text forms of elements, series, word lists and tables.

use anyhow::Result;
use qshuffle::catalan::ScalarTable;
use qshuffle::laurent::render_bracket;
use qshuffle::verify::CheckReport;
use qshuffle::word::display_order;
use qshuffle::{QElement, QSeries, Rational, Word};
use serde::Serialize;

use crate::config::Format;

fn word_text(w: &Word) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.to_ascii()
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn sorted_terms(e: &QElement) -> Vec<(&Word, String)> {
    let mut terms: Vec<_> = e.iter().map(|(w, c)| (w, render_bracket(c))).collect();
    terms.sort_by(|a, b| display_order(a.0, b.0));
    terms
}

fn latex_element(e: &QElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (w, c)) in sorted_terms(e).into_iter().enumerate() {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, c),
        };
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let word = if w.is_empty() { "\\mathbb{1}".to_string() } else { w.to_ascii() };
        match (mag.as_str(), w.is_empty()) {
            ("1", _) => out.push_str(&word),
            (_, true) => out.push_str(&mag),
            _ => out.push_str(&format!("{mag}\\,{word}")),
        }
    }
    out
}

pub fn element(e: &QElement, format: Format) -> Result<String> {
    Ok(match format {
        Format::Human => format!("{}\n", e.render()),
        Format::Json => format!("{}\n", serde_json::to_string(e)?),
        Format::Latex => format!("${}$\n", latex_element(e)),
        Format::Csv => {
            let mut out = String::from("word,coefficient\n");
            for (w, c) in sorted_terms(e) {
                out.push_str(&format!("{},{}\n", word_text(w), csv_field(&c)));
            }
            out
        }
    })
}

pub fn series(s: &QSeries, format: Format) -> Result<String> {
    Ok(match format {
        Format::Human => s.render(),
        Format::Json => format!("{}\n", serde_json::to_string(s)?),
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{ c|c }\n$n$ & coefficient of $t^n$\\\\[1mm]\n\\hline\n");
            for (n, c) in s.coeffs().iter().enumerate() {
                let end = if n == s.cutoff() { "\n" } else { "\\\\[1mm]\n" };
                out.push_str(&format!("${n}$ & ${}${end}", latex_element(c)));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        Format::Csv => {
            let mut out = String::from("n,word,coefficient\n");
            for (n, c) in s.coeffs().iter().enumerate() {
                for (w, coeff) in sorted_terms(c) {
                    out.push_str(&format!("{n},{},{}\n", word_text(w), csv_field(&coeff)));
                }
            }
            out
        }
    })
}

#[derive(Serialize)]
struct WordRow {
    word: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elevations: Option<Vec<i64>>,
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn words(list: &[Word], profiles: bool, elevations: bool, format: Format) -> Result<String> {
    let rows: Vec<WordRow> = list
        .iter()
        .map(|w| WordRow {
            word: word_text(w),
            profile: profiles.then(|| w.profile().entries().to_vec()),
            elevations: elevations.then(|| w.elevation_sequence()),
        })
        .collect();
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string(&rows)?),
        Format::Csv => {
            let mut out = String::from("word");
            if profiles {
                out.push_str(",profile");
            }
            if elevations {
                out.push_str(",elevations");
            }
            out.push('\n');
            for r in &rows {
                out.push_str(&r.word);
                if let Some(p) = &r.profile {
                    out.push_str(&format!(",{}", join(p)));
                }
                if let Some(e) = &r.elevations {
                    out.push_str(&format!(",{}", join(e)));
                }
                out.push('\n');
            }
            out
        }
        Format::Human | Format::Latex => {
            let mut out = String::new();
            for (w, r) in list.iter().zip(&rows) {
                let word = if format == Format::Latex && w.is_empty() { "\\mathbb{1}".to_string() } else { r.word.clone() };
                out.push_str(&word);
                if profiles {
                    out.push_str(&format!("  profile {}", w.profile()));
                }
                if let Some(e) = &r.elevations {
                    let parts: Vec<String> = e.iter().map(i64::to_string).collect();
                    out.push_str(&format!("  elevations ({})", parts.join(",")));
                }
                out.push('\n');
            }
            out
        }
    })
}

#[derive(Serialize)]
struct TableRow {
    word: String,
    values: Vec<(i64, String)>,
}

pub fn table(t: &ScalarTable<Rational>, format: Format) -> Result<String> {
    Ok(match format {
        Format::Latex => t.to_latex(),
        Format::Csv => t.to_csv(),
        Format::Json => {
            let rows: Vec<TableRow> = t
                .rows
                .iter()
                .map(|(w, vals)| TableRow {
                    word: word_text(w),
                    values: t.m_values.iter().copied().zip(vals.iter().map(render_bracket)).collect(),
                })
                .collect();
            format!("{}\n", serde_json::to_string(&rows)?)
        }
        Format::Human => {
            let mut cells: Vec<Vec<String>> = vec![std::iter::once("w".to_string())
                .chain(t.m_values.iter().map(|m| format!("m={m}")))
                .collect()];
            for (w, vals) in &t.rows {
                cells.push(std::iter::once(word_text(w)).chain(vals.iter().map(render_bracket)).collect());
            }
            let widths: Vec<usize> = (0..cells[0].len())
                .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap())
                .collect();
            let mut out = String::new();
            for row in &cells {
                let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
    })
}

pub fn reports(reports: &[CheckReport], timings: bool, format: Format) -> Result<String> {
    if format == Format::Json {
        return Ok(format!("{}\n", serde_json::to_string_pretty(reports)?));
    }
    let width = reports.iter().map(|r| r.check_name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        out.push_str(&format!("{:<width$}  {status}  {:>6} cases", r.check_name, r.cases));
        if timings {
            out.push_str(&format!("  {:>9.3} ms", r.elapsed.as_secs_f64() * 1e3));
        }
        out.push('\n');
        if let Some(w) = &r.witness {
            out.push_str(&format!("    witness: {} (degree {}", w.case, w.degree));
            if let Some(m) = w.m {
                out.push_str(&format!(", m = {m}"));
            }
            if let Some(n) = w.n {
                out.push_str(&format!(", n = {n}"));
            }
            out.push(')');
            if let Some(d) = &w.difference {
                out.push_str(&format!(": difference {}", d.render()));
            }
            if let Some(e) = &w.error {
                out.push_str(&format!(": {e}"));
            }
            out.push('\n');
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} checks, {failed} failed\n", reports.len()));
    Ok(out)
}
