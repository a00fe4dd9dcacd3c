//! The Catalan-word scalars `Delta^(m)(w)`, `Nabla^(m)(w)` and the elements
//! built from them, the named families `C_n`, `D_n`, `G~_n`, and the images
//! of the Damiani and Beck root vectors.
//!
//! For a Catalan word `w = a_1 ... a_2n` with elevation sequence
//! `(e_0, ..., e_2n)` and `rise(x) = 1`, `rise(y) = 0`:
//!
//! ```text
//! Delta^(m)(w) = prod_{i=1}^{2n} [e_{i-1} + m rise(a_i)]_q
//! Nabla^(m)(w) = prod_{i=2}^{2n} [e_{i-1} + m rise(a_i)]_q
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::laurent::{q_falling, q_int, q_minus_qinv, render_bracket, LaurentPoly};
use crate::scalar::Field;
use crate::word::{alternating_word, display_order, enumerate_catalan, Alternating, Letter, Word};

fn require_catalan(w: &Word) -> Result<()> {
    if w.is_catalan() {
        Ok(())
    } else {
        Err(Error::NotCatalan(*w))
    }
}

fn require_nontrivial(w: &Word) -> Result<()> {
    require_catalan(w)?;
    if w.is_empty() {
        Err(Error::TrivialWord)
    } else {
        Ok(())
    }
}

/// The q-integer arguments `e_{i-1} + m rise(a_i)` for `i = 1..=2n`.
fn factor_args(m: i64, w: &Word) -> impl Iterator<Item = (Letter, i64)> + '_ {
    let elev = w.elevation_sequence();
    w.letters()
        .enumerate()
        .map(move |(i, a)| (a, elev[i] + m * a.rise()))
}

fn product<F: Field>(args: impl Iterator<Item = i64>) -> LaurentPoly<F> {
    let mut acc = LaurentPoly::one();
    for k in args {
        if k == 0 {
            return LaurentPoly::zero();
        }
        acc = &acc * &q_int(k);
    }
    acc
}

/// `Delta^(m)(w)`; equal to 1 for the empty word.
pub fn delta_scalar<F: Field>(m: i64, w: &Word) -> Result<LaurentPoly<F>> {
    require_catalan(w)?;
    Ok(product(factor_args(m, w).map(|(_, k)| k)))
}

/// `Nabla^(m)(w)`, defined for nontrivial Catalan words.
pub fn nabla_scalar<F: Field>(m: i64, w: &Word) -> Result<LaurentPoly<F>> {
    require_nontrivial(w)?;
    Ok(product(factor_args(m, w).skip(1).map(|(_, k)| k)))
}

/// The factorization `Nabla^(m)(w) = Nabla_x^(m)(w) Nabla_y(w)` into the
/// factors at `x` positions and at `y` positions (both with `i >= 2`).
pub fn nabla_split<F: Field>(m: i64, w: &Word) -> Result<(LaurentPoly<F>, LaurentPoly<F>)> {
    require_nontrivial(w)?;
    let args: Vec<(Letter, i64)> = factor_args(m, w).skip(1).collect();
    let pick = |l: Letter| product(args.iter().filter(|(a, _)| *a == l).map(|(_, k)| *k));
    Ok((pick(Letter::X), pick(Letter::Y)))
}

/// The profile form of `Nabla^(m)` on an integer sequence
/// `(l_0, h_1, l_1, ..., h_r, l_r)` with `r >= 1`:
///
/// ```text
/// <h_1+m-1>_{h_1-l_0-1} <h_1>_{h_1-l_0-1} prod_{i>=2} <h_i+m-1>_{h_i-l_{i-1}} <h_i>_{h_i-l_{i-1}}
/// ```
///
/// Any integers are accepted, since shifted sequences need not be profiles
/// of words; negative falling lengths contribute 0.
pub fn nabla_from_profile<F: Field>(m: i64, entries: &[i64]) -> Result<LaurentPoly<F>> {
    if entries.len() < 3 || entries.len().is_multiple_of(2) {
        return Err(Error::DegenerateProfile(entries.len()));
    }
    let r = entries.len() / 2;
    let mut acc = LaurentPoly::one();
    for i in 1..=r {
        let h = entries[2 * i - 1];
        let l_prev = entries[2 * i - 2];
        let len = if i == 1 { h - l_prev - 1 } else { h - l_prev };
        acc = &acc * &(&q_falling::<F>(h + m - 1, len) * &q_falling::<F>(h, len));
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

fn weighted_sum<F: Field>(
    n: usize,
    mut coeff: impl FnMut(&Word) -> Result<LaurentPoly<F>>,
) -> Result<Element<F>> {
    let mut out = Element::zero();
    for w in enumerate_catalan(n)? {
        let c = coeff(&w)?;
        out.add_term(w, &c);
    }
    Ok(out)
}

/// `Delta^(m)_n = sum_{w in Cat_n} Delta^(m)(w) w`.
pub fn delta_element<F: Field>(m: i64, n: usize) -> Result<Element<F>> {
    weighted_sum(n, |w| delta_scalar(m, w))
}

/// `Nabla^(m)_n = sum_{w in Cat_n} Nabla^(m)(w) w`, for `n >= 1`.
pub fn nabla_element<F: Field>(m: i64, n: usize) -> Result<Element<F>> {
    if n == 0 {
        return Err(Error::TrivialWord);
    }
    weighted_sum(n, |w| nabla_scalar(m, w))
}

/// The families with their own closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Named {
    /// `C_n = sum_w prod_{i=1}^{2n} [1 + e_i]_q w`
    C,
    /// `D_n = (-1)^n sum_w prod_{i=1}^{2n} [e_{i-1} + rise(a_i)]_q w`
    D,
    /// `G~_n = (xy)^n`
    GTilde,
}

impl FromStr for Named {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" | "c" => Ok(Named::C),
            "D" | "d" => Ok(Named::D),
            "Gtilde" | "gtilde" | "GTilde" => Ok(Named::GTilde),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Named::C => "C",
            Named::D => "D",
            Named::GTilde => "Gtilde",
        })
    }
}

/// `C_n`, `D_n` or `G~_n`, each from its own formula rather than through
/// [`delta_element`].
pub fn named_element<F: Field>(kind: Named, n: usize) -> Result<Element<F>> {
    match kind {
        Named::C => weighted_sum(n, |w| {
            Ok(product(w.elevation_sequence().into_iter().skip(1).map(|e| 1 + e)))
        }),
        Named::D => {
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            weighted_sum(n, |w| {
                let elev = w.elevation_sequence();
                let p: LaurentPoly<F> =
                    product(w.letters().enumerate().map(|(i, a)| elev[i] + a.rise()));
                Ok(p.scale(&F::from_int(sign)))
            })
        }
        Named::GTilde => Ok(Element::word(alternating_word(Alternating::GTilde, n)?)),
    }
}

/// For `m <= -1`: whether every elevation of `w` is at most `|m|`, which is
/// exactly when `Delta^(m)(w)` is nonzero.
pub fn vanishing_bound(m: i64, w: &Word) -> Result<bool> {
    if m >= 0 {
        return Err(Error::Domain(format!("vanishing bound needs m <= -1, got {m}")));
    }
    require_catalan(w)?;
    Ok(w.elevation_sequence().iter().all(|&e| e <= -m))
}

/// Root vectors with known images in the shuffle algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Embedding {
    /// `q^{-2n} (q - q^{-1})^{2n} x C_n`
    DamianiE0,
    /// `q^{-2n} (q - q^{-1})^{2n} C_n y`
    DamianiE1,
    /// `-q^{-2n} (q - q^{-1})^{2n-1} C_n`, `n >= 1`
    DamianiEdelta,
    /// `([2n]_q / n) q^{-2n} (q - q^{-1})^{2n-1} x C_{n-1} y`, `n >= 1`
    BeckEdelta,
}

impl FromStr for Embedding {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E0" | "Damiani_E0" | "damiani_e0" => Ok(Embedding::DamianiE0),
            "E1" | "Damiani_E1" | "damiani_e1" => Ok(Embedding::DamianiE1),
            "Edelta" | "Damiani_Edelta" | "damiani_edelta" => Ok(Embedding::DamianiEdelta),
            "Beck" | "Beck_Edelta" | "beck_edelta" | "beck" => Ok(Embedding::BeckEdelta),
            _ => Err(Error::Parse(format!("unknown embedding `{s}`"))),
        }
    }
}

pub fn embedding_image<F: Field>(kind: Embedding, n: usize) -> Result<Element<F>> {
    let ni = n as i64;
    let x = Element::x();
    let y = Element::y();
    let q_m2n = LaurentPoly::<F>::q_pow(-2 * ni);
    let diff = q_minus_qinv::<F>();
    let needs_positive = || {
        if n == 0 {
            Err(Error::Domain("imaginary root vectors need n >= 1".into()))
        } else {
            Ok(())
        }
    };
    match kind {
        Embedding::DamianiE0 => {
            let c = named_element(Named::C, n)?;
            Ok(x.free_mul(&c)?.scale(&(&q_m2n * &diff.pow(2 * n as u32))))
        }
        Embedding::DamianiE1 => {
            let c = named_element(Named::C, n)?;
            Ok(c.free_mul(&y)?.scale(&(&q_m2n * &diff.pow(2 * n as u32))))
        }
        Embedding::DamianiEdelta => {
            needs_positive()?;
            let c = named_element(Named::C, n)?;
            Ok(c.scale(&-(&q_m2n * &diff.pow(2 * n as u32 - 1))))
        }
        Embedding::BeckEdelta => {
            needs_positive()?;
            let c = named_element(Named::C, n - 1)?;
            let inner = x.free_mul(&c)?.free_mul(&y)?;
            let pref = (&q_int::<F>(2 * ni).scale(&F::from_int(ni).recip()) * &q_m2n)
                * diff.pow(2 * n as u32 - 1);
            Ok(inner.scale(&pref))
        }
    }
}

/// Which scalar family a table lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Delta,
    Nabla,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta" | "Delta" => Ok(Family::Delta),
            "nabla" | "Nabla" => Ok(Family::Nabla),
            _ => Err(Error::Parse(format!("unknown table family `{s}`"))),
        }
    }
}

/// Scalars of a family for all Catalan words of length at most `2 n_max`
/// and each `m` in a range. Rows are ordered by length, then area, then
/// lexicographically. The `Nabla` table has no row for the empty word.
#[derive(Clone, PartialEq)]
pub struct ScalarTable<F> {
    pub family: Family,
    pub m_values: Vec<i64>,
    pub rows: Vec<(Word, Vec<LaurentPoly<F>>)>,
}

impl<F: Field> ScalarTable<F> {
    pub fn build(family: Family, m_min: i64, m_max: i64, n_max: usize) -> Result<Self> {
        if m_min > m_max {
            return Err(Error::Domain(format!("empty m-range {m_min}..{m_max}")));
        }
        let m_values: Vec<i64> = (m_min..=m_max).collect();
        let mut words = Vec::new();
        let first = if family == Family::Nabla { 1 } else { 0 };
        for n in first..=n_max {
            words.extend(enumerate_catalan(n)?);
        }
        words.sort_by(|a, b| match display_order(a, b) {
            Ordering::Equal => a.cmp(b),
            o => o,
        });
        let mut rows = Vec::with_capacity(words.len());
        for w in words {
            let vals = m_values
                .iter()
                .map(|&m| match family {
                    Family::Delta => delta_scalar(m, &w),
                    Family::Nabla => nabla_scalar(m, &w),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push((w, vals));
        }
        Ok(ScalarTable { family, m_values, rows })
    }

    pub fn entry(&self, w: &Word, m: i64) -> Option<&LaurentPoly<F>> {
        let col = self.m_values.iter().position(|&v| v == m)?;
        self.rows.iter().find(|(r, _)| r == w).map(|(_, v)| &v[col])
    }

    /// Comma-separated values; the header row lists the `m` values.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("w");
        for m in &self.m_values {
            out.push_str(&format!(",{m}"));
        }
        out.push('\n');
        for (w, vals) in &self.rows {
            out.push_str(&w.to_string());
            for v in vals {
                out.push(',');
                out.push_str(&csv_field(&render_bracket(v)));
            }
            out.push('\n');
        }
        out
    }

    /// A LaTeX `tabular` with one column per `m`.
    pub fn to_latex(&self) -> String {
        let symbol = match self.family {
            Family::Delta => "\\Delta",
            Family::Nabla => "\\nabla",
        };
        let cols = vec!["c"; self.m_values.len() + 1].join("|");
        let mut out = format!("\\begin{{tabular}}{{ {cols} }}\n$w$");
        for m in &self.m_values {
            out.push_str(&format!(" & ${symbol}^{{({m})}}(w)$"));
        }
        out.push_str("\\\\[1mm]\n\\hline\n");
        let last = self.rows.len().saturating_sub(1);
        for (i, (w, vals)) in self.rows.iter().enumerate() {
            if w.is_empty() {
                out.push_str("$\\mathbb{1}$");
            } else {
                out.push_str(&format!("${w}$"));
            }
            for v in vals {
                out.push_str(&format!(" & ${}$", render_bracket(v)));
            }
            out.push_str(if i == last { "\n" } else { "\\\\[1mm]\n" });
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_bracket;
    use crate::Rational;

    type P = LaurentPoly<Rational>;
    type E = Element<Rational>;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn b(s: &str) -> P {
        parse_bracket(s).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_scalar::<Rational>(2, &w("xxyy")).unwrap(), b("[2]_q^2[3]_q"));
        assert_eq!(delta_scalar::<Rational>(-1, &w("xyxy")).unwrap(), P::one());
        assert!(delta_scalar::<Rational>(0, &w("xy")).unwrap().is_zero());
        assert_eq!(delta_scalar::<Rational>(5, &Word::empty()).unwrap(), P::one());
        assert!(matches!(delta_scalar::<Rational>(1, &w("yx")), Err(Error::NotCatalan(_))));
    }

    #[test]
    fn nabla_examples() {
        for m in -3..=3 {
            assert_eq!(nabla_scalar::<Rational>(m, &w("xy")).unwrap(), P::one());
        }
        assert_eq!(nabla_scalar::<Rational>(1, &w("xxyxyy")).unwrap(), b("[2]_q^4"));
        assert!(nabla_scalar::<Rational>(-2, &w("xxxyyy")).unwrap().is_zero());
        assert!(matches!(nabla_scalar::<Rational>(1, &Word::empty()), Err(Error::TrivialWord)));
    }

    #[test]
    fn split_examples() {
        let (nx, ny) = nabla_split::<Rational>(1, &w("xy")).unwrap();
        assert!(nx.is_one() && ny.is_one());
        for m in -3..=3 {
            let (nx, ny) = nabla_split::<Rational>(m, &w("xxyy")).unwrap();
            assert_eq!(nx, q_int(1 + m));
            assert_eq!(ny, q_int(2));
            assert_eq!(&nx * &ny, nabla_scalar(m, &w("xxyy")).unwrap());
        }
    }

    #[test]
    fn profile_examples() {
        for m in -3..=3 {
            assert!(nabla_from_profile::<Rational>(m, &[0, 1, 0]).unwrap().is_one());
        }
        assert_eq!(nabla_from_profile::<Rational>(2, &[0, 2, 0]).unwrap(), b("[2]_q[3]_q"));
        assert!(matches!(
            nabla_from_profile::<Rational>(1, &[0]),
            Err(Error::DegenerateProfile(1))
        ));
    }

    #[test]
    fn element_examples() {
        let c2: E = delta_element(2, 2).unwrap();
        let expected = E::from_terms([(w("xyxy"), b("[2]_q^2")), (w("xxyy"), b("[2]_q^2[3]_q"))]);
        assert_eq!(c2, expected);
        assert_eq!(named_element::<Rational>(Named::C, 2).unwrap(), expected);
        assert!(delta_element::<Rational>(0, 3).unwrap().is_zero());
        assert_eq!(delta_element::<Rational>(-1, 2).unwrap(), E::word(w("xyxy")));
        assert_eq!(delta_element::<Rational>(7, 0).unwrap(), E::one());
        for m in -3..=3 {
            assert_eq!(nabla_element::<Rational>(m, 1).unwrap(), E::word(w("xy")));
        }
        assert!(nabla_element::<Rational>(1, 0).is_err());
        let n22 = E::from_terms([(w("xyxy"), b("[2]_q")), (w("xxyy"), b("[2]_q[3]_q"))]);
        assert_eq!(nabla_element::<Rational>(2, 2).unwrap(), n22);
    }

    #[test]
    fn named_examples() {
        assert_eq!(
            named_element::<Rational>(Named::C, 1).unwrap(),
            E::term(w("xy"), q_int(2))
        );
        let d2 = E::from_terms([(w("xyxy"), P::one()), (w("xxyy"), b("[2]_q^2"))]);
        assert_eq!(named_element::<Rational>(Named::D, 2).unwrap(), d2);
        let d3 = E::from_terms([
            (w("xyxyxy"), b("-1")),
            (w("xxyyxy"), b("-[2]_q^2")),
            (w("xyxxyy"), b("-[2]_q^2")),
            (w("xxyxyy"), b("-[2]_q^4")),
            (w("xxxyyy"), b("-[2]_q^2[3]_q^2")),
        ]);
        assert_eq!(named_element::<Rational>(Named::D, 3).unwrap(), d3);
        assert_eq!(named_element::<Rational>(Named::GTilde, 0).unwrap(), E::one());
    }

    #[test]
    fn vanishing_examples() {
        assert!(!vanishing_bound(-1, &w("xxyy")).unwrap());
        assert!(vanishing_bound(-2, &w("xxyy")).unwrap());
        for n in 0..5 {
            let g = alternating_word(Alternating::GTilde, n).unwrap();
            assert!(vanishing_bound(-1, &g).unwrap());
        }
        assert!(vanishing_bound(0, &w("xy")).is_err());
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(embedding_image::<Rational>(Embedding::DamianiE0, 0).unwrap(), E::x());
        let d = q_minus_qinv::<Rational>();
        let edelta = E::term(w("xy"), -(&(&P::q_pow(-2) * &d) * &q_int(2)));
        assert_eq!(embedding_image::<Rational>(Embedding::DamianiEdelta, 1).unwrap(), edelta);
        let beck = E::term(w("xy"), &(&q_int::<Rational>(2) * &P::q_pow(-2)) * &d);
        assert_eq!(embedding_image::<Rational>(Embedding::BeckEdelta, 1).unwrap(), beck);
        assert!(embedding_image::<Rational>(Embedding::BeckEdelta, 0).is_err());
    }

    #[test]
    fn table_rendering() {
        let t = ScalarTable::<Rational>::build(Family::Delta, 0, 0, 2).unwrap();
        assert_eq!(t.to_csv(), "w,0\n1,1\nxy,0\nxyxy,0\nxxyy,0\n");
        let latex = t.to_latex();
        assert!(latex.starts_with("\\begin{tabular}{ c|c }\n$w$ & $\\Delta^{(0)}(w)$\\\\[1mm]\n\\hline\n"));
        assert!(latex.contains("$\\mathbb{1}$ & $1$\\\\[1mm]\n"));
        assert!(latex.contains("$xxyy$ & $0$\n\\end{tabular}"));
        let n = ScalarTable::<Rational>::build(Family::Nabla, 1, 1, 1).unwrap();
        assert_eq!(n.rows.len(), 1);
        assert!(ScalarTable::<Rational>::build(Family::Nabla, 1, 0, 1).is_err());
    }
}
