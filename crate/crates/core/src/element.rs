//! Elements of the free algebra on `x, y`: finite linear combinations of
//! words with Laurent-polynomial coefficients. An element carries both the
//! concatenation product and the q-shuffle product.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Result;
use crate::laurent::{q_int, render_bracket, LaurentPoly};
use crate::limits;
use crate::scalar::Field;
use crate::shuffle::shuffle_words;
use crate::word::{display_order, Letter, Word};

#[derive(Clone, PartialEq)]
pub struct Element<F> {
    terms: BTreeMap<Word, LaurentPoly<F>>,
}

impl<F: Field> Default for Element<F> {
    fn default() -> Self {
        Element::zero()
    }
}

impl<F: Field> Element<F> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    /// The unit `1` (the empty word).
    pub fn one() -> Self {
        Element::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Element::term(w, LaurentPoly::one())
    }

    pub fn x() -> Self {
        Element::word(Word::x())
    }

    pub fn y() -> Self {
        Element::word(Word::y())
    }

    pub fn term(w: Word, c: LaurentPoly<F>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Element { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, LaurentPoly<F>)>>(terms: I) -> Self {
        let mut out = Element::zero();
        for (w, c) in terms {
            out.add_term(w, &c);
        }
        out
    }

    /// Parses a word and wraps it; convenient in tests.
    pub fn parse_word(s: &str) -> Result<Self> {
        Ok(Element::word(Word::parse(s)?))
    }

    pub fn add_term(&mut self, w: Word, c: &LaurentPoly<F>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in word order (length, then lexicographic).
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &LaurentPoly<F>)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// The bilinear form `(w, u)`: the coefficient of `w`.
    pub fn coeff(&self, w: &Word) -> LaurentPoly<F> {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Largest word length in the support.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn scale(&self, c: &LaurentPoly<F>) -> Self {
        if c.is_zero() {
            return Element::zero();
        }
        Element::from_terms(self.terms.iter().map(|(w, a)| (*w, a * c)))
    }

    pub fn scale_scalar(&self, c: &F) -> Self {
        self.scale(&LaurentPoly::constant(c.clone()))
    }

    /// Exact division of every coefficient.
    pub fn div_exact(&self, d: &LaurentPoly<F>) -> Result<Self> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.terms.insert(*w, c.div_exact(d)?);
        }
        Ok(out)
    }

    pub fn div_q_minus_qinv(&self) -> Result<Self> {
        self.div_exact(&crate::laurent::q_minus_qinv())
    }

    /// Applies `f` to each word and re-sums.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Option<Word>) -> Self {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            if let Some(v) = f(w) {
                out.add_term(v, c);
            }
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&LaurentPoly<F>) -> LaurentPoly<F>) -> Self {
        Element::from_terms(self.terms.iter().map(|(w, c)| (*w, f(c))))
    }

    /// The concatenation product.
    pub fn free_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Element::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v)?, &(a * b));
            }
        }
        Ok(out)
    }

    /// The q-shuffle product `self * other`.
    pub fn shuffle(&self, other: &Self) -> Result<Self> {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            limits::check_len(a + b)?;
        }
        let mut acc: HashMap<Word, LaurentPoly<F>> = HashMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let c = a * b;
                for (w, k) in shuffle_words(u, v)?.iter() {
                    let t = c.mul_int(k);
                    match acc.get_mut(w) {
                        Some(slot) => *slot += &t,
                        None => {
                            acc.insert(*w, t);
                        }
                    }
                }
            }
        }
        Ok(Element {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// `u y^{-1}`: strip a trailing `y`; words ending in `x` and `1` map to 0.
    pub fn y_inverse(&self) -> Self {
        self.map_words(|w| (w.last() == Some(Letter::Y)).then(|| w.init()))
    }

    /// `x^{-1} u`: strip a leading `x`; words starting with `y` and `1` map to 0.
    pub fn x_inverse(&self) -> Self {
        self.map_words(|w| (w.first() == Some(Letter::X)).then(|| w.tail()))
    }

    /// The antiautomorphism reversing each word and swapping `x <-> y`.
    pub fn zeta(&self) -> Self {
        self.map_words(|w| Some(w.zeta()))
    }

    /// `(q^m x * u - q^{-m} u * x) / (q - q^{-1})`, with exact division.
    pub fn commutator_x(&self, m: i64) -> Result<Self> {
        let x = Element::x();
        let left = x.shuffle(self)?.scale(&LaurentPoly::q_pow(m));
        let right = self.shuffle(&x)?.scale(&LaurentPoly::q_pow(-m));
        (&left - &right).div_q_minus_qinv()
    }

    /// `(q^m u * y - q^{-m} y * u) / (q - q^{-1})`, the mirror of
    /// [`Element::commutator_x`].
    pub fn commutator_y(&self, m: i64) -> Result<Self> {
        let y = Element::y();
        let left = self.shuffle(&y)?.scale(&LaurentPoly::q_pow(m));
        let right = y.shuffle(self)?.scale(&LaurentPoly::q_pow(-m));
        (&left - &right).div_q_minus_qinv()
    }

    /// `self * other - other * self`.
    pub fn shuffle_commutator(&self, other: &Self) -> Result<Self> {
        Ok(&self.shuffle(other)? - &other.shuffle(self)?)
    }

    /// True when every coefficient has only integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_integral)
    }

    /// Human-readable form, e.g. `[2]_q^2 xyxy + [2]_q^2[3]_q xxyy`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut words: Vec<&Word> = self.terms.keys().collect();
        words.sort_by(|a, b| display_order(a, b));
        let mut out = String::new();
        for (i, w) in words.into_iter().enumerate() {
            let c = render_bracket(&self.terms[w]);
            let (neg, mag) = match c.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, c),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag == "1" {
                out.push_str(&w.to_string());
            } else if w.is_empty() {
                out.push_str(&mag);
            } else {
                out.push_str(&format!("{mag} {w}"));
            }
        }
        out
    }
}

impl<F: Field> Element<F> {
    /// Reads the notation written by [`Element::render`]: terms
    /// `coefficient word` joined by ` + ` or ` - `, where the coefficient is
    /// in bracket notation and may be omitted. A lone coefficient is a
    /// multiple of the empty word.
    pub fn parse_expansion(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Element::zero());
        }
        let mut out = Element::zero();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r.trim_start();
        }
        loop {
            let (term, tail) = match top_level_separator(rest) {
                Some(i) => (&rest[..i], Some((&rest[i + 3..], &rest[i..i + 3] == " - "))),
                None => (rest, None),
            };
            let (c, w) = parse_term::<F>(term.trim())?;
            out.add_term(w, &if negative { -c } else { c });
            match tail {
                Some((t, neg)) => {
                    rest = t;
                    negative = neg;
                }
                None => break,
            }
        }
        Ok(out)
    }
}

/// Position of the first ` + ` or ` - ` outside parentheses.
fn top_level_separator(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ if depth == 0 && (s[i..].starts_with(" + ") || s[i..].starts_with(" - ")) => return Some(i),
            _ => {}
        }
    }
    None
}

fn parse_term<F: Field>(term: &str) -> Result<(LaurentPoly<F>, Word)> {
    if let Some((c, w)) = term.rsplit_once(' ') {
        if let Ok(w) = Word::parse(w) {
            return Ok((crate::laurent::parse_bracket(c)?, w));
        }
        return Ok((crate::laurent::parse_bracket(term)?, Word::empty()));
    }
    match Word::parse(term) {
        Ok(w) => Ok((LaurentPoly::one(), w)),
        Err(_) => Ok((crate::laurent::parse_bracket(term)?, Word::empty())),
    }
}

/// The insertion form of the x-commutator for a single word:
/// `sum_i a_1..a_i x a_{i+1}..a_n [m + 2(a_1 + ... + a_i)]_q`.
pub fn insertion_sum<F: Field>(m: i64, w: &Word) -> Result<Element<F>> {
    let mut out = Element::zero();
    let letters: Vec<Letter> = w.letters().collect();
    let mut height = 0;
    for i in 0..=letters.len() {
        if i > 0 {
            height += letters[i - 1].weight();
        }
        let word = Word::from_letters(
            letters[..i]
                .iter()
                .copied()
                .chain(std::iter::once(Letter::X))
                .chain(letters[i..].iter().copied()),
        )?;
        out.add_term(word, &q_int(m + 2 * height));
    }
    Ok(out)
}

impl<'a, F: Field> Add<&'a Element<F>> for &'a Element<F> {
    type Output = Element<F>;
    fn add(self, rhs: &Element<F>) -> Element<F> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c);
        }
        out
    }
}

impl<'a, F: Field> Sub<&'a Element<F>> for &'a Element<F> {
    type Output = Element<F>;
    fn sub(self, rhs: &Element<F>) -> Element<F> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, &-c);
        }
        out
    }
}

impl<F: Field> Add for Element<F> {
    type Output = Element<F>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Field> Sub for Element<F> {
    type Output = Element<F>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<F: Field> Neg for &Element<F> {
    type Output = Element<F>;
    fn neg(self) -> Element<F> {
        self.map_coeffs(|c| -c)
    }
}

impl<F: Field> Neg for Element<F> {
    type Output = Element<F>;
    fn neg(self) -> Element<F> {
        -&self
    }
}

impl<F: Field> fmt::Display for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<F: Field> fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({})", self.render())
    }
}

mod serde_impl {
    use serde::de::Error as _;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::Element;
    use crate::laurent::LaurentPoly;
    use crate::scalar::Field;
    use crate::word::Word;

    #[derive(serde::Serialize)]
    #[serde(bound = "F: Field")]
    struct TermRef<'a, F: Field> {
        word: String,
        coeff: &'a LaurentPoly<F>,
    }

    #[derive(serde::Deserialize)]
    #[serde(bound = "F: Field")]
    struct TermOwned<F: Field> {
        word: String,
        coeff: LaurentPoly<F>,
    }

    /// An array of `{"word": ..., "coeff": {...}}` in word order.
    impl<F: Field> Serialize for Element<F> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(self.len()))?;
            for (w, c) in self.iter() {
                seq.serialize_element(&TermRef {
                    word: w.to_ascii(),
                    coeff: c,
                })?;
            }
            seq.end()
        }
    }

    impl<'de, F: Field> Deserialize<'de> for Element<F> {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let raw = Vec::<TermOwned<F>>::deserialize(d)?;
            let mut out = Element::zero();
            for t in raw {
                let w = Word::parse(&t.word).map_err(D::Error::custom)?;
                out.add_term(w, &t.coeff);
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type E = Element<Rational>;
    type P = LaurentPoly<Rational>;

    fn e(s: &str) -> E {
        E::parse_word(s).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn qi(n: i64) -> P {
        q_int(n)
    }

    fn int(n: i64) -> P {
        P::from_int(n)
    }

    #[test]
    fn free_product() {
        assert_eq!(E::x().free_mul(&E::y()).unwrap(), e("xy"));
        assert_eq!(E::one().free_mul(&e("xyy")).unwrap(), e("xyy"));
        let lhs = e("xy").scale(&qi(2)).free_mul(&E::y()).unwrap();
        assert_eq!(lhs, E::term(w("xyy"), qi(2)));
    }

    #[test]
    fn shuffle_of_letters() {
        let xy = E::x().shuffle(&E::y()).unwrap();
        assert_eq!(xy, &e("xy") + &E::term(w("yx"), P::q_pow(-2)));
        let xx = E::x().shuffle(&E::x()).unwrap();
        assert_eq!(xx, E::term(w("xx"), &P::one() + &P::q_pow(2)));
    }

    #[test]
    fn bilinear_form_on_letter_product() {
        let xy = E::x().shuffle(&E::y()).unwrap();
        assert_eq!(xy.coeff(&w("xy")), P::one());
        assert_eq!(xy.coeff(&w("yx")), P::q_pow(-2));
        assert!(xy.coeff(&w("xx")).is_zero());
    }

    #[test]
    fn y_inverse_example() {
        let u = E::from_terms([
            (w("xxyy"), int(1)),
            (w("xyxy"), int(-6)),
            (w("xyyx"), int(2)),
            (w("yxxy"), int(3)),
            (w("yxyx"), int(-5)),
            (w("yyxx"), int(-4)),
        ]);
        let expected = E::from_terms([(w("xxy"), int(1)), (w("xyx"), int(-6)), (w("yxx"), int(3))]);
        assert_eq!(u.y_inverse(), expected);
        assert!(E::one().y_inverse().is_zero());
        assert!(E::x().y_inverse().is_zero());
    }

    #[test]
    fn x_inverse_cases() {
        assert_eq!(e("xxy").x_inverse(), e("xy"));
        assert!(e("yxy").x_inverse().is_zero());
        assert!(E::one().x_inverse().is_zero());
    }

    #[test]
    fn zeta_cases() {
        let xy = E::x().shuffle(&E::y()).unwrap();
        // xy and yx are both fixed by reverse-and-swap
        assert_eq!(xy.zeta(), xy);
        assert_eq!(e("xxy").zeta(), e("xyy"));
    }

    #[test]
    fn commutator_insertion_small_cases() {
        // m = 0, w = xy: insertion weights [0], [2], [0]
        let c = e("xy").commutator_x(0).unwrap();
        assert_eq!(c, E::term(w("xxy"), qi(2)));
        assert_eq!(insertion_sum::<Rational>(0, &w("xy")).unwrap(), c);
        // m = 1, w = 1: a single insertion with weight [1]
        assert_eq!(E::one().commutator_x(1).unwrap(), E::x());
    }

    #[test]
    fn commutator_on_non_catalan_word() {
        // (x * y - y * x) / (q - q^-1) = q^-1 xy - q^-1 yx
        let c = E::y().commutator_x(0).unwrap();
        assert_eq!(c.coeff(&w("xy")), P::q_pow(-1));
        assert_eq!(c.coeff(&w("yx")), -P::q_pow(-1));
        assert!(E::term(w("xy"), P::one()).div_q_minus_qinv().is_err());
    }

    #[test]
    fn render_uses_bracket_notation() {
        let u = E::from_terms([
            (w("xyxy"), qi(2).pow(2)),
            (w("xxyy"), &qi(2).pow(2) * &qi(3)),
        ]);
        assert_eq!(u.render(), "[2]_q^2 xyxy + [2]_q^2[3]_q xxyy");
        assert_eq!((-e("xyxyxy")).render(), "-xyxyxy");
        assert_eq!(E::zero().render(), "0");
        assert_eq!(E::one().render(), "1");
    }

    #[test]
    fn parse_expansion_round_trip() {
        let u = E::from_terms([
            (w("xyxy"), qi(2).pow(2)),
            (w("xxyy"), -(&qi(2).pow(2) * &qi(3))),
            (Word::empty(), int(3)),
        ]);
        assert_eq!(E::parse_expansion(&u.render()).unwrap(), u);
        assert_eq!(E::parse_expansion("-xy + [2]_q xxyy").unwrap().coeff(&w("xy")), int(-1));
        assert_eq!(E::parse_expansion("1").unwrap(), E::one());
        assert!(E::parse_expansion("0").unwrap().is_zero());
        assert!(E::parse_expansion("[2]_q xz").is_err());
    }

    #[test]
    fn json_round_trip() {
        let u = E::from_terms([(w("xy"), qi(2)), (Word::empty(), int(3))]);
        let s = serde_json::to_string(&u).unwrap();
        assert_eq!(
            s,
            r#"[{"word":"","coeff":{"0":"3"}},{"word":"xy","coeff":{"-1":"1","1":"1"}}]"#
        );
        let back: E = serde_json::from_str(&s).unwrap();
        assert_eq!(back, u);
    }

    #[test]
    fn shuffle_cap() {
        let long = E::parse_word(&"x".repeat(17)).unwrap();
        assert!(matches!(long.shuffle(&long), Err(crate::Error::CapExceeded { .. })));
    }
}
