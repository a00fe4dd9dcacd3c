//! Words over the alphabet `{x, y}` and the lattice-path data attached to
//! them: elevation sequences, Dyck paths, and profiles.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits;

/// Letters of the two-letter alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    /// `+1` for `x`, `-1` for `y`.
    pub fn weight(self) -> i64 {
        match self {
            Letter::X => 1,
            Letter::Y => -1,
        }
    }

    /// `(weight + 1) / 2` as an integer: 1 for `x`, 0 for `y`.
    pub fn rise(self) -> i64 {
        match self {
            Letter::X => 1,
            Letter::Y => 0,
        }
    }

    /// The pairing `<a, b>` used by the q-shuffle product.
    pub fn pairing(self, other: Letter) -> i64 {
        if self == other {
            2
        } else {
            -2
        }
    }

    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }

    fn bit(self) -> u64 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(b: u64) -> Letter {
        if b & 1 == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }
}

/// Number of letters a packed [`Word`] can hold.
pub const MAX_LETTERS: usize = 64;

/// A word over `{x, y}`, packed as a bit string (`x = 0`, `y = 1`, letter `i`
/// at bit `i`). The empty word is the unit `1`.
///
/// Words order by length first and then lexicographically with `x < y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: u64,
    len: u8,
}

impl Word {
    pub const fn empty() -> Word {
        Word { bits: 0, len: 0 }
    }

    pub fn letter(a: Letter) -> Word {
        Word {
            bits: a.bit(),
            len: 1,
        }
    }

    pub fn x() -> Word {
        Word::letter(Letter::X)
    }

    pub fn y() -> Word {
        Word::letter(Letter::Y)
    }

    /// Builds a word from letters, subject to the configured length cap.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Word> {
        let mut w = Word::empty();
        for a in letters {
            w = w.push(a)?;
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at position `i` (0-based).
    pub fn at(&self, i: usize) -> Letter {
        debug_assert!(i < self.len());
        Letter::from_bit(self.bits >> i)
    }

    pub fn first(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.at(0))
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.at(self.len() - 1))
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        (0..self.len()).map(move |i| self.at(i))
    }

    pub fn push(&self, a: Letter) -> Result<Word> {
        limits::check_len(self.len() + 1)?;
        Ok(self.push_unchecked(a))
    }

    pub(crate) fn push_unchecked(&self, a: Letter) -> Word {
        Word {
            bits: self.bits | (a.bit() << self.len),
            len: self.len + 1,
        }
    }

    pub(crate) fn prepend_unchecked(&self, a: Letter) -> Word {
        Word {
            bits: (self.bits << 1) | a.bit(),
            len: self.len + 1,
        }
    }

    /// Concatenation, subject to the length cap.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        limits::check_len(self.len() + other.len())?;
        Ok(self.concat_unchecked(other))
    }

    pub(crate) fn concat_unchecked(&self, other: &Word) -> Word {
        if other.len == 0 {
            return *self;
        }
        Word {
            bits: self.bits | (other.bits << self.len),
            len: self.len + other.len,
        }
    }

    /// The word without its first letter.
    pub fn tail(&self) -> Word {
        if self.is_empty() {
            return *self;
        }
        Word {
            bits: self.bits >> 1,
            len: self.len - 1,
        }
    }

    /// The word without its last letter.
    pub fn init(&self) -> Word {
        if self.is_empty() {
            return *self;
        }
        let len = self.len - 1;
        Word {
            bits: self.bits & mask(len as usize),
            len,
        }
    }

    pub fn count(&self, a: Letter) -> usize {
        let ones = self.bits.count_ones() as usize;
        match a {
            Letter::Y => ones,
            Letter::X => self.len() - ones,
        }
    }

    /// Reverse the word and swap `x <-> y`.
    pub fn zeta(&self) -> Word {
        let mut out = Word::empty();
        for a in self.letters().rev() {
            out = out.push_unchecked(a.swap());
        }
        out
    }

    /// `(e_0, ..., e_n)` with `e_0 = 0` and `e_i = e_{i-1} + weight(a_i)`.
    pub fn elevation_sequence(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut e = 0;
        out.push(e);
        for a in self.letters() {
            e += a.weight();
            out.push(e);
        }
        out
    }

    /// Sum of the elevation sequence (area under the path).
    pub fn area(&self) -> i64 {
        self.elevation_sequence().iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.count(Letter::X) == self.len()
    }

    pub fn is_catalan(&self) -> bool {
        let mut e = 0i64;
        for a in self.letters() {
            e += a.weight();
            if e < 0 {
                return false;
            }
        }
        e == 0
    }

    /// The vertices `(i, e_i)` of the Dyck path.
    pub fn dyck_path(&self) -> Vec<(i64, i64)> {
        self.elevation_sequence()
            .into_iter()
            .enumerate()
            .map(|(i, e)| (i as i64, e))
            .collect()
    }

    pub fn profile(&self) -> Profile {
        let e = self.elevation_sequence();
        let n = self.len();
        let mut entries = Vec::new();
        for i in 0..=n {
            if i == 0 || i == n || e[i] - e[i - 1] != e[i + 1] - e[i] {
                entries.push(e[i]);
            }
        }
        Profile { entries }
    }

    /// ASCII over `{x, y}`; the empty word gives the empty string.
    pub fn to_ascii(&self) -> String {
        self.letters().map(Letter::as_char).collect()
    }

    /// Parses ASCII over `{x, y}`. Both `""` and `"1"` denote the empty word.
    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        let mut w = Word::empty();
        for c in s.chars() {
            let a = match c {
                'x' => Letter::X,
                'y' => Letter::Y,
                other => return Err(Error::Parse(format!("invalid letter `{other}` in word `{s}`"))),
            };
            w = w.push(a)?;
        }
        Ok(w)
    }
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            let diff = self.bits ^ other.bits;
            if diff == 0 {
                Ordering::Equal
            } else {
                let i = diff.trailing_zeros();
                // x = 0 sorts before y = 1
                ((self.bits >> i) & 1).cmp(&((other.bits >> i) & 1))
            }
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// The empty word displays as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&self.to_ascii())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

/// Display order used by the human renderer and the tables: length, then
/// the area under the Dyck path, then lexicographic. This is the order in
/// which the standard tables of Catalan words are usually printed.
pub fn display_order(a: &Word, b: &Word) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.area().cmp(&b.area()))
        .then_with(|| a.cmp(b))
}

/// The endpoints and turning points `(l_0, h_1, l_1, ..., h_r, l_r)` of a
/// word's elevation sequence.
///
/// For words starting with `x` and ending with `y` (in particular every
/// nontrivial Catalan word) the entries alternate valley, peak, valley.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    entries: Vec<i64>,
}

impl Profile {
    /// Validates a valley/peak sequence: odd length with `h_i > l_{i-1}` and
    /// `h_i > l_i`.
    pub fn new(entries: Vec<i64>) -> Result<Profile> {
        if entries.len().is_multiple_of(2) {
            return Err(Error::DegenerateProfile(entries.len()));
        }
        for i in (1..entries.len()).step_by(2) {
            if entries[i] <= entries[i - 1] || entries[i] <= entries[i + 1] {
                return Err(Error::Domain(format!("profile {entries:?} is not alternating")));
            }
        }
        Ok(Profile { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Number of peaks `r` when the profile has valley/peak shape.
    pub fn peaks(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn is_valley_peak(&self) -> bool {
        Profile::new(self.entries.clone()).is_ok()
    }

    /// Catalan test on the profile alone: inner valleys non-negative and the
    /// last valley zero.
    pub fn is_catalan(&self) -> bool {
        if !self.is_valley_peak() {
            return false;
        }
        let r = self.peaks();
        let valley = |i: usize| self.entries[2 * i];
        valley(0) == 0 && (1..r).all(|i| valley(i) >= 0) && valley(r) == 0
    }

    /// Rebuilds the elevation sequence by interpolating with unit steps.
    pub fn interpolate(&self) -> Vec<i64> {
        let mut out = vec![self.entries[0]];
        for pair in self.entries.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let step = if b > a { 1 } else { -1 };
            let mut e = a;
            while e != b {
                e += step;
                out.push(e);
            }
        }
        out
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The set `Cat_n` of Catalan words of length `2n`, lexicographic with `x < y`.
pub fn enumerate_catalan(n: usize) -> Result<Vec<Word>> {
    limits::check_len(2 * n)?;
    let mut out = Vec::new();
    fn go(w: Word, height: usize, remaining: usize, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(w);
            return;
        }
        if height < remaining {
            go(w.push_unchecked(Letter::X), height + 1, remaining - 1, out);
        }
        if height > 0 {
            go(w.push_unchecked(Letter::Y), height - 1, remaining - 1, out);
        }
    }
    go(Word::empty(), 0, 2 * n, &mut out);
    Ok(out)
}

/// All words of the given length, lexicographic.
pub fn enumerate_words(len: usize) -> Result<Vec<Word>> {
    limits::check_len(len)?;
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| [w.push_unchecked(Letter::X), w.push_unchecked(Letter::Y)])
            .collect();
    }
    out.sort();
    Ok(out)
}

/// The alternating word families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alternating {
    /// `W_{-n} = (xy)^n x`
    WMinus,
    /// `W_{n+1} = y (xy)^n`
    WPlus,
    /// `G_n = (yx)^n`, with `G_0 = 1`
    G,
    /// `G~_n = (xy)^n`, with `G~_0 = 1`
    GTilde,
}

/// Builds an alternating word. For `WMinus` and `WPlus` the index is the
/// exponent `n` of `(xy)^n`; for `G` and `GTilde` it is the number of pairs.
pub fn alternating_word(kind: Alternating, n: usize) -> Result<Word> {
    let (lead, pair, trail): (&[Letter], [Letter; 2], &[Letter]) = match kind {
        Alternating::WMinus => (&[], [Letter::X, Letter::Y], &[Letter::X]),
        Alternating::WPlus => (&[Letter::Y], [Letter::X, Letter::Y], &[]),
        Alternating::G => (&[], [Letter::Y, Letter::X], &[]),
        Alternating::GTilde => (&[], [Letter::X, Letter::Y], &[]),
    };
    let letters = lead
        .iter()
        .copied()
        .chain(std::iter::repeat_n(pair, n).flatten())
        .chain(trail.iter().copied());
    Word::from_letters(letters)
}
