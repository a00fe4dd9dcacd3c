//! Laurent polynomials in a formal variable `q`, q-integers, and the
//! falling products built from them.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

/// A Laurent polynomial `sum c_k q^k` with coefficients in `R`.
///
/// Terms are kept sorted by exponent and no stored coefficient is zero, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<R> {
    terms: Vec<(i64, R)>,
}

impl<R: Ring> LaurentPoly<R> {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }

    /// `c q^k`.
    pub fn monomial(c: R, k: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(k, c)] }
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(R::one(), k)
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, R)>>(terms: I) -> Self {
        let mut v: Vec<(i64, R)> = terms.into_iter().collect();
        v.sort_by_key(|(k, _)| *k);
        let mut out: Vec<(i64, R)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => {
                    let s = std::mem::replace(lc, R::zero()) + c;
                    *lc = s;
                }
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(i64, R)] {
        &self.terms
    }

    pub fn coeff(&self, k: i64) -> R {
        match self.terms.binary_search_by_key(&k, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => R::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(k, _)| *k)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(k, _)| *k)
    }

    /// The constant coefficient when the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<R> {
        match self.terms.as_slice() {
            [] => Some(R::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_sorted(self.terms.iter().map(|(k, a)| (*k, a.clone() * c.clone())).collect())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (-k, c.clone())))
    }

    /// Multiplies by a polynomial over another coefficient ring, mapping
    /// that ring in through its integer values.
    pub fn mul_int(&self, other: &LaurentPoly<i64>) -> Self {
        let mut acc: Vec<(i64, R)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                acc.push((a + b, ca.clone() * R::from_int(*cb)));
            }
        }
        Self::from_terms(acc)
    }

    fn from_sorted(mut terms: Vec<(i64, R)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let sign = |c: &R| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.clone() + sign(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(k, c)| (*k, sign(c))));
        LaurentPoly { terms: out }
    }

    fn mul_poly(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let mut dense: Vec<R> = vec![R::zero(); (hi - lo + 1) as usize];
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let slot = &mut dense[(a + b - lo) as usize];
                let v = std::mem::replace(slot, R::zero()) + ca.clone() * cb.clone();
                *slot = v;
            }
        }
        Self::from_sorted(
            dense
                .into_iter()
                .enumerate()
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        )
    }
}

impl<F: Field> LaurentPoly<F> {
    /// Exact division. Errors when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_lo = divisor.min_exp().unwrap();
        let d_hi = divisor.max_exp().unwrap();
        let lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        let n_lo = self.min_exp().unwrap();
        // long division from the top; the quotient's lowest exponent is n_lo - d_lo
        while let Some(top) = rem.max_exp() {
            let k = top - d_hi;
            if k < n_lo - d_lo {
                break;
            }
            let c = rem.coeff(top) / lead.clone();
            rem = &rem - &divisor.shift(k).scale(&c);
            quotient.push((k, c));
        }
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor}) leaves remainder {rem}")));
        }
        Ok(Self::from_terms(quotient))
    }

    /// Exact division by `q - q^{-1}`.
    pub fn div_q_minus_qinv(&self) -> Result<Self> {
        self.div_exact(&q_minus_qinv())
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integral())
    }
}

/// `q - q^{-1}`.
pub fn q_minus_qinv<R: Ring>() -> LaurentPoly<R> {
    LaurentPoly::from_terms([(1, R::one()), (-1, -R::one())])
}

/// The q-integer `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`.
pub fn q_int<R: Ring>(n: i64) -> LaurentPoly<R> {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let sign = if n < 0 { -R::one() } else { R::one() };
    let a = n.abs();
    LaurentPoly {
        terms: (0..a).map(|j| (1 - a + 2 * j, sign.clone())).collect(),
    }
}

/// The falling product `<m>_n = [m]_q [m-1]_q ... [m-n+1]_q`, with
/// `<m>_0 = 1` and `<m>_n = 0` for `n < 0`.
pub fn q_falling<R: Ring>(m: i64, n: i64) -> LaurentPoly<R> {
    if n < 0 {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::one();
    for j in 0..n {
        acc = &acc * &q_int(m - j);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// A product `c * prod [k]_q^{e_k}` of q-integers with a scalar prefactor.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketProduct<F> {
    pub scalar: F,
    /// `(k, e_k)` with `k >= 2`, increasing in `k`.
    pub factors: Vec<(i64, u32)>,
}

impl<F: Field> BracketProduct<F> {
    pub fn to_poly(&self) -> LaurentPoly<F> {
        let mut acc = LaurentPoly::constant(self.scalar.clone());
        for (k, e) in &self.factors {
            acc = &acc * &q_int::<F>(*k).pow(*e);
        }
        acc
    }
}

/// Writes `p` as `c * prod [k]_q^{e_k}` when such a form exists.
///
/// Each `[k]_q` carries a cyclotomic factor that no smaller q-integer has,
/// so peeling off the largest divisible q-integer first is complete.
pub fn bracket_factor<F: Field>(p: &LaurentPoly<F>) -> Option<BracketProduct<F>> {
    if p.is_zero() {
        return None;
    }
    let mut rem = p.clone();
    let mut factors: Vec<(i64, u32)> = Vec::new();
    let span = rem.max_exp().unwrap() - rem.min_exp().unwrap();
    let mut k = span / 2 + 1;
    while k >= 2 {
        let b = q_int::<F>(k);
        match rem.div_exact(&b) {
            Ok(qt) => {
                rem = qt;
                match factors.last_mut() {
                    Some((fk, e)) if *fk == k => *e += 1,
                    _ => factors.push((k, 1)),
                }
            }
            Err(_) => k -= 1,
        }
    }
    let scalar = rem.as_constant()?;
    factors.reverse();
    Some(BracketProduct { scalar, factors })
}

/// Renders a polynomial the way the tables print it: `-[2]_q^2[3]_q`, `0`,
/// `1`, or an expanded sum when no q-integer product form exists.
pub fn render_bracket<F: Field>(p: &LaurentPoly<F>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    match bracket_factor(p) {
        Some(bp) => {
            let mut body = String::new();
            for (k, e) in &bp.factors {
                body.push_str(&format!("[{k}]_q"));
                if *e > 1 {
                    body.push_str(&format!("^{e}"));
                }
            }
            let one = F::one();
            if body.is_empty() {
                bp.scalar.to_string()
            } else if bp.scalar == one {
                body
            } else if bp.scalar == -one {
                format!("-{body}")
            } else if bp.scalar.is_integral() {
                format!("{}{body}", bp.scalar)
            } else {
                format!("({}){body}", bp.scalar)
            }
        }
        None => format!("({p})"),
    }
}

/// Parses the notation written by [`render_bracket`]: an optional sign or
/// scalar, then `[k]_q` factors with optional `^e`. `0` and `1` are accepted.
pub fn parse_bracket<F: Field>(s: &str) -> Result<LaurentPoly<F>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || Error::Parse(format!("malformed q-integer product `{s}`"));
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        if !inner.contains(['(', '[']) {
            return parse_expanded(inner);
        }
    }
    let (scalar, rest) = match s.find('[') {
        Some(i) => {
            let head = &s[..i];
            let head = head.trim_start_matches('(').trim_end_matches(')');
            let c = match head {
                "" => F::one(),
                "-" => -F::one(),
                h => h.parse::<F>().map_err(|_| err())?,
            };
            (c, &s[i..])
        }
        None => (s.parse::<F>().map_err(|_| err())?, ""),
    };
    let mut acc = LaurentPoly::constant(scalar);
    let mut rest = rest;
    while !rest.is_empty() {
        let close = rest.find(']').ok_or_else(err)?;
        let k: i64 = rest[1..close].parse().map_err(|_| err())?;
        rest = rest[close + 1..].strip_prefix("_q").ok_or_else(err)?;
        let mut e = 1u32;
        if let Some(r) = rest.strip_prefix('^') {
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            e = r[..end].parse().map_err(|_| err())?;
            rest = &r[end..];
        }
        if !rest.is_empty() && !rest.starts_with('[') {
            return Err(err());
        }
        acc = &acc * &q_int::<F>(k).pow(e);
    }
    Ok(acc)
}

/// Parses the expanded form written by `Display`, e.g. `q^-2 - 3 + 1/2q`.
pub fn parse_expanded<F: Field>(s: &str) -> Result<LaurentPoly<F>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || Error::Parse(format!("malformed Laurent polynomial `{s}`"));
    let mut starts = vec![0];
    for (i, c) in s.char_indices().skip(1) {
        if (c == '+' || c == '-') && !s[..i].ends_with('^') {
            starts.push(i);
        }
    }
    starts.push(s.len());
    let mut acc = LaurentPoly::zero();
    for pair in starts.windows(2) {
        let term = &s[pair[0]..pair[1]];
        let (neg, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        let (coeff, k) = match body.find('q') {
            Some(i) => {
                let k = match &body[i + 1..] {
                    "" => 1,
                    r => r.strip_prefix('^').ok_or_else(err)?.parse().map_err(|_| err())?,
                };
                let c = match &body[..i] {
                    "" => F::one(),
                    h => h.parse::<F>().map_err(|_| err())?,
                };
                (c, k)
            }
            None => (body.parse::<F>().map_err(|_| err())?, 0),
        };
        acc += &LaurentPoly::monomial(if neg { -coeff } else { coeff }, k);
    }
    Ok(acc)
}

impl<'a, R: Ring> Add<&'a LaurentPoly<R>> for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        self.merge(rhs, false)
    }
}

impl<'a, R: Ring> Sub<&'a LaurentPoly<R>> for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        self.merge(rhs, true)
    }
}

impl<'a, R: Ring> Mul<&'a LaurentPoly<R>> for &'a LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        self.mul_poly(rhs)
    }
}

impl<R: Ring> Add for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<R: Ring> Sub for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<R: Ring> Mul for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<R: Ring> Neg for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> Self {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<R: Ring> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        -self.clone()
    }
}

impl<R: Ring> AddAssign<&LaurentPoly<R>> for LaurentPoly<R> {
    fn add_assign(&mut self, rhs: &LaurentPoly<R>) {
        *self = &*self + rhs;
    }
}

impl<R: Ring> SubAssign<&LaurentPoly<R>> for LaurentPoly<R> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<R>) {
        *self = &*self - rhs;
    }
}

impl<R: Ring> Zero for LaurentPoly<R> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Ring> One for LaurentPoly<R> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<R: Ring> Default for LaurentPoly<R> {
    fn default() -> Self {
        LaurentPoly::zero()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentPoly<R> {
    /// Expanded form in ascending powers of `q`, e.g. `q^-2 + 2 + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = mag == "1";
            match *k {
                0 => f.write_str(&mag)?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{k}")?,
                _ => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring + fmt::Display> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

mod serde_impl {
    use std::collections::BTreeMap;

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::LaurentPoly;
    use crate::scalar::Field;

    /// Serialized as a map from the exponent (a decimal string) to the
    /// coefficient written as `p/q` or `p`.
    impl<F: Field> Serialize for LaurentPoly<F> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.collect_map(self.terms.iter().map(|(k, c)| (k.to_string(), c.to_string())))
        }
    }

    impl<'de, F: Field> Deserialize<'de> for LaurentPoly<F> {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let raw = BTreeMap::<String, String>::deserialize(d)?;
            let mut terms = Vec::with_capacity(raw.len());
            for (k, c) in raw {
                let k: i64 = k.parse().map_err(|_| D::Error::custom(format!("bad exponent `{k}`")))?;
                let c: F = c.parse().map_err(|_| D::Error::custom(format!("bad rational `{c}`")))?;
                terms.push((k, c));
            }
            Ok(LaurentPoly::from_terms(terms))
        }
    }
}
