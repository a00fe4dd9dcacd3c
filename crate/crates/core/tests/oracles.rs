//! Independent re-implementations compared against the library.
//!
//! The oracles here use their own integer Laurent polynomials (exponent to
//! coefficient maps) and string words, so they share no code with the
//! library's kernel.

use std::collections::BTreeMap;

use qshuffle::catalan::{delta_scalar, nabla_scalar, named_element, Named};
use qshuffle::word::enumerate_words;
use qshuffle::{enumerate_catalan, QElement, QPoly, Rational, Word};

type Poly = BTreeMap<i64, i64>;
type Expansion = BTreeMap<String, Poly>;

fn add_into(acc: &mut Poly, p: &Poly, shift: i64) {
    for (k, c) in p {
        *acc.entry(k + shift).or_insert(0) += c;
    }
    acc.retain(|_, c| *c != 0);
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (i, c) in a {
        for (j, d) in b {
            *out.entry(i + j).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn monomial(k: i64) -> Poly {
    Poly::from([(k, 1)])
}

/// `[n]_q` summed term by term.
fn qint(n: i64) -> Poly {
    let mut p = Poly::new();
    if n >= 0 {
        for i in 0..n {
            add_into(&mut p, &monomial(n - 1 - 2 * i), 0);
        }
    } else {
        for (k, c) in qint(-n) {
            p.insert(k, -c);
        }
    }
    p
}

fn pairing(a: char, b: char) -> i64 {
    if a == b {
        2
    } else {
        -2
    }
}

fn to_poly(p: &QPoly) -> Poly {
    p.terms()
        .iter()
        .map(|(k, c)| {
            assert!(c.is_integer(), "non-integral coefficient");
            (*k, c.to_integer().try_into().unwrap())
        })
        .collect()
}

fn to_expansion(e: &QElement) -> Expansion {
    e.iter().map(|(w, c)| (w.to_ascii(), to_poly(c))).collect()
}

/// Sum over every placement of the letters of `u` among `|u| + |v|`
/// positions; each pair with a letter of `v` before a letter of `u`
/// contributes their pairing to the exponent.
fn shuffle_brute(u: &str, v: &str) -> Expansion {
    let (u, v): (Vec<char>, Vec<char>) = (u.chars().collect(), v.chars().collect());
    let n = u.len() + v.len();
    let mut out = Expansion::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != u.len() {
            continue;
        }
        let (mut word, mut exp, mut seen_v) = (String::new(), 0, Vec::new());
        let (mut iu, mut iv) = (0, 0);
        for pos in 0..n {
            if mask & (1 << pos) != 0 {
                exp += seen_v.iter().map(|&b| pairing(u[iu], b)).sum::<i64>();
                word.push(u[iu]);
                iu += 1;
            } else {
                seen_v.push(v[iv]);
                word.push(v[iv]);
                iv += 1;
            }
        }
        add_into(out.entry(word).or_default(), &monomial(exp), 0);
    }
    out.retain(|_, p| !p.is_empty());
    out
}

/// The right recursion: the last letter of the product comes from `u`
/// (after all of `v`) or from `v`.
fn shuffle_right(u: &str, v: &str) -> Expansion {
    if u.is_empty() || v.is_empty() {
        return Expansion::from([(format!("{u}{v}"), monomial(0))]);
    }
    let (ur, us) = u.split_at(u.len() - 1);
    let (vr, vs) = v.split_at(v.len() - 1);
    let a = us.chars().next().unwrap();
    let b = vs.chars().next().unwrap();
    let exp: i64 = v.chars().map(|c| pairing(a, c)).sum();
    let mut out = Expansion::new();
    for (w, p) in shuffle_right(ur, v) {
        add_into(out.entry(format!("{w}{a}")).or_default(), &p, exp);
    }
    for (w, p) in shuffle_right(u, vr) {
        add_into(out.entry(format!("{w}{b}")).or_default(), &p, 0);
    }
    out.retain(|_, p| !p.is_empty());
    out
}

fn words_up_to(len: usize) -> Vec<Word> {
    (0..=len).flat_map(|l| enumerate_words(l).unwrap()).collect()
}

fn library_shuffle(u: &Word, v: &Word) -> Expansion {
    to_expansion(&QElement::word(*u).shuffle(&QElement::word(*v)).unwrap())
}

#[test]
fn shuffle_agrees_with_brute_force() {
    let words = words_up_to(4);
    for u in &words {
        for v in &words {
            let lib = library_shuffle(u, v);
            assert_eq!(lib, shuffle_brute(&u.to_ascii(), &v.to_ascii()), "{u} * {v}");
        }
    }
}

#[test]
fn shuffle_agrees_with_right_recursion() {
    let words = words_up_to(5);
    for u in &words {
        for v in words.iter().filter(|v| u.len() + v.len() <= 8) {
            let lib = library_shuffle(u, v);
            assert_eq!(lib, shuffle_right(&u.to_ascii(), &v.to_ascii()), "{u} * {v}");
        }
    }
}

#[test]
fn letter_products() {
    let x = QElement::x();
    let y = QElement::y();
    let xy = to_expansion(&x.shuffle(&y).unwrap());
    assert_eq!(xy, Expansion::from([("xy".into(), monomial(0)), ("yx".into(), monomial(-2))]));
    let xx = to_expansion(&x.shuffle(&x).unwrap());
    let mut two = monomial(0);
    add_into(&mut two, &monomial(2), 0);
    assert_eq!(xx, Expansion::from([("xx".into(), two)]));
}

fn elevations(w: &str) -> Vec<i64> {
    let mut e = vec![0];
    for c in w.chars() {
        e.push(e.last().unwrap() + if c == 'x' { 1 } else { -1 });
    }
    e
}

/// Product over all letters of `[e_{i-1} + m rise(a_i)]`.
fn delta_oracle(m: i64, w: &str) -> Poly {
    let e = elevations(w);
    w.chars().enumerate().fold(monomial(0), |acc, (i, c)| {
        let rise = (c == 'x') as i64;
        mul(&acc, &qint(e[i] + m * rise))
    })
}

fn nabla_oracle(m: i64, w: &str) -> Poly {
    let e = elevations(w);
    w.chars().enumerate().skip(1).fold(monomial(0), |acc, (i, c)| {
        let rise = (c == 'x') as i64;
        mul(&acc, &qint(e[i] + m * rise))
    })
}

#[test]
fn scalars_agree_with_oracle() {
    for n in 0..=5 {
        for w in enumerate_catalan(n).unwrap() {
            for m in -4..=4 {
                let d = delta_scalar::<Rational>(m, &w).unwrap();
                assert_eq!(to_poly(&d), delta_oracle(m, &w.to_ascii()), "delta {m} {w}");
                if n > 0 {
                    let nb = nabla_scalar::<Rational>(m, &w).unwrap();
                    assert_eq!(to_poly(&nb), nabla_oracle(m, &w.to_ascii()), "nabla {m} {w}");
                }
            }
        }
    }
}

fn is_catalan(w: &str) -> bool {
    let e = elevations(w);
    e.iter().all(|&h| h >= 0) && *e.last().unwrap() == 0
}

#[test]
fn catalan_enumeration_matches_filter() {
    let catalan = [1, 1, 2, 5, 14, 42, 132];
    for (n, &count) in catalan.iter().enumerate() {
        let brute: Vec<String> = enumerate_words(2 * n)
            .unwrap()
            .iter()
            .map(Word::to_ascii)
            .filter(|w| is_catalan(w))
            .collect();
        assert_eq!(brute.len(), count);
        let mut lib: Vec<String> = enumerate_catalan(n).unwrap().iter().map(Word::to_ascii).collect();
        lib.sort();
        let mut brute = brute;
        brute.sort();
        assert_eq!(lib, brute);
    }
}

#[test]
fn named_families_agree_with_oracle() {
    for n in 0..=4 {
        let c = to_expansion(&named_element::<Rational>(Named::C, n).unwrap());
        let d = to_expansion(&named_element::<Rational>(Named::D, n).unwrap());
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let (mut c_ref, mut d_ref) = (Expansion::new(), Expansion::new());
        for w in enumerate_catalan(n).unwrap() {
            let s = w.to_ascii();
            let e = elevations(&s);
            let cw = (1..=2 * n).fold(monomial(0), |acc, i| mul(&acc, &qint(1 + e[i])));
            c_ref.insert(s.clone(), cw);
            let dw: Poly = delta_oracle(1, &s).into_iter().map(|(k, v)| (k, sign * v)).collect();
            d_ref.insert(s, dw);
        }
        assert_eq!(c, c_ref, "C_{n}");
        assert_eq!(d, d_ref, "D_{n}");
    }
}
