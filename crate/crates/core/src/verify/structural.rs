//! Checks that need only words and scalars: the reference tables and
//! expansions, q-integer identities, Dyck-path counting, Catalan closure,
//! the profile formulas, and the relations among the scalar families.

use super::golden::{C_EXPANSIONS, DELTA_TABLE, D_EXPANSIONS, NABLA_TABLE, TABLE_M};
use super::*;
use crate::catalan::{
    delta_scalar, nabla_from_profile, nabla_scalar, nabla_split, vanishing_bound, Named, ScalarTable,
};
use crate::laurent::parse_bracket;
use crate::word::{alternating_word, enumerate_catalan, enumerate_words, Alternating};

/// The computed tables for words of length at most 6 and `m = -3..=3`
/// against the reference values, row order included.
pub fn check_golden_tables(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_golden_tables", cfg);
    let perturbed = cfg.perturbation.table_entry();
    for (family, golden) in [(Family::Delta, DELTA_TABLE), (Family::Nabla, NABLA_TABLE)] {
        let c = case("table", None, None, 0);
        let Some(table) = t.attempt(c, ScalarTable::<Rational>::build(family, TABLE_M[0], TABLE_M[6], 3))
        else {
            continue;
        };
        let label = match family {
            Family::Delta => "delta table",
            Family::Nabla => "nabla table",
        };
        t.cases += 1;
        if table.rows.len() != golden.len() {
            let c = case(label, None, None, 0);
            t.fail(&c, None, Some(format!("{} rows, expected {}", table.rows.len(), golden.len())));
            continue;
        }
        for ((w, vals), (gw, gvals)) in table.rows.iter().zip(golden) {
            let gword = Word::parse(gw).unwrap();
            t.holds(case("row order", None, None, w.len() / 2), &gword, *w == gword);
            for ((m, v), g) in TABLE_M.iter().zip(vals).zip(gvals) {
                let mut v = v.clone();
                if perturbed == Some((family, *w, *m)) {
                    v = &v + &P::one();
                }
                let c = case(label, Some(*m), None, w.len() / 2);
                t.scalars(c, w, &v, &parse_bracket(g).unwrap());
            }
        }
    }
    t.finish()
}

/// `C_0..C_3` and `D_0..D_3` against their displayed expansions.
pub fn check_examples(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_examples", cfg);
    for n in 0..4 {
        let c_ref = E::parse_expansion(C_EXPANSIONS[n]).unwrap();
        let d_ref = E::parse_expansion(D_EXPANSIONS[n]).unwrap();
        let c = case("C_n closed form", Some(2), Some(n), n);
        if let Some(v) = t.attempt(c.clone(), named(Named::C, n)) {
            t.elements(c, &v, &c_ref);
        }
        let c = case("C_n as delta^(2)_n", Some(2), Some(n), n);
        if let Some(v) = t.attempt(c.clone(), delta(2, n)) {
            t.elements(c, &v, &c_ref);
        }
        let c = case("D_n closed form", None, Some(n), n);
        if let Some(v) = t.attempt(c.clone(), named(Named::D, n)) {
            t.elements(c, &v, &d_ref);
        }
    }
    t.finish()
}

/// The four q-integer identities on `-r..=r` grids, antisymmetry, and the
/// bar-invariance of `[n]_q`. Computed with integer coefficients.
pub fn check_qint_identities(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_qint_identities", cfg);
    let r = cfg.qint_range;
    let span = 4 * r + 1;
    let table: Vec<LaurentPoly<i64>> = (-span..=span).map(crate::laurent::q_int::<i64>).collect();
    let b = |k: i64| &table[(k + span) as usize];
    let check = |t: &mut Tally, label: &'static str, lhs: LaurentPoly<i64>, rhs: LaurentPoly<i64>| {
        t.cases += 1;
        if lhs != rhs {
            let diff = &lhs - &rhs;
            let p = P::from_terms(diff.terms().iter().map(|(k, c)| (*k, Rational::from_integer((*c).into()))));
            t.fail(&case(label, None, None, 0), Some(E::term(Word::empty(), p)), None);
        }
    };
    for n in -r..=r {
        check(&mut t, "antisymmetry", b(-n).clone(), -b(n));
        check(&mut t, "bar invariance", b(n).bar(), b(n).clone());
    }
    let zero = LaurentPoly::<i64>::zero();
    for a in -r..=r {
        for bb in -r..=r {
            for c in -r..=r {
                let lhs = &(b(a + c) * b(bb + c)) - &(b(a) * b(bb));
                check(&mut t, "identity (i)", lhs, b(c) * b(a + bb + c));
                let lhs = &(&(b(a) * b(bb - c)) + &(b(bb) * b(c - a))) + &(b(c) * b(a - bb));
                check(&mut t, "identity (ii)", lhs, zero.clone());
                for d in -r..=r {
                    let mut sum = &(b(a) * b(bb)) * b(c - d);
                    sum += &(&(b(bb) * b(c)) * b(d - a));
                    sum += &(&(b(c) * b(d)) * b(a - bb));
                    sum += &(&(b(d) * b(a)) * b(bb - c));
                    check(&mut t, "identity (iii)", sum, zero.clone());
                    let mut lhs = &(b(a) * b(bb)) * b(a - bb);
                    lhs += &(&(b(bb) * b(c)) * b(bb - c));
                    lhs += &(&(b(c) * b(d)) * b(c - d));
                    lhs += &(&(b(d) * b(a)) * b(d - a));
                    let rhs = &(b(a - c) * b(bb - d)) * b(a + c - bb - d);
                    check(&mut t, "identity (iv)", lhs, rhs);
                }
            }
        }
    }
    t.finish()
}

/// For balanced words of length at most 8 and every level `k`: the number
/// of `x` steps arriving at `k` equals the number of `y` steps leaving `k`.
pub fn check_rise_fall(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_rise_fall", cfg);
    for len in (0..=8).step_by(2) {
        for w in enumerate_words(len).unwrap().into_iter().filter(Word::is_balanced) {
            let e = w.elevation_sequence();
            let letters: Vec<_> = w.letters().collect();
            let (lo, hi) = (*e.iter().min().unwrap(), *e.iter().max().unwrap());
            for k in lo..=hi {
                let rises = (0..len).filter(|&i| letters[i] == crate::Letter::X && e[i + 1] == k).count();
                let falls = (0..len).filter(|&i| letters[i] == crate::Letter::Y && e[i] == k).count();
                let c = case("rise and fall counts", None, None, len / 2);
                t.scalars(c, &w, &int(rises as i64), &int(falls as i64));
            }
        }
    }
    t.finish()
}

/// Products of Catalan words are supported on Catalan words of the summed
/// length.
pub fn check_catalan_closure(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_catalan_closure", cfg);
    let top = cfg.n_max.max(4);
    for a in 1..top {
        for b in 1..=top - a {
            let (va, vb) = (enumerate_catalan(a).unwrap(), enumerate_catalan(b).unwrap());
            for v in &va {
                for w in &vb {
                    let c = case("Catalan support", None, Some(a), a + b);
                    let Some(p) = t.attempt(c.clone(), E::word(*v).shuffle(&E::word(*w))) else { continue };
                    let stray = p.map_words(|u| (!u.is_catalan() || u.len() != 2 * (a + b)).then_some(*u));
                    t.zero(c, &stray);
                }
            }
        }
    }
    t.finish()
}

/// The profile formula written as a sum over the last valleys, for every
/// Catalan word of length `4..=2 n_max`.
pub fn check_telescoping(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_telescoping", cfg);
    for n in 2..=cfg.n_max {
        for w in enumerate_catalan(n).unwrap() {
            let p = w.profile();
            let e = p.entries();
            let r = e.len() / 2;
            let xi = (0..r).filter(|&j| e[2 * j] == 0).max().unwrap();
            for m in cfg.m_values() {
                let c = case("telescoping", Some(m), Some(n), n);
                let lhs = nabla_from_profile::<Rational>(m, e);
                let rhs = (|| -> Result<P> {
                    let mut acc = P::zero();
                    for j in xi..r {
                        let mut shifted = e.to_vec();
                        for v in &mut shifted[2 * j + 1..2 * r] {
                            *v -= 1;
                        }
                        let (h, l) = (e[2 * j + 1], e[2 * j]);
                        let weight = &(&qi(h) * &qi(h + m - 1)) - &(&qi(l) * &qi(l + m - 1));
                        acc = &acc + &(&nabla_from_profile::<Rational>(m, &shifted)? * &weight);
                    }
                    Ok(acc)
                })();
                if let (Some(l), Some(rr)) = (t.attempt(c.clone(), lhs), t.attempt(c.clone(), rhs)) {
                    t.scalars(c, &w, &l, &rr);
                }
            }
        }
    }
    t.finish()
}

/// Relations among the scalar families and the elements built from them.
pub fn check_delta_nabla(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_delta_nabla", cfg);
    for n in 0..=cfg.n_max {
        let words = enumerate_catalan(n).unwrap();
        for m in cfg.m_values() {
            for w in &words {
                let dw = delta_scalar::<Rational>(m, w).unwrap();
                if m <= -1 {
                    let c = case("vanishing criterion", Some(m), Some(n), n);
                    t.holds(c, w, vanishing_bound(m, w).unwrap() == !dw.is_zero());
                }
                if n == 0 {
                    continue;
                }
                let nw = nabla_scalar::<Rational>(m, w).unwrap();
                t.scalars(case("delta = [m] nabla on words", Some(m), Some(n), n), w, &dw, &(&qi(m) * &nw));
                let (nx, ny) = nabla_split::<Rational>(m, w).unwrap();
                t.scalars(case("nabla = nabla_x nabla_y", Some(m), Some(n), n), w, &nw, &(&nx * &ny));
                let (nx1, _) = nabla_split::<Rational>(1, w).unwrap();
                t.scalars(case("nabla_y = nabla_x^(1)", Some(m), Some(n), n), w, &ny, &nx1);
                t.scalars(case("nabla = nabla_x nabla_x^(1)", Some(m), Some(n), n), w, &nw, &(&nx * &nx1));
                let c = case("profile formula", Some(m), Some(n), n);
                if let Some(pv) = t.attempt(c.clone(), nabla_from_profile(m, w.profile().entries())) {
                    t.scalars(c, w, &nw, &pv);
                }
            }
            let d = delta(m, n).unwrap();
            if n == 0 {
                t.elements(case("delta_0 = 1", Some(m), Some(0), 0), &d, &E::one());
                continue;
            }
            let nb = nabla(m, n).unwrap();
            t.elements(case("delta_n = [m] nabla_n", Some(m), Some(n), n), &d, &nb.scale(&qi(m)));
            if n == 1 {
                t.elements(case("nabla_1 = xy", Some(m), Some(1), 1), &nb, &E::parse_word("xy").unwrap());
            }
        }
        let sgn = if n % 2 == 0 { 1 } else { -1 };
        let c = case("delta^(0)_n", Some(0), Some(n), n);
        t.elements(c, &delta(0, n).unwrap(), &if n == 0 { E::one() } else { E::zero() });
        let c = case("delta^(2)_n = C_n", Some(2), Some(n), n);
        t.elements(c, &delta(2, n).unwrap(), &named(Named::C, n).unwrap());
        let g = E::word(alternating_word(Alternating::GTilde, n).unwrap()).scale(&int(sgn));
        t.elements(case("delta^(-1)_n = (-1)^n Gtilde_n", Some(-1), Some(n), n), &delta(-1, n).unwrap(), &g);
        let dn = named(Named::D, n).unwrap().scale(&int(sgn));
        t.elements(case("delta^(1)_n = (-1)^n D_n", Some(1), Some(n), n), &delta(1, n).unwrap(), &dn);
        if n >= 1 {
            let c = case("nabla^(0)_n = x C_{n-1} y", Some(0), Some(n), n);
            t.elements(c, &nabla(0, n).unwrap(), &xcy(n).unwrap());
        }
    }
    t.finish()
}
