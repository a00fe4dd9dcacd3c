//! Checks on elements: q-Serre, recursions, commutation, the `y^{-1}`
//! calculus, the insertion formula, and the antiautomorphism.

use super::*;
use crate::catalan::{delta_scalar, nabla_scalar};
use crate::element::insertion_sum;
use crate::series::{delta_series, nabla_series};
use crate::word::{enumerate_catalan, enumerate_words};

type R<T> = Result<T>;

fn serre(a: &E, b: &E, c: &P) -> R<E> {
    let prod = |f: [&E; 4]| -> R<E> { f[0].shuffle(f[1])?.shuffle(f[2])?.shuffle(f[3]) };
    let t1 = prod([a, a, a, b])?;
    let t2 = prod([a, a, b, a])?.scale(c);
    let t3 = prod([a, b, a, a])?.scale(c);
    let t4 = prod([b, a, a, a])?;
    Ok(&(&(&t1 - &t2) + &t3) - &t4)
}

/// Both q-Serre relations with the given middle coefficient.
pub fn check_qserre_with(cfg: &VerifyConfig, coefficient: &P) -> CheckReport {
    let mut t = Tally::new("check_qserre", cfg);
    let (x, y) = (E::x(), E::y());
    for (label, a, b) in [("x-leading", &x, &y), ("y-leading", &y, &x)] {
        let c = case(label, None, None, 2);
        if let Some(v) = t.attempt(c.clone(), serre(a, b, coefficient)) {
            t.zero(c, &v);
        }
    }
    t.finish()
}

/// `x*x*x*y - [3] x*x*y*x + [3] x*y*x*x - y*x*x*x = 0` and its mirror.
pub fn check_qserre(cfg: &VerifyConfig) -> CheckReport {
    let c = match cfg.perturbation {
        Perturbation::DropSerreFactor => P::one(),
        _ => qi(3),
    };
    check_qserre_with(cfg, &c)
}

/// The recursions for `Nabla^(m)_{n+1}` and `Delta^(m)_{n+1}` in both the
/// `(...)y` and `x(...)` forms, and `x C_n` from `x C_{n-1} y`.
pub fn check_nabla_recursion(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_nabla_recursion", cfg);
    let (x, y) = (E::x(), E::y());
    for m in cfg.m_values() {
        for n in 0..cfg.n_max {
            let d = n + 1;
            let both = |t: &mut Tally, label_x, label_y, cur: R<E>, next: R<E>| {
                let c = case(label_x, Some(m), Some(n), d);
                let (Some(cur), Some(next)) = (t.attempt(c.clone(), cur), t.attempt(c.clone(), next))
                else {
                    return;
                };
                if let Some(v) = t.attempt(c.clone(), cur.commutator_x(m).and_then(|u| u.free_mul(&y))) {
                    t.elements(c, &next, &v);
                }
                let c = case(label_y, Some(m), Some(n), d);
                if let Some(v) = t.attempt(c.clone(), cur.commutator_y(m).and_then(|u| x.free_mul(&u))) {
                    t.elements(c, &next, &v);
                }
            };
            if n >= 1 {
                both(&mut t, "nabla x-form", "nabla y-form", nabla(m, n), nabla(m, n + 1));
            }
            both(&mut t, "delta x-form", "delta y-form", delta(m, n), delta(m, n + 1));
        }
    }
    for n in 1..=cfg.n_max {
        let c = case("xC_n from xC_{n-1}y", Some(0), Some(n), n);
        let lhs = x.free_mul(&named(crate::catalan::Named::C, n).unwrap());
        let rhs = xcy(n).and_then(|u| u.commutator_x(0));
        if let (Some(l), Some(r)) = (t.attempt(c.clone(), lhs), t.attempt(c.clone(), rhs)) {
            t.elements(c, &l, &r);
        }
    }
    t.finish()
}

/// `xy` commutes with every `Nabla^(m)_n`; the `Nabla^(0)_n` commute with one
/// another; all `Delta^(m)_n` and `Nabla^(m)_n` of total degree at most
/// `n_max` commute pairwise.
pub fn check_commutation(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_commutation", cfg);
    let xy = E::parse_word("xy").unwrap();
    let mut family: Vec<(i64, usize, E)> = Vec::new();
    for m in cfg.m_values() {
        for n in 1..=cfg.n_max {
            let c = case("xy commutes with nabla", Some(m), Some(n), n + 1);
            let Some(u) = t.attempt(c.clone(), nabla(m, n)) else { continue };
            if let Some(v) = t.attempt(c.clone(), xy.shuffle_commutator(&u)) {
                t.zero(c, &v);
            }
            family.push((m, n, u));
            if let Some(d) = t.attempt(case("delta", Some(m), Some(n), n), delta(m, n)) {
                family.push((m, n, d));
            }
        }
    }
    for a in 1..=cfg.n_max {
        for b in a + 1..=cfg.n_max - a {
            let c = case("nabla^(0) pairwise", Some(0), Some(a), a + b);
            let v = nabla(0, a).and_then(|u| u.shuffle_commutator(&nabla(0, b)?));
            if let Some(v) = t.attempt(c.clone(), v) {
                t.zero(c, &v);
            }
        }
    }
    for (i, (m1, n1, u)) in family.iter().enumerate() {
        for (_, n2, v) in &family[i + 1..] {
            if n1 + n2 > cfg.n_max {
                continue;
            }
            let c = case("delta/nabla pairwise", Some(*m1), Some(*n1), n1 + n2);
            if let Some(d) = t.attempt(c.clone(), u.shuffle_commutator(v)) {
                t.zero(c, &d);
            }
        }
    }
    t.finish()
}

/// `u y^{-1} * xy - xy * u y^{-1}`.
fn xy_bracket(u: &E) -> R<E> {
    let xy = E::parse_word("xy").unwrap();
    let uy = u.y_inverse();
    Ok(&uy.shuffle(&xy)? - &xy.shuffle(&uy)?)
}

/// The identities for the truncation `y^{-1}` and its mirror `x^{-1}`.
pub fn check_yinv_calculus(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_yinv_calculus", cfg);

    // Leibniz rule on balanced words
    let mut balanced = Vec::new();
    for len in [0, 2, 4] {
        balanced.extend(enumerate_words(len).unwrap().into_iter().filter(Word::is_balanced));
    }
    for v in &balanced {
        for w in &balanced {
            let (ev, ew) = (E::word(*v), E::word(*w));
            let c = case("Leibniz", None, None, (v.len() + w.len()) / 2);
            let lhs = ev.shuffle(&ew).map(|p| p.y_inverse());
            let rhs = ev
                .y_inverse()
                .shuffle(&ew)
                .and_then(|a| Ok(&a + &ev.shuffle(&ew.y_inverse())?));
            if let (Some(l), Some(r)) = (t.attempt(c.clone(), lhs), t.attempt(c.clone(), rhs)) {
                t.elements(c, &l, &r);
            }
        }
    }

    let nab0: Vec<E> = (1..=cfg.n_max).map(|n| nabla(0, n).unwrap()).collect();
    let n0 = |n: usize| &nab0[n - 1];

    for m in cfg.m_values() {
        for n in 1..=cfg.n_max {
            for (label, u) in [("x commutator of nabla", nabla(m, n)), ("x commutator of delta", delta(m, n))] {
                let c = case(label, Some(m), Some(n), n + 1);
                let Some(u) = t.attempt(c.clone(), u) else { continue };
                let lhs = x_bracket(&u);
                if let (Some(l), Some(r)) = (t.attempt(c.clone(), lhs), t.attempt(c.clone(), xy_bracket(&u))) {
                    t.elements(c, &l, &r);
                }
            }
        }
    }

    for n in 1..cfg.n_max {
        let lhs = n0(n + 1).y_inverse();
        let c = case("nabla^(0) y^-1 from x", Some(0), Some(n), n + 1);
        if let Some(r) = t.attempt(c.clone(), x_bracket(n0(n)).and_then(|u| u.div_q_minus_qinv())) {
            t.elements(c, &lhs, &r);
        }
        let c = case("nabla^(0) y^-1 from xy", Some(0), Some(n), n + 1);
        if let Some(r) = t.attempt(c.clone(), xy_bracket(n0(n)).and_then(|u| u.div_q_minus_qinv())) {
            t.elements(c, &lhs, &r);
        }
    }

    for n in 1..cfg.n_max {
        for k in 1..=cfg.n_max - n {
            let c = case("nabla^(0)_{n+k} y^-1", Some(0), Some(n), n + k);
            let lhs = n0(n + k).y_inverse();
            let ny = n0(n).y_inverse();
            let rhs = ny
                .shuffle(n0(k))
                .and_then(|a| Ok(&a - &n0(k).shuffle(&ny)?))
                .and_then(|d| d.div_q_minus_qinv());
            if let Some(r) = t.attempt(c.clone(), rhs) {
                t.elements(c, &lhs, &r);
            }
        }
    }

    for m in cfg.m_values() {
        let deltas: Vec<E> = (0..=cfg.n_max).map(|n| delta(m, n).unwrap()).collect();
        for n in 0..cfg.n_max {
            let lhs = deltas[n + 1].y_inverse();
            let mut left = E::zero();
            let mut right = E::zero();
            let c = case("delta_{n+1} y^-1 sums", Some(m), Some(n), n + 1);
            let mut ok = true;
            for k in 0..=n {
                let ny = n0(k + 1).y_inverse();
                match (ny.shuffle(&deltas[n - k]), deltas[n - k].shuffle(&ny)) {
                    (Ok(a), Ok(b)) => {
                        left = &left + &a.scale(&qp(-m * k as i64));
                        right = &right + &b.scale(&qp(m * k as i64));
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        t.attempt::<()>(c.clone(), Err(e));
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                t.elements(case("delta_{n+1} y^-1 left sum", Some(m), Some(n), n + 1), &lhs, &left.scale(&qi(m)));
                t.elements(case("delta_{n+1} y^-1 right sum", Some(m), Some(n), n + 1), &lhs, &right.scale(&qi(m)));
            }
        }
    }

    // series forms
    let cutoff = cfg.cutoff;
    let nab_series = nabla_series::<Rational>(0, cutoff).unwrap();
    for m in cfg.m_values() {
        let c = case("series", Some(m), None, 0);
        let Some(d) = t.attempt(c.clone(), delta_series::<Rational>(m, cutoff)) else { continue };
        let n_minus = nab_series.rescale_t(&qp(-m));
        let n_plus = nab_series.rescale_t(&qp(m));
        let pref_up = &qp(m) * &qi(m);
        let pref_down = &qp(-m) * &qi(m);
        let dy = d.apply_y_inverse();
        let xd = d.apply_x_inverse();
        let forms: [(&'static str, &S, R<S>); 4] = [
            ("delta(t) y^-1 left", &dy, n_minus.apply_y_inverse().star_mul(&d).map(|s| s.scale(&pref_up))),
            ("delta(t) y^-1 right", &dy, d.star_mul(&n_plus.apply_y_inverse()).map(|s| s.scale(&pref_down))),
            ("x^-1 delta(t) right", &xd, d.star_mul(&n_minus.apply_x_inverse()).map(|s| s.scale(&pref_up))),
            ("x^-1 delta(t) left", &xd, n_plus.apply_x_inverse().star_mul(&d).map(|s| s.scale(&pref_down))),
        ];
        for (label, lhs, rhs) in forms {
            if let Some(r) = t.attempt(case(label, Some(m), None, 0), rhs) {
                t.series(label, Some(m), lhs, &r);
            }
        }
    }
    t.finish()
}

/// `x * u - u * x`, without q-power weights or division.
fn x_bracket(u: &E) -> R<E> {
    E::x().shuffle_commutator(u)
}

/// The x-commutator of each Catalan word against its insertion expansion.
pub fn check_insertion(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_insertion", cfg);
    for n in 0..=cfg.n_max {
        let words = enumerate_catalan(n).unwrap();
        for m in cfg.m_values() {
            for w in &words {
                let c = case("insertion formula", Some(m), Some(n), n);
                let lhs = E::word(*w).commutator_x(m);
                let rhs = insertion_sum::<Rational>(m, w);
                if let (Some(l), Some(r)) = (t.attempt(c.clone(), lhs), t.attempt(c.clone(), rhs)) {
                    t.elements(c, &l, &r);
                }
            }
        }
    }
    t.finish()
}

/// Reverse-and-swap: invariance of the scalars and elements, the
/// antiautomorphism property for both products, and `zeta(u y^-1) = x^-1 zeta(u)`.
pub fn check_zeta_suite(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_zeta_suite", cfg);
    for n in 0..=cfg.n_max {
        let words = enumerate_catalan(n).unwrap();
        for w in &words {
            t.holds(case("zeta preserves Catalan", None, Some(n), n), w, w.zeta().is_catalan());
        }
        for m in cfg.m_values() {
            for w in &words {
                let z = w.zeta();
                let c = case("delta scalar zeta-invariant", Some(m), Some(n), n);
                t.scalars(c, w, &delta_scalar(m, w).unwrap(), &delta_scalar(m, &z).unwrap());
                if n >= 1 {
                    let c = case("nabla scalar zeta-invariant", Some(m), Some(n), n);
                    t.scalars(c, w, &nabla_scalar(m, w).unwrap(), &nabla_scalar(m, &z).unwrap());
                }
            }
            let d = delta(m, n).unwrap();
            t.elements(case("zeta fixes delta", Some(m), Some(n), n), &d.zeta(), &d);
            if n >= 1 {
                let u = nabla(m, n).unwrap();
                t.elements(case("zeta fixes nabla", Some(m), Some(n), n), &u.zeta(), &u);
            }
        }
    }

    let mut small = Vec::new();
    for len in 0..=3 {
        small.extend(enumerate_words(len).unwrap());
    }
    for u in &small {
        let eu = E::word(*u);
        t.elements(case("zeta is an involution", None, None, u.len()), &eu.zeta().zeta(), &eu);
        for v in &small {
            let ev = E::word(*v);
            let deg = u.len() + v.len();
            let c = case("zeta reverses shuffle", None, None, deg);
            let lhs = eu.shuffle(&ev).map(|p| p.zeta());
            let rhs = ev.zeta().shuffle(&eu.zeta());
            if let (Some(l), Some(r)) = (t.attempt(c.clone(), lhs), t.attempt(c.clone(), rhs)) {
                t.elements(c, &l, &r);
            }
            let c = case("zeta reverses concatenation", None, None, deg);
            let lhs = eu.free_mul(&ev).map(|p| p.zeta());
            let rhs = ev.zeta().free_mul(&eu.zeta());
            if let (Some(l), Some(r)) = (t.attempt(c.clone(), lhs), t.attempt(c.clone(), rhs)) {
                t.elements(c, &l, &r);
            }
        }
    }

    let mut sample: Vec<(usize, E)> = Vec::new();
    for len in 0..=6 {
        for w in enumerate_words(len).unwrap() {
            sample.push((len, E::word(w)));
        }
    }
    for n in 0..=cfg.n_max {
        sample.push((2 * n, named(crate::catalan::Named::D, n).unwrap()));
        sample.push((2 * n, named(crate::catalan::Named::C, n).unwrap()));
    }
    for (len, u) in &sample {
        let c = case("zeta(u y^-1) = x^-1 zeta(u)", None, None, *len);
        t.elements(c, &u.y_inverse().zeta(), &u.zeta().x_inverse());
    }
    t.finish()
}
