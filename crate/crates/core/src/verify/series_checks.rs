//! Checks on generating functions: inversion, the exponential formulas, the
//! factorization identities, the differential equation, and integrality.

use super::*;
use crate::catalan::Named;
use crate::series::{delta_series, named_series, nabla_series};

/// A coefficient sequence indexed by degree.
type Weight = Box<dyn Fn(i64) -> P>;

type R<T> = Result<T>;

/// `sum_{n=1}^{cutoff} c(n) u_n t^n`.
fn weighted(cutoff: usize, c: impl Fn(i64) -> P, u: impl Fn(usize) -> R<E>) -> R<S> {
    S::from_fn(cutoff, |n| {
        if n == 0 {
            Ok(E::zero())
        } else {
            Ok(u(n)?.scale(&c(n as i64)))
        }
    })
}

/// `sum_n ([mn]_q / n) Nabla^(0)_n t^n`.
fn exponent_series(m: i64, cutoff: usize) -> R<S> {
    weighted(cutoff, |n| qi(m * n).scale(&Rational::from_integer(n.into()).recip()), |n| nabla(0, n))
}

/// `sum_n c(n) x C_{n-1} y t^n` with rational weights `c(n) / n`.
fn xcy_series(cutoff: usize, c: impl Fn(i64) -> P) -> R<S> {
    weighted(cutoff, |n| c(n).scale(&Rational::from_integer(n.into()).recip()), xcy)
}

fn sign(n: i64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `D(t)` as the inverse of `G~(t)` against the closed form and against
/// `Delta^(1)(-t)`.
pub fn check_series_inversion(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_series_inversion", cfg);
    let n = cfg.cutoff;
    let c = case("setup", None, None, 0);
    let (Some(g), Some(d)) = (
        t.attempt(c.clone(), named_series::<Rational>(Named::GTilde, n)),
        t.attempt(c.clone(), named_series::<Rational>(Named::D, n)),
    ) else {
        return t.finish();
    };
    let one = S::one(n);
    if let Some(inv) = t.attempt(case("inverse", None, None, 0), g.inverse()) {
        t.series("inverse of Gtilde vs closed form", None, &inv, &d);
        if let Some(d1) = t.attempt(case("delta^(1)", Some(1), None, 0), delta_series::<Rational>(1, n)) {
            t.series("inverse of Gtilde vs delta^(1)(-t)", Some(1), &inv, &d1.rescale_t(&int(-1)));
        }
    }
    if let Some(p) = t.attempt(case("Gtilde * D", None, None, 0), g.star_mul(&d)) {
        t.series("Gtilde * D = 1", None, &p, &one);
    }
    if let Some(p) = t.attempt(case("D * Gtilde", None, None, 0), d.star_mul(&g)) {
        t.series("D * Gtilde = 1", None, &p, &one);
    }
    t.finish()
}

/// `Delta^(m)(t) = exp(sum_n [mn]_q/n Nabla^(0)_n t^n)`, through `exp` and
/// through `log`, and `Delta^(-m)(t) * Delta^(m)(t) = 1`.
pub fn check_exp_theorem(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_exp_theorem", cfg);
    let n = cfg.cutoff;
    for m in cfg.m_values() {
        let c = case("setup", Some(m), None, 0);
        let (Some(d), Some(dm), Some(l)) = (
            t.attempt(c.clone(), delta_series::<Rational>(m, n)),
            t.attempt(c.clone(), delta_series::<Rational>(-m, n)),
            t.attempt(c.clone(), exponent_series(m, n)),
        ) else {
            continue;
        };
        if let Some(e) = t.attempt(case("exp", Some(m), None, 0), l.exp()) {
            t.series("delta^(m)(t) = exp(...)", Some(m), &d, &e);
        }
        if let Some(lg) = t.attempt(case("log", Some(m), None, 0), d.log()) {
            t.series("log delta^(m)(t) = exponent", Some(m), &lg, &l);
        }
        if let Some(p) = t.attempt(case("inverse pair", Some(m), None, 0), dm.star_mul(&d)) {
            t.series("delta^(-m) * delta^(m) = 1", Some(m), &p, &S::one(n));
        }
    }
    t.finish()
}

/// `sum_{j=0}^{m-1} (q^n)^{m-1-2j}` and `(q^{mn} - q^{-mn}) / (q^n - q^{-n})`.
fn geometric_sides(m: i64, n: i64) -> (P, R<P>) {
    let mut sum = P::zero();
    for j in 0..m {
        sum = &sum + &qp(n * (m - 1 - 2 * j));
    }
    let num = &qp(m * n) - &qp(-m * n);
    let den = &qp(n) - &qp(-n);
    (sum, num.div_exact(&den))
}

fn rescaled_product(base: &S, m: i64) -> R<S> {
    let mut acc = S::one(base.cutoff());
    for j in 0..m {
        acc = acc.star_mul(&base.rescale_t(&-qp(m - 1 - 2 * j)))?;
    }
    Ok(acc)
}

/// The `m`-fold factorizations of `Delta^(-m)(t)` through `G~` and of
/// `Delta^(m)(t)` through `D`, against the exponential forms, and the scalar
/// identity behind them.
pub fn check_main_theorems(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_main_theorems", cfg);
    let n = cfg.main_cutoff();
    if cfg.main_m_max >= 1 {
        let c = case("setup", None, None, 0);
        let (Some(g), Some(d)) = (
            t.attempt(c.clone(), named_series::<Rational>(Named::GTilde, n)),
            t.attempt(c.clone(), named_series::<Rational>(Named::D, n)),
        ) else {
            return t.finish();
        };
        for m in 1..=cfg.main_m_max {
            let c = case("setup", Some(m), None, 0);
            let Some(l) = t.attempt(c.clone(), exponent_series(m, n)) else { continue };
            let gp = t.attempt(case("Gtilde product", Some(m), None, 0), rescaled_product(&g, m));
            let dp = t.attempt(case("D product", Some(m), None, 0), rescaled_product(&d, m));
            let e_minus = t.attempt(case("exp(-...)", Some(m), None, 0), l.neg().exp());
            let e_plus = t.attempt(case("exp(+...)", Some(m), None, 0), l.exp());
            let d_minus = t.attempt(c.clone(), delta_series::<Rational>(-m, n));
            let d_plus = t.attempt(c.clone(), delta_series::<Rational>(m, n));
            if let (Some(gp), Some(e), Some(dm)) = (&gp, &e_minus, &d_minus) {
                t.series("Gtilde product = exp(-...)", Some(m), gp, e);
                t.series("Gtilde product = delta^(-m)(t)", Some(m), gp, dm);
            }
            if let (Some(dp), Some(e), Some(dd)) = (&dp, &e_plus, &d_plus) {
                t.series("D product = exp(+...)", Some(m), dp, e);
                t.series("D product = delta^(m)(t)", Some(m), dp, dd);
            }
        }
    }
    let m_top = cfg.main_m_max.max(5);
    for k in 1..=(n.max(4) as i64) {
        for m in 1..=m_top {
            let c = case("q^{mn} scalar identity", Some(m), Some(k as usize), k as usize);
            let (lhs, rhs) = geometric_sides(m, k);
            if let Some(r) = t.attempt(c.clone(), rhs) {
                t.scalars(c, &Word::empty(), &lhs, &r);
            }
        }
    }
    t.finish()
}

/// The exponential forms of `C(t)`, `G~(t)`, `D(t)` in the elements
/// `x C_{n-1} y`, commutation of the four families, and
/// `C(-t) = D(qt) * D(q^{-1}t)`.
pub fn check_genfuns(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_genfuns", cfg);
    let n = cfg.cutoff;

    // mutual commutation of C_k, G~_k, D_k, x C_k y
    let mut family: Vec<(usize, E)> = Vec::new();
    for k in 0..=n {
        for (kind, deg) in [(Named::C, k), (Named::GTilde, k), (Named::D, k)] {
            if let Some(u) = t.attempt(case("setup", None, Some(k), k), named(kind, k)) {
                family.push((deg, u));
            }
        }
        if k < n {
            if let Some(u) = t.attempt(case("setup", None, Some(k), k + 1), xcy(k + 1)) {
                family.push((k + 1, u));
            }
        }
    }
    for (i, (d1, u)) in family.iter().enumerate() {
        for (d2, v) in &family[i + 1..] {
            if d1 + d2 > n || *d1 == 0 || *d2 == 0 {
                continue;
            }
            let c = case("families commute", None, None, d1 + d2);
            if let Some(z) = t.attempt(c.clone(), u.shuffle_commutator(v)) {
                t.zero(c, &z);
            }
        }
    }

    let forms: [(&'static str, Named, i64, Weight); 3] = [
        ("C(t) = exp(...)", Named::C, 2, Box::new(|k| qi(2 * k))),
        ("Gtilde(t) = exp(...)", Named::GTilde, -1, Box::new(|k| qi(k).scale(&Rational::from_integer((-sign(k)).into())))),
        ("D(t) = exp(...)", Named::D, 1, Box::new(|k| qi(k).scale(&Rational::from_integer(sign(k).into())))),
    ];
    for (label, kind, m, c) in forms {
        let setup = case("setup", Some(m), None, 0);
        let (Some(f), Some(l), Some(dm)) = (
            t.attempt(setup.clone(), named_series::<Rational>(kind, n)),
            t.attempt(setup.clone(), xcy_series(n, c)),
            t.attempt(setup.clone(), delta_series::<Rational>(m, n)),
        ) else {
            continue;
        };
        if let Some(e) = t.attempt(case(label, Some(m), None, 0), l.exp()) {
            t.series(label, Some(m), &f, &e);
        }
        // C(t) = Delta^(2)(t), D(t) = Delta^(1)(-t), G~(t) = Delta^(-1)(-t)
        let specialized = if m == 2 { dm } else { dm.rescale_t(&int(-1)) };
        t.series("specialization of delta^(m)", Some(m), &f, &specialized);
    }

    let setup = case("setup", None, None, 0);
    if let (Some(c), Some(d)) = (
        t.attempt(setup.clone(), named_series::<Rational>(Named::C, n)),
        t.attempt(setup, named_series::<Rational>(Named::D, n)),
    ) {
        let lhs = c.rescale_t(&int(-1));
        if let Some(r) = t.attempt(case("C(-t)", None, None, 0), d.rescale_t(&qp(1)).star_mul(&d.rescale_t(&qp(-1)))) {
            t.series("C(-t) = D(qt) * D(t/q)", None, &lhs, &r);
        }
    }
    t.finish()
}

/// `d/dt Delta^(m)(t) = (Nabla^(0)(q^m t) - Nabla^(0)(q^{-m} t)) / ((q - q^{-1}) t) * Delta^(m)(t)`
/// with the generating-function recursions used along the way.
pub fn check_ode(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_ode", cfg);
    let n = cfg.cutoff;
    let setup = case("setup", None, None, 0);
    let Some(nab) = t.attempt(setup, nabla_series::<Rational>(0, n)) else {
        return t.finish();
    };
    let x_t = tx(n);

    // Nabla^(0)(t) y^-1 = tx + (tx * N - N * tx) / (q - q^-1)
    let rhs = x_t
        .star_mul(&nab)
        .and_then(|a| a.sub(&nab.star_mul(&x_t)?))
        .and_then(|s| s.div_q_minus_qinv())
        .and_then(|s| s.add(&x_t));
    if let Some(r) = t.attempt(case("nabla^(0)(t) y^-1", Some(0), None, 0), rhs) {
        t.series("nabla^(0)(t) y^-1", Some(0), &nab.apply_y_inverse(), &r);
    }

    // (q^m tx * A - q^-m A * tx) / (q - q^-1)
    let bracket = |m: i64, a: &S, x_t: &S| -> R<S> {
        let l = x_t.star_mul(a)?.scale(&qp(m));
        let r = a.star_mul(x_t)?.scale(&qp(-m));
        l.sub(&r)?.div_q_minus_qinv()
    };

    for m in cfg.m_values() {
        let Some(d) = t.attempt(case("setup", Some(m), None, 0), delta_series::<Rational>(m, n)) else {
            continue;
        };
        if let Some(r) = t.attempt(case("delta(t) y^-1", Some(m), None, 0), bracket(m, &d, &x_t)) {
            t.series("delta(t) y^-1", Some(m), &d.apply_y_inverse(), &r);
        }

        if n == 0 {
            continue;
        }
        let dd = d.derivative();
        let x_low = tx(n - 1);
        let rhs = d
            .apply_y_inverse()
            .div_t()
            .and_then(|a| a.add(&bracket(m, &dd, &x_low)?));
        if let Some(r) = t.attempt(case("derivative y^-1", Some(m), None, 0), rhs) {
            t.series("(d/dt delta) y^-1", Some(m), &dd.apply_y_inverse(), &r);
        }

        let n_plus = nab.rescale_t(&qp(m));
        let n_minus = nab.rescale_t(&qp(-m));
        for (label, nn, plus) in [("(N(q^m t) * delta) y^-1", &n_plus, true), ("(N(q^-m t) * delta) y^-1", &n_minus, false)] {
            let lhs = nn.star_mul(&d).map(|s| s.apply_y_inverse());
            let rhs = (|| -> R<S> {
                let nd = nn.star_mul(&d)?;
                let mixed = x_t.star_mul(&nd)?.scale(&qp(m)).sub(&nd.star_mul(&x_t)?.scale(&qp(-m)))?;
                let head = if plus {
                    x_t.star_mul(&d)?.scale(&qp(m))
                } else {
                    d.star_mul(&x_t)?.scale(&qp(-m))
                };
                head.add(&mixed.div_q_minus_qinv()?)
            })();
            let c = case(label, Some(m), None, 0);
            if let (Some(l), Some(r)) = (t.attempt(c.clone(), lhs), t.attempt(c, rhs)) {
                t.series(label, Some(m), &l, &r);
            }
        }

        let rhs = n_plus
            .sub(&n_minus)
            .and_then(|s| s.div_q_minus_qinv())
            .and_then(|s| s.div_t())
            .and_then(|s| s.star_mul(&d.truncate(n - 1)?));
        if let Some(r) = t.attempt(case("differential equation", Some(m), None, 0), rhs) {
            t.series("d/dt delta(t)", Some(m), &dd, &r);
        }
    }
    t.finish()
}

/// `C_n`, `G~_n`, `D_n` from the weighted convolutions with `x C_{k-1} y`.
pub fn check_recurrences_expderivative(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_recurrences_expderivative", cfg);
    let n_top = cfg.cutoff;
    let weights: [(&'static str, Named, Weight); 3] = [
        ("C_n recurrence", Named::C, Box::new(|k| qi(2 * k))),
        ("Gtilde_n recurrence", Named::GTilde, Box::new(|k| qi(k).scale(&Rational::from_integer((-sign(k)).into())))),
        ("D_n recurrence", Named::D, Box::new(|k| qi(k).scale(&Rational::from_integer(sign(k).into())))),
    ];
    for (label, kind, w) in weights {
        for n in 1..=n_top {
            let c = case(label, None, Some(n), n);
            let rhs = (|| -> R<E> {
                let mut acc = E::zero();
                for k in 1..=n {
                    let term = xcy(k)?.shuffle(&named(kind, n - k)?)?;
                    acc = &acc + &term.scale(&w(k as i64));
                }
                Ok(acc.scale_scalar(&Rational::from_integer((n as i64).into()).recip()))
            })();
            if let (Some(l), Some(r)) = (t.attempt(c.clone(), named(kind, n)), t.attempt(c.clone(), rhs)) {
                t.elements(c, &l, &r);
            }
        }
    }
    t.finish()
}

/// Every coefficient of `exp(sum_n [mn]_q/n Nabla^(0)_n t^n)` has integer
/// coefficients, despite the rational weights.
pub fn check_integrality(cfg: &VerifyConfig) -> CheckReport {
    let mut t = Tally::new("check_integrality", cfg);
    let n = cfg.cutoff;
    for m in cfg.m_values() {
        let c = case("exp", Some(m), None, 0);
        let Some(e) = t.attempt(c, exponent_series(m, n).and_then(|l| l.exp())) else { continue };
        for k in 0..=n {
            let bad = E::from_terms(
                e.coeff(k)
                    .iter()
                    .filter(|(_, c)| !c.is_integral())
                    .map(|(w, c)| (*w, c.clone())),
            );
            t.zero(case("integral coefficients", Some(m), Some(k), k), &bad);
        }
    }
    t.finish()
}
