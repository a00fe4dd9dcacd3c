//! The same computations over `Rational64` and over big rationals agree.

use qshuffle::catalan::{delta_element, named_element, Named};
use qshuffle::series::delta_series;
use qshuffle::{QElement, QElement64, QSeries64};

fn same(a: &QElement64, b: &QElement) -> bool {
    a.render() == b.render()
}

#[test]
fn elements_agree_across_scalars() {
    for n in 0..=4 {
        for kind in [Named::C, Named::D, Named::GTilde] {
            let small: QElement64 = named_element(kind, n).unwrap();
            let big: QElement = named_element(kind, n).unwrap();
            assert!(same(&small, &big), "{kind} {n}");
        }
        for m in -3..=3 {
            let small: QElement64 = delta_element(m, n).unwrap();
            let big: QElement = delta_element(m, n).unwrap();
            assert!(same(&small, &big));
        }
    }
}

#[test]
fn series_calculus_over_i64_rationals() {
    let d: QSeries64 = delta_series(2, 4).unwrap();
    let back = d.log().unwrap().exp().unwrap();
    assert_eq!(back, d);
    let inv = d.inverse().unwrap();
    assert_eq!(d.star_mul(&inv).unwrap(), QSeries64::one(4));
    let expected: QSeries64 = delta_series(-2, 4).unwrap();
    assert_eq!(inv, expected);
}
