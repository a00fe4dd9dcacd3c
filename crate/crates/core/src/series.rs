//! Formal power series in `t` with [`Element`] coefficients, truncated at an
//! explicit cutoff carried by the value.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalan::{delta_element, named_element, nabla_element, Named};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Field;

/// `sum_{n=0}^{cutoff} c_n t^n`; coefficients past the cutoff are unknown and
/// never consulted.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "F: Field", try_from = "SeriesData<F>")]
pub struct Series<F: Field> {
    cutoff: usize,
    coeffs: Vec<Element<F>>,
}

/// Unchecked JSON form; the coefficient count must be `cutoff + 1`.
#[derive(Deserialize)]
#[serde(bound = "F: Field")]
struct SeriesData<F: Field> {
    cutoff: usize,
    coeffs: Vec<Element<F>>,
}

impl<F: Field> TryFrom<SeriesData<F>> for Series<F> {
    type Error = String;
    fn try_from(d: SeriesData<F>) -> std::result::Result<Self, String> {
        if d.coeffs.len() != d.cutoff + 1 {
            return Err(format!("cutoff {} needs {} coefficients, got {}", d.cutoff, d.cutoff + 1, d.coeffs.len()));
        }
        Ok(Series { cutoff: d.cutoff, coeffs: d.coeffs })
    }
}

impl<F: Field> Series<F> {
    /// Pads with zeros or drops terms so that exactly `cutoff + 1`
    /// coefficients remain.
    pub fn new(cutoff: usize, mut coeffs: Vec<Element<F>>) -> Self {
        coeffs.resize(cutoff + 1, Element::zero());
        Series { cutoff, coeffs }
    }

    pub fn from_fn(cutoff: usize, f: impl FnMut(usize) -> Result<Element<F>>) -> Result<Self> {
        let coeffs = (0..=cutoff).map(f).collect::<Result<Vec<_>>>()?;
        Ok(Series { cutoff, coeffs })
    }

    pub fn zero(cutoff: usize) -> Self {
        Series::new(cutoff, Vec::new())
    }

    /// The constant series `1`.
    pub fn one(cutoff: usize) -> Self {
        Series::new(cutoff, vec![Element::one()])
    }

    /// `u t^k`.
    pub fn monomial(cutoff: usize, u: Element<F>, k: usize) -> Self {
        let mut s = Series::zero(cutoff);
        if k <= cutoff {
            s.coeffs[k] = u;
        }
        s
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn coeffs(&self) -> &[Element<F>] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Element<F> {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Element::is_zero)
    }

    /// Smallest degree with a nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn same_cutoff(&self, other: &Self) -> Result<()> {
        if self.cutoff == other.cutoff {
            Ok(())
        } else {
            Err(Error::CutoffMismatch {
                left: self.cutoff,
                right: other.cutoff,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_cutoff(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_cutoff(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Self, f: impl Fn(&Element<F>, &Element<F>) -> Element<F>) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        Series { cutoff: self.cutoff, coeffs }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c)
    }

    pub fn map(&self, f: impl Fn(&Element<F>) -> Element<F>) -> Self {
        Series {
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&Element<F>) -> Result<Element<F>>) -> Result<Self> {
        Ok(Series {
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, c: &LaurentPoly<F>) -> Self {
        self.map(|u| u.scale(c))
    }

    pub fn scale_scalar(&self, c: &F) -> Self {
        self.map(|u| u.scale_scalar(c))
    }

    /// The Cauchy product with `*` on coefficients. Output degrees are
    /// computed in parallel.
    pub fn star_mul(&self, other: &Self) -> Result<Self> {
        self.same_cutoff(other)?;
        let coeffs = (0..=self.cutoff)
            .into_par_iter()
            .map(|n| {
                let mut acc = Element::zero();
                for k in 0..=n {
                    let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &a.shuffle(b)?;
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Series { cutoff: self.cutoff, coeffs })
    }

    /// `t -> c t`: the coefficient of `t^n` is multiplied by `c^n`.
    pub fn rescale_t(&self, c: &LaurentPoly<F>) -> Self {
        let mut pow = LaurentPoly::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for u in &self.coeffs {
            coeffs.push(u.scale(&pow));
            pow = &pow * c;
        }
        Series { cutoff: self.cutoff, coeffs }
    }

    /// `d/dt`. The cutoff drops by one; a cutoff-0 series has derivative
    /// `0` at cutoff 0.
    pub fn derivative(&self) -> Self {
        if self.cutoff == 0 {
            return Series::zero(0);
        }
        let coeffs = (1..=self.cutoff)
            .map(|n| self.coeffs[n].scale_scalar(&F::from_int(n as i64)))
            .collect();
        Series { cutoff: self.cutoff - 1, coeffs }
    }

    /// Multiplication by `t`; the cutoff grows by one.
    pub fn mul_t(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Element::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { cutoff: self.cutoff + 1, coeffs }
    }

    /// Division by `t`; needs a zero constant term and lowers the cutoff.
    pub fn div_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm { expected: "0" });
        }
        if self.cutoff == 0 {
            return Ok(Series::zero(0));
        }
        Ok(Series {
            cutoff: self.cutoff - 1,
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Forgets all terms above `cutoff`, which must not exceed the current one.
    pub fn truncate(&self, cutoff: usize) -> Result<Self> {
        if cutoff > self.cutoff {
            return Err(Error::CutoffMismatch {
                left: self.cutoff,
                right: cutoff,
            });
        }
        Ok(Series {
            cutoff,
            coeffs: self.coeffs[..=cutoff].to_vec(),
        })
    }

    /// `sum_k A^k / k!`, with powers taken literally (coefficients need not
    /// commute). Needs a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm { expected: "0" });
        }
        let mut result = Series::one(self.cutoff);
        let mut term = Series::one(self.cutoff);
        for k in 1..=self.cutoff {
            term = term.star_mul(self)?.scale_scalar(&F::from_int(k as i64).recip());
            result = result.add(&term)?;
        }
        Ok(result)
    }

    /// `sum_{k>=1} (-1)^{k+1} (A - 1)^k / k`. Needs constant term `1`.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != Element::one() {
            return Err(Error::ConstantTerm { expected: "1" });
        }
        let z = self.sub(&Series::one(self.cutoff))?;
        let mut result = Series::zero(self.cutoff);
        let mut power = Series::one(self.cutoff);
        for k in 1..=self.cutoff {
            power = power.star_mul(&z)?;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let c = F::from_int(sign) / F::from_int(k as i64);
            result = result.add(&power.scale_scalar(&c))?;
        }
        Ok(result)
    }

    /// `B` with `A * B = 1`, from `B_0 = 1` and
    /// `B_n = -sum_{k=1}^n A_k * B_{n-k}`. Needs constant term `1`.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0] != Element::one() {
            return Err(Error::ConstantTerm { expected: "1" });
        }
        let mut b: Vec<Element<F>> = vec![Element::one()];
        for n in 1..=self.cutoff {
            let mut acc = Element::zero();
            for k in 1..=n {
                acc = &acc + &self.coeffs[k].shuffle(&b[n - k])?;
            }
            b.push(-acc);
        }
        Ok(Series { cutoff: self.cutoff, coeffs: b })
    }

    pub fn apply_y_inverse(&self) -> Self {
        self.map(Element::y_inverse)
    }

    pub fn apply_x_inverse(&self) -> Self {
        self.map(Element::x_inverse)
    }

    pub fn zeta(&self) -> Self {
        self.map(Element::zeta)
    }

    pub fn div_exact(&self, d: &LaurentPoly<F>) -> Result<Self> {
        self.try_map(|u| u.div_exact(d))
    }

    pub fn div_q_minus_qinv(&self) -> Result<Self> {
        self.try_map(Element::div_q_minus_qinv)
    }

    /// Free product on the left of every coefficient.
    pub fn free_mul_left(&self, u: &Element<F>) -> Result<Self> {
        self.try_map(|c| u.free_mul(c))
    }

    /// Free product on the right of every coefficient.
    pub fn free_mul_right(&self, u: &Element<F>) -> Result<Self> {
        self.try_map(|c| c.free_mul(u))
    }

    /// Renders one `t^n: element` line per degree.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("t^{n}: {}\n", c.render()));
        }
        out
    }
}

impl<F: Field> fmt::Debug for Series<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(cutoff {}):\n{}", self.cutoff, self.render())
    }
}

/// `Delta^(m)(t) = sum_n Delta^(m)_n t^n`.
pub fn delta_series<F: Field>(m: i64, cutoff: usize) -> Result<Series<F>> {
    Series::from_fn(cutoff, |n| delta_element(m, n))
}

/// `Nabla^(m)(t) = sum_{n>=1} Nabla^(m)_n t^n`.
pub fn nabla_series<F: Field>(m: i64, cutoff: usize) -> Result<Series<F>> {
    Series::from_fn(cutoff, |n| {
        if n == 0 {
            Ok(Element::zero())
        } else {
            nabla_element(m, n)
        }
    })
}

/// `C(t)`, `D(t)` or `G~(t)` from the closed forms of their coefficients.
pub fn named_series<F: Field>(kind: Named, cutoff: usize) -> Result<Series<F>> {
    Series::from_fn(cutoff, |n| named_element(kind, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::q_int;
    use crate::word::Word;
    use crate::Rational;

    type S = Series<Rational>;
    type E = Element<Rational>;
    type P = LaurentPoly<Rational>;

    fn xy() -> E {
        E::parse_word("xy").unwrap()
    }

    #[test]
    fn unit_is_neutral() {
        let a = S::new(3, vec![E::one(), xy(), E::x()]);
        assert_eq!(a.star_mul(&S::one(3)).unwrap(), a);
        assert_eq!(S::one(3).star_mul(&a).unwrap(), a);
    }

    #[test]
    fn single_term_product() {
        let a = S::monomial(3, xy(), 1);
        let expected = S::monomial(3, xy().shuffle(&xy()).unwrap(), 2);
        assert_eq!(a.star_mul(&a).unwrap(), expected);
    }

    #[test]
    fn cutoff_mismatch() {
        assert!(matches!(
            S::one(2).star_mul(&S::one(3)),
            Err(Error::CutoffMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn gtilde_times_d() {
        let g: S = named_series(Named::GTilde, 4).unwrap();
        let d: S = named_series(Named::D, 4).unwrap();
        assert_eq!(g.star_mul(&d).unwrap(), S::one(4));
        assert_eq!(d.star_mul(&g).unwrap(), S::one(4));
        assert_eq!(g.inverse().unwrap(), d);
    }

    #[test]
    fn rescale_cases() {
        let d: S = named_series(Named::D, 4).unwrap();
        assert_eq!(d.rescale_t(&P::one()), d);
        let back = d.rescale_t(&P::q_pow(1)).rescale_t(&P::q_pow(-1));
        assert_eq!(back, d);
        let flipped = d.rescale_t(&P::from_int(-1));
        assert_eq!(flipped, delta_series(1, 4).unwrap());
    }

    #[test]
    fn derivative_cases() {
        assert!(S::one(3).derivative().is_zero());
        let ones = S::new(3, vec![E::one(); 4]);
        let d = ones.derivative();
        assert_eq!(d.cutoff(), 2);
        for n in 0..=2 {
            assert_eq!(d.coeff(n), &E::one().scale_scalar(&Rational::from_integer((n as i64 + 1).into())));
        }
        let d1: S = delta_series(1, 3).unwrap();
        assert_eq!(d1.derivative().coeff(0), &delta_element::<Rational>(1, 1).unwrap());
    }

    #[test]
    fn exp_log_cases() {
        assert_eq!(S::zero(3).exp().unwrap(), S::one(3));
        assert!(S::one(3).log().unwrap().is_zero());
        for m in -2..=2 {
            let a = S::monomial(3, xy().scale(&q_int(m)), 1);
            assert_eq!(a.exp().unwrap().coeff(1), &delta_element::<Rational>(m, 1).unwrap());
        }
        let a = S::monomial(4, xy(), 1);
        assert_eq!(a.exp().unwrap().log().unwrap(), a);
        assert!(S::one(2).exp().is_err());
        assert!(S::zero(2).log().is_err());
        assert!(S::zero(2).inverse().is_err());
    }

    #[test]
    fn y_inverse_of_nabla_zero() {
        assert!(S::one(3).apply_y_inverse().is_zero());
        let n0: S = nabla_series(0, 4).unwrap();
        let stripped = n0.apply_y_inverse();
        for n in 1..=4 {
            let c = named_element::<Rational>(Named::C, n - 1).unwrap();
            assert_eq!(stripped.coeff(n), &E::x().free_mul(&c).unwrap());
        }
        assert_eq!(n0.zeta().apply_x_inverse(), stripped.zeta());
    }

    #[test]
    fn t_shifts() {
        let a: S = nabla_series(1, 3).unwrap();
        let b = a.div_t().unwrap();
        assert_eq!(b.cutoff(), 2);
        assert_eq!(b.mul_t(), a);
        assert!(S::one(2).div_t().is_err());
        assert_eq!(a.truncate(1).unwrap().coeff(1), &E::word(Word::parse("xy").unwrap()));
        assert!(a.truncate(4).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a: S = delta_series(2, 2).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.starts_with(r#"{"cutoff":2,"coeffs":[[{"word":"","coeff":{"0":"1"}}]"#));
        let back: S = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<S>(r#"{"cutoff":1,"coeffs":[[]]}"#).is_err());
    }
}
