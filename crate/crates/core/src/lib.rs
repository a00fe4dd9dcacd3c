//! Exact computer algebra for the q-shuffle algebra on the two letters `x`, `y`.
//!
//! The crate provides words and their Dyck-path statistics ([`word`]), exact
//! Laurent polynomials in `q` ([`laurent`]), elements of the free algebra with
//! the concatenation and q-shuffle products ([`element`]), the Catalan-word
//! families ([`catalan`]), truncated power series in `t` ([`series`]), and a
//! suite of identity checks ([`verify`]).
//!
//! Coefficients are generic over a [`Field`]; the aliases below fix the
//! arbitrary-precision rationals used everywhere else in the workspace.

pub mod catalan;
pub mod element;
pub mod error;
pub mod laurent;
pub mod limits;
pub mod scalar;
pub mod series;
pub mod shuffle;
pub mod verify;
pub mod word;

pub use element::Element;
pub use error::{Error, Result};
pub use laurent::{q_falling, q_int, LaurentPoly};
pub use scalar::{Field, Ring};
pub use series::Series;
pub use word::{alternating_word, enumerate_catalan, Alternating, Letter, Profile, Word};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// Laurent polynomials in `q` over [`Rational`].
pub type QPoly = LaurentPoly<Rational>;
/// Free-algebra elements over [`Rational`] Laurent coefficients.
pub type QElement = Element<Rational>;
/// Truncated series over [`QElement`].
pub type QSeries = Series<Rational>;

/// 64-bit rationals; faster, but may overflow on large degrees.
pub type Rational64 = num_rational::Rational64;
pub type QPoly64 = LaurentPoly<Rational64>;
pub type QElement64 = Element<Rational64>;
pub type QSeries64 = Series<Rational64>;
