//! Coefficient traits.
//!
//! Everything above the scalar layer is generic over the coefficient type.
//! [`Ring`] is enough for the integer-valued shuffle kernel; [`Field`] adds
//! the exact division that the exponential and logarithm need.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// A commutative ring with an embedding of the integers.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_int(n: i64) -> Self;
}

/// An exact field of characteristic zero.
///
/// `Display` writes `p/q` (or `p` when the denominator is one) and `FromStr`
/// reads the same notation back.
pub trait Field: Ring + Div<Output = Self> + Display + FromStr {
    /// True when the value lies in the image of the integers.
    fn is_integral(&self) -> bool;

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Ring for i64 {
    fn from_int(n: i64) -> Self {
        n
    }
}

impl<T> Ring for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Debug + Send + Sync + 'static,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer embedding"))
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Debug + Display + FromStr + Send + Sync + 'static,
{
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn rational_text_round_trip() {
        let r: Ratio<BigInt> = Ratio::from_int(-3) / Ratio::from_int(4);
        assert_eq!(r.to_string(), "-3/4");
        assert_eq!("-3/4".parse::<Ratio<BigInt>>().unwrap(), r);
        assert_eq!(Ratio::<BigInt>::from_int(5).to_string(), "5");
        assert!(Ratio::<BigInt>::from_int(5).is_integral());
        assert!(!r.is_integral());
    }

    #[test]
    fn rational64_embeds_integers() {
        let r = Ratio::<i64>::from_int(7);
        assert_eq!(r.recip(), Ratio::new(1, 7));
    }
}
