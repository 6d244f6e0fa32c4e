//! Exact rational numbers and arguments of roots of unity.
//!
//! Rationals are [`num_rational::BigRational`]: always in lowest terms with a
//! positive denominator, which is exactly the canonical form required here.
//! [`UnitArg`] is a rational reduced modulo 1 into `[0, 1)`; it represents the
//! root of unity `exp(2*pi*i*value)` by its argument, so that most of the
//! fractional-exponent bookkeeping stays in additive notation.

use alloc::string::String;
use core::fmt;
use core::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Shorthand for a rational from two machine integers.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational from `"p/q"` or `"p"` notation.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| ParseRationalError(String::from(s)))?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| ParseRationalError(String::from(s)))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ParseRationalError(String::from(s)));
    }
    Ok(Rational::new(num, den))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a rational number: {:?}", self.0)
    }
}

/// The fractional part `x - floor(x)`, always in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    let fl = x.floor();
    x - fl
}

/// A rational reduced modulo 1: the argument of a root of unity.
///
/// Addition wraps modulo 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitArg(Rational);

impl UnitArg {
    /// Reduce any rational into `[0, 1)`.
    pub fn new(x: &Rational) -> Self {
        UnitArg(frac(x))
    }

    pub fn zero() -> Self {
        UnitArg(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }

    /// Denominator in lowest terms; the order of the root of unity.
    pub fn order(&self) -> BigInt {
        self.0.denom().clone()
    }

    /// The argument of the complex conjugate root of unity, `-x mod 1`.
    pub fn conjugate(&self) -> Self {
        UnitArg::new(&(-&self.0))
    }

    /// Argument scaled by an integer, reduced modulo 1.
    pub fn scale(&self, k: i64) -> Self {
        UnitArg::new(&(&self.0 * rat(k, 1)))
    }
}

impl Add<&UnitArg> for &UnitArg {
    type Output = UnitArg;

    fn add(self, rhs: &UnitArg) -> UnitArg {
        UnitArg::new(&(&self.0 + &rhs.0))
    }
}

impl fmt::Display for UnitArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// True when `x` is an integer.
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Denominator of `x` in lowest terms as a `u64`, if it fits.
pub fn denominator_u64(x: &Rational) -> Option<u64> {
    use num_traits::ToPrimitive;
    x.denom().to_u64()
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
