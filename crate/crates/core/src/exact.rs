//! Exact scalars: arbitrary-precision integers and rationals.
//!
//! Every quantity in this crate is computed exactly; there is no floating
//! point anywhere. Rationals are kept in lowest terms with a positive
//! denominator (the representation `num-rational` guarantees).

use crate::error::{Error, Result};

pub use num_bigint::BigInt as Int;
pub use num_rational::BigRational as Rational;

/// A point of `Q^n`, stored coordinate by coordinate.
pub type RationalPoint = Vec<Rational>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Int::from(v))
}

/// The rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(Int::from(p), Int::from(q))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    text.trim().parse::<Rational>().map_err(|e| Error::Parse {
        token: text.trim().to_string(),
        reason: e.to_string(),
    })
}

pub fn coordinate_sum(x: &[Rational]) -> Rational {
    x.iter().fold(rat(0), |acc, v| acc + v)
}
