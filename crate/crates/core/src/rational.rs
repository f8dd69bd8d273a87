//! Exact rational helpers. Every formula in the crate runs over [`Q`];
//! nothing is ever rounded.

use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Returns the integer value of `x`, or an integrity error naming `what`.
pub fn to_integer(x: Q, what: &str) -> Result<i64> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::Integrity(format!("{what} = {} is not an integer", render(x))))
    }
}

/// `p/q` for non-integers, plain `p` otherwise.
pub fn render(x: Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
