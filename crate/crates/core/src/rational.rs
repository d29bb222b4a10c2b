//! Exact rational scalars.
//!
//! Coefficients live in ℚ throughout the algebra half so every identity is a
//! bit-exact assertion. `BigRational` already maintains the invariants we
//! need (lowest terms, positive denominator), so it is used directly.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "3", "-1/2", "7/4".
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::InvalidRational(s.to_string());
    match s.split_once('/') {
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Nearest f64; rationals used as operator coefficients are tiny, so the
/// conversion is a single rounding.
pub fn rat_to_f64(q: &Rational) -> f64 {
    q.to_f64()
        .unwrap_or_else(|| q.numer().to_f64().unwrap() / q.denom().to_f64().unwrap())
}

/// Compact display: "3", "-1/2".
pub fn rat_display(q: &Rational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// |q| as f64, for residual reporting only.
pub fn rat_abs_f64(q: &Rational) -> f64 {
    rat_to_f64(&q.abs())
}
