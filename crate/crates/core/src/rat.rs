//! Exact rational scalars.
//!
//! All coefficients in this crate are arbitrary-precision rationals kept in
//! canonical reduced form (positive denominator, gcd 1); `num_rational`
//! maintains that invariant for us.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// `p/q` as an exact rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses the canonical string form, `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| format!("bad rational {s:?}: {e}"))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn rat_to_string(x: &Rat) -> String {
    x.to_string()
}

/// Binomial coefficient `C(m, k)` for `m ≥ 0`.
pub fn binomial(m: i64, k: i64) -> Rat {
    if k < 0 || k > m {
        return Rat::zero();
    }
    assert!(m >= 0, "binomial expects a nonnegative upper index");
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(m - j);
        acc /= BigInt::from(j + 1);
    }
    Rat::from_integer(acc)
}

pub fn is_positive(x: &Rat) -> bool {
    x.is_positive()
}
