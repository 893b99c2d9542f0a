//! Rational functions with `(1-t)`-power denominators.
//!
//! Every table entry is `p(t) / (1-t)^k` for a Laurent polynomial `p` and
//! `k ≥ 0`. The form is canonical: either `k = 0`, or `(1-t)` does not
//! divide `p`; zero is stored as `(0, 0)`. Closure of this shape under all
//! table maps (including the `t ↦ t^{-1}` substitution of local duality)
//! is what makes equality decidable without any series truncation.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::rat::{binomial, parse_rat, rat_to_string, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatFunc {
    num: LaurentPoly,
    pole_power: u32,
}

/// Series expansion direction; see [`crate::table::Orientation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Ascending powers of `t`: `1/(1-t) = Σ_{j≥0} t^j`.
    V,
    /// Descending powers: `1/(1-t) = -Σ_{j≤-1} t^j`.
    Vstar,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatFuncError {
    #[error("pole data of the zero function is undefined")]
    ZeroInput,
}

impl RatFunc {
    /// Canonical form of `p / (1-t)^k`: strips `(1-t)` factors shared with
    /// the denominator.
    pub fn new(num: LaurentPoly, k: u32) -> Self {
        let mut num = num;
        let mut k = k;
        if num.is_zero() {
            return Self::zero();
        }
        while k > 0 {
            match num.div_one_minus_t() {
                Some(q) => {
                    num = q;
                    k -= 1;
                }
                None => break,
            }
        }
        Self { num, pole_power: k }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, 0)
    }

    pub fn monomial(d: i64, c: Rat) -> Self {
        Self::from_poly(LaurentPoly::monomial(d, c))
    }

    /// `1/(1-t)^k`.
    pub fn geometric(k: u32) -> Self {
        Self::new(LaurentPoly::one(), k)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn pole_power(&self) -> u32 {
        self.pole_power
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is trivial.
    pub fn is_laurent_poly(&self) -> bool {
        self.pole_power == 0
    }

    /// The numerator after clearing denominators to `(1-t)^k`; requires
    /// `k ≥ pole_power`.
    pub fn numerator_at_pole(&self, k: u32) -> LaurentPoly {
        assert!(k >= self.pole_power, "cannot lower a pole order");
        let mut p = self.num.clone();
        for _ in self.pole_power..k {
            p = p.mul_one_minus_t();
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.pole_power.max(other.pole_power);
        Self::new(
            self.numerator_at_pole(k).add(&other.numerator_at_pole(k)),
            k,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            pole_power: self.pole_power,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            pole_power: self.pole_power,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.num),
            self.pole_power + other.pole_power,
        )
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self::new(self.num.mul(p), self.pole_power)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            pole_power: self.pole_power,
        }
    }

    /// Multiplies by `(1-t)^k` (`k` may exceed the pole order).
    pub fn mul_one_minus_t_pow(&self, k: u32) -> Self {
        let drop = k.min(self.pole_power);
        let mut num = self.num.clone();
        for _ in drop..k {
            num = num.mul_one_minus_t();
        }
        Self {
            num,
            pole_power: self.pole_power - drop,
        }
    }

    /// Divides by `(1-t)^k`.
    pub fn div_one_minus_t_pow(&self, k: u32) -> Self {
        Self::new(self.num.clone(), self.pole_power + k)
    }

    /// `t^twist · f(t^{-1})`, re-expressed over a `(1-t)` power via
    /// `f(t^{-1}) = (-1)^k t^k p(t^{-1}) / (1-t)^k`.
    pub fn invert_variable(&self, twist: i64) -> Self {
        let k = self.pole_power;
        let mut p = self.num.invert_t().shift(k as i64 + twist);
        if k % 2 == 1 {
            p = p.neg();
        }
        Self::new(p, k)
    }

    /// Pole order and limit at `t = 1`: the order is the pole order of the
    /// canonical form (a zero at `t = 1` reports a negative order), and the
    /// limit is the nonzero value of `(1-t)^order · f` at `t = 1`.
    pub fn pole_data(&self) -> Result<(i64, Rat), RatFuncError> {
        if self.is_zero() {
            return Err(RatFuncError::ZeroInput);
        }
        if self.pole_power > 0 {
            return Ok((self.pole_power as i64, self.num.eval_one()));
        }
        let mut p = self.num.clone();
        let mut zeros = 0i64;
        while let Some(q) = p.div_one_minus_t() {
            zeros += 1;
            p = q;
        }
        Ok((-zeros, p.eval_one()))
    }

    /// Series coefficients on the window `[lo, hi]` in the given direction.
    pub fn expand(&self, lo: i64, hi: i64, dir: Direction) -> Vec<Rat> {
        assert!(lo <= hi, "expand window must satisfy lo <= hi");
        let k = self.pole_power as i64;
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);
        for j in lo..=hi {
            let mut c = Rat::zero();
            for (&d, a) in self.num.terms() {
                let m = j - d;
                if k == 0 {
                    if m == 0 {
                        c += a;
                    }
                    continue;
                }
                match dir {
                    Direction::V => {
                        if m >= 0 {
                            c += a * binomial(m + k - 1, k - 1);
                        }
                    }
                    Direction::Vstar => {
                        if m <= -k {
                            let b = binomial(-m - 1, k - 1);
                            c += if k % 2 == 0 { a * b } else { -(a * b) };
                        }
                    }
                }
            }
            out.push(c);
        }
        out
    }
}

/// Canonical form of `p / (1-t)^k`; alias for [`RatFunc::new`].
pub fn ratfunc_normalize(p: LaurentPoly, k: u32) -> RatFunc {
    RatFunc::new(p, k)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pole_power == 0 {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() == 1 && self.num.min_degree() == Some(0) {
            write!(f, "{}/(1-t)^{}", self.num, self.pole_power)
        } else {
            write!(f, "({})/(1-t)^{}", self.num, self.pole_power)
        }
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            num: BTreeMap<String, String>,
            poles: u32,
        }
        let num = self
            .num
            .terms()
            .map(|(d, c)| (d.to_string(), rat_to_string(c)))
            .collect();
        Repr {
            num,
            poles: self.pole_power,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            num: BTreeMap<String, String>,
            poles: u32,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for (d, c) in &repr.num {
            let d: i64 = d
                .parse()
                .map_err(|_| D::Error::custom(format!("bad degree key {d:?}")))?;
            p.add_term(d, parse_rat(c).map_err(D::Error::custom)?);
        }
        Ok(RatFunc::new(p, repr.poles))
    }
}
