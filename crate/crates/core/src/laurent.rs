//! Sparse Laurent polynomials over the rationals.
//!
//! A `LaurentPoly` is a finite map degree → coefficient with no stored zero
//! coefficients; the zero polynomial is the empty map. Degrees may be
//! negative. These are the numerators of every table entry in the crate.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rat::{rat_int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, rat_int(1))
    }

    /// `c · t^d`, dropped if `c = 0`.
    pub fn monomial(d: i64, c: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(d, c);
        }
        Self { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, d: i64) -> Rat {
        self.coeffs.get(&d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, d: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(d).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(*d, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(*d, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat_int(-1))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(d, a)| (*d, a * c)).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(d, a)| (d + k, a.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (d1, c1) in self.terms() {
            for (d2, c2) in other.terms() {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }

    /// Substitutes `t ↦ t^{-1}`.
    pub fn invert_t(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(d, a)| (-d, a.clone())).collect(),
        }
    }

    /// Value at `t = 1`, i.e. the coefficient sum.
    pub fn eval_one(&self) -> Rat {
        let mut s = Rat::zero();
        for c in self.coeffs.values() {
            s += c;
        }
        s
    }

    /// Multiplies by `(1 - t)`.
    pub fn mul_one_minus_t(&self) -> Self {
        self.sub(&self.shift(1))
    }

    /// Exact division by `(1 - t)`; `None` when `(1 - t)` does not divide.
    ///
    /// Synthetic division from the lowest degree upwards: if
    /// `p = (1 - t) q` then `q_d = Σ_{e ≤ d} p_e`.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if !self.eval_one().is_zero() {
            return None;
        }
        let lo = self.min_degree().unwrap();
        let hi = self.max_degree().unwrap();
        let mut q = Self::zero();
        let mut run = Rat::zero();
        for d in lo..hi {
            run += self.coeff(d);
            q.add_term(d, run.clone());
        }
        Some(q)
    }

    /// Multiplicity of `(1 - t)` as a factor (0 for the zero polynomial).
    pub fn one_minus_t_multiplicity(&self) -> u32 {
        let mut m = 0;
        let mut p = self.clone();
        while !p.is_zero() {
            match p.div_one_minus_t() {
                Some(q) => {
                    m += 1;
                    p = q;
                }
                None => break,
            }
        }
        m
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.coeffs {
            let s = c.to_string();
            let (sign, mag) = match s.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", s),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match *d {
                0 => write!(f, "{mag}")?,
                1 if mag == "1" => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                d if mag == "1" => write!(f, "t^{d}")?,
                d => write!(f, "{mag}*t^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(d, c)| (d, rat_int(c))))
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[(0, 1), (2, -3)]);
        let b = p(&[(2, 3), (5, 1)]);
        assert_eq!(a.add(&b), p(&[(0, 1), (5, 1)]));
        assert_eq!(a.sub(&a), LaurentPoly::zero());
        assert_eq!(a.shift(-2), p(&[(-2, 1), (0, -3)]));
        assert_eq!(a.mul(&p(&[(0, 2)])), a.scale(&rat_int(2)));
    }

    #[test]
    fn divide_by_one_minus_t() {
        // 1 - t^2 = (1 - t)(1 + t)
        let f = p(&[(0, 1), (2, -1)]);
        assert_eq!(f.div_one_minus_t().unwrap(), p(&[(0, 1), (1, 1)]));
        // 1 - 3t + 3t^2 - t^3 = (1 - t)^3
        let g = p(&[(0, 1), (1, -3), (2, 3), (3, -1)]);
        assert_eq!(g.one_minus_t_multiplicity(), 3);
        assert!(p(&[(4, 1)]).div_one_minus_t().is_none());
        // Laurent support
        let h = p(&[(-1, 1), (0, -1)]);
        assert_eq!(h.div_one_minus_t().unwrap(), p(&[(-1, 1)]));
    }

    #[test]
    fn multiplicity_and_eval() {
        let f = p(&[(0, 1), (1, -2), (2, 1)]); // (1-t)^2
        assert_eq!(f.one_minus_t_multiplicity(), 2);
        assert_eq!(f.eval_one(), rat(0, 1));
        assert_eq!(p(&[(0, 1), (1, 1)]).eval_one(), rat_int(2));
    }

    #[test]
    fn invert_t_involution() {
        let f = p(&[(-2, 5), (0, 1), (3, -4)]);
        assert_eq!(f.invert_t().invert_t(), f);
    }
}
