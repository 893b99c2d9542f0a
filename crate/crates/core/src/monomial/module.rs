//! The concrete graded-module class: finite direct sums of shifted monomial
//! cyclic quotients `(R/I)(a)` and shifted monomial ideals `I(a) ⊆ R(a)`.
//!
//! Shifts follow `HS(M(a)) = t^{-a} · HS(M)`. Unit-ideal quotients are the
//! zero module and are dropped; a free rank-one module is a quotient by the
//! zero ideal.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::ideal::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SummandKind {
    Quotient,
    Ideal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub kind: SummandKind,
    pub ideal: MonomialIdeal,
    pub shift: i64,
}

impl Summand {
    pub fn quotient(ideal: MonomialIdeal, shift: i64) -> Self {
        Self {
            kind: SummandKind::Quotient,
            ideal,
            shift,
        }
    }

    pub fn ideal(ideal: MonomialIdeal, shift: i64) -> Self {
        Self {
            kind: SummandKind::Ideal,
            ideal,
            shift,
        }
    }

    /// Zero module: `R/R` or the zero ideal.
    pub fn is_zero_module(&self) -> bool {
        match self.kind {
            SummandKind::Quotient => self.ideal.is_unit(),
            SummandKind::Ideal => self.ideal.is_zero(),
        }
    }

    /// Free rank one: `R(a)` as a quotient by zero, or the unit ideal.
    pub fn is_free(&self) -> bool {
        match self.kind {
            SummandKind::Quotient => self.ideal.is_zero(),
            SummandKind::Ideal => self.ideal.is_unit(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedModule {
    pub summands: Vec<Summand>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModuleError {
    #[error("summands live over different rings")]
    MixedRing,
    #[error("module has no summands (ring dimension unknown)")]
    Empty,
    #[error("the zero module has no {0}")]
    ZeroModule(&'static str),
}

impl GradedModule {
    /// Normalizes: drops zero summands, rewrites unit-ideal ideal-summands
    /// as free quotient summands.
    pub fn new(summands: Vec<Summand>) -> Result<Self, ModuleError> {
        let n = summands.first().ok_or(ModuleError::Empty)?.ideal.n();
        if summands.iter().any(|s| s.ideal.n() != n) {
            return Err(ModuleError::MixedRing);
        }
        let summands = summands
            .into_iter()
            .filter(|s| !s.is_zero_module())
            .map(|s| {
                if s.kind == SummandKind::Ideal && s.ideal.is_unit() {
                    Summand::quotient(MonomialIdeal::zero(s.ideal.n()), s.shift)
                } else {
                    s
                }
            })
            .collect();
        Ok(Self { summands })
    }

    pub fn cyclic(ideal: MonomialIdeal) -> Self {
        Self::new(vec![Summand::quotient(ideal, 0)]).expect("single summand is consistent")
    }

    pub fn of_ideal(ideal: MonomialIdeal) -> Self {
        Self {
            summands: vec![Summand::ideal(ideal, 0)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.iter().all(Summand::is_zero_module)
    }

    pub fn n(&self) -> Option<usize> {
        self.summands.first().map(|s| s.ideal.n())
    }

    pub fn direct_sum(mut self, other: GradedModule) -> Self {
        self.summands.extend(other.summands);
        self
    }

    pub fn shifted(&self, a: i64) -> Self {
        Self {
            summands: self
                .summands
                .iter()
                .map(|s| Summand {
                    kind: s.kind,
                    ideal: s.ideal.clone(),
                    shift: s.shift + a,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn normalization_drops_zero_and_rewrites_unit() {
        let m = GradedModule::new(vec![
            Summand::quotient(MonomialIdeal::unit(3), 2), // zero module
            Summand::ideal(MonomialIdeal::unit(3), -1),   // free R(-1)
            Summand::quotient(ideal(3, &[&[1, 0, 0]]), 0),
        ])
        .unwrap();
        assert_eq!(m.summands.len(), 2);
        assert!(m.summands[0].is_free());
        assert_eq!(m.summands[0].kind, SummandKind::Quotient);
        assert_eq!(m.summands[0].shift, -1);
    }

    #[test]
    fn mixed_ring_rejected() {
        let e = GradedModule::new(vec![
            Summand::quotient(MonomialIdeal::zero(2), 0),
            Summand::quotient(MonomialIdeal::zero(3), 0),
        ]);
        assert_eq!(e.unwrap_err(), ModuleError::MixedRing);
    }

    #[test]
    fn json_shape() {
        let m = GradedModule {
            summands: vec![Summand::quotient(ideal(2, &[&[1, 1]]), -2)],
        };
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(
            s,
            r#"{"summands":[{"kind":"quotient","ideal":{"n":2,"gens":[[1,1]]},"shift":-2}]}"#
        );
        let back: GradedModule = serde_json::from_str(&s).unwrap();
        assert_eq!(m, back);
    }
}
