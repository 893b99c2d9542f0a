//! The invertible linear maps between table spaces.
//!
//! `L0` is graded local duality: it carries Ext tables to local cohomology
//! tables by reversing the entries and substituting `t ↦ t^{-1}` with a
//! `t^{-n}` twist. `L1` produces the Ext table of a projective-dimension-one
//! module from the Betti table of its transpose; `L2` is the change of
//! coordinates that exposes the `(α, α')` split of a pure table.

use thiserror::Error;

use crate::ratfunc::RatFunc;
use crate::table::{Orientation, Table};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("expected a table of orientation {expected:?}")]
    WrongOrientation { expected: Orientation },
    #[error("expected polynomial entries (a Betti-type table)")]
    NotPolynomial,
}

/// `L0(f_0, …, f_n) = t^{-n} (f_n(t^{-1}), …, f_0(t^{-1}))`, from `V` to `V*`.
pub fn l0(e: &Table) -> Result<Table, MapError> {
    if e.orientation() != Orientation::V {
        return Err(MapError::WrongOrientation {
            expected: Orientation::V,
        });
    }
    Ok(l0_raw(e).with_orientation(Orientation::Vstar))
}

/// Inverse of [`l0`], from `V*` back to `V`.
pub fn l0_inv(h: &Table) -> Result<Table, MapError> {
    if h.orientation() != Orientation::Vstar {
        return Err(MapError::WrongOrientation {
            expected: Orientation::Vstar,
        });
    }
    Ok(l0_raw(h).with_orientation(Orientation::V))
}

fn l0_raw(t: &Table) -> Table {
    let n = t.n();
    let entries = (0..=n)
        .map(|i| t.entry(n - i).invert_variable(-(n as i64)))
        .collect();
    Table::new(n, t.orientation(), entries).expect("sized by construction")
}

/// `L1(β_0, …, β_n) = (1-t)^{-n} (Σ_{i≥2} (-1)^i β_i, Σ_i (-1)^i β_i, 0, …)`.
pub fn l1(beta: &Table) -> Result<Table, MapError> {
    if beta.orientation() != Orientation::V {
        return Err(MapError::WrongOrientation {
            expected: Orientation::V,
        });
    }
    if beta.entries().iter().any(|f| !f.is_laurent_poly()) {
        return Err(MapError::NotPolynomial);
    }
    let n = beta.n();
    let mut alt_all = RatFunc::zero();
    let mut alt_tail = RatFunc::zero();
    for i in 0..=n {
        let term = if i % 2 == 0 {
            beta.entry(i).clone()
        } else {
            beta.entry(i).neg()
        };
        alt_all = alt_all.add(&term);
        if i >= 2 {
            alt_tail = alt_tail.add(&term);
        }
    }
    let mut entries = vec![RatFunc::zero(); n + 1];
    entries[0] = alt_tail.div_one_minus_t_pow(n as u32);
    entries[1] = alt_all.div_one_minus_t_pow(n as u32);
    Table::new(n, Orientation::V, entries).map_err(|_| unreachable!())
}

/// `L2(f_0, f_1, f_2, …, f_n) = (1-t)^n (f_1 - f_0, f_0, f_2, …, f_n)`.
pub fn l2(t: &Table) -> Result<Table, MapError> {
    if t.orientation() != Orientation::V {
        return Err(MapError::WrongOrientation {
            expected: Orientation::V,
        });
    }
    let n = t.n();
    let mut entries = Vec::with_capacity(n + 1);
    entries.push(t.entry(1).sub(t.entry(0)));
    entries.push(t.entry(0).clone());
    for i in 2..=n {
        entries.push(t.entry(i).clone());
    }
    let entries = entries
        .into_iter()
        .map(|f| f.mul_one_minus_t_pow(n as u32))
        .collect();
    Table::new(n, Orientation::V, entries).map_err(|_| unreachable!())
}

/// `L2^{-1}(g_0, g_1, g_2, …, g_n) = (1-t)^{-n} (g_1, g_0 + g_1, g_2, …, g_n)`.
pub fn l2_inv(t: &Table) -> Result<Table, MapError> {
    if t.orientation() != Orientation::V {
        return Err(MapError::WrongOrientation {
            expected: Orientation::V,
        });
    }
    let n = t.n();
    let mut entries = Vec::with_capacity(n + 1);
    entries.push(t.entry(1).clone());
    entries.push(t.entry(0).add(t.entry(1)));
    for i in 2..=n {
        entries.push(t.entry(i).clone());
    }
    let entries = entries
        .into_iter()
        .map(|f| f.div_one_minus_t_pow(n as u32))
        .collect();
    Table::new(n, Orientation::V, entries).map_err(|_| unreachable!())
}

/// Minimal presentation data of the transpose: from the Betti table of `N`,
/// the zeroth and first Betti series of `M = Tr(N)` are
/// `β_0(M)(t) = β_1(N)(t^{-1})` and `β_1(M)(t) = β_0(N)(t^{-1})`.
pub fn transpose_betti(beta_n: &Table) -> (RatFunc, RatFunc) {
    (
        beta_n.entry(1).invert_variable(0),
        beta_n.entry(0).invert_variable(0),
    )
}
