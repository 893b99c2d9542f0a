//! Exact rational linear programming: feasibility of `Ax = b, x ≥ 0`.
//!
//! Phase-one simplex over the rationals with Bland's anti-cycling rule, so
//! runs are deterministic and never cycle. An infeasible system yields a
//! Farkas witness `y` with `yᵀA ≤ 0` and `yᵀb > 0`, which callers re-check
//! and ship as a certificate.

use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// A feasible point `x ≥ 0` with `Ax = b`.
    Feasible(Vec<Rat>),
    /// Separating functional: `yᵀ A_j ≤ 0` for every column, `yᵀ b > 0`.
    Infeasible(Vec<Rat>),
}

/// An exact feasibility problem `Ax = b, x ≥ 0` with the matrix stored by
/// columns (one column per candidate generator, one row per coefficient
/// position).
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub columns: Vec<Vec<Rat>>,
    pub target: Vec<Rat>,
}

impl LpProblem {
    pub fn solve(&self) -> LpOutcome {
        feasible_nonneg(&self.columns, &self.target)
    }
}

/// Solves the feasibility problem for a dense column-major matrix:
/// `cols[j]` is the j-th column of `A`, `b` the right-hand side.
pub fn feasible_nonneg(cols: &[Vec<Rat>], b: &[Rat]) -> LpOutcome {
    let m = b.len();
    let n = cols.len();
    for c in cols {
        assert_eq!(c.len(), m, "column length mismatch");
    }

    // Tableau over columns [x_0..x_{n-1} | a_0..a_{m-1} | rhs], rows flipped
    // so the right-hand side is nonnegative; artificial basis.
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut flip = vec![false; m];
    for i in 0..m {
        let neg = b[i].is_negative();
        flip[i] = neg;
        let sign = if neg { -Rat::one() } else { Rat::one() };
        let mut row: Vec<Rat> = (0..n).map(|j| &cols[j][i] * &sign).collect();
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(&b[i] * &sign);
        t.push(row);
    }
    let rhs = n + m;
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Objective: minimize the sum of artificials. Reduced cost row
    // z_j = c_j - Σ_basic c_B · t_row_j with c artificial-indicator.
    let mut red = vec![Rat::zero(); n + m + 1];
    for j in 0..=n + m {
        let mut acc = if (n..n + m).contains(&j) {
            Rat::one()
        } else {
            Rat::zero()
        };
        for row in t.iter() {
            acc -= &row[j]; // all basic costs are 1 (artificials)
        }
        red[j] = acc;
    }

    loop {
        // Bland: entering column = least index with negative reduced cost.
        let Some(enter) = (0..n + m).find(|&j| red[j].is_negative()) else {
            break;
        };
        // Ratio test, least row index on ties (via least basis variable).
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[rhs] / &row[enter];
                let better = match &best {
                    None => true,
                    Some(r) => {
                        ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(li) = leave else {
            // Phase-one objective is bounded below by zero, so an unbounded
            // ray cannot occur; defensive stop.
            break;
        };
        pivot(&mut t, &mut red, li, enter, rhs);
        basis[li] = enter;
    }

    let objective = -red[rhs].clone();
    if objective.is_zero() {
        let mut x = vec![Rat::zero(); n];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < n {
                x[bv] = t[i][rhs].clone();
            }
        }
        LpOutcome::Feasible(x)
    } else {
        // Multipliers: y_i = 1 - (reduced cost of artificial i), then undo
        // the row flips.
        let y = (0..m)
            .map(|i| {
                let v = Rat::one() - &red[n + i];
                if flip[i] {
                    -v
                } else {
                    v
                }
            })
            .collect();
        LpOutcome::Infeasible(y)
    }
}

fn pivot(t: &mut [Vec<Rat>], red: &mut [Rat], li: usize, enter: usize, rhs: usize) {
    let inv = t[li][enter].recip();
    for j in 0..=rhs {
        let v = &t[li][j] * &inv;
        t[li][j] = v;
    }
    for i in 0..t.len() {
        if i != li && !t[i][enter].is_zero() {
            let f = t[i][enter].clone();
            for j in 0..=rhs {
                let v = &t[i][j] - &f * &t[li][j];
                t[i][j] = v;
            }
        }
    }
    if !red[enter].is_zero() {
        let f = red[enter].clone();
        for j in 0..=rhs {
            let v = &red[j] - &f * &t[li][j];
            red[j] = v;
        }
    }
}

/// Checks a Farkas witness against the system it was produced for.
pub fn verify_witness(cols: &[Vec<Rat>], b: &[Rat], y: &[Rat]) -> bool {
    let dot = |v: &[Rat]| -> Rat {
        let mut s = Rat::zero();
        for (a, b) in v.iter().zip(y) {
            s += a * b;
        }
        s
    };
    cols.iter().all(|c| !dot(c).is_positive()) && dot(b).is_positive()
}
