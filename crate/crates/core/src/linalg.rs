//! Exact linear algebra over the rationals.
//!
//! Dense elimination only; every matrix in this crate is small (boundary
//! maps of complexes on a handful of cells, LP tableaus over short windows).
//! Integer matrices go through fraction-free Bareiss elimination, rational
//! ones through ordinary Gaussian elimination.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rat::Rat;

/// Rank of an integer matrix by Bareiss fraction-free elimination.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..n {
        if rank == m {
            break;
        }
        // pivot: first nonzero in this column at or below `rank`
        let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..m {
            if r == rank {
                continue;
            }
            for c in 0..n {
                if c == col {
                    continue;
                }
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = &v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let n = rows[0].len();
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].recip();
        for c in col..n {
            let v = &a[rank][c] * &inv;
            a[rank][c] = v;
        }
        for r in 0..m {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let v = &a[r][c] - &f * &a[rank][c];
                    a[r][c] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Nullspace dimension of a rational matrix with `cols` columns.
pub fn nullspace_dim(rows: &[Vec<Rat>], cols: usize) -> usize {
    cols - rank(rows)
}

/// Rank of a signed incidence matrix (entries -1, 0, 1) given sparsely as
/// `(row, col, sign)` triples.
pub fn incidence_rank(nrows: usize, ncols: usize, entries: &[(usize, usize, i8)]) -> usize {
    if nrows == 0 || ncols == 0 {
        return 0;
    }
    let mut rows = vec![vec![BigInt::zero(); ncols]; nrows];
    for &(r, c, s) in entries {
        rows[r][c] = BigInt::from(s);
    }
    bareiss_rank(&rows)
}

/// Determinant sign helper used by tests.
pub fn is_integer_matrix(rows: &[Vec<Rat>]) -> bool {
    rows.iter()
        .flatten()
        .all(|x| x.denom().abs() == BigInt::from(1))
}
