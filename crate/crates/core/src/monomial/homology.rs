//! Multigraded homology kernels for the monomial engine.
//!
//! Two small complexes drive everything, both computed per multidegree with
//! exact integer rank computations (Bareiss):
//!
//! * Tor of a monomial subquotient `(J + W)/W` against `k`, from the Koszul
//!   complex: in multidegree `b` the complex is spanned by the square-free
//!   vectors `τ ≤ b` with `x^{b-τ} ∈ (J+W) ∖ W`, with the simplicial
//!   boundary. Betti degrees live on the join lattice of the generators.
//!
//! * Ext of `R/I` against `R`, from the dual of the Taylor complex: in
//!   multidegree `a` the complex is spanned by the generator subsets `S`
//!   with `lcm(S) ≥ -a`, with the dual Koszul-signed coboundary. The
//!   complex only depends on `b = max(-a, 0)`, and grouping the `a` with a
//!   common `b` contributes `t^{-|b|} / (1-t)^{n - |supp b|}` per cohomology
//!   dimension, which assembles the exact rational-function entries without
//!   any series window.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::bareiss_rank;

use super::ideal::{lcm_exp, total_degree, Exponent, MonomialIdeal};

/// Join closure of `{0} ∪ gens(J) ∪ gens(W)`: the candidate multidegrees of
/// Tor modules of the subquotient.
pub fn join_lattice(j: &MonomialIdeal, w: &MonomialIdeal) -> Vec<Exponent> {
    let n = j.n();
    let mut lattice: BTreeSet<Exponent> = BTreeSet::new();
    lattice.insert(vec![0; n]);
    for g in j.gens().iter().chain(w.gens()) {
        let mut new: Vec<Exponent> = Vec::new();
        for m in &lattice {
            new.push(lcm_exp(m, g));
        }
        lattice.extend(new);
    }
    lattice.into_iter().collect()
}

/// Dimensions of `Tor_i((J+W)/W, k)` in multidegree `b`, for `i = 0..=n`.
///
/// The chain group in homological degree `i` is spanned by the square-free
/// `τ ≤ min(b, 1)` of weight `i` with `x^{b-τ} ∈ (J+W) ∖ W`; the boundary
/// drops one variable at a time with alternating signs, killing faces whose
/// monomial falls into `W`.
pub fn subquotient_tor_dims(j: &MonomialIdeal, w: &MonomialIdeal, b: &[u32]) -> Vec<usize> {
    let n = j.n();
    let vars: Vec<usize> = (0..n).filter(|&v| b[v] > 0).collect();
    let in_module = |m: &[u32]| -> bool {
        (j.contains_monomial(m) || w.contains_monomial(m)) && !w.contains_monomial(m)
    };

    // Faces by weight; a face is a sorted list of variable indices.
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 2];
    let nv = vars.len();
    for mask in 0u64..(1 << nv) {
        let tau: Vec<usize> = (0..nv).filter(|&i| mask >> i & 1 == 1).map(|i| vars[i]).collect();
        let mut m = b.to_vec();
        for &v in &tau {
            m[v] -= 1;
        }
        if in_module(&m) {
            faces[tau.len()].push(tau);
        }
    }
    for level in faces.iter_mut() {
        level.sort();
    }

    // ranks[i] = rank of boundary C_i -> C_{i-1}
    let mut ranks = vec![0usize; n + 2];
    for i in 1..=n {
        ranks[i] = boundary_rank(&faces[i], &faces[i - 1], b, &|m| in_module(m));
    }
    (0..=n)
        .map(|i| faces[i].len() - ranks[i] - ranks[i + 1])
        .collect()
}

fn boundary_rank(
    top: &[Vec<usize>],
    bottom: &[Vec<usize>],
    b: &[u32],
    in_module: &dyn Fn(&[u32]) -> bool,
) -> usize {
    if top.is_empty() || bottom.is_empty() {
        return 0;
    }
    let index_of = |f: &Vec<usize>| bottom.binary_search(f).ok();
    let mut rows = vec![vec![BigInt::zero(); top.len()]; bottom.len()];
    for (col, tau) in top.iter().enumerate() {
        for (pos, &v) in tau.iter().enumerate() {
            let face: Vec<usize> = tau.iter().copied().filter(|&u| u != v).collect();
            // the face must itself carry a nonzero module element
            let mut m = b.to_vec();
            for &u in &face {
                m[u] -= 1;
            }
            if !in_module(&m) {
                continue;
            }
            if let Some(row) = index_of(&face) {
                rows[row][col] = if pos % 2 == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::from(-1)
                };
            }
        }
    }
    bareiss_rank(&rows)
}

/// Subset data of a Taylor complex: bitmask → lcm exponent.
pub struct TaylorData {
    pub r: usize,
    pub lcms: Vec<Exponent>, // indexed by bitmask, length 2^r
    pub n: usize,
}

impl TaylorData {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        let n = ideal.n();
        let gens = ideal.gens();
        let r = gens.len();
        assert!(r <= 20, "Taylor complex too large");
        let mut lcms = vec![vec![0u32; n]; 1 << r];
        for mask in 1u32..(1 << r) as u32 {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            lcms[mask as usize] = lcm_exp(&lcms[rest as usize], &gens[low]);
        }
        Self { r, lcms, n }
    }

    /// Componentwise max of all generator exponents.
    pub fn exponent_box(&self) -> Exponent {
        if self.r == 0 {
            return vec![0; self.n];
        }
        self.lcms[(1usize << self.r) - 1].clone()
    }

    /// Cohomology dimensions `h^i`, `i = 0..=r`, of the co-complex on the
    /// subsets `S` with `lcm(S) ≥ b`.
    pub fn cohomology_dims(&self, b: &[u32]) -> Vec<usize> {
        let geq = |a: &[u32]| a.iter().zip(b).all(|(x, y)| x >= y);
        let mut cells: Vec<Vec<u32>> = vec![Vec::new(); self.r + 2];
        for mask in 0..(1u32 << self.r) {
            if geq(&self.lcms[mask as usize]) {
                cells[mask.count_ones() as usize].push(mask);
            }
        }
        // ranks[i] = rank of d: C^{i-1} -> C^i
        let mut ranks = vec![0usize; self.r + 2];
        for i in 1..=self.r {
            ranks[i] = coboundary_rank(&cells[i - 1], &cells[i]);
        }
        (0..=self.r)
            .map(|i| cells[i].len() - ranks[i] - ranks[i + 1])
            .collect()
    }
}

fn coboundary_rank(from: &[u32], to: &[u32]) -> usize {
    if from.is_empty() || to.is_empty() {
        return 0;
    }
    let mut rows = vec![vec![BigInt::zero(); from.len()]; to.len()];
    for (col, &s) in from.iter().enumerate() {
        let mut j_bit = 1u32;
        while j_bit <= *to.last().unwrap() {
            if s & j_bit == 0 {
                let t = s | j_bit;
                if let Ok(row) = to.binary_search(&t) {
                    // sign: parity of the number of elements of s below j
                    let below = (s & (j_bit - 1)).count_ones();
                    rows[row][col] = if below % 2 == 0 {
                        BigInt::from(1)
                    } else {
                        BigInt::from(-1)
                    };
                }
            }
            j_bit <<= 1;
        }
    }
    bareiss_rank(&rows)
}

/// Graded (total-degree) Betti contribution: `t^{|b|}`.
pub fn degree_of(b: &[u32]) -> i64 {
    total_degree(b)
}

/// Does `a ≥ b` componentwise.
pub fn exp_geq(a: &[u32], b: &[u32]) -> bool {
    b.iter().zip(a).all(|(y, x)| x >= y)
}

/// All `b` in the box `[0, cap]` componentwise (inclusive).
pub fn exponent_box_iter(cap: &[u32]) -> Vec<Exponent> {
    let mut out: Vec<Exponent> = vec![vec![]];
    for &c in cap {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..=c).map(move |e| {
                    let mut m2 = m.clone();
                    m2.push(e);
                    m2
                })
            })
            .collect();
    }
    out
}

/// Membership in the subquotient `(J+W) ∖ W` for tests.
pub fn in_subquotient(j: &MonomialIdeal, w: &MonomialIdeal, m: &[u32]) -> bool {
    (j.contains_monomial(m) || w.contains_monomial(m)) && !w.contains_monomial(m)
}
