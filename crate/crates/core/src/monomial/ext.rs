//! Ext tables against the ring, and local cohomology via local duality.
//!
//! `Ext^i(R/I, R)` is the `i`-th cohomology of the dualized Taylor complex.
//! That complex is Z^n-graded and in multidegree `a` it only depends on the
//! clamp `b = max(-a, 0)`, which ranges over the finite exponent box of the
//! generators. Each clamp class contributes its cohomology dimensions times
//! `t^{-|b|}/(1-t)^{n-|supp b|}` to the series-form entry, so the table is
//! assembled exactly, entry by entry, with no series truncation anywhere.
//!
//! Ideal summands ride along through the two-term comparison with the
//! quotient: `E^0(I) = HS(R) + E^1(R/I)` and `E^i(I) = E^{i+1}(R/I)` for
//! `i ≥ 1`. A shift by `a` multiplies the Ext table by `t^{a}`.

use crate::rat::rat_int;
use crate::ratfunc::RatFunc;
use crate::table::{Orientation, Table};

use super::homology::{exponent_box_iter, TaylorData};
use super::ideal::{total_degree, MonomialIdeal};
use super::module::{GradedModule, SummandKind};
use crate::maps::l0;

/// Resource guard for the clamp-box enumeration.
const MAX_BOX: usize = 2_000_000;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ExtError {
    #[error("exponent box of size {0} exceeds the resource cap")]
    BoxTooLarge(usize),
}

/// Ext table of the cyclic quotient `R/I` (no shift).
pub fn ext_table_quotient(ideal: &MonomialIdeal) -> Result<Table, ExtError> {
    let n = ideal.n();
    let taylor = TaylorData::new(ideal);
    let cap = taylor.exponent_box();
    let box_size: usize = cap.iter().map(|&c| c as usize + 1).product();
    if box_size > MAX_BOX {
        return Err(ExtError::BoxTooLarge(box_size));
    }
    let mut entries = vec![RatFunc::zero(); n + 1];
    for b in exponent_box_iter(&cap) {
        let dims = taylor.cohomology_dims(&b);
        if dims.iter().all(|&d| d == 0) {
            continue;
        }
        let supp = b.iter().filter(|&&x| x > 0).count();
        let deg = -total_degree(&b);
        for (i, &d) in dims.iter().enumerate() {
            if d > 0 {
                assert!(i <= n, "nonzero Ext above the ring dimension");
                let part = RatFunc::new(
                    crate::laurent::LaurentPoly::monomial(deg, rat_int(d as i64)),
                    (n - supp) as u32,
                );
                entries[i] = entries[i].add(&part);
            }
        }
    }
    Ok(Table::new(n, Orientation::V, entries).expect("sized by construction"))
}

/// Ext table of a direct sum, shifts included.
pub fn ext_table(m: &GradedModule) -> Result<Table, ExtError> {
    let n = m.n().unwrap_or(0);
    let mut table = Table::zero(n, Orientation::V);
    for s in &m.summands {
        let q = ext_table_quotient(&s.ideal)?;
        let mut entries = vec![RatFunc::zero(); n + 1];
        match s.kind {
            SummandKind::Quotient => {
                entries.clone_from_slice(q.entries());
            }
            SummandKind::Ideal => {
                entries[0] = RatFunc::geometric(n as u32).add(q.entry(1));
                for i in 1..n {
                    entries[i] = q.entry(i + 1).clone();
                }
            }
        }
        let part = Table::new(n, Orientation::V, entries)
            .expect("sized by construction")
            .shift(s.shift);
        table = table.add(&part).expect("same ring and orientation");
    }
    Ok(table)
}

/// Local cohomology table `H(M) = L0(E(M))`.
pub fn local_coh_table(m: &GradedModule) -> Result<Table, ExtError> {
    let e = ext_table(m)?;
    Ok(l0(&e).expect("ext tables have orientation V"))
}
