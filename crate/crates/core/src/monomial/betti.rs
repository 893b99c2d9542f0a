//! Graded Betti tables in unshifted series form.
//!
//! Per summand: `β_i(R/I)` from the relative upper-Koszul complexes of the
//! pair `(R, I)`, `β_i(I) = β_{i+1}(R/I)` shifted down one column with the
//! generator row `β_0(I) = β_1(R/I)`, both realized uniformly through the
//! subquotient kernel. Shifts multiply by `t^{-a}`.

use crate::rat::rat_int;
use crate::ratfunc::RatFunc;
use crate::table::{Orientation, Table};

use super::homology::{degree_of, join_lattice, subquotient_tor_dims};
use super::ideal::MonomialIdeal;
use super::module::{GradedModule, SummandKind};

/// Betti table of the monomial subquotient `(J + W)/W` over a ring of
/// dimension `n = J.n()`.
pub fn subquotient_betti(j: &MonomialIdeal, w: &MonomialIdeal) -> Table {
    let n = j.n();
    let mut table = Table::zero(n, Orientation::V);
    for b in join_lattice(j, w) {
        let dims = subquotient_tor_dims(j, w, &b);
        let deg = degree_of(&b);
        for (i, &d) in dims.iter().enumerate() {
            if d > 0 {
                let cur = table.entry(i).add(&RatFunc::monomial(deg, rat_int(d as i64)));
                table.set_entry(i, cur);
            }
        }
    }
    table
}

/// Unshifted series-form Betti table of a direct sum.
pub fn graded_betti(m: &GradedModule) -> Table {
    let n = m.n().unwrap_or(0);
    let mut table = Table::zero(n, Orientation::V);
    for s in &m.summands {
        let part = match s.kind {
            SummandKind::Quotient => subquotient_betti(&MonomialIdeal::unit(n), &s.ideal),
            SummandKind::Ideal => subquotient_betti(&s.ideal, &MonomialIdeal::zero(n)),
        };
        let part = part.shift(-s.shift);
        table = table.add(&part).expect("same ring and orientation");
    }
    table
}

/// Projective dimension read off the Betti table; `None` for the zero module.
pub fn projective_dimension(betti: &Table) -> Option<usize> {
    betti.support().into_iter().max()
}
