//! Hilbert series by inclusion–exclusion over the lcm lattice.

use crate::laurent::LaurentPoly;
use crate::rat::rat_int;
use crate::ratfunc::RatFunc;

use super::homology::TaylorData;
use super::ideal::{total_degree, MonomialIdeal};
use super::module::{GradedModule, SummandKind};

/// `HS(R/I) · (1-t)^n = Σ_{S ⊆ gens} (-1)^{|S|} t^{deg lcm(S)}`.
pub fn quotient_hilbert_numerator(ideal: &MonomialIdeal) -> LaurentPoly {
    let taylor = TaylorData::new(ideal);
    let mut p = LaurentPoly::zero();
    for mask in 0..(1u32 << taylor.r) {
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        p.add_term(total_degree(&taylor.lcms[mask as usize]), rat_int(sign));
    }
    p
}

pub fn hilbert_series_quotient(ideal: &MonomialIdeal) -> RatFunc {
    RatFunc::new(quotient_hilbert_numerator(ideal), ideal.n() as u32)
}

/// Hilbert series of the whole direct sum, shifts included.
pub fn hilbert_series(m: &GradedModule) -> RatFunc {
    let mut hs = RatFunc::zero();
    for s in &m.summands {
        let n = s.ideal.n() as u32;
        let q = hilbert_series_quotient(&s.ideal);
        let part = match s.kind {
            SummandKind::Quotient => q,
            // HS(I) = HS(R) - HS(R/I)
            SummandKind::Ideal => RatFunc::geometric(n).sub(&q),
        };
        hs = hs.add(&part.shift(-s.shift));
    }
    hs
}
