//! Dimension filtrations of monomial modules, Schenzel style.
//!
//! For a cyclic summand `R/I` the largest submodule of dimension at most
//! `i` is `U_i/I`, where `U_i` intersects the irreducible components whose
//! quotient dimension exceeds `i`. A dimension factor `U_i/U_{i-1}` is
//! returned as an honest module when the new generators are independent
//! over `U_{i-1}` (pairwise lcms already inside), and otherwise by its
//! Hilbert series only — its Betti data is still available through the
//! subquotient kernel, which is all the classification needs.

use crate::ratfunc::RatFunc;

use super::betti::{projective_dimension, subquotient_betti};
use super::hilbert::hilbert_series_quotient;
use super::ideal::{total_degree, MonomialIdeal};
use super::module::{GradedModule, Summand, SummandKind};

/// One dimension factor `N_i = M_i / M_{i-1}` of the whole direct sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimensionFactor {
    Zero,
    /// The factor expressed inside the input class.
    Module(GradedModule),
    /// Inexpressible factor: exact Hilbert series and depth are still known.
    Raw { hs: RatFunc, depth: usize },
}

impl DimensionFactor {
    pub fn is_zero(&self) -> bool {
        matches!(self, DimensionFactor::Zero)
    }

    pub fn as_module(&self) -> Option<&GradedModule> {
        match self {
            DimensionFactor::Module(m) => Some(m),
            _ => None,
        }
    }
}

/// Filtration of one summand: `levels[i]` describes `M_i` as an ideal.
/// For a quotient summand `(R/I)(a)`, `M_i = (levels[i]/I)(a)`; for an
/// ideal summand `J(a)`, `M_i = levels[i](a)` as a subideal (zero below
/// dimension `n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandFiltration {
    pub summand: Summand,
    pub levels: Vec<MonomialIdeal>,
}

#[derive(Clone, Debug)]
pub struct FiltrationResult {
    pub n: usize,
    /// Per-dimension factors of the whole module, indices `0..=n`.
    pub factors: Vec<DimensionFactor>,
    pub summands: Vec<SummandFiltration>,
}

impl FiltrationResult {
    /// Least `i` with a nonzero factor of dimension `≤ cut` — used for the
    /// `M_1 = 0` style preconditions.
    pub fn has_factor_at_or_below(&self, cut: usize) -> bool {
        self.factors[..=cut.min(self.n)]
            .iter()
            .any(|f| !f.is_zero())
    }
}

/// Dimension filtration of a direct sum; filtrations are compatible with
/// direct sums, so factors merge dimensionwise.
pub fn dimension_filtration(m: &GradedModule) -> FiltrationResult {
    let n = m.n().unwrap_or(0);
    let mut factors: Vec<Vec<DimensionFactor>> = vec![Vec::new(); n + 1];
    let mut summands = Vec::new();
    for s in &m.summands {
        let (levels, parts) = match s.kind {
            SummandKind::Quotient => filter_quotient(s, n),
            SummandKind::Ideal => filter_ideal(s, n),
        };
        summands.push(SummandFiltration {
            summand: s.clone(),
            levels,
        });
        for (i, p) in parts.into_iter().enumerate() {
            if !p.is_zero() {
                factors[i].push(p);
            }
        }
    }
    let factors = factors
        .into_iter()
        .map(|parts| merge_parts(parts))
        .collect();
    FiltrationResult {
        n,
        factors,
        summands,
    }
}

fn merge_parts(parts: Vec<DimensionFactor>) -> DimensionFactor {
    if parts.is_empty() {
        return DimensionFactor::Zero;
    }
    let mut modules: Vec<GradedModule> = Vec::new();
    for p in &parts {
        match p {
            DimensionFactor::Module(m) => modules.push(m.clone()),
            _ => return merge_raw(parts),
        }
    }
    let mut acc = modules.remove(0);
    for m in modules {
        acc = acc.direct_sum(m);
    }
    DimensionFactor::Module(acc)
}

fn merge_raw(parts: Vec<DimensionFactor>) -> DimensionFactor {
    let mut hs = RatFunc::zero();
    let mut depth = usize::MAX;
    for p in parts {
        match p {
            DimensionFactor::Zero => {}
            DimensionFactor::Module(m) => {
                hs = hs.add(&super::hilbert::hilbert_series(&m));
                depth = depth.min(module_depth(&m));
            }
            DimensionFactor::Raw { hs: h, depth: d } => {
                hs = hs.add(&h);
                depth = depth.min(d);
            }
        }
    }
    DimensionFactor::Raw { hs, depth }
}

fn module_depth(m: &GradedModule) -> usize {
    let n = m.n().unwrap_or(0);
    let betti = super::betti::graded_betti(m);
    n - projective_dimension(&betti).unwrap_or(0)
}

/// Ideal summands are torsion-free: `M_i = 0` below dimension `n`.
fn filter_ideal(s: &Summand, n: usize) -> (Vec<MonomialIdeal>, Vec<DimensionFactor>) {
    let mut levels = vec![MonomialIdeal::zero(n); n + 1];
    levels[n] = s.ideal.clone();
    let mut parts = vec![DimensionFactor::Zero; n + 1];
    parts[n] = DimensionFactor::Module(GradedModule {
        summands: vec![s.clone()],
    });
    (levels, parts)
}

fn filter_quotient(s: &Summand, n: usize) -> (Vec<MonomialIdeal>, Vec<DimensionFactor>) {
    let i = &s.ideal;
    if i.is_zero() {
        // free summand: pure dimension n
        let mut levels = vec![MonomialIdeal::zero(n); n + 1];
        levels[n] = MonomialIdeal::unit(n);
        let mut parts = vec![DimensionFactor::Zero; n + 1];
        parts[n] = DimensionFactor::Module(GradedModule {
            summands: vec![s.clone()],
        });
        return (levels, parts);
    }
    let comps = i
        .irreducible_decomposition()
        .expect("proper nonzero by construction");
    let dims: Vec<usize> = comps
        .iter()
        .map(|c| n - c.support_vars().len())
        .collect();
    // U_i = intersection of components of dimension > i (unit if none)
    let mut levels: Vec<MonomialIdeal> = Vec::with_capacity(n + 1);
    for cut in 0..=n {
        let mut u = MonomialIdeal::unit(n);
        for (c, &d) in comps.iter().zip(&dims) {
            if d > cut {
                u = u.intersect(c);
            }
        }
        levels.push(u);
    }
    let mut parts = vec![DimensionFactor::Zero; n + 1];
    for cut in 0..=n {
        let prev = if cut == 0 { i } else { &levels[cut - 1] };
        let cur = &levels[cut];
        if cur == prev {
            continue;
        }
        parts[cut] = express_factor(cur, prev, s.shift);
    }
    (levels, parts)
}

/// Expresses `U/U'` (with `U' ⊂ U`) as a direct sum of shifted cyclic
/// quotients when the new generators have pairwise lcms inside `U'`; in
/// that case the multigraded supports of the cyclic pieces are disjoint.
fn express_factor(u: &MonomialIdeal, uprev: &MonomialIdeal, shift: i64) -> DimensionFactor {
    let newgens: Vec<&Vec<u32>> = u
        .gens()
        .iter()
        .filter(|g| !uprev.contains_monomial(g))
        .collect();
    if newgens.is_empty() {
        return DimensionFactor::Zero;
    }
    let independent = newgens.iter().enumerate().all(|(a, g)| {
        newgens.iter().skip(a + 1).all(|h| {
            let l = super::ideal::lcm_exp(g, h);
            uprev.contains_monomial(&l)
        })
    });
    if independent {
        let summands = newgens
            .iter()
            .map(|g| {
                let colon = uprev.colon_monomial(g);
                Summand::quotient(colon, shift - total_degree(g))
            })
            .collect();
        DimensionFactor::Module(GradedModule { summands })
    } else {
        let hs = hilbert_series_quotient(uprev)
            .sub(&hilbert_series_quotient(u))
            .shift(-shift);
        let betti = subquotient_betti(u, uprev).shift(-shift);
        let depth = u.n() - projective_dimension(&betti).unwrap_or(0);
        DimensionFactor::Raw { hs, depth }
    }
}
