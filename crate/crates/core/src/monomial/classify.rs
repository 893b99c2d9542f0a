//! Homological classification of modules in the input class.
//!
//! Dimension is the pole order of the Hilbert series at `t = 1`, depth comes
//! from the top of the Betti table (Auslander–Buchsbaum), and the
//! sequential conditions classify every nonzero dimension factor.

use serde::Serialize;

use super::betti::{graded_betti, projective_dimension};
use super::filtration::{dimension_filtration, DimensionFactor};
use super::hilbert::hilbert_series;
use super::module::{GradedModule, ModuleError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub dim: usize,
    pub depth: usize,
    #[serde(rename = "isCM")]
    pub is_cm: bool,
    #[serde(rename = "isACM")]
    pub is_acm: bool,
    #[serde(rename = "isSaCM")]
    pub is_sacm: bool,
    #[serde(rename = "isSeqCM")]
    pub is_seq_cm: bool,
}

pub fn classify(m: &GradedModule) -> Result<Classification, ModuleError> {
    if m.is_zero() || m.summands.is_empty() {
        return Err(ModuleError::ZeroModule("classification"));
    }
    let n = m.n().expect("nonempty");
    let (dim, depth) = dim_depth(m, n);

    let filtration = dimension_filtration(m);
    let mut is_seq_cm = true;
    let mut is_sacm = true;
    for (i, factor) in filtration.factors.iter().enumerate() {
        let fdepth = match factor {
            DimensionFactor::Zero => continue,
            DimensionFactor::Module(fm) => dim_depth(fm, n).1,
            DimensionFactor::Raw { depth, .. } => *depth,
        };
        // a nonzero factor at index i has dimension exactly i
        if fdepth != i {
            is_seq_cm = false;
        }
        if fdepth + 1 < i {
            is_sacm = false;
        }
    }

    Ok(Classification {
        dim,
        depth,
        is_cm: dim == depth,
        is_acm: depth + 1 == dim,
        is_sacm,
        is_seq_cm,
    })
}

/// `(dim, depth)` of a nonzero module: Hilbert pole order and `n - pd`.
pub fn dim_depth(m: &GradedModule, n: usize) -> (usize, usize) {
    let hs = hilbert_series(m);
    let dim = hs.pole_power() as usize;
    let pd = projective_dimension(&graded_betti(m)).expect("nonzero module");
    (dim, n - pd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ideal::MonomialIdeal;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn residue_field() {
        let c = classify(&GradedModule::cyclic(MonomialIdeal::maximal(3))).unwrap();
        assert_eq!((c.dim, c.depth), (0, 0));
        assert!(c.is_cm && c.is_sacm && c.is_seq_cm && !c.is_acm);
    }

    #[test]
    fn two_plane_quotient() {
        // dim 2, depth 1, aCM; factors CM so sequentially CM as well
        let c = classify(&GradedModule::cyclic(ideal(3, &[&[1, 1, 0], &[1, 0, 1]]))).unwrap();
        assert_eq!((c.dim, c.depth), (2, 1));
        assert!(!c.is_cm && c.is_acm && c.is_sacm && c.is_seq_cm);
    }

    #[test]
    fn table_one_module() {
        // dim 1, depth 0, aCM
        let c = classify(&GradedModule::cyclic(ideal(
            3,
            &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 3, 0]],
        )))
        .unwrap();
        assert_eq!((c.dim, c.depth), (1, 0));
        assert!(c.is_acm && !c.is_cm);
        assert!(c.is_sacm && c.is_seq_cm);
    }

    #[test]
    fn free_module() {
        let c = classify(&GradedModule::cyclic(MonomialIdeal::zero(3))).unwrap();
        assert_eq!((c.dim, c.depth), (3, 3));
        assert!(c.is_cm);
    }

    #[test]
    fn zero_module_rejected() {
        let z = GradedModule::new(vec![super::super::module::Summand::quotient(
            MonomialIdeal::unit(3),
            0,
        )])
        .unwrap();
        assert!(classify(&z).is_err());
    }

    #[test]
    fn non_sacm_example() {
        // R/(x1) ⊕ k has factors k (CM) and R/(x1) (CM): sequentially CM,
        // while the module itself is neither CM nor aCM (dim 2, depth 0).
        let m = GradedModule::cyclic(ideal(3, &[&[1, 0, 0]]))
            .direct_sum(GradedModule::cyclic(MonomialIdeal::maximal(3)));
        let c = classify(&m).unwrap();
        assert_eq!((c.dim, c.depth), (2, 0));
        assert!(!c.is_cm && !c.is_acm && c.is_sacm && c.is_seq_cm);
    }
}
