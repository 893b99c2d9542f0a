//! Assembly and decomposition of local cohomology tables of sequentially
//! almost Cohen-Macaulay modules.
//!
//! The table of such a module is the sum of the tables of its dimension
//! factors; each nonzero factor of dimension `e` is CM or almost CM, so its
//! table is concentrated in entries `e-1, e`. Factors of dimension at most
//! one are matched against the reference tables of `k(a)` and `k[x](a)`;
//! factors of dimension `e ≥ 2` are carried through local duality at
//! ambient ring size `e` and decomposed over the generator families by
//! exact LP.

use num_traits::{One, Signed};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::decomp::{DecompError, MembershipOutcome};
use crate::laurent::LaurentPoly;
use crate::maps::{l0, l0_inv};
use crate::monomial::{local_coh_table, GradedModule, MonomialIdeal, Summand};
use crate::pure::{enumerate_generators, Family, GeneratorRef};
use crate::rat::{rat_to_string, Rat};
use crate::ratfunc::RatFunc;
use crate::table::{Orientation, Table, TableError};

#[derive(Debug, Error)]
pub enum SacmError {
    #[error("bad factor shape: {0}")]
    BadFactorShape(String),
    #[error("dropping a nonzero high entry")]
    NonzeroDroppedEntry,
    #[error("not sequentially almost Cohen-Macaulay: {0}")]
    NotSaCM(String),
    #[error("factor decomposition failed: {0}")]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Map(#[from] crate::maps::MapError),
    #[error(transparent)]
    Ext(#[from] crate::monomial::ExtError),
}

/// The nonzero dimension factors of a module: `(e, H-table of N_e)`.
pub type FactorList = Vec<(usize, Table)>;

fn check_factor_shape(e: usize, t: &Table) -> Result<(), SacmError> {
    if t.orientation() != Orientation::Vstar {
        return Err(SacmError::BadFactorShape(
            "factor tables carry orientation Vstar".into(),
        ));
    }
    if e > t.n() {
        return Err(SacmError::BadFactorShape(format!(
            "factor dimension {e} exceeds ring dimension {}",
            t.n()
        )));
    }
    for (i, f) in t.entries().iter().enumerate() {
        let legal = i == e || (e >= 1 && i == e - 1);
        if !legal && !f.is_zero() {
            return Err(SacmError::BadFactorShape(format!(
                "dimension-{e} factor has a nonzero entry at {i}"
            )));
        }
    }
    Ok(())
}

/// Entrywise sum of the factor tables: the table of the saCM module itself.
pub fn sacm_assemble(factors: &FactorList) -> Result<Table, SacmError> {
    let mut acc: Option<Table> = None;
    for (e, t) in factors {
        check_factor_shape(*e, t)?;
        acc = Some(match acc {
            None => t.clone(),
            Some(a) => a.add(t)?,
        });
    }
    acc.ok_or_else(|| SacmError::BadFactorShape("empty factor list".into()))
}

/// Reshape between ring sizes: scalar multiple with zero entries appended
/// at the positions above the smaller ring dimension.
pub fn regrade(t: &Table, n_from: usize, n_to: usize, scalar: &Rat) -> Result<Table, SacmError> {
    if n_from != t.n() {
        return Err(SacmError::BadFactorShape(format!(
            "table has dimension {}, not {n_from}",
            t.n()
        )));
    }
    if !scalar.is_positive() {
        return Err(SacmError::BadFactorShape(
            "regrade scalar must be positive".into(),
        ));
    }
    if n_to < n_from {
        for i in (n_to + 1)..=n_from {
            if !t.entry(i).is_zero() {
                return Err(SacmError::NonzeroDroppedEntry);
            }
        }
    }
    let mut entries = Vec::with_capacity(n_to + 1);
    for i in 0..=n_to {
        if i <= n_from {
            entries.push(t.entry(i).scale(scalar));
        } else {
            entries.push(RatFunc::zero());
        }
    }
    Ok(Table::new(n_to, t.orientation(), entries).expect("sized by construction"))
}

/// A generator of the saCM cone: the residue field, the polynomial line, or
/// a projective-dimension-one family generator at its ambient ring size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SacmGenerator {
    /// `k(a)`
    K { a: i64 },
    /// `k[x](a)`
    Kx { a: i64 },
    /// A pd-≤1 generator over `S_e`, viewed along the regrade.
    B(GeneratorRef),
}

impl SacmGenerator {
    /// Reference local cohomology table over a ring of dimension `n`,
    /// derived from the monomial engine on `R/m` and `R/(x_2, …, x_n)`.
    pub fn h_table(&self, n: usize) -> Result<Table, SacmError> {
        match self {
            SacmGenerator::K { a } => {
                let m = GradedModule::new(vec![Summand::quotient(MonomialIdeal::maximal(n), *a)])
                    .expect("single summand");
                Ok(local_coh_table(&m)?)
            }
            SacmGenerator::Kx { a } => {
                let gens: Vec<Vec<u32>> = (1..n)
                    .map(|v| {
                        let mut e = vec![0; n];
                        e[v] = 1;
                        e
                    })
                    .collect();
                let line = MonomialIdeal::new(n, gens).expect("consistent exponents");
                let m = GradedModule::new(vec![Summand::quotient(line, *a)])
                    .expect("single summand");
                Ok(local_coh_table(&m)?)
            }
            SacmGenerator::B(g) => {
                let e = g.e();
                let he = l0(&crate::pure::generator_table(g, e).map_err(DecompError::from)?)?;
                regrade(&he, e, n, &Rat::one())
            }
        }
    }
}

impl Serialize for SacmGenerator {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            SacmGenerator::K { a } => {
                let mut st = serializer.serialize_struct("SacmGenerator", 2)?;
                st.serialize_field("family", "K")?;
                st.serialize_field("params", &[*a])?;
                st.end()
            }
            SacmGenerator::Kx { a } => {
                let mut st = serializer.serialize_struct("SacmGenerator", 2)?;
                st.serialize_field("family", "Kx")?;
                st.serialize_field("params", &[*a])?;
                st.end()
            }
            SacmGenerator::B(g) => g.serialize(serializer),
        }
    }
}

/// Decomposes an saCM module, given by its dimension factors, over the
/// generator set: `k(a)` and `k[x](a)` for the small factors, and the
/// pd-≤1 families at ambient size `e` for a factor of dimension `e ≥ 2`.
/// Returns the terms and the recomposition residual against the assembled
/// table (the zero table for a valid certificate).
pub fn decompose_sacm(
    factors: &FactorList,
) -> Result<(Vec<(Rat, SacmGenerator)>, Table), SacmError> {
    let assembled = sacm_assemble(factors)?;
    let n = assembled.n();
    let mut terms: Vec<(Rat, SacmGenerator)> = Vec::new();
    for (e, t) in factors {
        match e {
            0 => terms.extend(decompose_dim0(t)?),
            1 => terms.extend(decompose_dim1(t)?),
            _ => terms.extend(decompose_dim_e(*e, t)?),
        }
    }
    let mut recomposed = Table::zero(n, Orientation::Vstar);
    for (c, g) in &terms {
        recomposed = recomposed.add(&g.h_table(n)?.scale(c))?;
    }
    let residual = assembled.sub(&recomposed)?;
    Ok((terms, residual))
}

/// A finite-length factor is a nonnegative combination of `k(a)` tables.
fn decompose_dim0(t: &Table) -> Result<Vec<(Rat, SacmGenerator)>, SacmError> {
    let h0 = t.entry(0);
    if !h0.is_laurent_poly() {
        return Err(SacmError::NotSaCM(
            "finite-length factor with non-polynomial entry".into(),
        ));
    }
    poly_terms(h0.numerator(), |a| SacmGenerator::K { a })
}

fn poly_terms(
    p: &LaurentPoly,
    make: impl Fn(i64) -> SacmGenerator,
) -> Result<Vec<(Rat, SacmGenerator)>, SacmError> {
    let mut out = Vec::new();
    for (&d, c) in p.terms() {
        if c.is_negative() {
            return Err(SacmError::NotSaCM(format!(
                "negative coefficient {} at degree {d}",
                rat_to_string(c)
            )));
        }
        out.push((c.clone(), make(-d)));
    }
    Ok(out)
}

/// A dimension-one factor decomposes over `k(a)` (entry 0) and `k[x](a)`
/// (entry 1): the entry-1 series is `p(t) · (-1/(1-t))` for a nonnegative
/// Laurent polynomial `p`.
fn decompose_dim1(t: &Table) -> Result<Vec<(Rat, SacmGenerator)>, SacmError> {
    let mut terms = Vec::new();
    let h0 = t.entry(0);
    if !h0.is_laurent_poly() {
        return Err(SacmError::NotSaCM(
            "entry 0 of a dimension-1 factor must have finite length".into(),
        ));
    }
    terms.extend(poly_terms(h0.numerator(), |a| SacmGenerator::K { a })?);
    let h1 = t.entry(1);
    let p = h1.mul_one_minus_t_pow(1).neg();
    if !p.is_laurent_poly() {
        return Err(SacmError::NotSaCM(
            "entry 1 of a dimension-1 factor is not a k[x] combination".into(),
        ));
    }
    terms.extend(poly_terms(p.numerator(), |a| SacmGenerator::Kx { a })?);
    Ok(terms)
}

/// A factor of dimension `e ≥ 2` is carried to Ext form over `S_e` and
/// decomposed by exact LP over the enumerated families at ambient `e`.
fn decompose_dim_e(e: usize, t: &Table) -> Result<Vec<(Rat, SacmGenerator)>, SacmError> {
    // strip the zero entries above e
    let stripped = regrade(t, t.n(), e, &Rat::one())?;
    let target = l0_inv(&stripped)?;
    // window from the numerator support over the common pole power
    let pole = target
        .entries()
        .iter()
        .map(RatFunc::pole_power)
        .max()
        .unwrap_or(0)
        .max(e as u32);
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for f in target.entries() {
        let num = f.numerator_at_pole(pole);
        if let (Some(a), Some(b)) = (num.min_degree(), num.max_degree()) {
            lo = lo.min(a);
            hi = hi.max(b);
        }
    }
    if lo > hi {
        return Ok(Vec::new()); // zero factor
    }
    let families: &[Family] = if e >= 3 {
        &[Family::A1, Family::A2, Family::A3, Family::A4]
    } else {
        &[Family::A1, Family::A2, Family::A4]
    };
    // widen twice before giving up; membership certificates stay exact
    for attempt in 0..3i64 {
        let margin = attempt * e as i64;
        let gens = enumerate_generators(lo - margin, hi + e as i64 + margin, e, families)
            .map_err(DecompError::from)?;
        match crate::decomp::cone_membership_lp(&target, &gens)? {
            MembershipOutcome::Member(d) => {
                if !d.residual_zero() {
                    return Err(SacmError::NotSaCM(
                        "factor recomposition left a residual".into(),
                    ));
                }
                return Ok(d
                    .terms
                    .into_iter()
                    .map(|(c, g)| match g {
                        crate::decomp::DecompGenerator::Family(f) => (c, SacmGenerator::B(f)),
                        crate::decomp::DecompGenerator::Pure(_) => {
                            unreachable!("membership emits family terms")
                        }
                    })
                    .collect());
            }
            MembershipOutcome::Infeasible(_) => continue,
        }
    }
    Err(SacmError::NotSaCM(format!(
        "dimension-{e} factor did not decompose inside the enumeration window"
    )))
}
