//! Cone decompositions of tables.
//!
//! The greedy bottom-strand elimination writes a Betti table as a positive
//! combination of pure tables; splitting and lengthening moves relate pure
//! tables of neighbouring degree sequences; the reduction to condition-𝒫
//! sequences and general cone membership run through the exact LP, which
//! certifies both directions (a positive combination, or a separating
//! functional). Everything recomposes exactly and the residual of a valid
//! certificate is the zero table.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::lp::{feasible_nonneg, verify_witness, LpOutcome};
use crate::maps::{l1, l2};
use crate::monomial::{ext_table, graded_betti, GradedModule, SummandKind};
use crate::pure::{
    generator_table, has_property_p, pi_poly, pure_betti, DegreeSequence, GeneratorRef,
};
use crate::rat::{rat_to_string, Rat};
use crate::ratfunc::RatFunc;
use crate::table::{Orientation, Table};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompError {
    #[error("table is not decomposable: {0}")]
    NotDecomposable(String),
    #[error("no integer strictly between the chosen degrees")]
    NoGap,
    #[error("degree sequence length out of range for this move")]
    LengthOutOfRange,
    #[error("LP infeasible where feasibility is guaranteed: {0}")]
    LPInfeasible(String),
    #[error("input is not of projective dimension at most one: {0}")]
    NotPd1(String),
    #[error("table does not have the expected shape: {0}")]
    WrongShape(String),
    #[error(transparent)]
    Pure(#[from] crate::pure::PureError),
    #[error(transparent)]
    Table(#[from] crate::table::TableError),
    #[error(transparent)]
    Map(#[from] crate::maps::MapError),
    #[error(transparent)]
    Ext(#[from] crate::monomial::ExtError),
}

/// A term of a decomposition certificate: either a pure degree sequence or
/// a named generator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DecompGenerator {
    Pure(DegreeSequence),
    Family(GeneratorRef),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub terms: Vec<(Rat, DecompGenerator)>,
    pub residual: Table,
}

impl Decomposition {
    pub fn residual_zero(&self) -> bool {
        self.residual.is_zero()
    }

    /// Sums coefficients of equal generators and sorts terms canonically.
    pub fn canonicalize(mut self) -> Self {
        let mut map: BTreeMap<DecompGenerator, Rat> = BTreeMap::new();
        for (c, g) in self.terms {
            *map.entry(g).or_insert_with(Rat::zero) += c;
        }
        self.terms = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| (c, g))
            .collect();
        self
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum GenRepr<'a> {
            Family(&'a GeneratorRef),
            Pure { degrees: &'a [i64], n: usize },
        }
        #[derive(Serialize)]
        struct TermRepr<'a> {
            coeff: String,
            generator: GenRepr<'a>,
        }
        let mut st = serializer.serialize_struct("Decomposition", 2)?;
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(c, g)| TermRepr {
                coeff: rat_to_string(c),
                generator: match g {
                    DecompGenerator::Family(f) => GenRepr::Family(f),
                    DecompGenerator::Pure(d) => GenRepr::Pure {
                        degrees: d.degrees(),
                        n: d.n(),
                    },
                },
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.serialize_field("residual_zero", &self.residual_zero())?;
        st.end()
    }
}

/// Parse-side image of a serialized decomposition; the residual itself is
/// recomputed by re-verification, only its vanishing is recorded.
#[derive(Debug, Deserialize)]
pub struct DecompositionDoc {
    pub terms: Vec<TermDoc>,
    pub residual_zero: bool,
}

#[derive(Debug, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    pub generator: serde_json::Value,
}

impl TermDoc {
    pub fn parse(&self) -> Result<(Rat, DecompGenerator), String> {
        let c = crate::rat::parse_rat(&self.coeff)?;
        if self.generator.get("family").is_some() {
            let g: GeneratorRef =
                serde_json::from_value(self.generator.clone()).map_err(|e| e.to_string())?;
            Ok((c, DecompGenerator::Family(g)))
        } else {
            #[derive(Deserialize)]
            struct PureRepr {
                degrees: Vec<i64>,
                n: usize,
            }
            let p: PureRepr =
                serde_json::from_value(self.generator.clone()).map_err(|e| e.to_string())?;
            let d = DegreeSequence::new(p.degrees, p.n).map_err(|e| e.to_string())?;
            Ok((c, DecompGenerator::Pure(d)))
        }
    }
}

/// Boij–Söderberg greedy decomposition of a Betti-type table: repeatedly
/// subtract the largest multiple of the pure table of the bottom strand.
pub fn bs_greedy(beta: &Table) -> Result<Decomposition, DecompError> {
    validate_betti_like(beta)?;
    let n = beta.n();
    let mut rem = beta.clone();
    let mut terms = Vec::new();
    let mut budget: usize = beta
        .entries()
        .iter()
        .map(|f| f.numerator().num_terms())
        .sum::<usize>()
        + 1;
    while !rem.is_zero() {
        if budget == 0 {
            return Err(DecompError::NotDecomposable(
                "greedy did not terminate".into(),
            ));
        }
        budget -= 1;
        let support = rem.support();
        let top = *support.last().expect("nonzero table");
        if support.len() != top + 1 {
            return Err(DecompError::NotDecomposable(format!(
                "nonzero columns {support:?} are not a prefix"
            )));
        }
        let mins: Vec<i64> = (0..=top)
            .map(|i| {
                rem.entry(i)
                    .numerator()
                    .min_degree()
                    .expect("nonzero column")
            })
            .collect();
        if mins.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DecompError::NotDecomposable(format!(
                "bottom strand {mins:?} is not strictly increasing"
            )));
        }
        let d = DegreeSequence::new(mins.clone(), n)
            .map_err(|e| DecompError::NotDecomposable(e.to_string()))?;
        let pure = pure_betti(&d);
        let mut coeff: Option<Rat> = None;
        for (i, &deg) in mins.iter().enumerate() {
            let have = rem.entry(i).numerator().coeff(deg);
            let unit = pure.entry(i).numerator().coeff(deg);
            let ratio = have / unit;
            coeff = Some(match coeff {
                None => ratio,
                Some(c) => c.min(ratio),
            });
        }
        let c = coeff.expect("strand is nonempty");
        if !c.is_positive() {
            return Err(DecompError::NotDecomposable(
                "greedy coefficient is not positive".into(),
            ));
        }
        rem = rem.sub(&pure.scale(&c))?;
        if rem
            .entries()
            .iter()
            .any(|f| f.numerator().terms().any(|(_, c)| c.is_negative()))
        {
            return Err(DecompError::NotDecomposable(
                "greedy produced a negative entry".into(),
            ));
        }
        terms.push((c, DecompGenerator::Pure(d)));
    }
    Ok(Decomposition {
        terms,
        residual: rem,
    })
}

fn validate_betti_like(beta: &Table) -> Result<(), DecompError> {
    if beta.orientation() != Orientation::V {
        return Err(DecompError::WrongShape("expected orientation V".into()));
    }
    for (i, f) in beta.entries().iter().enumerate() {
        if !f.is_laurent_poly() {
            return Err(DecompError::WrongShape(format!(
                "entry {i} is not a polynomial"
            )));
        }
        if f.numerator().terms().any(|(_, c)| c.is_negative()) {
            return Err(DecompError::WrongShape(format!(
                "entry {i} has a negative coefficient"
            )));
        }
    }
    Ok(())
}

/// One splitting move: for `d_i < a < d_{i+1}`,
/// `π_d = c_1 π_{d'} + c_2 π_{d''}` with `c_1, c_2 > 0`, where `d'`
/// replaces `d_{i+1}` by `a` and `d''` replaces `d_i` by `a`.
pub fn split_step(
    d: &DegreeSequence,
    i: usize,
    a: i64,
) -> Result<(Rat, DegreeSequence, Rat, DegreeSequence), DecompError> {
    let s = d.s();
    if i + 1 > s || !(d.d(i) < a && a < d.d(i + 1)) {
        return Err(DecompError::NoGap);
    }
    let mut dp = d.degrees().to_vec();
    dp[i + 1] = a;
    let mut dpp = d.degrees().to_vec();
    dpp[i] = a;
    let dp = DegreeSequence::new(dp, d.n()).expect("still strictly increasing");
    let dpp = DegreeSequence::new(dpp, d.n()).expect("still strictly increasing");

    let pi = pi_poly(d);
    let pi1 = pi_poly(&dp);
    let pi2 = pi_poly(&dpp);
    // anchor degrees: `a` (absent from π_d) and an endpoint kept by all three
    let pivot = if i >= 1 { d.d(0) } else { d.d(s) };
    let (c1, c2) = solve_two_by_two(&pi1, &pi2, &pi, a, pivot)
        .ok_or_else(|| DecompError::NotDecomposable("singular split system".into()))?;
    assert_eq!(pi1.scale(&c1).add(&pi2.scale(&c2)), pi);
    if !c1.is_positive() || !c2.is_positive() {
        return Err(DecompError::NotDecomposable(
            "split coefficients are not positive".into(),
        ));
    }
    Ok((c1, dp, c2, dpp))
}

/// Solves `x·p + y·q = r` from the coefficients at two degrees.
fn solve_two_by_two(
    p: &LaurentPoly,
    q: &LaurentPoly,
    r: &LaurentPoly,
    deg1: i64,
    deg2: i64,
) -> Option<(Rat, Rat)> {
    let (a11, a12, b1) = (p.coeff(deg1), q.coeff(deg1), r.coeff(deg1));
    let (a21, a22, b2) = (p.coeff(deg2), q.coeff(deg2), r.coeff(deg2));
    let det = &a11 * &a22 - &a12 * &a21;
    if det.is_zero() {
        return None;
    }
    let x = (&b1 * &a22 - &a12 * &b2) / &det;
    let y = (&a11 * &b2 - &b1 * &a21) / &det;
    Some((x, y))
}

/// One lengthening move for `2 ≤ s ≤ n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthenStep {
    /// Underlying solution of `c_1 π_d + c_2 π_{d'} = π_{d''}`, `c_1 > 0 > c_2`.
    pub c1: Rat,
    pub c2: Rat,
    /// Rearranged positive coefficients with `π_d = c1_pos π_{d'} + c2_pos π_{d''}`.
    pub c1_pos: Rat,
    pub c2_pos: Rat,
    pub d_prime: DegreeSequence,
    pub d_second: DegreeSequence,
}

pub fn lengthen_step(d: &DegreeSequence) -> Result<LengthenStep, DecompError> {
    let s = d.s();
    if s < 2 || s + 1 > d.n() {
        return Err(DecompError::LengthOutOfRange);
    }
    let ds = d.d(s);
    let mut dp = d.degrees().to_vec();
    dp[s] = ds + 1;
    let mut dpp = d.degrees().to_vec();
    dpp.push(ds + 1);
    let dp = DegreeSequence::new(dp, d.n()).expect("strictly increasing");
    let dpp = DegreeSequence::new(dpp, d.n()).expect("strictly increasing");

    let pi = pi_poly(d);
    let pi1 = pi_poly(&dp);
    let pi2 = pi_poly(&dpp);
    let (c1, c2) = solve_two_by_two(&pi, &pi1, &pi2, ds, ds + 1)
        .ok_or_else(|| DecompError::NotDecomposable("singular lengthen system".into()))?;
    assert_eq!(pi.scale(&c1).add(&pi1.scale(&c2)), pi2);
    if !c1.is_positive() || !c2.is_negative() {
        return Err(DecompError::NotDecomposable(
            "lengthen coefficients have unexpected signs".into(),
        ));
    }
    let c1_pos = -&c2 / &c1;
    let c2_pos = c1.recip();
    Ok(LengthenStep {
        c1,
        c2,
        c1_pos,
        c2_pos,
        d_prime: dp,
        d_second: dpp,
    })
}

/// `b_d = L2 L1 (pure Betti table of d)`: the `(α_d, α'_d, 0, …, 0)` form.
pub fn b_table_of_sequence(d: &DegreeSequence) -> Table {
    l2(&l1(&pure_betti(d)).expect("pure tables are polynomial")).expect("orientation V")
}

fn b_table_of_generator(g: &GeneratorRef, n: usize) -> Result<Table, DecompError> {
    Ok(l2(&generator_table(g, n)?)?)
}

/// Classifies a property-𝒫 sequence into its generator family at ambient
/// ring size `d.n()`.
pub fn property_p_generator(d: &DegreeSequence) -> Result<GeneratorRef, DecompError> {
    if !has_property_p(d) {
        return Err(DecompError::WrongShape(format!(
            "{:?} does not satisfy condition P",
            d.degrees()
        )));
    }
    let n = d.n();
    let s = d.s();
    let d0 = d.d(0);
    let g = if s == 1 {
        GeneratorRef::A1 { d0, e: n }
    } else if s == n {
        GeneratorRef::A2 {
            d0,
            d2: d.d(2),
            e: n,
        }
    } else {
        GeneratorRef::A3 {
            d0,
            d2: d.d(2),
            s,
            e: n,
        }
    };
    Ok(g)
}

/// Decomposes `b_d` as a positive combination of property-𝒫 generators of
/// the same length inside the finite window `e_0 ∈ [d_0, d_1-1]`,
/// `e_2 ∈ [d_2, d_s - s + 2]`, by exact LP over the candidate set.
pub fn reduce_to_p(d: &DegreeSequence) -> Result<Decomposition, DecompError> {
    if d.s() == 0 {
        return Err(DecompError::WrongShape(
            "free strands have no property-P reduction".into(),
        ));
    }
    let n = d.n();
    let target = b_table_of_sequence(d);
    if has_property_p(d) {
        let g = property_p_generator(d)?;
        let table = b_table_of_generator(&g, n)?;
        let residual = target.sub(&table)?;
        return Ok(Decomposition {
            terms: vec![(Rat::one(), DecompGenerator::Family(g))],
            residual,
        });
    }
    let s = d.s();
    let mut candidates = Vec::new();
    for e0 in d.d(0)..d.d(1) {
        if s == 1 {
            candidates.push(DegreeSequence::new(vec![e0, e0 + 1], n).expect("increasing"));
        } else {
            for e2 in d.d(2)..=(d.d(s) - s as i64 + 2) {
                if e2 < e0 + 2 {
                    continue;
                }
                let mut degs = vec![e0, e0 + 1];
                for j in 2..=s {
                    degs.push(e2 + j as i64 - 2);
                }
                candidates.push(DegreeSequence::new(degs, n).expect("increasing"));
            }
        }
    }
    let gens: Vec<GeneratorRef> = candidates
        .iter()
        .map(property_p_generator)
        .collect::<Result<_, _>>()?;
    let tables: Vec<Table> = gens
        .iter()
        .map(|g| b_table_of_generator(g, n))
        .collect::<Result<_, _>>()?;
    let solution = solve_membership(&target, &tables).map_err(|_| {
        DecompError::LPInfeasible(format!(
            "property-P window for {:?} (implementation bug)",
            d.degrees()
        ))
    })?;
    let mut terms = Vec::new();
    let mut recomposed = Table::zero(n, Orientation::V);
    for (c, (g, t)) in solution.into_iter().zip(gens.iter().zip(&tables)) {
        if c.is_positive() {
            recomposed = recomposed.add(&t.scale(&c))?;
            terms.push((c, DecompGenerator::Family(g.clone())));
        }
    }
    let residual = target.sub(&recomposed)?;
    Ok(Decomposition { terms, residual })
}

/// Row coordinates shared by a family of tables: every `(entry, degree)`
/// position of the numerators over the common `(1-t)` power.
fn table_lp_rows(tables: &[&Table]) -> (Vec<(usize, i64)>, u32) {
    let pole = tables
        .iter()
        .flat_map(|t| t.entries().iter().map(RatFunc::pole_power))
        .max()
        .unwrap_or(0);
    let mut rows = std::collections::BTreeSet::new();
    for t in tables {
        for (i, f) in t.entries().iter().enumerate() {
            for deg in f.numerator_at_pole(pole).support() {
                rows.insert((i, deg));
            }
        }
    }
    (rows.into_iter().collect(), pole)
}

fn lp_column(t: &Table, rows: &[(usize, i64)], pole: u32) -> Vec<Rat> {
    let nums: Vec<LaurentPoly> = t
        .entries()
        .iter()
        .map(|f| f.numerator_at_pole(pole))
        .collect();
    rows.iter().map(|&(i, deg)| nums[i].coeff(deg)).collect()
}

fn solve_membership(target: &Table, tables: &[Table]) -> Result<Vec<Rat>, Witness> {
    let mut all: Vec<&Table> = vec![target];
    all.extend(tables.iter());
    let (rows, pole) = table_lp_rows(&all);
    let b = lp_column(target, &rows, pole);
    let cols: Vec<Vec<Rat>> = tables.iter().map(|t| lp_column(t, &rows, pole)).collect();
    match feasible_nonneg(&cols, &b) {
        LpOutcome::Feasible(x) => Ok(x),
        LpOutcome::Infeasible(y) => {
            assert!(verify_witness(&cols, &b, &y), "invalid Farkas witness");
            Err(Witness::new(&rows, y, pole))
        }
    }
}

/// Separating functional from an infeasible membership test: nonpositive on
/// every candidate generator and strictly positive on the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub entries: BTreeMap<(usize, i64), Rat>,
    /// The common denominator power the coordinates refer to.
    pub pole: u32,
}

impl Witness {
    fn new(rows: &[(usize, i64)], y: Vec<Rat>, pole: u32) -> Self {
        let entries = rows
            .iter()
            .cloned()
            .zip(y)
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Self { entries, pole }
    }

    /// Evaluates the functional on a table.
    pub fn eval(&self, t: &Table) -> Rat {
        let nums: Vec<LaurentPoly> = t
            .entries()
            .iter()
            .map(|f| f.numerator_at_pole(self.pole))
            .collect();
        let mut acc = Rat::zero();
        for (&(i, deg), v) in &self.entries {
            acc += nums[i].coeff(deg) * v;
        }
        acc
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut outer: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for (&(i, deg), v) in &self.entries {
            outer
                .entry(i.to_string())
                .or_default()
                .insert(deg.to_string(), rat_to_string(v));
        }
        let mut st = serializer.serialize_struct("Witness", 2)?;
        st.serialize_field("functional", &outer)?;
        st.serialize_field("pole", &self.pole)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipOutcome {
    Member(Decomposition),
    Infeasible(Witness),
}

/// Exact cone membership of a target table over a finite generator list.
pub fn cone_membership_lp(
    target: &Table,
    generators: &[GeneratorRef],
) -> Result<MembershipOutcome, DecompError> {
    let n = target.n();
    let tables: Vec<Table> = generators
        .iter()
        .map(|g| generator_table(g, n).map_err(DecompError::from))
        .collect::<Result<_, _>>()?;
    match solve_membership(target, &tables) {
        Ok(x) => {
            let mut terms = Vec::new();
            let mut recomposed = Table::zero(n, target.orientation());
            for (c, (g, t)) in x.into_iter().zip(generators.iter().zip(&tables)) {
                if c.is_positive() {
                    recomposed = recomposed.add(&t.scale(&c))?;
                    terms.push((c, DecompGenerator::Family(g.clone())));
                }
            }
            let residual = target.sub(&recomposed)?;
            Ok(MembershipOutcome::Member(Decomposition { terms, residual }))
        }
        Err(w) => Ok(MembershipOutcome::Infeasible(w)),
    }
}

/// Input to the projective-dimension-one decomposition: a module of the
/// concrete class, or the Betti table of the transpose side.
pub enum Pd1Input<'a> {
    Module(&'a GradedModule),
    TransposeBetti(&'a Table),
}

/// Decomposes the Ext table of a projective-dimension-`≤ 1` module over the
/// generator families: free summands give A4 terms, everything else goes
/// through the transpose Betti table, the greedy pure decomposition and the
/// property-𝒫 reduction. The certificate recomposes the Ext table exactly.
pub fn decompose_pd1(input: Pd1Input<'_>) -> Result<Decomposition, DecompError> {
    match input {
        Pd1Input::TransposeBetti(beta) => {
            let d = decompose_transpose_table(beta)?;
            let target = l1(beta)?;
            finish(d, &target)
        }
        Pd1Input::Module(m) => {
            let n = m
                .n()
                .ok_or_else(|| DecompError::NotPd1("zero module".into()))?;
            let betti = graded_betti(m);
            if let Some(col) = (2..=n).find(|&i| !betti.entry(i).is_zero()) {
                return Err(DecompError::NotPd1(format!(
                    "Betti column {col} is nonzero"
                )));
            }
            let mut terms = Vec::new();
            let mut beta_n = Table::zero(n, Orientation::V);
            for s in &m.summands {
                summand_terms(s, n, &mut terms, &mut beta_n)?;
            }
            if !beta_n.is_zero() {
                let d = decompose_transpose_table(&beta_n)?;
                terms.extend(d.terms);
            }
            let target = ext_table(m)?;
            finish(
                Decomposition {
                    terms,
                    residual: Table::zero(n, Orientation::V),
                },
                &target,
            )
        }
    }
}

fn finish(d: Decomposition, target: &Table) -> Result<Decomposition, DecompError> {
    let n = target.n();
    let d = d.canonicalize();
    let mut recomposed = Table::zero(n, Orientation::V);
    for (c, g) in &d.terms {
        let t = match g {
            DecompGenerator::Family(f) => generator_table(f, n)?,
            DecompGenerator::Pure(_) => {
                return Err(DecompError::WrongShape(
                    "pd1 certificates carry family generators only".into(),
                ))
            }
        };
        recomposed = recomposed.add(&t.scale(c))?;
    }
    let residual = target.sub(&recomposed)?;
    if !residual.is_zero() {
        return Err(DecompError::NotDecomposable(
            "pd1 recomposition left a nonzero residual".into(),
        ));
    }
    Ok(Decomposition {
        terms: d.terms,
        residual,
    })
}

/// Per-summand contribution in module mode: free summands emit A4 terms,
/// the others contribute their transpose Betti table.
fn summand_terms(
    s: &crate::monomial::Summand,
    n: usize,
    terms: &mut Vec<(Rat, DecompGenerator)>,
    beta_n: &mut Table,
) -> Result<(), DecompError> {
    use crate::monomial::ideal::total_degree;
    if s.is_free() {
        terms.push((
            Rat::one(),
            DecompGenerator::Family(GeneratorRef::A4 { d: s.shift, e: n }),
        ));
        return Ok(());
    }
    match s.kind {
        SummandKind::Quotient => {
            if !s.ideal.is_principal() {
                return Err(DecompError::NotPd1("non-principal quotient summand".into()));
            }
            let f = total_degree(&s.ideal.gens()[0]);
            // Tr((R/(f))(a)) is pure of type (a - |f|, a)
            let d = DegreeSequence::new(vec![s.shift - f, s.shift], n)
                .expect("strictly increasing");
            *beta_n = beta_n.add(&pure_betti(&d))?;
        }
        SummandKind::Ideal => {
            // strip the common factor: J = x^g J' with J' of codimension two
            let g = s.ideal.gcd_of_gens().expect("nonzero ideal");
            let jp = s.ideal.divide_by_monomial(&g);
            if jp.is_unit() {
                unreachable!("principal ideals are free and handled above");
            }
            let b = s.shift - total_degree(&g);
            let quot = graded_betti(&GradedModule::cyclic(jp));
            if (3..=n).any(|i| !quot.entry(i).is_zero()) {
                return Err(DecompError::NotPd1(
                    "ideal summand has projective dimension above one".into(),
                ));
            }
            // R/J' is CM of codimension two, so the dual of its resolution
            // resolves Tr(J'): β_i(Tr J') = β_{2-i}(R/J')(t^{-1}).
            let mut entries = vec![RatFunc::zero(); n + 1];
            for i in 0..=2usize {
                entries[i] = quot.entry(2 - i).invert_variable(0);
            }
            let tr = Table::new(n, Orientation::V, entries)?;
            *beta_n = beta_n.add(&tr.shift(b))?;
        }
    }
    Ok(())
}

/// Table-mode pipeline: greedy pure decomposition, then property-𝒫
/// reduction of every piece.
fn decompose_transpose_table(beta: &Table) -> Result<Decomposition, DecompError> {
    validate_betti_like(beta)?;
    // rank zero on the transpose side rules out free strands
    let mut alt = Rat::zero();
    for (i, f) in beta.entries().iter().enumerate() {
        let v = f.numerator().eval_one();
        if i % 2 == 0 {
            alt += v;
        } else {
            alt -= v;
        }
    }
    if !alt.is_zero() {
        return Err(DecompError::NotPd1(format!(
            "transpose table has rank {alt} != 0"
        )));
    }
    let greedy = bs_greedy(beta)?;
    let mut terms = Vec::new();
    for (c, g) in greedy.terms {
        let DecompGenerator::Pure(d) = g else {
            unreachable!("greedy emits pure terms")
        };
        assert!(d.s() >= 1, "rank-zero tables have no free strands");
        let reduced = reduce_to_p(&d)?;
        if !reduced.residual_zero() {
            return Err(DecompError::LPInfeasible(
                "property-P reduction left a residual".into(),
            ));
        }
        for (ck, gk) in reduced.terms {
            terms.push((&c * &ck, gk));
        }
    }
    Ok(Decomposition {
        terms,
        residual: Table::zero(beta.n(), Orientation::V),
    }
    .canonicalize())
}

/// Vertex classification of the generator families: A1, A2 and A4 are
/// vertices, A3 is not.
pub fn vertex_test(g: &GeneratorRef) -> bool {
    !matches!(g, GeneratorRef::A3 { .. })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateOutcome {
    /// Entry 1 has a pole at `t = 1` of order in `[1, n-2]` with the stated
    /// limit; every positive combination of A1 ∪ A2 ∪ A4 has entry-1 pole
    /// order either `n-1` (with positive limit) or at most zero.
    Certificate { pole_order: i64, limit: String },
    Inconclusive { reason: String },
}

/// Pole-order certificate that a pd-≤1-shaped table is not a positive
/// combination of the vertex families A1 ∪ A2 ∪ A4.
pub fn non_vertex_certificate(t: &Table) -> Result<CertificateOutcome, DecompError> {
    if t.orientation() != Orientation::V {
        return Err(DecompError::WrongShape("expected orientation V".into()));
    }
    let n = t.n();
    if (2..=n).any(|i| !t.entry(i).is_zero()) {
        return Err(DecompError::WrongShape(
            "entries beyond index 1 must vanish".into(),
        ));
    }
    if t.entry(1).is_zero() {
        return Ok(CertificateOutcome::Inconclusive {
            reason: "entry 1 is zero".into(),
        });
    }
    let (order, limit) = t.entry(1).pole_data().expect("nonzero entry");
    if order >= 1 && order <= n as i64 - 2 {
        Ok(CertificateOutcome::Certificate {
            pole_order: order,
            limit: rat_to_string(&limit),
        })
    } else {
        Ok(CertificateOutcome::Inconclusive {
            reason: format!(
                "entry-1 pole order {order} is outside [1, {}]",
                n as i64 - 2
            ),
        })
    }
}
