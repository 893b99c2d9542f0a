//! Degree sequences, pure-resolution polynomials and the generator families.
//!
//! A degree sequence `d_0 < d_1 < … < d_s` carries a unique (up to scalar)
//! Laurent polynomial `π_d` supported on its degrees and divisible by
//! `(1-t)^s`; its signed coefficients give the Betti table of a pure module
//! of that type. We normalize `π_{d,d_0} = 1` throughout, so generator
//! tables are fixed representatives of their rays.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::rat::{rat_int, Rat};
use crate::ratfunc::RatFunc;
use crate::table::{Orientation, Table};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence {
    degrees: Vec<i64>,
    n: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PureError {
    #[error("degrees must be strictly increasing, got {0:?}")]
    NotIncreasing(Vec<i64>),
    #[error("degree sequence of length {s} does not fit ring dimension {n}")]
    TooLong { s: usize, n: usize },
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("empty enumeration window")]
    EmptyWindow,
}

impl DegreeSequence {
    /// A degree sequence `d_0 < … < d_s` with `0 ≤ s ≤ n`. The degenerate
    /// `s = 0` case (a single degree, the table of a free module) is allowed
    /// so that greedy decompositions can emit free strands; the cone
    /// generators themselves always have `s ≥ 1`.
    pub fn new(degrees: Vec<i64>, n: usize) -> Result<Self, PureError> {
        if degrees.is_empty() || degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PureError::NotIncreasing(degrees));
        }
        let s = degrees.len() - 1;
        if s > n {
            return Err(PureError::TooLong { s, n });
        }
        Ok(Self { degrees, n })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Homological length `s` (one less than the number of degrees).
    pub fn s(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self, i: usize) -> i64 {
        self.degrees[i]
    }
}

/// Normalized coefficients `π_{d,d_i}`, index by index:
/// `π_{d,d_i} = Π_{j≠0}(d_j - d_0) / Π_{j≠i}(d_j - d_i)`, with
/// `π_{d,d_0} = 1`.
pub fn pi_coeffs(d: &DegreeSequence) -> Vec<Rat> {
    let deg = d.degrees();
    let s = d.s();
    let mut top = rat_int(1);
    for j in 1..=s {
        top *= rat_int(deg[j] - deg[0]);
    }
    (0..=s)
        .map(|i| {
            let mut bot = rat_int(1);
            for (j, &dj) in deg.iter().enumerate() {
                if j != i {
                    bot *= rat_int(dj - deg[i]);
                }
            }
            &top / &bot
        })
        .collect()
}

/// `π_d(t) = Σ_i π_{d,d_i} t^{d_i}`; divisible by exactly `(1-t)^s`, with
/// coefficients of alternating sign.
pub fn pi_poly(d: &DegreeSequence) -> LaurentPoly {
    LaurentPoly::from_terms(
        pi_coeffs(d)
            .into_iter()
            .enumerate()
            .map(|(i, c)| (d.d(i), c)),
    )
}

/// `(α_d, α'_d)`: the split of `π_d` into degrees `≤ d_1` and `≥ d_2`.
/// For `s ≤ 1` the second part is zero.
pub fn alpha_split(d: &DegreeSequence) -> (LaurentPoly, LaurentPoly) {
    let pi = pi_poly(d);
    if d.s() < 2 {
        return (pi, LaurentPoly::zero());
    }
    let cut = d.d(2);
    let mut head = LaurentPoly::zero();
    let mut tail = LaurentPoly::zero();
    for (&deg, c) in pi.terms() {
        if deg < cut {
            head.add_term(deg, c.clone());
        } else {
            tail.add_term(deg, c.clone());
        }
    }
    (head, tail)
}

/// The Betti table of a pure module of type `d`, normalized so the zeroth
/// entry is `t^{d_0}`: entry `i` is `|π_{d,d_i}| t^{d_i}` for `i ≤ s`, zero
/// above.
pub fn pure_betti(d: &DegreeSequence) -> Table {
    let coeffs = pi_coeffs(d);
    let mut entries = vec![RatFunc::zero(); d.n() + 1];
    for (i, c) in coeffs.into_iter().enumerate() {
        let sign = if i % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        entries[i] = RatFunc::monomial(d.d(i), c * sign);
    }
    Table::new(d.n(), Orientation::V, entries).expect("sized by construction")
}

/// Condition 𝒫: `d_1 - d_0 = 1` and the tail `d_2, …, d_s` is consecutive.
pub fn has_property_p(d: &DegreeSequence) -> bool {
    let deg = d.degrees();
    let s = d.s();
    if s < 1 || deg[1] - deg[0] != 1 {
        return false;
    }
    (2..=s).all(|j| deg[j] == deg[2] + j as i64 - 2)
}

/// The four table families generating the projective-dimension-one cone.
/// `e` is the ambient ring size the table is built over; tables may then be
/// packed into a larger ring-`n` container with zero entries on top.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorRef {
    /// Pure type `(d_0, d_0+1)`: table `(1-t)^{-e}(0, t^{d_0}-t^{d_0+1}, 0, …)`.
    A1 { d0: i64, e: usize },
    /// Pure type `(d_0, d_0+1, d_2, …, d_2+e-2)` of full length `s = e`.
    A2 { d0: i64, d2: i64, e: usize },
    /// As A2 but of intermediate length `2 ≤ s ≤ e-1`; not a vertex.
    A3 { d0: i64, d2: i64, s: usize, e: usize },
    /// Free rank one: table `(1-t)^{-e}(t^d, 0, …, 0)`.
    A4 { d: i64, e: usize },
}

impl GeneratorRef {
    pub fn e(&self) -> usize {
        match *self {
            GeneratorRef::A1 { e, .. }
            | GeneratorRef::A2 { e, .. }
            | GeneratorRef::A3 { e, .. }
            | GeneratorRef::A4 { e, .. } => e,
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            GeneratorRef::A1 { .. } => "A1",
            GeneratorRef::A2 { .. } => "A2",
            GeneratorRef::A3 { .. } => "A3",
            GeneratorRef::A4 { .. } => "A4",
        }
    }

    pub fn validate(&self) -> Result<(), PureError> {
        match *self {
            GeneratorRef::A1 { e, .. } => {
                if e < 1 {
                    return Err(PureError::InvalidParams("A1 needs e >= 1".into()));
                }
            }
            GeneratorRef::A2 { d0, d2, e } => {
                if e < 2 {
                    return Err(PureError::InvalidParams("A2 needs e >= 2".into()));
                }
                if d2 < d0 + 2 {
                    return Err(PureError::InvalidParams(format!(
                        "A2 needs d2 >= d0 + 2, got d0={d0} d2={d2}"
                    )));
                }
            }
            GeneratorRef::A3 { d0, d2, s, e } => {
                if s < 2 || s + 1 > e {
                    return Err(PureError::InvalidParams(format!(
                        "A3 needs 2 <= s <= e-1, got s={s} e={e}"
                    )));
                }
                if d2 < d0 + 2 {
                    return Err(PureError::InvalidParams(format!(
                        "A3 needs d2 >= d0 + 2, got d0={d0} d2={d2}"
                    )));
                }
            }
            GeneratorRef::A4 { .. } => {}
        }
        Ok(())
    }

    /// The degree sequence behind an A1/A2/A3 generator.
    pub fn degree_sequence(&self) -> Option<DegreeSequence> {
        let (d0, d2, s, e) = match *self {
            GeneratorRef::A1 { d0, e } => return DegreeSequence::new(vec![d0, d0 + 1], e).ok(),
            GeneratorRef::A2 { d0, d2, e } => (d0, d2, e, e),
            GeneratorRef::A3 { d0, d2, s, e } => (d0, d2, s, e),
            GeneratorRef::A4 { .. } => return None,
        };
        let mut degs = vec![d0, d0 + 1];
        for j in 2..=s {
            degs.push(d2 + j as i64 - 2);
        }
        DegreeSequence::new(degs, e).ok()
    }

    /// Numerator support interval of the generator's table.
    fn support_bounds(&self) -> (i64, i64) {
        match *self {
            GeneratorRef::A1 { d0, .. } => (d0, d0 + 1),
            GeneratorRef::A2 { d0, d2, e } => (d0, d2 + e as i64 - 2),
            GeneratorRef::A3 { d0, d2, s, .. } => (d0, d2 + s as i64 - 2),
            GeneratorRef::A4 { d, .. } => (d, d),
        }
    }
}

/// The Ext-table of a generator over its ambient ring of size `e`, placed in
/// a ring-`n` container by appending zero entries at the high cohomological
/// positions (`n = e` gives the table itself).
pub fn generator_table(g: &GeneratorRef, n: usize) -> Result<Table, PureError> {
    g.validate()?;
    let e = g.e();
    if e > n {
        return Err(PureError::InvalidParams(format!(
            "ambient e={e} exceeds ring dimension n={n}"
        )));
    }
    let mut entries = vec![RatFunc::zero(); n + 1];
    match *g {
        GeneratorRef::A1 { d0, .. } => {
            let num = LaurentPoly::from_terms([(d0, rat_int(1)), (d0 + 1, rat_int(-1))]);
            entries[1] = RatFunc::new(num, e as u32);
        }
        GeneratorRef::A2 { .. } | GeneratorRef::A3 { .. } => {
            let d = g.degree_sequence().expect("A2/A3 carry a degree sequence");
            let (_, tail) = alpha_split(&d);
            let pi = pi_poly(&d);
            entries[0] = RatFunc::new(tail, e as u32);
            entries[1] = RatFunc::new(pi, e as u32);
        }
        GeneratorRef::A4 { d, .. } => {
            entries[0] = RatFunc::new(LaurentPoly::monomial(d, rat_int(1)), e as u32);
        }
    }
    Ok(Table::new(n, Orientation::V, entries).expect("sized by construction"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    A1,
    A2,
    A3,
    A4,
}

/// All generators of the requested families at ambient `e` whose table
/// numerator support lies inside `[lo, hi]`, in lexicographic family/param
/// order.
pub fn enumerate_generators(
    lo: i64,
    hi: i64,
    e: usize,
    families: &[Family],
) -> Result<Vec<GeneratorRef>, PureError> {
    if lo > hi {
        return Err(PureError::EmptyWindow);
    }
    let mut out = Vec::new();
    let want = |f: Family| families.contains(&f);
    if want(Family::A1) && e >= 1 {
        for d0 in lo..hi {
            out.push(GeneratorRef::A1 { d0, e });
        }
    }
    if want(Family::A2) && e >= 2 {
        for d0 in lo..=hi {
            for d2 in (d0 + 2)..=(hi - e as i64 + 2) {
                let g = GeneratorRef::A2 { d0, d2, e };
                let (a, b) = g.support_bounds();
                if a >= lo && b <= hi {
                    out.push(g);
                }
            }
        }
    }
    if want(Family::A3) && e >= 3 {
        for s in 2..e {
            for d0 in lo..=hi {
                for d2 in (d0 + 2)..=(hi - s as i64 + 2) {
                    let g = GeneratorRef::A3 { d0, d2, s, e };
                    let (a, b) = g.support_bounds();
                    if a >= lo && b <= hi {
                        out.push(g);
                    }
                }
            }
        }
    }
    if want(Family::A4) {
        for d in lo..=hi {
            out.push(GeneratorRef::A4 { d, e });
        }
    }
    Ok(out)
}

impl Serialize for GeneratorRef {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            family: &'a str,
            params: Vec<i64>,
            e: usize,
        }
        let params = match *self {
            GeneratorRef::A1 { d0, .. } => vec![d0],
            GeneratorRef::A2 { d0, d2, .. } => vec![d0, d2],
            GeneratorRef::A3 { d0, d2, s, .. } => vec![d0, d2, s as i64],
            GeneratorRef::A4 { d, .. } => vec![d],
        };
        Repr {
            family: self.family_name(),
            params,
            e: self.e(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GeneratorRef {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            family: String,
            params: Vec<i64>,
            e: usize,
        }
        let r = Repr::deserialize(deserializer)?;
        let g = match (r.family.as_str(), r.params.as_slice()) {
            ("A1", [d0]) => GeneratorRef::A1 { d0: *d0, e: r.e },
            ("A2", [d0, d2]) => GeneratorRef::A2 {
                d0: *d0,
                d2: *d2,
                e: r.e,
            },
            ("A3", [d0, d2, s]) => GeneratorRef::A3 {
                d0: *d0,
                d2: *d2,
                s: usize::try_from(*s)
                    .map_err(|_| D::Error::custom("A3 length must be nonnegative"))?,
                e: r.e,
            },
            ("A4", [d]) => GeneratorRef::A4 { d: *d, e: r.e },
            _ => {
                return Err(D::Error::custom(format!(
                    "bad generator {}/{:?}",
                    r.family, r.params
                )))
            }
        };
        g.validate().map_err(D::Error::custom)?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn ds(degs: &[i64], n: usize) -> DegreeSequence {
        DegreeSequence::new(degs.to_vec(), n).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(d, c)| (d, rat_int(c))))
    }

    #[test]
    fn printed_pi_polynomials() {
        assert_eq!(
            pi_poly(&ds(&[0, 1, 2, 3], 3)),
            poly(&[(0, 1), (1, -3), (2, 3), (3, -1)])
        );
        assert_eq!(
            pi_poly(&ds(&[0, 1, 3, 4], 3)),
            poly(&[(0, 1), (1, -2), (3, 2), (4, -1)])
        );
        assert_eq!(pi_poly(&ds(&[0, 2], 3)), poly(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn alpha_split_examples() {
        let (a, b) = alpha_split(&ds(&[0, 1, 3, 4], 3));
        assert_eq!(a, poly(&[(0, 1), (1, -2)]));
        assert_eq!(b, poly(&[(3, 2), (4, -1)]));

        let (a, b) = alpha_split(&ds(&[5, 6], 3));
        assert_eq!(a, poly(&[(5, 1), (6, -1)]));
        assert!(b.is_zero());

        let (a, b) = alpha_split(&ds(&[0, 1, 3], 3));
        assert_eq!(
            a,
            LaurentPoly::from_terms([(0, rat_int(1)), (1, rat(-3, 2))])
        );
        assert_eq!(b, LaurentPoly::from_terms([(3, rat(1, 2))]));
        assert_eq!(a.add(&b), pi_poly(&ds(&[0, 1, 3], 3)));
    }

    #[test]
    fn pure_betti_examples() {
        let t = pure_betti(&ds(&[0, 1, 2, 3], 3));
        assert_eq!(t.entry(0), &RatFunc::monomial(0, rat_int(1)));
        assert_eq!(t.entry(1), &RatFunc::monomial(1, rat_int(3)));
        assert_eq!(t.entry(2), &RatFunc::monomial(2, rat_int(3)));
        assert_eq!(t.entry(3), &RatFunc::monomial(3, rat_int(1)));

        let t = pure_betti(&ds(&[0, 1], 3));
        assert_eq!(t.entry(0), &RatFunc::one());
        assert_eq!(t.entry(1), &RatFunc::monomial(1, rat_int(1)));
        assert!(t.entry(2).is_zero() && t.entry(3).is_zero());

        let t = pure_betti(&ds(&[0, 1, 3], 3));
        assert_eq!(t.entry(1), &RatFunc::monomial(1, rat(3, 2)));
        assert_eq!(t.entry(2), &RatFunc::monomial(3, rat(1, 2)));
        assert!(t.entry(3).is_zero());
    }

    #[test]
    fn property_p_examples() {
        assert!(has_property_p(&ds(&[0, 1, 3, 4, 5], 5)));
        assert!(!has_property_p(&ds(&[0, 2, 3], 3)));
        assert!(!has_property_p(&ds(&[0, 1, 3, 5], 4)));
        assert!(has_property_p(&ds(&[4, 5], 2)));
    }

    #[test]
    fn generator_tables() {
        // A1(0), e = n = 3
        let t = generator_table(&GeneratorRef::A1 { d0: 0, e: 3 }, 3).unwrap();
        assert!(t.entry(0).is_zero());
        assert_eq!(t.entry(1), &RatFunc::new(poly(&[(0, 1), (1, -1)]), 3));
        // stored normalized as 1/(1-t)^2
        assert_eq!(t.entry(1).pole_power(), 2);

        // A4(2), e = n = 3
        let t = generator_table(&GeneratorRef::A4 { d: 2, e: 3 }, 3).unwrap();
        assert_eq!(t.entry(0), &RatFunc::new(poly(&[(2, 1)]), 3));
        assert!(t.entry(1).is_zero());

        // A2(0,2), e = n = 3: ((3t^2 - t^3)/(1-t)^3, 1, 0, 0)
        let t = generator_table(&GeneratorRef::A2 { d0: 0, d2: 2, e: 3 }, 3).unwrap();
        assert_eq!(t.entry(0), &RatFunc::new(poly(&[(2, 3), (3, -1)]), 3));
        assert_eq!(t.entry(1), &RatFunc::one());
        assert!(t.entry(2).is_zero() && t.entry(3).is_zero());

        // padding to a bigger ring appends zeros on top
        let t = generator_table(&GeneratorRef::A1 { d0: 0, e: 2 }, 4).unwrap();
        assert_eq!(t.n(), 4);
        assert_eq!(t.entry(1).pole_power(), 1);
        assert!(t.entry(2).is_zero() && t.entry(3).is_zero() && t.entry(4).is_zero());
    }

    #[test]
    fn invalid_generators() {
        assert!(GeneratorRef::A2 { d0: 0, d2: 1, e: 3 }.validate().is_err());
        assert!(GeneratorRef::A3 {
            d0: 0,
            d2: 2,
            s: 3,
            e: 3
        }
        .validate()
        .is_err());
        assert!(GeneratorRef::A3 {
            d0: 0,
            d2: 2,
            s: 2,
            e: 3
        }
        .validate()
        .is_ok());
    }

    #[test]
    fn enumerate_examples() {
        let g = enumerate_generators(0, 1, 3, &[Family::A1]).unwrap();
        assert_eq!(g, vec![GeneratorRef::A1 { d0: 0, e: 3 }]);

        // all A2 with numerator support inside [0, 4] at e = 3
        let g = enumerate_generators(0, 4, 3, &[Family::A2]).unwrap();
        assert_eq!(
            g,
            vec![
                GeneratorRef::A2 { d0: 0, d2: 2, e: 3 },
                GeneratorRef::A2 { d0: 0, d2: 3, e: 3 },
                GeneratorRef::A2 { d0: 1, d2: 3, e: 3 },
            ]
        );

        let g = enumerate_generators(0, 3, 3, &[Family::A4]).unwrap();
        assert_eq!(g.len(), 4);

        assert_eq!(
            enumerate_generators(2, 1, 3, &[Family::A1]).unwrap_err(),
            PureError::EmptyWindow
        );
    }

    #[test]
    fn enumerated_supports_stay_inside_window() {
        let gens = enumerate_generators(
            -3,
            6,
            3,
            &[Family::A1, Family::A2, Family::A3, Family::A4],
        )
        .unwrap();
        assert!(!gens.is_empty());
        for g in &gens {
            let t = generator_table(g, 3).unwrap();
            for entry in t.entries() {
                let num = entry.numerator_at_pole(3);
                if let (Some(lo), Some(hi)) = (num.min_degree(), num.max_degree()) {
                    assert!(lo >= -3 && hi <= 6, "support of {g:?} escapes window");
                }
            }
        }
    }

    #[test]
    fn generator_json() {
        let g = GeneratorRef::A3 {
            d0: 0,
            d2: 3,
            s: 2,
            e: 3,
        };
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"family":"A3","params":[0,3,2],"e":3}"#);
        let back: GeneratorRef = serde_json::from_str(&s).unwrap();
        assert_eq!(g, back);
    }
}
