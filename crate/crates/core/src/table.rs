//! Series-form tables.
//!
//! A table over a ring of dimension `n` is a vector of `n+1` rational
//! functions. Betti and Ext tables live in the space `V` (entries expand in
//! ascending powers of `t`), local cohomology tables in `V*` (descending
//! powers). The orientation is metadata: the stored rational functions are
//! direction-agnostic and only expansion and printing differ.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rat::Rat;
use crate::ratfunc::{Direction, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    V,
    Vstar,
}

impl Orientation {
    pub fn direction(self) -> Direction {
        match self {
            Orientation::V => Direction::V,
            Orientation::Vstar => Direction::Vstar,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    n: usize,
    orientation: Orientation,
    entries: Vec<RatFunc>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("tables mix orientations")]
    MixedOrientation,
    #[error("tables mix ring dimensions")]
    MixedDimension,
    #[error("table over dimension {n} needs {} entries, got {got}", n + 1)]
    WrongLength { n: usize, got: usize },
}

impl Table {
    pub fn new(n: usize, orientation: Orientation, entries: Vec<RatFunc>) -> Result<Self, TableError> {
        if entries.len() != n + 1 {
            return Err(TableError::WrongLength {
                n,
                got: entries.len(),
            });
        }
        Ok(Self {
            n,
            orientation,
            entries,
        })
    }

    pub fn zero(n: usize, orientation: Orientation) -> Self {
        Self {
            n,
            orientation,
            entries: vec![RatFunc::zero(); n + 1],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &RatFunc {
        &self.entries[i]
    }

    pub fn set_entry(&mut self, i: usize, f: RatFunc) {
        self.entries[i] = f;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    /// Indices of nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..=self.n)
            .filter(|&i| !self.entries[i].is_zero())
            .collect()
    }

    pub fn with_orientation(mut self, orientation: Orientation) -> Self {
        self.orientation = orientation;
        self
    }

    pub fn map_entries(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        Self {
            n: self.n,
            orientation: self.orientation,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TableError> {
        table_combine([(Rat::from_integer(1.into()), self.clone()), (Rat::from_integer(1.into()), other.clone())])
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TableError> {
        table_combine([
            (Rat::from_integer(1.into()), self.clone()),
            (Rat::from_integer((-1).into()), other.clone()),
        ])
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map_entries(|f| f.scale(c))
    }

    /// Multiplies every entry by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        self.map_entries(|f| f.shift(k))
    }
}

/// Exact linear combination of tables sharing dimension and orientation.
pub fn table_combine<I>(terms: I) -> Result<Table, TableError>
where
    I: IntoIterator<Item = (Rat, Table)>,
{
    let mut acc: Option<Table> = None;
    for (c, t) in terms {
        match &mut acc {
            None => acc = Some(t.scale(&c)),
            Some(a) => {
                if a.orientation != t.orientation {
                    return Err(TableError::MixedOrientation);
                }
                if a.n != t.n {
                    return Err(TableError::MixedDimension);
                }
                for i in 0..=a.n {
                    let sum = a.entries[i].add(&t.entries[i].scale(&c));
                    a.entries[i] = sum;
                }
            }
        }
    }
    Ok(acc.expect("table_combine needs at least one term"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::rat::rat_int;

    fn t_poly(n: usize, entries: &[&[(i64, i64)]]) -> Table {
        Table::new(
            n,
            Orientation::V,
            entries
                .iter()
                .map(|ts| {
                    RatFunc::from_poly(LaurentPoly::from_terms(
                        ts.iter().map(|&(d, c)| (d, rat_int(c))),
                    ))
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn combine_cancels() {
        let t = t_poly(2, &[&[(0, 1)], &[(1, 2)], &[]]);
        let z = table_combine([(rat_int(1), t.clone()), (rat_int(-1), t.clone())]).unwrap();
        assert!(z.is_zero());
        let d = table_combine([(rat_int(2), t.clone())]).unwrap();
        assert_eq!(d.entry(1), &RatFunc::monomial(1, rat_int(4)));
    }

    #[test]
    fn combine_rejects_mismatch() {
        let a = Table::zero(2, Orientation::V);
        let b = Table::zero(2, Orientation::Vstar);
        let c = Table::zero(3, Orientation::V);
        assert_eq!(
            table_combine([(rat_int(1), a.clone()), (rat_int(1), b)]).unwrap_err(),
            TableError::MixedOrientation
        );
        assert_eq!(
            table_combine([(rat_int(1), a), (rat_int(1), c)]).unwrap_err(),
            TableError::MixedDimension
        );
    }

    #[test]
    fn wrong_length_rejected() {
        assert!(Table::new(3, Orientation::V, vec![RatFunc::zero(); 3]).is_err());
    }

    #[test]
    fn json_shape() {
        let t = Table::zero(1, Orientation::Vstar);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"n":1,"orientation":"Vstar","entries":[{"num":{},"poles":0},{"num":{},"poles":0}]}"#
        );
        let back: Table = serde_json::from_str(&s).unwrap();
        assert_eq!(t, back);
    }
}
