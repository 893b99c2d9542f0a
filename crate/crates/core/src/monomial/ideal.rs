//! Monomial ideals given by minimal generating sets of exponent vectors.
//!
//! The zero ideal is the empty generator set and the unit ideal is the
//! single generator `x^0`. Generators are kept minimal (pairwise
//! non-divisible) and sorted, so equality is structural.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Exponent>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("operation undefined for the zero or unit ideal")]
    ZeroOrUnitIdeal,
    #[error("exponent vector has length {got}, expected {n}")]
    BadExponent { n: usize, got: usize },
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm_exp(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn total_degree(a: &[u32]) -> i64 {
    a.iter().map(|&x| x as i64).sum()
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Exponent>) -> Result<Self, IdealError> {
        for g in &gens {
            if g.len() != n {
                return Err(IdealError::BadExponent { n, got: g.len() });
            }
        }
        Ok(Self::minimalized(n, gens))
    }

    fn minimalized(n: usize, gens: Vec<Exponent>) -> Self {
        let mut kept: Vec<Exponent> = Vec::new();
        let set: BTreeSet<Exponent> = gens.into_iter().collect();
        for g in set {
            if !kept.iter().any(|h| divides(h, &g)) {
                kept.retain(|h| !divides(&g, h));
                kept.push(g);
            }
        }
        kept.sort();
        Self { n, gens: kept }
    }

    pub fn zero(n: usize) -> Self {
        Self { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        Self {
            n,
            gens: vec![vec![0; n]],
        }
    }

    /// The graded maximal ideal `(x_1, …, x_n)`.
    pub fn maximal(n: usize) -> Self {
        let gens = (0..n)
            .map(|v| {
                let mut e = vec![0; n];
                e[v] = 1;
                e
            })
            .collect();
        Self::minimalized(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].iter().all(|&e| e == 0)
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn contains_monomial(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    /// `I ⊆ J` as ideals.
    pub fn contained_in(&self, other: &Self) -> bool {
        self.gens.iter().all(|g| other.contains_monomial(g))
    }

    /// Generated by a single monomial after dividing out the common factor?
    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// Componentwise gcd of the generators (the common monomial factor).
    pub fn gcd_of_gens(&self) -> Option<Exponent> {
        let mut it = self.gens.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, g| {
            acc.iter().zip(g).map(|(a, b)| *a.min(b)).collect()
        }))
    }

    /// Divides every generator by a common monomial factor `f` (which must
    /// divide them all).
    pub fn divide_by_monomial(&self, f: &[u32]) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                g.iter()
                    .zip(f)
                    .map(|(a, b)| {
                        assert!(a >= b, "factor does not divide generator");
                        a - b
                    })
                    .collect()
            })
            .collect();
        Self::minimalized(self.n, gens)
    }

    /// `(I : x^a)` by exponent subtraction.
    pub fn colon_monomial(&self, a: &[u32]) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().zip(a).map(|(x, y)| x.saturating_sub(*y)).collect())
            .collect();
        Self::minimalized(self.n, gens)
    }

    /// `(I : J) = ∩_{g ∈ J} (I : g)`; `(I : R) = I` and `(I : 0) = R`.
    pub fn colon(&self, other: &Self) -> Self {
        if other.is_zero() {
            return Self::unit(self.n);
        }
        let mut acc: Option<Self> = None;
        for g in &other.gens {
            let q = self.colon_monomial(g);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q),
            });
        }
        acc.unwrap()
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersect(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.n);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(lcm_exp(g, h));
            }
        }
        Self::minimalized(self.n, gens)
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::minimalized(self.n, gens)
    }

    /// Saturation `I : m^∞`, the stabilization of iterated colons by the
    /// maximal ideal.
    pub fn saturate(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let m = Self::maximal(self.n);
        let mut cur = self.clone();
        loop {
            let next = cur.colon(&m);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Is every generator a pure power of a variable?
    pub fn is_irreducible_form(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.iter().filter(|&&e| e > 0).count() <= 1)
    }

    /// Variables appearing in the generators; for an irreducible-form ideal
    /// this is its radical prime.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.gens.iter().any(|g| g[v] > 0))
            .collect()
    }

    /// Irredundant irreducible decomposition by recursive generator
    /// splitting: a generator `x^a x^b` with coprime nonzero parts splits
    /// the ideal into two strictly larger ones.
    pub fn irreducible_decomposition(&self) -> Result<Vec<MonomialIdeal>, IdealError> {
        if !self.is_proper_nonzero() {
            return Err(IdealError::ZeroOrUnitIdeal);
        }
        let mut done: BTreeSet<MonomialIdeal> = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(i) = stack.pop() {
            match i
                .gens
                .iter()
                .find(|g| g.iter().filter(|&&e| e > 0).count() > 1)
            {
                None => {
                    done.insert(i);
                }
                Some(g) => {
                    let v = g
                        .iter()
                        .position(|&e| e > 0)
                        .expect("mixed generator has a nonzero entry");
                    let mut pure = vec![0; self.n];
                    pure[v] = g[v];
                    let mut rest = g.clone();
                    rest[v] = 0;
                    let mut with_pure = i.gens.clone();
                    with_pure.push(pure);
                    let mut with_rest = i.gens.clone();
                    with_rest.push(rest);
                    stack.push(Self::minimalized(self.n, with_pure));
                    stack.push(Self::minimalized(self.n, with_rest));
                }
            }
        }
        // Drop redundant components one at a time until none remains.
        let mut comps: Vec<MonomialIdeal> = done.into_iter().collect();
        'prune: loop {
            for i in 0..comps.len() {
                if comps.len() == 1 {
                    break 'prune;
                }
                let mut rest = MonomialIdeal::unit(self.n);
                for (j, d) in comps.iter().enumerate() {
                    if j != i {
                        rest = rest.intersect(d);
                    }
                }
                if rest.contained_in(&comps[i]) {
                    comps.remove(i);
                    continue 'prune;
                }
            }
            break;
        }
        Ok(comps)
    }

    /// Associated primes of `R/I` as sorted variable sets, with the Krull
    /// dimension `n - height` of each.
    pub fn associated_primes(&self) -> Result<Vec<(Vec<usize>, usize)>, IdealError> {
        let comps = self.irreducible_decomposition()?;
        let mut primes: BTreeSet<Vec<usize>> = BTreeSet::new();
        for c in comps {
            primes.insert(c.support_vars());
        }
        Ok(primes
            .into_iter()
            .map(|p| {
                let dim = self.n - p.len();
                (p, dim)
            })
            .collect())
    }

    /// Krull dimension of `R/I`; `None` for the unit ideal (zero ring).
    pub fn quotient_dim(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        if self.is_zero() {
            return Some(self.n);
        }
        self.associated_primes()
            .expect("proper nonzero checked")
            .iter()
            .map(|(_, d)| *d)
            .max()
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            gens: &'a [Exponent],
        }
        Repr {
            n: self.n,
            gens: &self.gens,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            gens: Vec<Exponent>,
        }
        let r = Repr::deserialize(deserializer)?;
        MonomialIdeal::new(r.n, r.gens).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    /// Brute-force membership oracle on a degree box.
    fn monomials_in_box(n: usize, cap: u32) -> Vec<Exponent> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|m| {
                    (0..=cap).map(move |e| {
                        let mut m2 = m.clone();
                        m2.push(e);
                        m2
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn minimalization() {
        let i = ideal(2, &[&[2, 0], &[2, 1], &[0, 3]]);
        assert_eq!(i.gens(), &[vec![0, 3], vec![2, 0]]);
        assert!(ideal(2, &[&[0, 0], &[1, 1]]).is_unit());
        assert!(MonomialIdeal::zero(2).is_zero());
    }

    #[test]
    fn colon_examples() {
        // ((x^2, xy) : x) = (x, y)
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.colon_monomial(&[1, 0]), ideal(2, &[&[1, 0], &[0, 1]]));
        // (I : R) = I
        assert_eq!(i.colon(&MonomialIdeal::unit(2)), i);
        // ((x) : (y)) = (x)
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.colon(&y), x);
    }

    #[test]
    fn colon_matches_membership_oracle() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 3, 1], &[1, 0, 2]]);
        let j = ideal(3, &[&[1, 1, 0], &[0, 0, 2]]);
        let q = i.colon(&j);
        for m in monomials_in_box(3, 4) {
            let in_colon = q.contains_monomial(&m);
            let oracle = j.gens().iter().all(|g| {
                let prod: Vec<u32> = m.iter().zip(g).map(|(a, b)| a + b).collect();
                i.contains_monomial(&prod)
            });
            assert_eq!(in_colon, oracle, "colon mismatch at {m:?}");
        }
    }

    #[test]
    fn intersect_examples() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y), ideal(2, &[&[1, 1]]));
        // (x1, x2^3) ∩ (x1^2, x2, x3) = (x1^2, x1x2, x1x3, x2^3)
        let a = ideal(3, &[&[1, 0, 0], &[0, 3, 0]]);
        let b = ideal(3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            a.intersect(&b),
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 3, 0]])
        );
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(i.intersect(&MonomialIdeal::unit(2)), i);
    }

    #[test]
    fn intersect_matches_membership_oracle() {
        let a = ideal(3, &[&[2, 0, 1], &[0, 2, 0]]);
        let b = ideal(3, &[&[1, 1, 0], &[0, 0, 3]]);
        let c = a.intersect(&b);
        for m in monomials_in_box(3, 4) {
            assert_eq!(
                c.contains_monomial(&m),
                a.contains_monomial(&m) && b.contains_monomial(&m)
            );
        }
    }

    #[test]
    fn saturation_examples() {
        // (x1^2, x1x2, x1x3, x2^3) : m^inf = (x1, x2^3)
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 3, 0]]);
        assert_eq!(i.saturate(), ideal(3, &[&[1, 0, 0], &[0, 3, 0]]));
        // already saturated
        let j = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(j.saturate(), j);
        // m^3 saturates to the unit ideal
        let cube = ideal(
            3,
            &[
                &[3, 0, 0],
                &[2, 1, 0],
                &[2, 0, 1],
                &[1, 2, 0],
                &[1, 1, 1],
                &[1, 0, 2],
                &[0, 3, 0],
                &[0, 2, 1],
                &[0, 1, 2],
                &[0, 0, 3],
            ],
        );
        assert!(cube.saturate().is_unit());
    }

    #[test]
    fn saturation_idempotent() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 0, 2], &[1, 1, 1]]);
        let s = i.saturate();
        assert_eq!(s.saturate(), s);
    }

    #[test]
    fn irreducible_decomposition_examples() {
        // (x1x2, x1x3) = (x1) ∩ (x2, x3)
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        let comps = i.irreducible_decomposition().unwrap();
        assert_eq!(
            comps,
            vec![
                ideal(3, &[&[0, 1, 0], &[0, 0, 1]]),
                ideal(3, &[&[1, 0, 0]])
            ]
        );
        // irreducible stays put
        let j = ideal(1, &[&[2]]);
        assert_eq!(j.irreducible_decomposition().unwrap(), vec![j]);
        // Table-1 ideal: (x1, x2^3) ∩ (x1^2, x2, x3)
        let t = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 3, 0]]);
        let comps = t.irreducible_decomposition().unwrap();
        assert_eq!(
            comps,
            vec![
                ideal(3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
                ideal(3, &[&[1, 0, 0], &[0, 3, 0]])
            ]
        );
        assert!(MonomialIdeal::zero(2).irreducible_decomposition().is_err());
    }

    #[test]
    fn decomposition_intersection_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let n = 3;
            let gens: Vec<Exponent> = (0..rng.gen_range(1..5))
                .map(|_| (0..n).map(|_| rng.gen_range(0..4)).collect())
                .collect();
            let i = MonomialIdeal::new(n, gens).unwrap();
            if !i.is_proper_nonzero() {
                continue;
            }
            let comps = i.irreducible_decomposition().unwrap();
            let mut acc = MonomialIdeal::unit(n);
            for c in &comps {
                acc = acc.intersect(c);
            }
            assert_eq!(acc, i, "round trip failed for {i:?}");
            // irredundance: dropping any component changes the intersection
            if comps.len() > 1 {
                for skip in 0..comps.len() {
                    let mut acc = MonomialIdeal::unit(n);
                    for (j, c) in comps.iter().enumerate() {
                        if j != skip {
                            acc = acc.intersect(c);
                        }
                    }
                    assert_ne!(acc, i, "redundant component in {comps:?}");
                }
            }
        }
    }

    #[test]
    fn associated_primes_and_dim() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        let primes = i.associated_primes().unwrap();
        assert_eq!(primes, vec![(vec![0], 2), (vec![1, 2], 1)]);
        assert_eq!(i.quotient_dim(), Some(2));
        assert_eq!(MonomialIdeal::zero(3).quotient_dim(), Some(3));
        assert_eq!(MonomialIdeal::unit(3).quotient_dim(), None);
        assert_eq!(MonomialIdeal::maximal(3).quotient_dim(), Some(0));
    }

    #[test]
    fn json_roundtrip() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"n":3,"gens":[[1,0,1],[1,1,0]]}"#);
        let back: MonomialIdeal = serde_json::from_str(&s).unwrap();
        assert_eq!(i, back);
    }
}
