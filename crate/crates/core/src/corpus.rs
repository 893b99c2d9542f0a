//! Seeded generators of genuine test instances from the monomial backend.
//!
//! Everything is deterministic in the seed, so certificates and acceptance
//! runs are reproducible bit for bit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::{classify, dimension_filtration, DimensionFactor, GradedModule, MonomialIdeal, Summand};
use crate::pure::DegreeSequence;

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A proper nonzero monomial ideal with at most `max_gens` generators of
/// total degree at most `max_deg`.
pub fn random_ideal(rng: &mut CorpusRng, n: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    loop {
        let count = rng.gen_range(1..=max_gens);
        let gens: Vec<Vec<u32>> = (0..count)
            .map(|_| loop {
                let g: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_deg.min(4))).collect();
                let d: u32 = g.iter().sum();
                if d > 0 && d <= max_deg {
                    return g;
                }
            })
            .collect();
        let i = MonomialIdeal::new(n, gens).expect("consistent exponents");
        if i.is_proper_nonzero() {
            return i;
        }
    }
}

/// `count` random proper nonzero cyclic quotients over three variables.
pub fn random_quotients(seed: u64, count: usize, max_gens: usize, max_deg: u32) -> Vec<GradedModule> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| GradedModule::cyclic(random_ideal(&mut r, 3, max_gens, max_deg)))
        .collect()
}

/// `count` Cohen-Macaulay cyclic quotients over three variables, found by
/// classification filtering.
pub fn cm_quotients(seed: u64, count: usize) -> Vec<GradedModule> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let m = GradedModule::cyclic(random_ideal(&mut r, 3, 5, 6));
        if classify(&m).expect("nonzero").is_cm {
            out.push(m);
        }
    }
    out
}

/// The `k`-th power of the maximal ideal.
pub fn maximal_power(n: usize, k: u32) -> MonomialIdeal {
    let mut gens = vec![vec![]];
    for _ in 0..n {
        gens = gens
            .into_iter()
            .flat_map(|g: Vec<u32>| {
                (0..=k).map(move |e| {
                    let mut g2 = g.clone();
                    g2.push(e);
                    g2
                })
            })
            .collect();
    }
    let gens = gens
        .into_iter()
        .filter(|g| g.iter().sum::<u32>() == k)
        .collect();
    MonomialIdeal::new(n, gens).expect("consistent exponents")
}

/// Do all dimension factors come out as expressible modules?
pub fn factors_expressible(m: &GradedModule) -> bool {
    dimension_filtration(m)
        .factors
        .iter()
        .all(|f| !matches!(f, DimensionFactor::Raw { .. }))
}

/// `count` sequentially almost Cohen-Macaulay modules with expressible
/// dimension factors: structured families seeded with random shifts and
/// exponents, then filtered by the classifier.
pub fn sacm_modules(seed: u64, count: usize) -> Vec<GradedModule> {
    let mut r = rng(seed);
    let mut out: Vec<GradedModule> = Vec::new();
    // the running example first
    out.push(GradedModule::cyclic(
        MonomialIdeal::new(3, vec![vec![1, 1, 0], vec![1, 0, 1]]).unwrap(),
    ));
    while out.len() < count {
        let m = match r.gen_range(0..4u8) {
            // x1^a (x2^b, x3^c): a plane plus an embedded line
            0 => {
                let a = r.gen_range(1..=2u32);
                let b = r.gen_range(1..=3u32);
                let c = r.gen_range(1..=3u32);
                GradedModule::cyclic(
                    MonomialIdeal::new(3, vec![vec![a, b, 0], vec![a, 0, c]]).unwrap(),
                )
            }
            // direct sum of shifted CM cyclic quotients by pure powers
            1 => {
                let mut summands = Vec::new();
                for _ in 0..r.gen_range(1..=3) {
                    let vars: u32 = r.gen_range(0..=3);
                    let mut gens = Vec::new();
                    for v in 0..vars as usize {
                        let mut g = vec![0u32; 3];
                        g[v] = r.gen_range(1..=3);
                        gens.push(g);
                    }
                    summands.push(Summand::quotient(
                        MonomialIdeal::new(3, gens).unwrap(),
                        r.gen_range(-2..=2),
                    ));
                }
                match GradedModule::new(summands) {
                    Ok(m) if !m.is_zero() => m,
                    _ => continue,
                }
            }
            // an m-primary part plus a shifted plane
            2 => {
                let k = r.gen_range(1..=2u32);
                let a = r.gen_range(1..=2u32);
                GradedModule::new(vec![
                    Summand::quotient(maximal_power(3, k), r.gen_range(-1..=1)),
                    Summand::quotient(
                        MonomialIdeal::new(3, vec![vec![a, 0, 0]]).unwrap(),
                        r.gen_range(-1..=1),
                    ),
                ])
                .unwrap()
            }
            // filtered random quotients
            _ => GradedModule::cyclic(random_ideal(&mut r, 3, 4, 5)),
        };
        let Ok(c) = classify(&m) else { continue };
        if c.is_sacm && factors_expressible(&m) {
            out.push(m);
        }
    }
    out.truncate(count);
    out
}

/// `count` modules satisfying the saturation preconditions over three
/// variables: depth at least one and no dimension-one submodule. These are
/// direct sums of monomial ideals and free summands.
pub fn gamma_modules(seed: u64, count: usize) -> Vec<GradedModule> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    out.push(GradedModule::of_ideal(MonomialIdeal::maximal(3)));
    while out.len() < count {
        let mut summands = vec![Summand::ideal(
            random_ideal(&mut r, 3, 4, 4),
            r.gen_range(-2..=2),
        )];
        if r.gen_bool(0.3) {
            summands.push(Summand::quotient(MonomialIdeal::zero(3), r.gen_range(-2..=2)));
        }
        let m = GradedModule::new(summands).unwrap();
        out.push(m);
    }
    out.truncate(count);
    out
}

/// `count` torsion-splitting instances: a torsion-free part (ideals, free
/// summands) plus principal torsion quotients, all meeting the depth and
/// dimension-filtration preconditions.
pub fn thm68_modules(seed: u64, count: usize) -> Vec<GradedModule> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut summands = vec![Summand::ideal(
            random_ideal(&mut r, 3, 4, 4),
            r.gen_range(-1..=1),
        )];
        for _ in 0..r.gen_range(0..=2) {
            let g: Vec<u32> = loop {
                let g: Vec<u32> = (0..3).map(|_| r.gen_range(0..=2)).collect();
                if g.iter().sum::<u32>() > 0 {
                    break g;
                }
            };
            summands.push(Summand::quotient(
                MonomialIdeal::new(3, vec![g]).unwrap(),
                r.gen_range(-1..=1),
            ));
        }
        if r.gen_bool(0.3) {
            summands.push(Summand::quotient(MonomialIdeal::zero(3), 0));
        }
        let m = GradedModule::new(summands).unwrap();
        out.push(m);
    }
    out
}

/// A degree sequence with `1 ≤ s ≤ max_n` and degrees in `[-5, 10]`.
pub fn random_degree_sequence(rng: &mut CorpusRng, max_n: usize) -> DegreeSequence {
    let n = rng.gen_range(1..=max_n);
    let s = rng.gen_range(1..=n);
    loop {
        let mut degs: Vec<i64> = (0..=s).map(|_| rng.gen_range(-5..=10)).collect();
        degs.sort_unstable();
        degs.dedup();
        if degs.len() == s + 1 {
            return DegreeSequence::new(degs, n).expect("sorted and deduplicated");
        }
    }
}
