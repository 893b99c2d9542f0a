//! Acceptance suite: one test per criterion, each printing a pass line and
//! checking its runtime budget. All comparisons are exact.

use std::time::{Duration, Instant};

use lctab::corpus;
use lctab::decomp::{
    bs_greedy, cone_membership_lp, decompose_pd1, lengthen_step, non_vertex_certificate,
    split_step, vertex_test, CertificateOutcome, DecompGenerator, MembershipOutcome, Pd1Input,
};
use lctab::gamma::{gamma_module, gdp_check, gdp_split_data, thm68_check, thm68_data, GammaError};
use lctab::laurent::LaurentPoly;
use lctab::linalg;
use lctab::maps::{l0, l1};
use lctab::monomial::{
    classify, dimension_filtration, ext_table, graded_betti, local_coh_table, DimensionFactor,
    GradedModule, MonomialIdeal, Summand,
};
use lctab::pure::{
    alpha_split, enumerate_generators, generator_table, pi_coeffs, pi_poly, pure_betti,
    DegreeSequence, Family, GeneratorRef,
};
use lctab::rat::{binomial, rat, rat_int, Rat};
use lctab::ratfunc::{Direction, RatFunc};
use lctab::sacm::{decompose_sacm, sacm_assemble, FactorList};
use lctab::table::{table_combine, Orientation, Table};
use num_traits::{Signed, Zero};
use rand::Rng;

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
}

fn ds(degs: &[i64], n: usize) -> DegreeSequence {
    DegreeSequence::new(degs.to_vec(), n).unwrap()
}

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(d, c)| (d, rat_int(c))))
}

fn report(criterion: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("ok - {criterion}: passed in {elapsed:?} (budget {budget:?})");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its runtime budget: {elapsed:?} >= {budget:?}"
    );
}

#[test]
fn criterion_01_table_one_reproduction() {
    let start = Instant::now();
    let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 3, 0]]);
    let beta = graded_betti(&GradedModule::cyclic(i));
    assert_eq!(beta.entry(0), &RatFunc::from_poly(poly(&[(0, 1)])));
    assert_eq!(beta.entry(1), &RatFunc::from_poly(poly(&[(2, 3), (3, 1)])));
    assert_eq!(beta.entry(2), &RatFunc::from_poly(poly(&[(3, 3), (4, 1)])));
    assert_eq!(beta.entry(3), &RatFunc::from_poly(poly(&[(4, 1)])));
    report(
        "criterion 1 (Table 1 reproduction)",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_printed_pi_polynomials() {
    let start = Instant::now();
    assert_eq!(
        pi_poly(&ds(&[0, 1, 2, 3], 3)),
        poly(&[(0, 1), (1, -3), (2, 3), (3, -1)])
    );
    assert_eq!(
        pi_poly(&ds(&[0, 1, 3, 4], 3)),
        poly(&[(0, 1), (1, -2), (3, 2), (4, -1)])
    );
    report(
        "criterion 2 (printed pi polynomials)",
        start,
        Duration::from_millis(100),
    );
}

#[test]
fn criterion_03_pure_polynomial_property_suite() {
    let start = Instant::now();
    let mut r = corpus::rng(101);
    for _ in 0..200 {
        let d = corpus::random_degree_sequence(&mut r, 6);
        let s = d.s();
        let pi = pi_poly(&d);
        // divisible by exactly (1-t)^s
        assert_eq!(pi.one_minus_t_multiplicity(), s as u32, "{:?}", d.degrees());
        // alternating signs
        for (i, c) in pi_coeffs(&d).iter().enumerate() {
            assert!(!c.is_zero());
            assert_eq!(c.is_positive(), i % 2 == 0, "{:?}", d.degrees());
        }
        // positive limit of pi/(1-t)^s at t = 1
        let (order, limit) = RatFunc::new(pi, s as u32).pole_data().unwrap();
        assert_eq!(order, 0);
        assert!(limit.is_positive());
        // nullspace dimension s - s1 + 1 for every s1 <= s, by exact
        // Gaussian elimination on the binomial constraint matrix
        for s1 in 0..=s {
            let rows: Vec<Vec<Rat>> = (0..s1)
                .map(|j| {
                    (0..=s)
                        .map(|i| binomial(d.d(i) - d.d(0), j as i64))
                        .collect()
                })
                .collect();
            assert_eq!(
                linalg::nullspace_dim(&rows, s + 1),
                s - s1 + 1,
                "{:?} at s1={s1}",
                d.degrees()
            );
        }
    }
    report(
        "criterion 3 (pure polynomial property suite)",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_04_split_and_lengthen_identities() {
    let start = Instant::now();
    // pinned coefficients
    let (c1, _, c2, _) = split_step(&ds(&[0, 2], 3), 0, 1).unwrap();
    assert_eq!((c1, c2), (rat_int(1), rat_int(1)));
    let (c1, _, c2, _) = split_step(&ds(&[0, 1, 2, 4], 4), 2, 3).unwrap();
    assert_eq!((c1, c2), (rat(2, 3), rat(1, 3)));
    let st = lengthen_step(&ds(&[0, 1, 3], 3)).unwrap();
    assert_eq!((st.c1.clone(), st.c2.clone()), (rat_int(4), rat_int(-3)));

    let mut r = corpus::rng(202);
    // 100 random splits
    let mut splits = 0;
    while splits < 100 {
        let d = corpus::random_degree_sequence(&mut r, 6);
        let gaps: Vec<usize> = (0..d.s()).filter(|&i| d.d(i + 1) - d.d(i) >= 2).collect();
        if gaps.is_empty() {
            continue;
        }
        let i = gaps[r.gen_range(0..gaps.len())];
        let a = r.gen_range(d.d(i) + 1..d.d(i + 1));
        let (c1, dp, c2, dpp) = split_step(&d, i, a).unwrap();
        assert!(c1.is_positive() && c2.is_positive());
        let lhs = pi_poly(&dp).scale(&c1).add(&pi_poly(&dpp).scale(&c2));
        assert_eq!(lhs, pi_poly(&d));
        if i != 1 {
            let (al, alp) = alpha_split(&d);
            let (a1, p1) = alpha_split(&dp);
            let (a2, p2) = alpha_split(&dpp);
            assert_eq!(a1.scale(&c1).add(&a2.scale(&c2)), al);
            assert_eq!(p1.scale(&c1).add(&p2.scale(&c2)), alp);
        }
        splits += 1;
    }
    // 100 random lengthenings
    let mut lengthens = 0;
    while lengthens < 100 {
        let d = corpus::random_degree_sequence(&mut r, 6);
        if d.s() < 2 || d.s() + 1 > d.n() {
            continue;
        }
        let st = lengthen_step(&d).unwrap();
        assert!(st.c1.is_positive() && st.c2.is_negative());
        let lhs = pi_poly(&d).scale(&st.c1).add(&pi_poly(&st.d_prime).scale(&st.c2));
        assert_eq!(lhs, pi_poly(&st.d_second));
        // rearranged positive form
        let rhs = pi_poly(&st.d_prime)
            .scale(&st.c1_pos)
            .add(&pi_poly(&st.d_second).scale(&st.c2_pos));
        assert_eq!(rhs, pi_poly(&d));
        assert!(st.c1_pos.is_positive() && st.c2_pos.is_positive());
        lengthens += 1;
    }
    report(
        "criterion 4 (split and lengthen identities)",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_05_bs_pipeline_soundness() {
    let start = Instant::now();
    for m in corpus::random_quotients(303, 50, 5, 6) {
        let beta = graded_betti(&m);
        let dec = bs_greedy(&beta).unwrap();
        assert!(dec.residual_zero());
        assert!(dec.terms.iter().all(|(c, _)| c.is_positive()));
        // exact recomposition of the Betti table
        let recomposed = table_combine(dec.terms.iter().map(|(c, g)| {
            let DecompGenerator::Pure(d) = g else { panic!() };
            (c.clone(), pure_betti(d))
        }))
        .unwrap();
        assert_eq!(recomposed, beta);

        // transpose-side decomposition recomposes E = L1(beta) exactly
        let dec = decompose_pd1(Pd1Input::TransposeBetti(&beta)).unwrap();
        assert!(dec.residual_zero());
        let target = l1(&beta).unwrap();
        let recomposed = table_combine(dec.terms.iter().map(|(c, g)| {
            let DecompGenerator::Family(f) = g else { panic!() };
            (c.clone(), generator_table(f, 3).unwrap())
        }))
        .unwrap();
        assert_eq!(recomposed, target);
    }
    report(
        "criterion 5 (Boij-Soderberg pipeline soundness)",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_06_vertex_theory() {
    let start = Instant::now();
    let all = enumerate_generators(-3, 6, 3, &[Family::A1, Family::A2, Family::A3, Family::A4])
        .unwrap();
    assert!(!all.is_empty());
    for g in &all {
        assert_eq!(vertex_test(g), !matches!(g, GeneratorRef::A3 { .. }));
    }
    // the A3 element with degree sequence (0, 1, 3)
    let a3 = GeneratorRef::A3 {
        d0: 0,
        d2: 3,
        s: 2,
        e: 3,
    };
    let target = generator_table(&a3, 3).unwrap();
    match non_vertex_certificate(&target).unwrap() {
        CertificateOutcome::Certificate { pole_order, limit } => {
            assert_eq!(pole_order, 1);
            assert_eq!(limit, "3/2");
        }
        other => panic!("expected a certificate, got {other:?}"),
    }
    let vertices =
        enumerate_generators(-3, 6, 3, &[Family::A1, Family::A2, Family::A4]).unwrap();
    match cone_membership_lp(&target, &vertices).unwrap() {
        MembershipOutcome::Infeasible(w) => {
            assert!(w.eval(&target).is_positive());
            for g in &vertices {
                let t = generator_table(g, 3).unwrap();
                assert!(!w.eval(&t).is_positive(), "witness fails on {g:?}");
            }
        }
        MembershipOutcome::Member(_) => panic!("A3 decomposed over the vertex set"),
    }
    report("criterion 6 (vertex theory)", start, Duration::from_secs(30));
}

#[test]
fn criterion_07_local_duality_cross_check() {
    let start = Instant::now();
    // H(R) has V* coefficients 1, 3, 6, 10 at degrees -3..-6
    let h = l0(&ext_table(&GradedModule::cyclic(MonomialIdeal::zero(3))).unwrap()).unwrap();
    assert_eq!(
        h.entry(3).expand(-6, -3, Direction::Vstar),
        vec![rat_int(10), rat_int(6), rat_int(3), rat_int(1)]
    );
    // H(k) = (1, 0, 0, 0)
    let h = l0(&ext_table(&GradedModule::cyclic(MonomialIdeal::maximal(3))).unwrap()).unwrap();
    assert_eq!(h.entry(0), &RatFunc::from_poly(poly(&[(0, 1)])));
    assert!(h.entry(1).is_zero() && h.entry(2).is_zero() && h.entry(3).is_zero());

    for m in corpus::cm_quotients(404, 30) {
        let c = classify(&m).unwrap();
        let e = ext_table(&m).unwrap();
        // concentration at n - dim
        for i in 0..=3usize {
            assert_eq!(e.entry(i).is_zero(), i != 3 - c.dim, "{m:?} at {i}");
        }
        // Euler identity against the independent Betti engine
        let b = graded_betti(&m);
        let mut lhs = RatFunc::zero();
        let mut rhs = RatFunc::zero();
        for i in 0..=3usize {
            if i % 2 == 0 {
                lhs = lhs.add(e.entry(i));
                rhs = rhs.add(&b.entry(i).invert_variable(0));
            } else {
                lhs = lhs.sub(e.entry(i));
                rhs = rhs.sub(&b.entry(i).invert_variable(0));
            }
        }
        assert_eq!(lhs, rhs.div_one_minus_t_pow(3));
    }
    report(
        "criterion 7 (local duality cross-check)",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_08_sacm_additivity_and_decomposition() {
    let start = Instant::now();
    let modules = corpus::sacm_modules(505, 30);
    assert_eq!(modules.len(), 30);
    // the running example is part of the corpus
    assert_eq!(
        modules[0],
        GradedModule::cyclic(ideal(3, &[&[1, 1, 0], &[1, 0, 1]]))
    );
    for m in &modules {
        let factors: FactorList = dimension_filtration(m)
            .factors
            .iter()
            .enumerate()
            .filter_map(|(e, f)| match f {
                DimensionFactor::Zero => None,
                DimensionFactor::Module(fm) => {
                    Some((e, local_coh_table(fm).unwrap()))
                }
                DimensionFactor::Raw { .. } => panic!("corpus factors are expressible"),
            })
            .collect();
        let assembled = sacm_assemble(&factors).unwrap();
        assert_eq!(assembled, local_coh_table(m).unwrap(), "additivity for {m:?}");

        let (terms, residual) = decompose_sacm(&factors).unwrap();
        assert!(residual.is_zero(), "recomposition residual for {m:?}");
        assert!(terms.iter().all(|(c, _)| c.is_positive()));
    }
    report(
        "criterion 8 (saCM additivity and decomposition)",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_09_gamma_suite() {
    let start = Instant::now();
    // Γ(m) = (R, 1)
    let g = gamma_module(&GradedModule::of_ideal(MonomialIdeal::maximal(3))).unwrap();
    assert!(g.gamma.summands.len() == 1 && g.gamma.summands[0].is_free());
    assert_eq!(g.quotient_hs, RatFunc::from_poly(poly(&[(0, 1)])));
    // Γ(m^2) = (R, 1 + 3t)
    let g = gamma_module(&GradedModule::of_ideal(corpus::maximal_power(3, 2))).unwrap();
    assert!(g.gamma.summands[0].is_free());
    assert_eq!(g.quotient_hs, RatFunc::from_poly(poly(&[(0, 1), (1, 3)])));

    for m in corpus::gamma_modules(606, 25) {
        let g = gamma_module(&m).unwrap();
        // finite quotient and Hilbert bookkeeping
        assert!(g.quotient_hs.is_laurent_poly());
        assert_eq!(
            lctab::monomial::hilbert_series(&g.gamma),
            lctab::monomial::hilbert_series(&m).add(&g.quotient_hs)
        );
        let hm = local_coh_table(&m).unwrap();
        assert_eq!(hm.entry(1), &g.quotient_hs);
        let hg = local_coh_table(&g.gamma).unwrap();
        assert_eq!(hm.entry(2), hg.entry(2));
        assert_eq!(hm.entry(3), hg.entry(3));
        // idempotence
        let g2 = gamma_module(&g.gamma).unwrap();
        assert_eq!(g2.gamma, g.gamma);
        assert!(g2.quotient_hs.is_zero());
    }

    // the dimension-1 precondition fires exactly when the filtration says so
    let probes = vec![
        GradedModule::cyclic(ideal(3, &[&[1, 1, 0], &[1, 0, 1]])), // M_1 != 0
        GradedModule::cyclic(ideal(3, &[&[1, 0, 0]])),             // clean
        GradedModule::of_ideal(ideal(3, &[&[1, 1, 0], &[1, 0, 1]])), // torsion-free
        GradedModule::cyclic(ideal(3, &[&[0, 1, 1], &[0, 2, 0]])), // M_1 != 0
    ];
    for m in probes {
        let has_low = dimension_filtration(&m).has_factor_at_or_below(1);
        let depth_ok = classify(&m).unwrap().depth >= 1;
        match gamma_module(&m) {
            Err(GammaError::HasDim1Submodule) => assert!(has_low && depth_ok),
            Err(GammaError::DepthZero) => assert!(!depth_ok),
            Ok(_) => assert!(!has_low && depth_ok),
            Err(e) => panic!("unexpected error {e:?}"),
        }
    }
    report("criterion 9 (saturation suite)", start, Duration::from_secs(30));
}

#[test]
fn criterion_10_dimension_three_identity_suite() {
    let start = Instant::now();
    // auto-generated torsion splittings: error term zero, identity exact
    for m in corpus::thm68_modules(707, 20) {
        match thm68_data(&m) {
            Ok((hm, htor, hquot, e)) => {
                assert!(e.is_zero(), "monomial direct sums have zero error term");
                let v = thm68_check(&hm, &htor, &hquot, &e).unwrap();
                assert!(v.holds, "thm68 fails on {m:?}");
            }
            Err(GammaError::DepthZero) | Err(GammaError::HasDim1Submodule) => {}
            Err(e) => panic!("unexpected error {e:?}"),
        }
    }
    // 20 synthetic instances with nonzero error terms, and 20 perturbed
    // negatives that must be rejected
    let mut r = corpus::rng(808);
    for k in 0..20 {
        let e = RatFunc::from_poly(LaurentPoly::from_terms([
            (k as i64 % 5, rat_int(1 + (k as i64 % 3))),
            (-1, rat_int(r.gen_range(0..3))),
        ]));
        let mut htor = Table::zero(3, Orientation::Vstar);
        htor.set_entry(1, RatFunc::from_poly(poly(&[(0, 2)])));
        htor.set_entry(2, RatFunc::new(LaurentPoly::monomial(-2, rat_int(1)), 2));
        let mut hquot = Table::zero(3, Orientation::Vstar);
        hquot.set_entry(1, e.clone());
        hquot.set_entry(3, RatFunc::new(LaurentPoly::monomial(-3, rat_int(-1)), 3));
        let mut err_table = Table::zero(3, Orientation::Vstar);
        err_table.set_entry(1, e.clone());
        err_table.set_entry(2, e.clone());
        let hm = htor.add(&hquot).unwrap().sub(&err_table).unwrap();
        assert!(thm68_check(&hm, &htor, &hquot, &e).unwrap().holds);
        // perturb the error term
        let bad = e.add(&RatFunc::from_poly(LaurentPoly::monomial(
            r.gen_range(-2..3),
            rat_int(1),
        )));
        let v = thm68_check(&hm, &htor, &hquot, &bad).unwrap();
        assert!(!v.holds, "perturbed instance {k} must fail");
    }
    // general decomposition principle on split-saturation instances
    let splits = vec![
        (
            GradedModule::cyclic(MonomialIdeal::zero(3)),
            GradedModule::of_ideal(MonomialIdeal::maximal(3)),
            GradedModule::cyclic(ideal(3, &[&[1, 0, 0]])),
            GradedModule::cyclic(ideal(3, &[&[1, 0, 0]])),
        ),
        (
            GradedModule::new(vec![Summand::quotient(MonomialIdeal::zero(3), -1)]).unwrap(),
            GradedModule::new(vec![Summand::ideal(corpus::maximal_power(3, 2), -1)]).unwrap(),
            GradedModule::cyclic(MonomialIdeal::zero(3)),
            GradedModule::of_ideal(MonomialIdeal::maximal(3)),
        ),
        (
            GradedModule::of_ideal(ideal(3, &[&[1, 0, 0], &[0, 1, 0]])),
            GradedModule::of_ideal(ideal(3, &[&[1, 0, 0], &[0, 1, 0]])),
            GradedModule::cyclic(ideal(3, &[&[2, 0, 0]])),
            GradedModule::cyclic(ideal(3, &[&[2, 0, 0]])),
        ),
    ];
    for (a, ma, b, mb) in splits {
        let d = gdp_split_data(&a, &ma, &b, &mb).unwrap();
        let report = gdp_check(&d, true).unwrap();
        assert!(report.c4.holds, "(4) fails");
        assert!(report.c5.holds, "(5) fails: {:?}", report.c5.residuals);
        assert!(report.c6.holds, "(6) fails");
    }
    report(
        "criterion 10 (dimension-three identity suite)",
        start,
        Duration::from_secs(30),
    );
}
