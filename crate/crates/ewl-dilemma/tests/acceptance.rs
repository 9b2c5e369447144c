//! Acceptance suite: one test per documented criterion, each printing a
//! pass line. Exact claims are checked with rational equality; numeric
//! claims at their stated tolerances.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ewl_dilemma::ewl::{
    entangled_basis, ewl_payoffs, outcome_distribution, unitary, PayoffMethod, StrategyTriple,
};
use ewl_dilemma::extensions::{build_extension, ExtensionClass, ExtensionSpec};
use ewl_dilemma::game::{
    affine_transform, pure_nash_equilibria, BimatrixGame, NormalizedPd, StrategyProfile,
};
use ewl_dilemma::rational::Rat;
use ewl_dilemma::regions::ne_region_table;
use ewl_dilemma::verify::{
    best_equal_payoffs, check_affine_ne_invariance, max_equal_payoff, sweep_verify,
    ExtremalOutcome, GridSpec, NumberValue,
};

fn rr(n: i64, d: i64) -> Rat {
    Rat::ratio(n, d)
}

fn classic(value: &Rat) -> Rat {
    value * &Rat::int(5)
}

fn profiles(pairs: &[(usize, usize)]) -> BTreeSet<StrategyProfile> {
    pairs
        .iter()
        .map(|&(i, j)| StrategyProfile::new(i, j))
        .collect()
}

fn spec(class: ExtensionClass, param: Option<Rat>) -> ExtensionSpec {
    ExtensionSpec::new(class, param).expect("valid spec")
}

fn random_triple(rng: &mut ChaCha8Rng) -> StrategyTriple {
    let pi = std::f64::consts::PI;
    StrategyTriple::new(
        rng.random_range(0.0..=pi),
        rng.random_range(0.0..pi * 2.0),
        rng.random_range(0.0..pi * 2.0),
    )
    .expect("in range")
}

fn random_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rat {
    Rat::ratio(rng.random_range(lo..=hi), rng.random_range(1..=max_den))
}

fn random_game(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BimatrixGame {
    let grid = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| (random_rat(rng, -8, 8, 6), random_rat(rng, -8, 8, 6)))
                .collect()
        })
        .collect();
    BimatrixGame::from_rows(grid).expect("rectangular")
}

/// Criterion 1: the classical normalized dilemma has the unique pure NE
/// (2,2) with payoff (1/5, 1/5), decided exactly in under a millisecond.
#[test]
fn criterion_1_classical_baseline() {
    let gamma = NormalizedPd::standard().gamma();
    let _ = pure_nash_equilibria(&gamma); // warm-up
    let start = Instant::now();
    let equilibria = pure_nash_equilibria(&gamma);
    let elapsed = start.elapsed();

    assert_eq!(equilibria, profiles(&[(2, 2)]));
    assert_eq!(gamma.u1(2, 2), &rr(1, 5));
    assert_eq!(gamma.u2(2, 2), &rr(1, 5));
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    println!("criterion 1 (classical baseline): PASS ({elapsed:?})");
}

fn assert_exact_extremal(
    outcome: &ExtremalOutcome,
    expected_param: &Rat,
    expected_classic_payoff: &Rat,
) {
    let result = outcome.found().expect("equilibrium expected");
    assert!(!result.is_supremum_only);
    assert_eq!(
        result.param_star.as_ref().and_then(NumberValue::as_exact),
        Some(expected_param)
    );
    let payoff = result.payoff_star.as_exact().expect("exact payoff expected");
    assert_eq!(&classic(payoff), expected_classic_payoff);
}

fn assert_approx_extremal(
    outcome: &ExtremalOutcome,
    expected_param: f64,
    expected_classic_payoff: f64,
) {
    let result = outcome.found().expect("equilibrium expected");
    assert!(!result.is_supremum_only);
    let param = result.param_star.as_ref().expect("parameterized class");
    assert!(
        (param.to_f64() - expected_param).abs() <= 1e-6,
        "param {} vs {expected_param}",
        param.to_f64()
    );
    let payoff = 5.0 * result.payoff_star.to_f64();
    assert!(
        (payoff - expected_classic_payoff).abs() <= 1e-9,
        "payoff {payoff} vs {expected_classic_payoff}"
    );
}

/// Criterion 2: the A1 maximal-equal-payoff table for the standard dilemma
/// in classic units, with the two irrational parameters refined to 1e-6 and
/// their payoffs to 1e-9.
#[test]
fn criterion_2_a1_reproduction() {
    let start = Instant::now();
    let pd = NormalizedPd::standard();
    let at = |i, j| {
        max_equal_payoff(ExtensionClass::A1, &pd, StrategyProfile::new(i, j), None)
            .expect("valid query")
    };

    assert_exact_extremal(&at(2, 2), &Rat::one(), &Rat::int(1));
    assert_exact_extremal(&at(2, 3), &rr(1, 2), &rr(5, 2));
    assert_exact_extremal(&at(3, 2), &rr(1, 2), &rr(5, 2));
    assert_exact_extremal(&at(2, 4), &Rat::one(), &Rat::int(1));
    assert_exact_extremal(&at(4, 2), &Rat::one(), &Rat::int(1));
    assert_approx_extremal(&at(3, 3), (3.0 - 3.0f64.sqrt()) / 6.0, 5.0 / 3.0);
    assert_approx_extremal(&at(4, 4), (3.0 + 6.0f64.sqrt()) / 6.0, 5.0 / 3.0);
    // p = 1/5 > 1/6, so (3,4) and (4,3) have no equilibria at all.
    assert!(at(3, 4).found().is_none());
    assert!(at(4, 3).found().is_none());

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 2 (A1 reproduction): PASS ({elapsed:?})");
}

/// Criterion 3: the B extension of the standard dilemma has exactly the
/// eight equilibria {i,j in {2,3,4}} minus (2,2), each worth 9/4 classic.
#[test]
fn criterion_3_b_reproduction() {
    let pd = NormalizedPd::standard();
    let game = build_extension(&spec(ExtensionClass::B, None), &pd);
    let _ = pure_nash_equilibria(&game); // warm-up
    let start = Instant::now();
    let oracle = pure_nash_equilibria(&game);
    let predicted = ne_region_table(ExtensionClass::B, &pd, None).unwrap();
    let elapsed = start.elapsed();

    let expected = profiles(&[
        (2, 3),
        (2, 4),
        (3, 2),
        (3, 3),
        (3, 4),
        (4, 2),
        (4, 3),
        (4, 4),
    ]);
    assert_eq!(oracle, expected);
    assert_eq!(predicted, expected);
    for profile in &expected {
        let (u1, u2) = game.payoffs(*profile);
        assert_eq!(classic(u1), rr(9, 4));
        assert_eq!(classic(u2), rr(9, 4));
    }
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    println!("criterion 3 (B reproduction): PASS ({elapsed:?})");
}

/// Criterion 4: C at t = 1/2 coincides with B (eight equilibria); the
/// (2,3)/(3,2) payoff (4+t)/2 approaches 5/2 as t -> 1 and is flagged as a
/// supremum; the value at t = 1 - 2^-20 sits within 5e-7 of 5/2.
#[test]
fn criterion_4_c_reproduction() {
    let pd = NormalizedPd::standard();
    let b_game = build_extension(&spec(ExtensionClass::B, None), &pd);
    let c_game = build_extension(&spec(ExtensionClass::C, Some(rr(1, 2))), &pd);
    assert_eq!(b_game, c_game);
    assert_eq!(pure_nash_equilibria(&c_game).len(), 8);

    for (i, j) in [(2, 3), (3, 2)] {
        let outcome =
            max_equal_payoff(ExtensionClass::C, &pd, StrategyProfile::new(i, j), None).unwrap();
        let result = outcome.found().expect("nonempty region");
        assert!(result.is_supremum_only);
        assert_eq!(
            result.param_star.as_ref().and_then(NumberValue::as_exact),
            Some(&Rat::one())
        );
        assert_eq!(
            result.payoff_star.as_exact().map(classic),
            Some(rr(5, 2))
        );
    }

    // Exact gap check at t = 1 - 2^-20.
    let t = &Rat::one() - &rr(1, 1 << 20);
    let near = build_extension(&spec(ExtensionClass::C, Some(t)), &pd);
    let value = classic(near.u1(2, 3));
    let gap = (&rr(5, 2) - &value).abs();
    assert!(gap <= rr(5, 10_000_000), "gap {gap}");
    println!("criterion 4 (C reproduction): PASS (gap {gap} <= 5e-7)");
}

/// Criterion 5: over the t grid of step 1/64 at the standard dilemma, D1
/// always has exactly {(2,2)}, D2 has none, E1 has {(4,4)} exactly when
/// t >= 1/2, E2 has {(3,3)} exactly when t <= 1/2; both E payoffs are 9/4
/// classic at t = 1/2.
#[test]
fn criterion_5_d_e_reproduction() {
    let start = Instant::now();
    let pd = NormalizedPd::standard();
    let half = rr(1, 2);
    let step = rr(1, 64);
    let mut t = step.clone();
    while t < Rat::one() {
        let cases: [(ExtensionClass, BTreeSet<StrategyProfile>); 4] = [
            (ExtensionClass::D1, profiles(&[(2, 2)])),
            (ExtensionClass::D2, BTreeSet::new()),
            (
                ExtensionClass::E1,
                if t >= half {
                    profiles(&[(4, 4)])
                } else {
                    BTreeSet::new()
                },
            ),
            (
                ExtensionClass::E2,
                if t <= half {
                    profiles(&[(3, 3)])
                } else {
                    BTreeSet::new()
                },
            ),
        ];
        for (class, expected) in cases {
            let game = build_extension(&spec(class, Some(t.clone())), &pd);
            assert_eq!(pure_nash_equilibria(&game), expected, "{class} at t={t}");
            assert_eq!(
                ne_region_table(class, &pd, Some(&t)).unwrap(),
                expected,
                "{class} predicate at t={t}"
            );
        }
        t = &t + &step;
    }

    let e1 = build_extension(&spec(ExtensionClass::E1, Some(half.clone())), &pd);
    assert_eq!(classic(e1.u1(4, 4)), rr(9, 4));
    let e2 = build_extension(&spec(ExtensionClass::E2, Some(half.clone())), &pd);
    assert_eq!(classic(e2.u1(3, 3)), rr(9, 4));

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("criterion 5 (D/E reproduction): PASS ({elapsed:?})");
}

/// Criterion 6: the closed-form regions agree with the brute-force oracle
/// at every default grid point of every class (p, r step 1/20; a step 1/32;
/// t step 1/64), within the one-minute budget.
#[test]
fn criterion_6_predicate_oracle_equivalence() {
    let start = Instant::now();
    let mut total_points = 0usize;
    for class in ExtensionClass::ALL {
        let report = sweep_verify(class, &GridSpec::default_for(class));
        assert!(
            report.is_clean(),
            "{class}: {} mismatches, first: {:?}",
            report.entries.len(),
            report.entries.first()
        );
        total_points += report.points_tested;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "criterion 6 (predicate-oracle equivalence): PASS ({total_points} points, {elapsed:?})"
    );
}

/// Criterion 7: basis orthonormality within 1e-12; distribution
/// normalization within 1e-12 and dual-path payoff agreement within 1e-9 on
/// 1000 random strategy pairs; payoff symmetry on the symmetric base game
/// within 1e-9.
#[test]
fn criterion_7_ewl_engine_properties() {
    let basis = entangled_basis();
    let mut gram_dev = 0.0f64;
    for a in 0..4 {
        for b in 0..4 {
            let mut inner = num_complex::Complex64::new(0.0, 0.0);
            for (ca, cb) in basis[a].iter().zip(basis[b].iter()) {
                inner += ca.conj() * cb;
            }
            let expected = if a == b { 1.0 } else { 0.0 };
            gram_dev = gram_dev.max((inner - expected).norm());
        }
    }
    assert!(gram_dev <= 1e-12, "gram deviation {gram_dev:e}");

    let gamma = NormalizedPd::standard().gamma();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut sum_dev = 0.0f64;
    let mut dual_dev = 0.0f64;
    let mut sym_dev = 0.0f64;
    for _ in 0..1000 {
        let s1 = random_triple(&mut rng);
        let s2 = random_triple(&mut rng);
        let dist = outcome_distribution(&unitary(&s1), &unitary(&s2)).unwrap();
        sum_dev = sum_dev.max((dist.sum() - 1.0).abs());
        let basis_payoffs = ewl_payoffs(&gamma, &s1, &s2, PayoffMethod::Basis).unwrap();
        let closed_payoffs = ewl_payoffs(&gamma, &s1, &s2, PayoffMethod::ClosedForm).unwrap();
        dual_dev = dual_dev
            .max((basis_payoffs.0 - closed_payoffs.0).abs())
            .max((basis_payoffs.1 - closed_payoffs.1).abs());
        let swapped = ewl_payoffs(&gamma, &s2, &s1, PayoffMethod::Basis).unwrap();
        sym_dev = sym_dev.max((basis_payoffs.0 - swapped.1).abs());
    }
    assert!(sum_dev <= 1e-12, "normalization deviation {sum_dev:e}");
    assert!(dual_dev <= 1e-9, "dual-path deviation {dual_dev:e}");
    assert!(sym_dev <= 1e-9, "symmetry deviation {sym_dev:e}");
    println!(
        "criterion 7 (EWL engine): PASS (gram {gram_dev:.1e}, sum {sum_dev:.1e}, dual {dual_dev:.1e}, sym {sym_dev:.1e})"
    );
}

/// Criterion 8: pure NE sets are invariant under 100 random positive affine
/// transformations of random 4x4 rational games (exact), and EWL payoffs
/// transform affinely within 1e-9.
#[test]
fn criterion_8_affine_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_602);
    for _ in 0..100 {
        let game = random_game(&mut rng, 4, 4);
        let lambda = random_rat(&mut rng, 1, 8, 6);
        let mu = random_rat(&mut rng, -6, 6, 6);
        assert!(check_affine_ne_invariance(&game, &lambda, &mu).unwrap());
    }

    let mut ewl_dev = 0.0f64;
    for _ in 0..100 {
        let game = random_game(&mut rng, 2, 2);
        let lambda = random_rat(&mut rng, 1, 8, 6);
        let mu = random_rat(&mut rng, -6, 6, 6);
        let transformed = affine_transform(&game, &lambda, &mu).unwrap();
        let s1 = random_triple(&mut rng);
        let s2 = random_triple(&mut rng);
        let (v1, v2) = ewl_payoffs(&game, &s1, &s2, PayoffMethod::Basis).unwrap();
        let (w1, w2) = ewl_payoffs(&transformed, &s1, &s2, PayoffMethod::Basis).unwrap();
        let (lf, mf) = (lambda.to_f64(), mu.to_f64());
        ewl_dev = ewl_dev
            .max((w1 - (lf * v1 + mf)).abs())
            .max((w2 - (lf * v2 + mf)).abs());
    }
    assert!(ewl_dev <= 1e-9, "EWL affine deviation {ewl_dev:e}");
    println!("criterion 8 (affine invariance): PASS (EWL deviation {ewl_dev:.1e})");
}

/// Criterion 9: the best equal NE payoff attained across all eight classes
/// for the standard dilemma is exactly 5/2 classic - strictly above the
/// classical 1 and strictly below the Pareto value 3.
#[test]
fn criterion_9_pareto_gap() {
    let pd = NormalizedPd::standard();
    let per_class = best_equal_payoffs(&pd);
    let best = per_class
        .iter()
        .filter_map(|(_, payoff)| payoff.clone())
        .max()
        .expect("at least one class attains an equal NE payoff");
    let best_classic = classic(&best);
    assert_eq!(best_classic, rr(5, 2));
    assert!(best_classic < Rat::int(3));
    assert!(best_classic > Rat::int(1));
    println!("criterion 9 (Pareto gap): PASS (1 < 5/2 < 3, exact)");
}
