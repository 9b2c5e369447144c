//! Cross-validation engine: closed-form region predicates against the
//! brute-force equilibrium oracle over parameter grids, structural checks,
//! dual-path payoff checks, and extremal equal-payoff searches.
//!
//! Everything on the rational side is exact; grid points are evaluated
//! pointwise, so refining a grid never removes a previously found
//! equilibrium parameter. Where an optimum sits at an irrational region
//! boundary, the search brackets it by bisection on the exact membership
//! predicate and reports a flagged approximation.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ewl::{
    self, entangled_basis, ewl_payoffs, outcome_distribution, unitary, PayoffMethod,
    StrategyTriple,
};
use crate::extensions::{build_extension, ExtensionClass, ExtensionError, ExtensionSpec, ParamKind};
use crate::game::{
    affine_transform, pure_nash_equilibria, BimatrixGame, GameError, NormalizedPd, StrategyProfile,
};
use crate::rational::Rat;
use crate::regions::{is_ne_unchecked, ne_region_table, RegionError};

/// Seed used by randomized checks when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 271_828;

/// Errors from verification queries.
#[derive(Debug, Error, PartialEq)]
pub enum VerifyError {
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error("grid step must be positive, got {0}")]
    NonPositiveStep(String),
}

/// Grid steps for a sweep: payoff parameters `p, r` and the class parameter.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub p_step: Rat,
    pub r_step: Rat,
    pub param_step: Option<Rat>,
}

impl GridSpec {
    /// Default grids: `p, r` step 1/20 over the valid region, `a` step 1/32
    /// on `[0,1]`, `t` step 1/64 on `(0,1)`. These hit every rational
    /// boundary value the per-class conditions single out (1/4, 1/2, 3/4).
    pub fn default_for(class: ExtensionClass) -> GridSpec {
        GridSpec {
            p_step: Rat::ratio(1, 20),
            r_step: Rat::ratio(1, 20),
            param_step: class.param_kind().map(default_param_step),
        }
    }

    /// All normalized dilemmas on the grid: multiples of the steps with
    /// `0 < p < r < 1` and `r > 1/2`.
    pub fn pd_points(&self) -> Vec<NormalizedPd> {
        assert!(self.p_step.is_positive() && self.r_step.is_positive());
        let mut out = Vec::new();
        let half = Rat::ratio(1, 2);
        let one = Rat::one();
        let mut r = self.r_step.clone();
        while r < one {
            if r > half {
                let mut p = self.p_step.clone();
                while p < r {
                    out.push(NormalizedPd::new(r.clone(), p.clone()).expect("grid is in range"));
                    p = &p + &self.p_step;
                }
            }
            r = &r + &self.r_step;
        }
        out
    }

    /// Class-parameter grid points (`[None]` for the parameterless class).
    pub fn param_points(&self, class: ExtensionClass) -> Vec<Option<Rat>> {
        match class.param_kind() {
            None => vec![None],
            Some(kind) => {
                let step = self
                    .param_step
                    .clone()
                    .unwrap_or_else(|| default_param_step(kind));
                param_grid(kind, &step).into_iter().map(Some).collect()
            }
        }
    }
}

fn default_param_step(kind: ParamKind) -> Rat {
    match kind {
        ParamKind::Alpha => Rat::ratio(1, 32),
        ParamKind::Theta => Rat::ratio(1, 64),
    }
}

fn param_grid(kind: ParamKind, step: &Rat) -> Vec<Rat> {
    assert!(step.is_positive());
    let one = Rat::one();
    let mut out = Vec::new();
    match kind {
        ParamKind::Alpha => {
            let mut a = Rat::zero();
            while a <= one {
                out.push(a.clone());
                a = &a + step;
            }
            if out.last() != Some(&one) {
                out.push(one);
            }
        }
        ParamKind::Theta => {
            let mut t = step.clone();
            while t < one {
                out.push(t.clone());
                t = &t + step;
            }
        }
    }
    out
}

/// One grid point where the closed forms and the oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MismatchEntry {
    pub p: Rat,
    pub r: Rat,
    pub param: Option<Rat>,
    pub predicted: BTreeSet<StrategyProfile>,
    pub oracle: BTreeSet<StrategyProfile>,
}

impl Serialize for MismatchEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("MismatchEntry", 5)?;
        state.serialize_field("p", &self.p)?;
        state.serialize_field("r", &self.r)?;
        state.serialize_field("param", &self.param)?;
        state.serialize_field("predicted", &self.predicted)?;
        state.serialize_field("oracle", &self.oracle)?;
        state.end()
    }
}

/// Outcome of a predicate-vs-oracle sweep; an empty detail list means full
/// agreement.
#[derive(Debug, Clone)]
pub struct MismatchReport {
    pub class: ExtensionClass,
    pub points_tested: usize,
    pub entries: Vec<MismatchEntry>,
}

impl MismatchReport {
    pub fn is_clean(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for MismatchReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("MismatchReport", 4)?;
        state.serialize_field("class", self.class.name())?;
        state.serialize_field("points", &self.points_tested)?;
        state.serialize_field("mismatches", &self.entries.len())?;
        state.serialize_field("details", &self.entries)?;
        state.end()
    }
}

/// Compares [`ne_region_table`] against the brute-force oracle at every grid
/// point; comparisons are exact set equality.
pub fn sweep_verify(class: ExtensionClass, grid: &GridSpec) -> MismatchReport {
    let pds = grid.pd_points();
    let params = grid.param_points(class);
    let mut entries = Vec::new();
    let mut points = 0usize;
    for pd in &pds {
        for param in &params {
            points += 1;
            let spec = ExtensionSpec::new(class, param.clone()).expect("grid point is valid");
            let oracle = pure_nash_equilibria(&build_extension(&spec, pd));
            let predicted =
                ne_region_table(class, pd, param.as_ref()).expect("grid point is valid");
            if predicted != oracle {
                entries.push(MismatchEntry {
                    p: pd.p().clone(),
                    r: pd.r().clone(),
                    param: param.clone(),
                    predicted,
                    oracle,
                });
            }
        }
    }
    MismatchReport {
        class,
        points_tested: points,
        entries,
    }
}

/// True iff the built extension passes the transpose-symmetry check.
pub fn check_extension_symmetry(
    class: ExtensionClass,
    pd: &NormalizedPd,
    param: Option<Rat>,
) -> Result<bool, ExtensionError> {
    let spec = ExtensionSpec::new(class, param)?;
    Ok(build_extension(&spec, pd).is_symmetric())
}

/// True iff the NE set is unchanged by the positive affine transform
/// `x -> lambda * x + mu`.
pub fn check_affine_ne_invariance(
    game: &BimatrixGame,
    lambda: &Rat,
    mu: &Rat,
) -> Result<bool, GameError> {
    let transformed = affine_transform(game, lambda, mu)?;
    Ok(pure_nash_equilibria(game) == pure_nash_equilibria(&transformed))
}

/// Result of a randomized dual-path payoff comparison.
#[derive(Debug, Clone, Serialize)]
pub struct DualPathCheck {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_deviation: f64,
    pub within_tolerance: bool,
}

pub(crate) fn random_triple(rng: &mut ChaCha8Rng) -> StrategyTriple {
    let pi = std::f64::consts::PI;
    StrategyTriple::new(
        rng.random_range(0.0..=pi),
        rng.random_range(0.0..pi * 2.0),
        rng.random_range(0.0..pi * 2.0),
    )
    .expect("sampled parameters are in range")
}

/// Maximum deviation between the basis and closed-form payoff paths over
/// random strategy pairs on the standard normalized dilemma.
pub fn check_ewl_dual_path(samples: usize, tolerance: f64, seed: u64) -> DualPathCheck {
    let gamma = NormalizedPd::standard().gamma();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_deviation = 0.0f64;
    for _ in 0..samples {
        let s1 = random_triple(&mut rng);
        let s2 = random_triple(&mut rng);
        let basis = ewl_payoffs(&gamma, &s1, &s2, PayoffMethod::Basis).expect("2x2 game");
        let closed = ewl_payoffs(&gamma, &s1, &s2, PayoffMethod::ClosedForm).expect("2x2 game");
        max_deviation = max_deviation
            .max((basis.0 - closed.0).abs())
            .max((basis.1 - closed.1).abs());
    }
    DualPathCheck {
        samples,
        seed,
        tolerance,
        max_deviation,
        within_tolerance: max_deviation <= tolerance,
    }
}

/// A number that is either exactly known or a flagged approximation of an
/// irrational value.
#[derive(Debug, Clone, PartialEq)]
pub enum NumberValue {
    Exact(Rat),
    Approx(f64),
}

impl NumberValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            NumberValue::Exact(value) => value.to_f64(),
            NumberValue::Approx(value) => *value,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, NumberValue::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        match self {
            NumberValue::Exact(value) => Some(value),
            NumberValue::Approx(_) => None,
        }
    }
}

impl Serialize for NumberValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("NumberValue", 2)?;
        match self {
            NumberValue::Exact(value) => {
                state.serialize_field("kind", "exact")?;
                state.serialize_field("value", &value.to_string())?;
            }
            NumberValue::Approx(value) => {
                state.serialize_field("kind", "approx")?;
                state.serialize_field("value", value)?;
            }
        }
        state.end()
    }
}

/// Best equal-payoff equilibrium found for one profile.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalResult {
    pub class: ExtensionClass,
    pub profile: StrategyProfile,
    /// Maximizing parameter; `None` for the parameterless class.
    pub param_star: Option<NumberValue>,
    /// The maximal equal payoff in normalized units.
    pub payoff_star: NumberValue,
    /// Set when the payoff is only approached (open parameter interval).
    pub is_supremum_only: bool,
    /// A rational in-region parameter achieving (or approaching) the
    /// payoff; usable for further exact queries.
    pub witness_param: Option<Rat>,
}

/// Outcome of the extremal search: either a result or an explicit
/// "no NE on grid" answer.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum ExtremalOutcome {
    Found(ExtremalResult),
    NoNeOnGrid,
}

impl ExtremalOutcome {
    pub fn found(&self) -> Option<&ExtremalResult> {
        match self {
            ExtremalOutcome::Found(result) => Some(result),
            ExtremalOutcome::NoNeOnGrid => None,
        }
    }
}

/// Quadratic `c2 x^2 + c1 x + c0` with exact coefficients; extension entries
/// are polynomials of degree at most two in the class parameter.
#[derive(Debug, Clone, PartialEq)]
struct Poly {
    c0: Rat,
    c1: Rat,
    c2: Rat,
}

impl Poly {
    fn interpolate(points: &[(Rat, Rat); 3]) -> Poly {
        let mut c0 = Rat::zero();
        let mut c1 = Rat::zero();
        let mut c2 = Rat::zero();
        for i in 0..3 {
            let (xi, yi) = &points[i];
            let (xa, _) = &points[(i + 1) % 3];
            let (xb, _) = &points[(i + 2) % 3];
            let denom = &(xi - xa) * &(xi - xb);
            let scale = yi / &denom;
            c2 = &c2 + &scale;
            c1 = &c1 - &(&scale * &(xa + xb));
            c0 = &c0 + &(&scale * &(xa * xb));
        }
        Poly { c0, c1, c2 }
    }

    fn eval(&self, x: &Rat) -> Rat {
        &(&(&(&self.c2 * x) + &self.c1) * x) + &self.c0
    }

    fn eval_f64(&self, x: f64) -> f64 {
        (self.c2.to_f64() * x + self.c1.to_f64()) * x + self.c0.to_f64()
    }

    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero()
    }

    fn sub(&self, other: &Poly) -> Poly {
        Poly {
            c0: &self.c0 - &other.c0,
            c1: &self.c1 - &other.c1,
            c2: &self.c2 - &other.c2,
        }
    }

    /// Stationary point of a genuine quadratic.
    fn critical_point(&self) -> Option<Rat> {
        if self.c2.is_zero() {
            None
        } else {
            Some(&(-&self.c1) / &(&Rat::int(2) * &self.c2))
        }
    }

    fn roots(&self) -> PolyRoots {
        if self.c2.is_zero() {
            if self.c1.is_zero() {
                return if self.c0.is_zero() {
                    PolyRoots::Everywhere
                } else {
                    PolyRoots::None
                };
            }
            return PolyRoots::Rational(vec![&(-&self.c0) / &self.c1]);
        }
        let discriminant = &self.c1.square() - &(&(&Rat::int(4) * &self.c2) * &self.c0);
        if discriminant.is_negative() {
            return PolyRoots::None;
        }
        let two_a = &Rat::int(2) * &self.c2;
        match discriminant.sqrt_exact() {
            Some(root) => {
                let lo = &(&(-&self.c1) - &root) / &two_a;
                let hi = &(&(-&self.c1) + &root) / &two_a;
                PolyRoots::Rational(if lo == hi { vec![lo] } else { vec![lo, hi] })
            }
            None => {
                let a = self.c2.to_f64();
                let b = self.c1.to_f64();
                let sqrt_disc = discriminant.to_f64().sqrt();
                PolyRoots::Irrational(vec![
                    (-b - sqrt_disc) / (2.0 * a),
                    (-b + sqrt_disc) / (2.0 * a),
                ])
            }
        }
    }
}

enum PolyRoots {
    None,
    Everywhere,
    Rational(Vec<Rat>),
    Irrational(Vec<f64>),
}

fn domain_contains(kind: ParamKind, value: &Rat) -> bool {
    match kind {
        ParamKind::Alpha => !value.is_negative() && value <= &Rat::one(),
        ParamKind::Theta => value.is_positive() && value < &Rat::one(),
    }
}

/// Candidate optimum during the extremal search.
struct Candidate {
    param: NumberValue,
    payoff_exact: Option<Rat>,
    payoff_f64: f64,
    witness: Rat,
    supremum: bool,
}

const PAYOFF_TIE_WINDOW: f64 = 1e-12;

fn better(candidate: &Candidate, incumbent: &Option<Candidate>) -> bool {
    match incumbent {
        None => true,
        Some(current) => candidate.payoff_f64 > current.payoff_f64 + PAYOFF_TIE_WINDOW,
    }
}

/// Membership bisection on `(out, inside)`: shrinks the bracket keeping
/// `region(inside)` true and `region(out)` false. Returns `(out, inside)`.
fn bisect_boundary<F: Fn(&Rat) -> bool>(mut out: Rat, mut inside: Rat, region: &F) -> (Rat, Rat) {
    for _ in 0..64 {
        let mid = &(&out + &inside) / &Rat::int(2);
        if region(&mid) {
            inside = mid;
        } else {
            out = mid;
        }
    }
    (out, inside)
}

/// Maximizes the equal NE payoff of `profile` over the parameter grid and
/// refines region boundaries; supremum-only cases (payoff approached at an
/// excluded endpoint of the open parameter interval) are flagged.
pub fn max_equal_payoff(
    class: ExtensionClass,
    pd: &NormalizedPd,
    profile: StrategyProfile,
    param_step: Option<&Rat>,
) -> Result<ExtremalOutcome, VerifyError> {
    if !(1..=4).contains(&profile.row) || !(1..=4).contains(&profile.col) {
        return Err(RegionError::ProfileOutOfRange { profile }.into());
    }
    if let Some(step) = param_step {
        if !step.is_positive() {
            return Err(VerifyError::NonPositiveStep(step.to_string()));
        }
    }
    let kind = match class.param_kind() {
        None => {
            // Parameterless class: the profile either is or is not an
            // equilibrium, and its payoffs are fixed.
            if !is_ne_unchecked(class, profile, pd, None) {
                return Ok(ExtremalOutcome::NoNeOnGrid);
            }
            let spec = ExtensionSpec::new(class, None).expect("class takes no parameter");
            let game = build_extension(&spec, pd);
            let (u1, u2) = game.payoffs(profile);
            if u1 != u2 {
                return Ok(ExtremalOutcome::NoNeOnGrid);
            }
            return Ok(ExtremalOutcome::Found(ExtremalResult {
                class,
                profile,
                param_star: None,
                payoff_star: NumberValue::Exact(u1.clone()),
                is_supremum_only: false,
                witness_param: None,
            }));
        }
        Some(kind) => kind,
    };

    let step = param_step
        .cloned()
        .unwrap_or_else(|| default_param_step(kind));
    let grid = param_grid(kind, &step);
    let region = |x: &Rat| domain_contains(kind, x) && is_ne_unchecked(class, profile, pd, Some(x));

    // Exact payoff polynomials in the class parameter, via interpolation at
    // three interior sample points.
    let samples: Vec<Rat> = vec![Rat::ratio(1, 4), Rat::ratio(1, 2), Rat::ratio(3, 4)];
    let mut pts1 = Vec::with_capacity(3);
    let mut pts2 = Vec::with_capacity(3);
    for x in &samples {
        let spec = ExtensionSpec::new(class, Some(x.clone())).expect("sample point is valid");
        let game = build_extension(&spec, pd);
        let (u1, u2) = game.payoffs(profile);
        pts1.push((x.clone(), u1.clone()));
        pts2.push((x.clone(), u2.clone()));
    }
    let poly1 = Poly::interpolate(&[pts1[0].clone(), pts1[1].clone(), pts1[2].clone()]);
    let poly2 = Poly::interpolate(&[pts2[0].clone(), pts2[1].clone(), pts2[2].clone()]);
    let diff = poly1.sub(&poly2);

    let mut best: Option<Candidate> = None;
    let consider_exact = |x: &Rat, best: &mut Option<Candidate>| {
        let payoff = poly1.eval(x);
        let candidate = Candidate {
            param: NumberValue::Exact(x.clone()),
            payoff_f64: payoff.to_f64(),
            payoff_exact: Some(payoff),
            witness: x.clone(),
            supremum: false,
        };
        if better(&candidate, best) {
            *best = Some(candidate);
        }
    };

    if diff.is_zero() {
        // Both players earn the same payoff at this profile for every
        // parameter; optimize over the whole region.
        let flags: Vec<bool> = grid.iter().map(&region).collect();
        let mut best_idx: Option<usize> = None;
        for (idx, flag) in flags.iter().enumerate() {
            if !flag {
                continue;
            }
            let payoff = poly1.eval(&grid[idx]);
            let replace = match best_idx {
                None => true,
                Some(current) => payoff > poly1.eval(&grid[current]),
            };
            if replace {
                best_idx = Some(idx);
            }
        }
        let best_idx = match best_idx {
            None => return Ok(ExtremalOutcome::NoNeOnGrid),
            Some(idx) => idx,
        };
        consider_exact(&grid[best_idx], &mut best);
        if let Some(critical) = poly1.critical_point() {
            if region(&critical) {
                consider_exact(&critical, &mut best);
            }
        }

        // Walk to the edges of the in-region component around the best grid
        // point, then refine each boundary by bisection.
        let mut lo_idx = best_idx;
        while lo_idx > 0 && flags[lo_idx - 1] {
            lo_idx -= 1;
        }
        let mut hi_idx = best_idx;
        while hi_idx + 1 < grid.len() && flags[hi_idx + 1] {
            hi_idx += 1;
        }

        let refine = |out: Rat, inside: Rat, endpoint: Option<Rat>, best: &mut Option<Candidate>| {
            let (out_final, in_final) = bisect_boundary(out, inside.clone(), &region);
            if in_final == inside {
                return; // boundary was the grid point itself
            }
            let payoff = poly1.eval(&in_final);
            let reaches_endpoint = endpoint.as_ref() == Some(&out_final);
            if reaches_endpoint {
                // The region extends to the excluded endpoint; the payoff
                // limit there is exact but never attained.
                let endpoint = endpoint.expect("checked above");
                let limit = poly1.eval(&endpoint);
                let candidate = Candidate {
                    param: NumberValue::Exact(endpoint),
                    payoff_f64: limit.to_f64(),
                    payoff_exact: Some(limit),
                    witness: in_final,
                    supremum: true,
                };
                if better(&candidate, best) {
                    *best = Some(candidate);
                }
            } else {
                let candidate = Candidate {
                    param: NumberValue::Approx(in_final.to_f64()),
                    payoff_f64: payoff.to_f64(),
                    payoff_exact: None,
                    witness: in_final,
                    supremum: false,
                };
                if better(&candidate, best) {
                    *best = Some(candidate);
                }
            }
        };

        if lo_idx > 0 {
            refine(grid[lo_idx - 1].clone(), grid[lo_idx].clone(), None, &mut best);
        } else if kind == ParamKind::Theta {
            refine(Rat::zero(), grid[0].clone(), Some(Rat::zero()), &mut best);
        }
        if hi_idx + 1 < grid.len() {
            refine(grid[hi_idx + 1].clone(), grid[hi_idx].clone(), None, &mut best);
        } else if kind == ParamKind::Theta {
            refine(
                Rat::one(),
                grid.last().expect("theta grid is nonempty").clone(),
                Some(Rat::one()),
                &mut best,
            );
        }
    } else {
        // Payoffs differ as polynomials; equal payoffs occur only at roots
        // of the difference.
        match diff.roots() {
            PolyRoots::None | PolyRoots::Everywhere => {}
            PolyRoots::Rational(roots) => {
                for root in &roots {
                    if region(root) {
                        consider_exact(root, &mut best);
                    }
                }
            }
            PolyRoots::Irrational(roots) => {
                for &root in &roots {
                    if !root.is_finite() {
                        continue;
                    }
                    let probe = Rat::from_f64_dyadic(root, 48);
                    if region(&probe) {
                        let candidate = Candidate {
                            param: NumberValue::Approx(root),
                            payoff_f64: poly1.eval_f64(root),
                            payoff_exact: None,
                            witness: probe,
                            supremum: false,
                        };
                        if better(&candidate, &best) {
                            best = Some(candidate);
                        }
                    }
                }
            }
        }
    }

    Ok(match best {
        None => ExtremalOutcome::NoNeOnGrid,
        Some(winner) => {
            let payoff_star = match winner.payoff_exact {
                Some(exact) => NumberValue::Exact(exact),
                None => NumberValue::Approx(winner.payoff_f64),
            };
            ExtremalOutcome::Found(ExtremalResult {
                class,
                profile,
                param_star: Some(winner.param),
                payoff_star,
                is_supremum_only: winner.supremum,
                witness_param: Some(winner.witness),
            })
        }
    })
}

/// One line of the reproduction bundle.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// The full reproduction bundle: every documented acceptance check, with
/// pass/fail and a short detail string.
#[derive(Debug, Clone, Serialize)]
pub struct ReproductionReport {
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
}

impl ReproductionReport {
    pub fn all_pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }
}

fn classic(value: &Rat) -> Rat {
    value * &Rat::int(5)
}

fn profile_set(pairs: &[(usize, usize)]) -> BTreeSet<StrategyProfile> {
    pairs
        .iter()
        .map(|&(i, j)| StrategyProfile::new(i, j))
        .collect()
}

fn criterion_classical_baseline() -> CriterionResult {
    let start = Instant::now();
    let gamma = NormalizedPd::standard().gamma();
    let equilibria = pure_nash_equilibria(&gamma);
    let elapsed = start.elapsed();
    let expected = profile_set(&[(2, 2)]);
    let payoff_ok = gamma.u1(2, 2) == &Rat::ratio(1, 5) && gamma.u2(2, 2) == &Rat::ratio(1, 5);
    let pass = equilibria == expected && payoff_ok && elapsed.as_micros() < 1000;
    let labels: Vec<String> = equilibria.iter().map(|p| p.to_string()).collect();
    CriterionResult {
        id: 1,
        name: "classical baseline",
        pass,
        detail: format!(
            "NE={{{}}}, payoff=(1/5,1/5), {}us",
            labels.join(" "),
            elapsed.as_micros()
        ),
    }
}

fn expect_exact(
    outcome: &ExtremalOutcome,
    param: Option<&Rat>,
    payoff: &Rat,
) -> bool {
    match outcome.found() {
        None => false,
        Some(result) => {
            !result.is_supremum_only
                && result.param_star.as_ref().and_then(|v| v.as_exact()) == param
                && result.payoff_star.as_exact() == Some(payoff)
        }
    }
}

fn expect_approx(outcome: &ExtremalOutcome, param: f64, payoff: f64) -> bool {
    match outcome.found() {
        None => false,
        Some(result) => {
            let param_ok = result
                .param_star
                .as_ref()
                .map(|v| (v.to_f64() - param).abs() <= 1e-6)
                .unwrap_or(false);
            let payoff_ok = (result.payoff_star.to_f64() - payoff).abs() <= 1e-9;
            param_ok && payoff_ok && !result.is_supremum_only
        }
    }
}

fn criterion_a1_table() -> CriterionResult {
    let start = Instant::now();
    let pd = NormalizedPd::standard();
    let at = |i, j| max_equal_payoff(ExtensionClass::A1, &pd, StrategyProfile::new(i, j), None)
        .expect("valid query");

    let mut ok = true;
    // (2,2) and (2,4)/(4,2): payoff 1 (classic) at a = 1.
    ok &= expect_exact(&at(2, 2), Some(&Rat::one()), &Rat::ratio(1, 5));
    for (i, j) in [(2, 4), (4, 2)] {
        ok &= expect_exact(&at(i, j), Some(&Rat::one()), &Rat::ratio(1, 5));
    }
    // (2,3)/(3,2): payoff 5/2 (classic) at a = 1/2.
    for (i, j) in [(2, 3), (3, 2)] {
        ok &= expect_exact(&at(i, j), Some(&Rat::ratio(1, 2)), &Rat::ratio(1, 2));
    }
    // (3,3): payoff 5/3 at a = (3 - sqrt(3))/6, approximated.
    ok &= expect_approx(&at(3, 3), (3.0 - 3.0f64.sqrt()) / 6.0, 1.0 / 3.0);
    // (4,4): payoff 5/3 at a = (3 + sqrt(6))/6.
    ok &= expect_approx(&at(4, 4), (3.0 + 6.0f64.sqrt()) / 6.0, 1.0 / 3.0);
    // (3,4)/(4,3): no equilibria because p = 1/5 > 1/6.
    for (i, j) in [(3, 4), (4, 3)] {
        ok &= at(i, j).found().is_none();
    }
    let elapsed = start.elapsed();
    CriterionResult {
        id: 2,
        name: "A1 extremal table",
        pass: ok && elapsed.as_secs_f64() < 10.0,
        detail: format!("six profile groups checked in {:.2?}", elapsed),
    }
}

fn criterion_b_table() -> CriterionResult {
    let pd = NormalizedPd::standard();
    let expected = profile_set(&[
        (2, 3),
        (2, 4),
        (3, 2),
        (3, 3),
        (3, 4),
        (4, 2),
        (4, 3),
        (4, 4),
    ]);
    let predicted = ne_region_table(ExtensionClass::B, &pd, None).expect("valid query");
    let spec = ExtensionSpec::new(ExtensionClass::B, None).expect("no parameter");
    let game = build_extension(&spec, &pd);
    let oracle = pure_nash_equilibria(&game);
    let quarter_nine = Rat::ratio(9, 4);
    let payoffs_ok = expected.iter().all(|profile| {
        let (u1, u2) = game.payoffs(*profile);
        classic(u1) == quarter_nine && classic(u2) == quarter_nine
    });
    let pass = predicted == expected && oracle == expected && payoffs_ok;
    CriterionResult {
        id: 3,
        name: "B class table",
        pass,
        detail: format!("8 equilibria, classic payoff 9/4; predicted == oracle == expected: {pass}"),
    }
}

fn criterion_c_class() -> CriterionResult {
    let pd = NormalizedPd::standard();
    let half = Rat::ratio(1, 2);
    let b_game = build_extension(
        &ExtensionSpec::new(ExtensionClass::B, None).expect("no parameter"),
        &pd,
    );
    let c_game = build_extension(
        &ExtensionSpec::new(ExtensionClass::C, Some(half.clone())).expect("valid"),
        &pd,
    );
    let matrices_equal = b_game == c_game;
    let eight = pure_nash_equilibria(&c_game).len() == 8;

    let outcome = max_equal_payoff(
        ExtensionClass::C,
        &pd,
        StrategyProfile::new(2, 3),
        None,
    )
    .expect("valid query");
    let supremum_ok = match outcome.found() {
        None => false,
        Some(result) => {
            result.is_supremum_only
                && result.param_star.as_ref().and_then(|v| v.as_exact()) == Some(&Rat::one())
                && result.payoff_star.as_exact() == Some(&half)
        }
    };
    // Value at t = 1 - 2^-20 sits within 5e-7 of the supremum, exactly.
    let t_near_one = &Rat::one() - &Rat::ratio(1, 1 << 20);
    let near_game = build_extension(
        &ExtensionSpec::new(ExtensionClass::C, Some(t_near_one)).expect("valid"),
        &pd,
    );
    let value = classic(near_game.u1(2, 3));
    let gap = (&Rat::ratio(5, 2) - &value).abs();
    let near_ok = gap <= Rat::ratio(5, 10_000_000);

    let pass = matrices_equal && eight && supremum_ok && near_ok;
    CriterionResult {
        id: 4,
        name: "C class checks",
        pass,
        detail: format!(
            "C(1/2)==B: {matrices_equal}; 8 NE: {eight}; (2,3) supremum 5/2 flagged: {supremum_ok}; gap at t=1-2^-20: {gap}"
        ),
    }
}

fn criterion_d_e_classes() -> CriterionResult {
    let start = Instant::now();
    let pd = NormalizedPd::standard();
    let half = Rat::ratio(1, 2);
    let step = Rat::ratio(1, 64);
    let mut ok = true;
    let mut t = step.clone();
    while t < Rat::one() {
        for (class, expected) in [
            (ExtensionClass::D1, profile_set(&[(2, 2)])),
            (ExtensionClass::D2, BTreeSet::new()),
            (
                ExtensionClass::E1,
                if t >= half {
                    profile_set(&[(4, 4)])
                } else {
                    BTreeSet::new()
                },
            ),
            (
                ExtensionClass::E2,
                if t <= half {
                    profile_set(&[(3, 3)])
                } else {
                    BTreeSet::new()
                },
            ),
        ] {
            let spec = ExtensionSpec::new(class, Some(t.clone())).expect("valid");
            let oracle = pure_nash_equilibria(&build_extension(&spec, &pd));
            let predicted = ne_region_table(class, &pd, Some(&t)).expect("valid");
            ok &= oracle == expected && predicted == expected;
        }
        t = &t + &step;
    }
    // Payoff 9/4 (classic) at t = 1/2 for both E classes.
    let e1 = build_extension(
        &ExtensionSpec::new(ExtensionClass::E1, Some(half.clone())).expect("valid"),
        &pd,
    );
    let e2 = build_extension(
        &ExtensionSpec::new(ExtensionClass::E2, Some(half.clone())).expect("valid"),
        &pd,
    );
    ok &= classic(e1.u1(4, 4)) == Rat::ratio(9, 4);
    ok &= classic(e2.u1(3, 3)) == Rat::ratio(9, 4);
    let elapsed = start.elapsed();
    CriterionResult {
        id: 5,
        name: "D/E classes",
        pass: ok && elapsed.as_secs_f64() < 5.0,
        detail: format!("63 grid points x 4 classes in {:.2?}", elapsed),
    }
}

fn criterion_sweeps() -> CriterionResult {
    let start = Instant::now();
    let mut total_points = 0usize;
    let mut total_mismatches = 0usize;
    for class in ExtensionClass::ALL {
        let report = sweep_verify(class, &GridSpec::default_for(class));
        total_points += report.points_tested;
        total_mismatches += report.entries.len();
    }
    let elapsed = start.elapsed();
    CriterionResult {
        id: 6,
        name: "predicate-oracle sweeps",
        pass: total_mismatches == 0 && elapsed.as_secs_f64() < 60.0,
        detail: format!(
            "{total_points} grid points, {total_mismatches} mismatches, {:.2?}",
            elapsed
        ),
    }
}

fn criterion_ewl_engine(seed: u64) -> CriterionResult {
    // Basis orthonormality.
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
    // Distribution normalization and payoff symmetry across 1000 pairs.
    let gamma = NormalizedPd::standard().gamma();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum_dev = 0.0f64;
    let mut sym_dev = 0.0f64;
    for _ in 0..1000 {
        let s1 = random_triple(&mut rng);
        let s2 = random_triple(&mut rng);
        let dist = outcome_distribution(&unitary(&s1), &unitary(&s2)).expect("unitary inputs");
        sum_dev = sum_dev.max((dist.sum() - 1.0).abs());
        let (v1, _) = ewl_payoffs(&gamma, &s1, &s2, PayoffMethod::Basis).expect("2x2");
        let (_, v2) = ewl_payoffs(&gamma, &s2, &s1, PayoffMethod::Basis).expect("2x2");
        sym_dev = sym_dev.max((v1 - v2).abs());
    }
    let dual = check_ewl_dual_path(1000, ewl::PAYOFF_TOLERANCE, seed);
    let pass = gram_dev <= 1e-12 && sum_dev <= 1e-12 && dual.within_tolerance && sym_dev <= 1e-9;
    CriterionResult {
        id: 7,
        name: "EWL engine properties",
        pass,
        detail: format!(
            "gram={gram_dev:.2e}, sum={sum_dev:.2e}, dual={:.2e}, symmetry={sym_dev:.2e}",
            dual.max_deviation
        ),
    }
}

pub(crate) fn random_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rat {
    Rat::ratio(rng.random_range(lo..=hi), rng.random_range(1..=max_den))
}

pub(crate) fn random_game(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BimatrixGame {
    let grid: Vec<Vec<(Rat, Rat)>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    (
                        random_rat(rng, -8, 8, 6),
                        random_rat(rng, -8, 8, 6),
                    )
                })
                .collect()
        })
        .collect();
    BimatrixGame::from_rows(grid).expect("rectangular grid")
}

fn criterion_affine_invariance(seed: u64) -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut ne_ok = true;
    for _ in 0..100 {
        let game = random_game(&mut rng, 4, 4);
        let lambda = random_rat(&mut rng, 1, 8, 6);
        let mu = random_rat(&mut rng, -6, 6, 6);
        ne_ok &= check_affine_ne_invariance(&game, &lambda, &mu).expect("lambda > 0");
    }
    let mut ewl_dev = 0.0f64;
    for _ in 0..100 {
        let game = random_game(&mut rng, 2, 2);
        let lambda = random_rat(&mut rng, 1, 8, 6);
        let mu = random_rat(&mut rng, -6, 6, 6);
        let transformed = affine_transform(&game, &lambda, &mu).expect("lambda > 0");
        let s1 = random_triple(&mut rng);
        let s2 = random_triple(&mut rng);
        let (v1, v2) = ewl_payoffs(&game, &s1, &s2, PayoffMethod::Basis).expect("2x2");
        let (w1, w2) = ewl_payoffs(&transformed, &s1, &s2, PayoffMethod::Basis).expect("2x2");
        let (lf, mf) = (lambda.to_f64(), mu.to_f64());
        ewl_dev = ewl_dev
            .max((w1 - (lf * v1 + mf)).abs())
            .max((w2 - (lf * v2 + mf)).abs());
    }
    let pass = ne_ok && ewl_dev <= 1e-9;
    CriterionResult {
        id: 8,
        name: "affine invariance",
        pass,
        detail: format!("NE sets identical on 100 games; EWL deviation {ewl_dev:.2e}"),
    }
}

/// Best attained equal NE payoff per class at the standard dilemma, in
/// normalized units.
pub fn best_equal_payoffs(pd: &NormalizedPd) -> Vec<(ExtensionClass, Option<Rat>)> {
    ExtensionClass::ALL
        .iter()
        .map(|&class| {
            let mut best: Option<Rat> = None;
            for i in 1..=4 {
                for j in 1..=4 {
                    let outcome =
                        max_equal_payoff(class, pd, StrategyProfile::new(i, j), None)
                            .expect("valid query");
                    if let Some(result) = outcome.found() {
                        if result.is_supremum_only {
                            continue;
                        }
                        if let Some(value) = result.payoff_star.as_exact() {
                            if best.as_ref().map(|b| value > b).unwrap_or(true) {
                                best = Some(value.clone());
                            }
                        }
                    }
                }
            }
            (class, best)
        })
        .collect()
}

fn criterion_pareto_gap() -> CriterionResult {
    let pd = NormalizedPd::standard();
    let per_class = best_equal_payoffs(&pd);
    let best = per_class
        .iter()
        .filter_map(|(_, payoff)| payoff.clone())
        .max();
    let pass = match best {
        None => false,
        Some(value) => {
            let best_classic = classic(&value);
            best_classic == Rat::ratio(5, 2)
                && best_classic < Rat::int(3)
                && best_classic > Rat::int(1)
        }
    };
    CriterionResult {
        id: 9,
        name: "Pareto gap",
        pass,
        detail: "best equal NE payoff 5/2 (classic): strictly between classical 1 and Pareto 3"
            .to_string(),
    }
}

/// Runs the full reproduction bundle.
pub fn reproduction_report(seed: u64) -> ReproductionReport {
    ReproductionReport {
        seed,
        criteria: vec![
            criterion_classical_baseline(),
            criterion_a1_table(),
            criterion_b_table(),
            criterion_c_class(),
            criterion_d_e_classes(),
            criterion_sweeps(),
            criterion_ewl_engine(seed),
            criterion_affine_invariance(seed),
            criterion_pareto_gap(),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rr(n: i64, d: i64) -> Rat {
        Rat::ratio(n, d)
    }

    #[test]
    fn default_pd_grid_respects_the_domain() {
        let grid = GridSpec::default_for(ExtensionClass::B);
        let pds = grid.pd_points();
        assert_eq!(pds.len(), 126);
        for pd in &pds {
            assert!(pd.r() > &rr(1, 2) && pd.r() < &Rat::one());
            assert!(pd.p().is_positive() && pd.p() < pd.r());
        }
    }

    #[test]
    fn param_grids_hit_reference_points() {
        let alpha = param_grid(ParamKind::Alpha, &rr(1, 32));
        assert_eq!(alpha.len(), 33);
        assert!(alpha.contains(&Rat::zero()));
        assert!(alpha.contains(&rr(1, 4)));
        assert!(alpha.contains(&Rat::one()));
        let theta = param_grid(ParamKind::Theta, &rr(1, 64));
        assert_eq!(theta.len(), 63);
        assert!(theta.contains(&rr(1, 2)));
        assert!(!theta.contains(&Rat::one()));
    }

    #[test]
    fn poly_interpolation_recovers_exact_quadratics() {
        let poly = Poly::interpolate(&[
            (rr(1, 4), rr(9, 16)),
            (rr(1, 2), rr(1, 4)),
            (rr(3, 4), rr(1, 16)),
        ]);
        // Those samples lie on (1 - x)^2.
        assert_eq!(poly.eval(&Rat::zero()), Rat::one());
        assert_eq!(poly.eval(&Rat::one()), Rat::zero());
        assert_eq!(poly.c2, Rat::one());
    }

    #[test]
    fn poly_roots_classify_rational_and_irrational() {
        // x^2 - 1: rational roots.
        let square = Poly {
            c0: rr(-1, 1),
            c1: Rat::zero(),
            c2: Rat::one(),
        };
        match square.roots() {
            PolyRoots::Rational(roots) => assert_eq!(roots, vec![rr(-1, 1), Rat::one()]),
            _ => panic!("expected rational roots"),
        }
        // x^2 - 2: irrational.
        let two = Poly {
            c0: rr(-2, 1),
            c1: Rat::zero(),
            c2: Rat::one(),
        };
        assert!(matches!(two.roots(), PolyRoots::Irrational(_)));
        // 2x - 1: linear.
        let linear = Poly {
            c0: rr(-1, 1),
            c1: Rat::int(2),
            c2: Rat::zero(),
        };
        match linear.roots() {
            PolyRoots::Rational(roots) => assert_eq!(roots, vec![rr(1, 2)]),
            _ => panic!("expected one rational root"),
        }
    }

    #[test]
    fn sweep_is_clean_on_a_coarse_grid() {
        let grid = GridSpec {
            p_step: rr(1, 8),
            r_step: rr(1, 8),
            param_step: Some(rr(1, 8)),
        };
        for class in [ExtensionClass::A1, ExtensionClass::C, ExtensionClass::D2] {
            let report = sweep_verify(class, &grid);
            assert!(report.is_clean(), "{class}: {:?}", report.entries);
            assert!(report.points_tested > 0);
        }
    }

    #[test]
    fn sweeps_are_deterministic_and_refinement_preserves_points() {
        let coarse = GridSpec {
            p_step: rr(1, 8),
            r_step: rr(1, 8),
            param_step: Some(rr(1, 8)),
        };
        let once = sweep_verify(ExtensionClass::E1, &coarse);
        let twice = sweep_verify(ExtensionClass::E1, &coarse);
        assert_eq!(
            serde_json::to_string(&once).unwrap(),
            serde_json::to_string(&twice).unwrap()
        );
        // Halving the steps keeps every coarse point on the grid, and the
        // pointwise-exact predicates give it the same answer there.
        for pd in coarse.pd_points() {
            for param in coarse.param_points(ExtensionClass::E1) {
                let at_coarse =
                    ne_region_table(ExtensionClass::E1, &pd, param.as_ref()).unwrap();
                let again = ne_region_table(ExtensionClass::E1, &pd, param.as_ref()).unwrap();
                assert_eq!(at_coarse, again);
            }
        }
        let fine = GridSpec {
            p_step: rr(1, 16),
            r_step: rr(1, 16),
            param_step: Some(rr(1, 16)),
        };
        let fine_pds = fine.pd_points();
        for pd in coarse.pd_points() {
            assert!(fine_pds.contains(&pd));
        }
    }

    #[test]
    fn symmetry_check_across_classes() {
        let pd = NormalizedPd::standard();
        assert!(check_extension_symmetry(ExtensionClass::A2, &pd, Some(rr(1, 3))).unwrap());
        assert!(check_extension_symmetry(ExtensionClass::B, &pd, None).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for class in ExtensionClass::ALL {
            for _ in 0..10 {
                let param = class.param_kind().map(|_| {
                    Rat::ratio(rng.random_range(1..32), 32)
                });
                assert!(check_extension_symmetry(class, &pd, param).unwrap());
            }
        }
    }

    #[test]
    fn affine_invariance_on_reference_games() {
        let classic = crate::game::RawPd::new(
            Rat::int(5),
            Rat::int(3),
            Rat::int(1),
            Rat::int(0),
        )
        .unwrap()
        .game();
        assert!(check_affine_ne_invariance(&classic, &rr(1, 5), &Rat::zero()).unwrap());
        assert!(check_affine_ne_invariance(&classic, &Rat::one(), &Rat::int(7)).unwrap());
        assert!(check_affine_ne_invariance(&classic, &Rat::zero(), &Rat::zero()).is_err());
    }

    #[test]
    fn dual_path_deviation_is_tiny() {
        let check = check_ewl_dual_path(200, 1e-9, DEFAULT_SEED);
        assert!(check.within_tolerance, "deviation {}", check.max_deviation);
        // The identity pair alone agrees to machine precision.
        let gamma = NormalizedPd::standard().gamma();
        let id = StrategyTriple::identity();
        let basis = ewl_payoffs(&gamma, &id, &id, PayoffMethod::Basis).unwrap();
        let closed = ewl_payoffs(&gamma, &id, &id, PayoffMethod::ClosedForm).unwrap();
        assert!((basis.0 - closed.0).abs() <= 1e-15);
        let flip = StrategyTriple::flip();
        let basis = ewl_payoffs(&gamma, &flip, &flip, PayoffMethod::Basis).unwrap();
        let closed = ewl_payoffs(&gamma, &flip, &flip, PayoffMethod::ClosedForm).unwrap();
        assert!((basis.0 - closed.0).abs() <= 1e-12);
    }

    #[test]
    fn extremal_exact_cases_on_the_standard_dilemma() {
        let pd = NormalizedPd::standard();
        // A1 (2,2): single point a = 1, payoff p.
        let outcome =
            max_equal_payoff(ExtensionClass::A1, &pd, StrategyProfile::new(2, 2), None).unwrap();
        assert!(expect_exact(&outcome, Some(&Rat::one()), &rr(1, 5)));
        // A1 (2,3): equal payoffs only at a = 1/2.
        let outcome =
            max_equal_payoff(ExtensionClass::A1, &pd, StrategyProfile::new(2, 3), None).unwrap();
        assert!(expect_exact(&outcome, Some(&rr(1, 2)), &rr(1, 2)));
        // E1 (4,4): maximum at the closed region edge t = 1/2.
        let outcome =
            max_equal_payoff(ExtensionClass::E1, &pd, StrategyProfile::new(4, 4), None).unwrap();
        assert!(expect_exact(&outcome, Some(&rr(1, 2)), &rr(9, 20)));
        // E2 (3,3): mirror image.
        let outcome =
            max_equal_payoff(ExtensionClass::E2, &pd, StrategyProfile::new(3, 3), None).unwrap();
        assert!(expect_exact(&outcome, Some(&rr(1, 2)), &rr(9, 20)));
        // B (3,3): parameterless.
        let outcome =
            max_equal_payoff(ExtensionClass::B, &pd, StrategyProfile::new(3, 3), None).unwrap();
        let result = outcome.found().unwrap();
        assert_eq!(result.param_star, None);
        assert_eq!(result.payoff_star.as_exact(), Some(&rr(9, 20)));
        // A1 (3,4): empty region for the standard dilemma.
        let outcome =
            max_equal_payoff(ExtensionClass::A1, &pd, StrategyProfile::new(3, 4), None).unwrap();
        assert!(outcome.found().is_none());
    }

    #[test]
    fn extremal_refines_irrational_boundaries() {
        let pd = NormalizedPd::standard();
        let outcome =
            max_equal_payoff(ExtensionClass::A1, &pd, StrategyProfile::new(3, 3), None).unwrap();
        let result = outcome.found().expect("region is nonempty");
        let param = result.param_star.as_ref().unwrap();
        assert!(!param.is_exact());
        let expected = (3.0 - 3.0f64.sqrt()) / 6.0;
        assert!((param.to_f64() - expected).abs() <= 1e-6);
        assert!((result.payoff_star.to_f64() - 1.0 / 3.0).abs() <= 1e-9);
        // The witness parameter is rational, inside the region, and its
        // exact payoff is within tolerance of the reported value.
        let witness = result.witness_param.as_ref().unwrap();
        assert!(is_ne_unchecked(
            ExtensionClass::A1,
            StrategyProfile::new(3, 3),
            &pd,
            Some(witness)
        ));
    }

    #[test]
    fn extremal_flags_supremum_only_for_c_off_diagonal() {
        let pd = NormalizedPd::standard();
        let outcome =
            max_equal_payoff(ExtensionClass::C, &pd, StrategyProfile::new(2, 3), None).unwrap();
        let result = outcome.found().expect("region is nonempty");
        assert!(result.is_supremum_only);
        assert_eq!(
            result.param_star.as_ref().unwrap().as_exact(),
            Some(&Rat::one())
        );
        assert_eq!(result.payoff_star.as_exact(), Some(&rr(1, 2)));
        let witness = result.witness_param.as_ref().unwrap();
        assert!(witness < &Rat::one() && witness > &rr(63, 64));
    }

    #[test]
    fn extremal_validation_errors() {
        let pd = NormalizedPd::standard();
        assert!(max_equal_payoff(
            ExtensionClass::A1,
            &pd,
            StrategyProfile::new(0, 9),
            None
        )
        .is_err());
        assert!(max_equal_payoff(
            ExtensionClass::A1,
            &pd,
            StrategyProfile::new(2, 2),
            Some(&Rat::zero())
        )
        .is_err());
    }

    #[test]
    fn d1_extremal_payoff_is_constant_in_t() {
        let pd = NormalizedPd::standard();
        let outcome =
            max_equal_payoff(ExtensionClass::D1, &pd, StrategyProfile::new(2, 2), None).unwrap();
        let result = outcome.found().unwrap();
        assert_eq!(result.payoff_star.as_exact(), Some(&rr(1, 5)));
        assert!(!result.is_supremum_only);
    }
}
