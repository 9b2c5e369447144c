//! The two-qubit payoff engine behind the quantum extensions.
//!
//! Players act on a maximally entangled two-qubit state with local SU(2)
//! unitaries; payoffs are expectations of the classical 2x2 payoffs over the
//! measurement distribution in an entangled basis. Two independent
//! computation paths are provided - an explicit state-vector path through the
//! 4x4 tensor product, and a closed-form trigonometric expression - and the
//! toolkit requires them to agree within [`PAYOFF_TOLERANCE`].
//!
//! Floating point is confined to this module; everything else in the crate is
//! exact rational arithmetic.

use num_complex::Complex64;
use thiserror::Error;

use crate::game::BimatrixGame;

/// Tolerance for structural checks: unitarity of generated matrices, basis
/// orthonormality, outcome-distribution normalization.
pub const STRUCTURE_TOLERANCE: f64 = 1e-12;

/// Maximum unitarity deviation accepted on matrices passed in from outside.
pub const UNITARY_INPUT_TOLERANCE: f64 = 1e-9;

/// Tolerance at which the two payoff paths (and payoff symmetry claims) are
/// compared.
pub const PAYOFF_TOLERANCE: f64 = 1e-9;

/// Errors from the quantum payoff engine.
#[derive(Debug, Error, PartialEq)]
pub enum EwlError {
    #[error("{name} = {value} outside {range}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("matrix deviates from unitarity by {deviation:e}")]
    NotUnitary { deviation: f64 },
    #[error("expected a 2x2 game, got {rows}x{cols}")]
    WrongShape { rows: usize, cols: usize },
    #[error("game is not symmetric")]
    NotSymmetric,
}

/// Parameters `(theta, alpha, beta)` of one player's unitary strategy, with
/// `theta` in `[0, pi]` and `alpha, beta` in `[0, 2*pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyTriple {
    theta: f64,
    alpha: f64,
    beta: f64,
}

impl StrategyTriple {
    pub fn new(theta: f64, alpha: f64, beta: f64) -> Result<Self, EwlError> {
        let tau = std::f64::consts::TAU;
        if !theta.is_finite() || !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(EwlError::ParameterOutOfRange {
                name: "theta",
                value: theta,
                range: "[0, pi]",
            });
        }
        if !alpha.is_finite() || !(0.0..tau).contains(&alpha) {
            return Err(EwlError::ParameterOutOfRange {
                name: "alpha",
                value: alpha,
                range: "[0, 2*pi)",
            });
        }
        if !beta.is_finite() || !(0.0..tau).contains(&beta) {
            return Err(EwlError::ParameterOutOfRange {
                name: "beta",
                value: beta,
                range: "[0, 2*pi)",
            });
        }
        Ok(StrategyTriple { theta, alpha, beta })
    }

    /// The identity strategy `(0, 0, 0)` (classical "first strategy").
    pub fn identity() -> Self {
        StrategyTriple {
            theta: 0.0,
            alpha: 0.0,
            beta: 0.0,
        }
    }

    /// The bit-flip strategy `(pi, 0, 0)` (classical "second strategy").
    pub fn flip() -> Self {
        StrategyTriple {
            theta: std::f64::consts::PI,
            alpha: 0.0,
            beta: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// A dense 2x2 complex matrix in row-major order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2(pub [[Complex64; 2]; 2]);

impl ComplexMatrix2 {
    pub fn determinant(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// Largest entry-wise deviation of `U * U^dagger` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..2 {
                    acc += self.0[i][k] * self.0[j][k].conj();
                }
                let expected = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((acc - expected).norm());
            }
        }
        worst
    }
}

/// The measurement probabilities over the four entangled basis outcomes,
/// clamped into `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutcomeDistribution {
    pub p11: f64,
    pub p12: f64,
    pub p21: f64,
    pub p22: f64,
}

impl OutcomeDistribution {
    pub fn as_array(&self) -> [f64; 4] {
        [self.p11, self.p12, self.p21, self.p22]
    }

    pub fn sum(&self) -> f64 {
        self.p11 + self.p12 + self.p21 + self.p22
    }
}

/// Which payoff computation path to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PayoffMethod {
    /// Explicit tensor product and inner products against the entangled
    /// basis.
    Basis,
    /// Closed-form trigonometric weights.
    ClosedForm,
}

/// The entangled basis `psi_11, psi_12, psi_21, psi_22` as amplitude vectors
/// over `|00>, |01>, |10>, |11>` (player 1 is the left tensor factor).
///
/// The vectors form an orthonormal basis; `psi_11` is the initial state.
pub fn entangled_basis() -> [[Complex64; 4]; 4] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let re = |x: f64| Complex64::new(x, 0.0);
    let im = |x: f64| Complex64::new(0.0, x);
    [
        // (|00> + i|11>)/sqrt(2)
        [re(s), re(0.0), re(0.0), im(s)],
        // (i|01> - |10>)/sqrt(2)
        [re(0.0), im(s), re(-s), re(0.0)],
        // -(|01> - i|10>)/sqrt(2)
        [re(0.0), re(-s), im(s), re(0.0)],
        // -(i|00> + |11>)/sqrt(2)
        [im(-s), re(0.0), re(0.0), re(-s)],
    ]
}

/// The SU(2) strategy matrix
/// `[[e^{ia} cos(t/2), i e^{ib} sin(t/2)], [i e^{-ib} sin(t/2), e^{-ia} cos(t/2)]]`.
pub fn unitary(strategy: &StrategyTriple) -> ComplexMatrix2 {
    let cos_half = (strategy.theta / 2.0).cos();
    let sin_half = (strategy.theta / 2.0).sin();
    let phase = |angle: f64| Complex64::new(angle.cos(), angle.sin());
    let i = Complex64::new(0.0, 1.0);
    ComplexMatrix2([
        [
            phase(strategy.alpha) * cos_half,
            i * phase(strategy.beta) * sin_half,
        ],
        [
            i * phase(-strategy.beta) * sin_half,
            phase(-strategy.alpha) * cos_half,
        ],
    ])
}

/// Kronecker product `u1 (x) u2` with player 1 as the left factor.
pub fn tensor_product(u1: &ComplexMatrix2, u2: &ComplexMatrix2) -> [[Complex64; 4]; 4] {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = u1.0[i][j] * u2.0[k][l];
                }
            }
        }
    }
    out
}

/// The distribution `p_kl = |<psi_kl| (u1 (x) u2) |psi_11>|^2`, computed via
/// the explicit tensor product. Inputs must be unitary within
/// [`UNITARY_INPUT_TOLERANCE`].
pub fn outcome_distribution(
    u1: &ComplexMatrix2,
    u2: &ComplexMatrix2,
) -> Result<OutcomeDistribution, EwlError> {
    for matrix in [u1, u2] {
        let deviation = matrix.unitarity_deviation();
        if deviation > UNITARY_INPUT_TOLERANCE {
            return Err(EwlError::NotUnitary { deviation });
        }
    }
    let basis = entangled_basis();
    let product = tensor_product(u1, u2);
    let mut state = [Complex64::new(0.0, 0.0); 4];
    for (row, amplitude) in state.iter_mut().enumerate() {
        for col in 0..4 {
            *amplitude += product[row][col] * basis[0][col];
        }
    }
    let mut probabilities = [0.0f64; 4];
    for (vector, probability) in basis.iter().zip(probabilities.iter_mut()) {
        let mut amp = Complex64::new(0.0, 0.0);
        for (coefficient, amplitude) in vector.iter().zip(state.iter()) {
            amp += coefficient.conj() * amplitude;
        }
        *probability = amp.norm_sqr().clamp(0.0, 1.0);
    }
    Ok(OutcomeDistribution {
        p11: probabilities[0],
        p12: probabilities[1],
        p21: probabilities[2],
        p22: probabilities[3],
    })
}

fn closed_form_weights(s1: &StrategyTriple, s2: &StrategyTriple) -> [f64; 4] {
    let c1 = (s1.theta / 2.0).cos();
    let n1 = (s1.theta / 2.0).sin();
    let c2 = (s2.theta / 2.0).cos();
    let n2 = (s2.theta / 2.0).sin();
    let (a1, b1) = (s1.alpha, s1.beta);
    let (a2, b2) = (s2.alpha, s2.beta);
    let w11 = ((a1 + a2).cos() * c1 * c2 + (b1 + b2).sin() * n1 * n2).powi(2);
    let w12 = ((a1 - b2).cos() * c1 * n2 + (a2 - b1).sin() * n1 * c2).powi(2);
    let w21 = ((a1 - b2).sin() * c1 * n2 + (a2 - b1).cos() * n1 * c2).powi(2);
    let w22 = ((a1 + a2).sin() * c1 * c2 - (b1 + b2).cos() * n1 * n2).powi(2);
    [w11, w12, w21, w22]
}

fn game_as_f64(game: &BimatrixGame) -> Result<[[(f64, f64); 2]; 2], EwlError> {
    if game.rows() != 2 || game.cols() != 2 {
        return Err(EwlError::WrongShape {
            rows: game.rows(),
            cols: game.cols(),
        });
    }
    let entry = |i: usize, j: usize| (game.u1(i, j).to_f64(), game.u2(i, j).to_f64());
    Ok([
        [entry(1, 1), entry(1, 2)],
        [entry(2, 1), entry(2, 2)],
    ])
}

/// Expected payoffs `(v1, v2)` of the quantum strategies `s1, s2` on a 2x2
/// game, via the requested computation path.
pub fn ewl_payoffs(
    game: &BimatrixGame,
    s1: &StrategyTriple,
    s2: &StrategyTriple,
    method: PayoffMethod,
) -> Result<(f64, f64), EwlError> {
    let payoffs = game_as_f64(game)?;
    let weights = match method {
        PayoffMethod::Basis => outcome_distribution(&unitary(s1), &unitary(s2))?.as_array(),
        PayoffMethod::ClosedForm => closed_form_weights(s1, s2),
    };
    let flat = [
        payoffs[0][0],
        payoffs[0][1],
        payoffs[1][0],
        payoffs[1][1],
    ];
    let mut v1 = 0.0;
    let mut v2 = 0.0;
    for (w, (d1, d2)) in weights.iter().zip(flat.iter()) {
        v1 += w * d1;
        v2 += w * d2;
    }
    Ok((v1, v2))
}

/// For a symmetric base game, checks `u2(s2, s1) = u1(s1, s2)` within
/// [`PAYOFF_TOLERANCE`]. Rejects non-symmetric games.
pub fn symmetry_check(
    game: &BimatrixGame,
    s1: &StrategyTriple,
    s2: &StrategyTriple,
) -> Result<bool, EwlError> {
    game_as_f64(game)?;
    if !game.is_symmetric() {
        return Err(EwlError::NotSymmetric);
    }
    let (v1, _) = ewl_payoffs(game, s1, s2, PayoffMethod::Basis)?;
    let (_, v2_swapped) = ewl_payoffs(game, s2, s1, PayoffMethod::Basis)?;
    Ok((v1 - v2_swapped).abs() <= PAYOFF_TOLERANCE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::NormalizedPd;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_triple(rng: &mut ChaCha8Rng) -> StrategyTriple {
        let pi = std::f64::consts::PI;
        StrategyTriple::new(
            rng.random_range(0.0..=pi),
            rng.random_range(0.0..pi * 2.0),
            rng.random_range(0.0..pi * 2.0),
        )
        .unwrap()
    }

    fn assert_close(actual: f64, expected: f64, tolerance: f64) {
        assert!(
            (actual - expected).abs() <= tolerance,
            "expected {expected}, got {actual}"
        );
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        let pi = std::f64::consts::PI;
        assert!(StrategyTriple::new(-0.1, 0.0, 0.0).is_err());
        assert!(StrategyTriple::new(pi + 0.1, 0.0, 0.0).is_err());
        assert!(StrategyTriple::new(0.0, 2.0 * pi, 0.0).is_err());
        assert!(StrategyTriple::new(0.0, 0.0, -1.0).is_err());
        assert!(StrategyTriple::new(pi, 0.0, 0.0).is_ok());
    }

    #[test]
    fn unitary_at_reference_points() {
        let id = unitary(&StrategyTriple::identity());
        assert_close(id.0[0][0].re, 1.0, 1e-15);
        assert_close(id.0[0][1].norm(), 0.0, 1e-15);
        assert_close(id.0[1][1].re, 1.0, 1e-15);

        let flip = unitary(&StrategyTriple::flip());
        assert_close(flip.0[0][0].norm(), 0.0, 1e-15);
        assert_close((flip.0[0][1] - Complex64::new(0.0, 1.0)).norm(), 0.0, 1e-15);
        assert_close((flip.0[1][0] - Complex64::new(0.0, 1.0)).norm(), 0.0, 1e-15);
    }

    #[test]
    fn unitaries_have_unit_determinant_and_pass_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let u = unitary(&random_triple(&mut rng));
            assert_close(u.determinant().re, 1.0, STRUCTURE_TOLERANCE);
            assert_close(u.determinant().im, 0.0, STRUCTURE_TOLERANCE);
            assert!(u.unitarity_deviation() <= STRUCTURE_TOLERANCE);
        }
    }

    #[test]
    fn basis_is_orthonormal() {
        let basis = entangled_basis();
        for a in 0..4 {
            for b in 0..4 {
                let mut inner = Complex64::new(0.0, 0.0);
                for (ca, cb) in basis[a].iter().zip(basis[b].iter()) {
                    inner += ca.conj() * cb;
                }
                let expected = if a == b { 1.0 } else { 0.0 };
                assert_close((inner - expected).norm(), 0.0, STRUCTURE_TOLERANCE);
            }
        }
    }

    #[test]
    fn distribution_at_classical_corners() {
        let id = unitary(&StrategyTriple::identity());
        let flip = unitary(&StrategyTriple::flip());

        let d = outcome_distribution(&id, &id).unwrap();
        assert_close(d.p11, 1.0, STRUCTURE_TOLERANCE);
        assert_close(d.p12 + d.p21 + d.p22, 0.0, STRUCTURE_TOLERANCE);

        let d = outcome_distribution(&flip, &flip).unwrap();
        assert_close(d.p22, 1.0, STRUCTURE_TOLERANCE);

        let d = outcome_distribution(&flip, &id).unwrap();
        assert_close(d.p21, 1.0, STRUCTURE_TOLERANCE);

        let d = outcome_distribution(&id, &flip).unwrap();
        assert_close(d.p12, 1.0, STRUCTURE_TOLERANCE);
    }

    #[test]
    fn distribution_rejects_non_unitary_input() {
        let mut scaled = unitary(&StrategyTriple::identity());
        scaled.0[0][0] *= 1.5;
        let err = outcome_distribution(&scaled, &scaled).unwrap_err();
        assert!(matches!(err, EwlError::NotUnitary { .. }));
    }

    #[test]
    fn distribution_normalization_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let u1 = unitary(&random_triple(&mut rng));
            let u2 = unitary(&random_triple(&mut rng));
            let d = outcome_distribution(&u1, &u2).unwrap();
            assert_close(d.sum(), 1.0, STRUCTURE_TOLERANCE);
        }
    }

    #[test]
    fn payoffs_on_gamma_at_classical_corners() {
        let gamma = NormalizedPd::standard().gamma();
        for method in [PayoffMethod::Basis, PayoffMethod::ClosedForm] {
            let (v1, v2) = ewl_payoffs(
                &gamma,
                &StrategyTriple::identity(),
                &StrategyTriple::identity(),
                method,
            )
            .unwrap();
            assert_close(v1, 0.6, 1e-12);
            assert_close(v2, 0.6, 1e-12);
            let (v1, v2) =
                ewl_payoffs(&gamma, &StrategyTriple::flip(), &StrategyTriple::flip(), method)
                    .unwrap();
            assert_close(v1, 0.2, 1e-12);
            assert_close(v2, 0.2, 1e-12);
        }
    }

    #[test]
    fn payoff_paths_agree_on_random_samples() {
        let gamma = NormalizedPd::standard().gamma();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut worst = 0.0f64;
        for _ in 0..300 {
            let s1 = random_triple(&mut rng);
            let s2 = random_triple(&mut rng);
            let basis = ewl_payoffs(&gamma, &s1, &s2, PayoffMethod::Basis).unwrap();
            let closed = ewl_payoffs(&gamma, &s1, &s2, PayoffMethod::ClosedForm).unwrap();
            worst = worst.max((basis.0 - closed.0).abs());
            worst = worst.max((basis.1 - closed.1).abs());
        }
        assert!(worst <= PAYOFF_TOLERANCE, "max deviation {worst:e}");
    }

    #[test]
    fn wrong_shape_is_rejected(){
        let big = crate::game::BimatrixGame::constant(
            4,
            4,
            (crate::rational::Rat::one(), crate::rational::Rat::one()),
        );
        let err = ewl_payoffs(
            &big,
            &StrategyTriple::identity(),
            &StrategyTriple::identity(),
            PayoffMethod::Basis,
        )
        .unwrap_err();
        assert!(matches!(err, EwlError::WrongShape { rows: 4, cols: 4 }));
    }

    #[test]
    fn symmetry_check_on_gamma() {
        let gamma = NormalizedPd::standard().gamma();
        assert!(symmetry_check(&gamma, &StrategyTriple::identity(), &StrategyTriple::flip())
            .unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..200 {
            let s1 = random_triple(&mut rng);
            let s2 = random_triple(&mut rng);
            assert!(symmetry_check(&gamma, &s1, &s2).unwrap());
        }
        // Equal strategies are the trivial diagonal case.
        let s = random_triple(&mut rng);
        assert!(symmetry_check(&gamma, &s, &s).unwrap());
    }

    #[test]
    fn symmetry_check_rejects_asymmetric_games() {
        let game = crate::game::BimatrixGame::from_rows(vec![
            vec![
                (crate::rational::Rat::one(), crate::rational::Rat::zero()),
                (crate::rational::Rat::zero(), crate::rational::Rat::zero()),
            ],
            vec![
                (crate::rational::Rat::zero(), crate::rational::Rat::zero()),
                (crate::rational::Rat::zero(), crate::rational::Rat::one()),
            ],
        ])
        .unwrap();
        let err = symmetry_check(&game, &StrategyTriple::identity(), &StrategyTriple::flip())
            .unwrap_err();
        assert_eq!(err, EwlError::NotSymmetric);
    }
}
