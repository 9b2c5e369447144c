//! Exact-arithmetic toolkit for the four-strategy quantum extensions of the
//! Prisoner's Dilemma.
//!
//! The crate builds the five classes (eight variants) of EWL-style
//! extensions of the generalized dilemma, enumerates their pure Nash
//! equilibria by brute force over exact rationals, evaluates closed-form
//! equilibrium-region predicates, and cross-verifies the two on parameter
//! grids. A small quantum engine computes EWL payoffs along two independent
//! paths that must agree.
//!
//! Most capabilities have a runnable example under `examples/`; the
//! `ewl-dilemma` binary exposes the same operations as subcommands.

pub mod cli;
pub mod ewl;
pub mod extensions;
pub mod game;
pub mod rational;
pub mod regions;
pub mod verify;

pub use ewl::{ewl_payoffs, outcome_distribution, unitary, PayoffMethod, StrategyTriple};
pub use extensions::{build_extension, derive_a_params, ExtensionClass, ExtensionSpec};
pub use game::{
    affine_transform, best_responses, normalize, pareto_optimal_profiles, pure_nash_equilibria,
    BimatrixGame, NormalizedPd, RawPd, StrategyProfile,
};
pub use rational::Rat;
pub use regions::{ne_condition, ne_region_table, RegionQuery, RegionVerdict};
pub use verify::{max_equal_payoff, sweep_verify, ExtremalOutcome, GridSpec, MismatchReport};
