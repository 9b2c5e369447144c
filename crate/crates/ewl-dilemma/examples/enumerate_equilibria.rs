//! Enumerate pure Nash equilibria, best responses and Pareto-optimal
//! profiles of the normalized dilemma, and watch the NE set survive a
//! positive affine rescaling.
//!
//! Run with: cargo run --example enumerate_equilibria

use ewl_dilemma::game::{
    affine_transform, best_responses, pareto_optimal_profiles, pure_nash_equilibria,
    NormalizedPd, Player, RawPd,
};
use ewl_dilemma::rational::Rat;

fn main() {
    let pd = NormalizedPd::standard();
    let gamma = pd.gamma();

    let equilibria = pure_nash_equilibria(&gamma);
    println!("pure NE of the normalized dilemma:");
    for profile in &equilibria {
        let (u1, u2) = gamma.payoffs(*profile);
        println!("  {profile} with payoffs ({u1}, {u2})");
    }

    let responses = best_responses(&gamma, Player::One, 1).unwrap();
    println!("player 1 best responses to column 1: {responses:?}");

    println!("Pareto-optimal profiles:");
    for profile in pareto_optimal_profiles(&gamma) {
        println!("  {profile}");
    }

    // The classic 0..5 payoffs are an affine image of the normalized game;
    // the NE set is identical.
    let classic = RawPd::new(Rat::int(5), Rat::int(3), Rat::int(1), Rat::int(0))
        .unwrap()
        .game();
    let rescaled = affine_transform(&classic, &Rat::ratio(1, 5), &Rat::zero()).unwrap();
    assert_eq!(rescaled, gamma);
    assert_eq!(pure_nash_equilibria(&classic), equilibria);
    println!("NE set unchanged under x -> x/5 rescaling of the classic payoffs");
}
