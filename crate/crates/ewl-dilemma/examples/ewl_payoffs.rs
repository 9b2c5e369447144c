//! Quantum payoffs on the normalized dilemma: outcome distributions and the
//! two independent payoff paths.
//!
//! Run with: cargo run --example ewl_payoffs

use ewl_dilemma::ewl::{
    ewl_payoffs, outcome_distribution, symmetry_check, unitary, PayoffMethod, StrategyTriple,
};
use ewl_dilemma::game::NormalizedPd;

fn main() {
    let gamma = NormalizedPd::standard().gamma();

    let identity = StrategyTriple::identity();
    let flip = StrategyTriple::flip();
    let quarter = StrategyTriple::new(std::f64::consts::FRAC_PI_2, 0.7, 2.1).unwrap();

    for (name, s1, s2) in [
        ("identity vs identity", &identity, &identity),
        ("flip vs flip", &flip, &flip),
        ("flip vs identity", &flip, &identity),
        ("quarter-turn vs flip", &quarter, &flip),
    ] {
        let dist = outcome_distribution(&unitary(s1), &unitary(s2)).unwrap();
        let basis = ewl_payoffs(&gamma, s1, s2, PayoffMethod::Basis).unwrap();
        let closed = ewl_payoffs(&gamma, s1, s2, PayoffMethod::ClosedForm).unwrap();
        println!("{name}:");
        println!("  outcome distribution: {:?}", dist.as_array());
        println!("  payoffs via basis:       ({:.6}, {:.6})", basis.0, basis.1);
        println!("  payoffs via closed form: ({:.6}, {:.6})", closed.0, closed.1);
        assert!((basis.0 - closed.0).abs() <= 1e-9);
        assert!((basis.1 - closed.1).abs() <= 1e-9);
    }

    // The quantum game inherits the symmetry of its base game.
    assert!(symmetry_check(&gamma, &quarter, &flip).unwrap());
    println!("payoff symmetry u2(s2, s1) = u1(s1, s2) holds on the symmetric base game");
}
