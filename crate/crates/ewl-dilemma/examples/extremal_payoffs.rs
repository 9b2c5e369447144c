//! Maximal equal NE payoffs per profile, in classic 0..5 units: the A1
//! table with its two irrational maximizers, and the C-class supremum that
//! is approached but never attained.
//!
//! Run with: cargo run --example extremal_payoffs

use ewl_dilemma::extensions::ExtensionClass;
use ewl_dilemma::game::{NormalizedPd, StrategyProfile};
use ewl_dilemma::verify::{max_equal_payoff, ExtremalOutcome, NumberValue};

fn show(value: &NumberValue, scale: f64) -> String {
    match value {
        NumberValue::Exact(v) => format!("{} (exact)", v),
        NumberValue::Approx(v) => format!("{:.8} (approx)", v * scale),
    }
}

fn main() {
    let pd = NormalizedPd::standard();

    println!("A1 extension, maximal equal NE payoffs (classic units):");
    for i in 1..=4 {
        for j in 1..=4 {
            let profile = StrategyProfile::new(i, j);
            let outcome = max_equal_payoff(ExtensionClass::A1, &pd, profile, None).unwrap();
            match outcome {
                ExtremalOutcome::NoNeOnGrid => println!("  {profile}: no NE"),
                ExtremalOutcome::Found(result) => {
                    let payoff = match &result.payoff_star {
                        NumberValue::Exact(v) => {
                            format!("{}", v * &ewl_dilemma::rational::Rat::int(5))
                        }
                        NumberValue::Approx(v) => format!("{:.9}", v * 5.0),
                    };
                    let param = result
                        .param_star
                        .as_ref()
                        .map(|p| show(p, 1.0))
                        .unwrap_or_else(|| "-".into());
                    println!("  {profile}: payoff {payoff} at a = {param}");
                }
            }
        }
    }

    // C-class (2,3): the payoff (4+t)/2 climbs toward 5/2 as t -> 1, but
    // t = 1 is outside the parameter interval.
    let outcome = max_equal_payoff(
        ExtensionClass::C,
        &pd,
        StrategyProfile::new(2, 3),
        None,
    )
    .unwrap();
    if let ExtremalOutcome::Found(result) = outcome {
        println!(
            "\nC (2,3): supremum payoff {} (classic {}), supremum-only: {}",
            show(&result.payoff_star, 1.0),
            result.payoff_star.to_f64() * 5.0,
            result.is_supremum_only
        );
    }
}
