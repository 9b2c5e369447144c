//! Build each of the eight four-strategy extension variants and print the
//! player-1 payoff matrix in classic 0..5 units.
//!
//! Run with: cargo run --example build_extensions

use ewl_dilemma::extensions::{
    build_extension, classical_embedding_check, ExtensionClass, ExtensionSpec,
};
use ewl_dilemma::game::{affine_transform, NormalizedPd};
use ewl_dilemma::rational::Rat;

fn main() {
    let pd = NormalizedPd::standard();
    for class in ExtensionClass::ALL {
        let param = class.param_kind().map(|_| Rat::ratio(1, 4));
        let spec = ExtensionSpec::new(class, param.clone()).unwrap();
        let game = build_extension(&spec, &pd);
        assert!(game.is_symmetric());
        assert!(classical_embedding_check(&game, &pd));

        let classic = affine_transform(&game, &Rat::int(5), &Rat::zero()).unwrap();
        match param {
            Some(value) => println!("{class} (parameter {value}), player 1 payoffs x5:"),
            None => println!("{class}, player 1 payoffs x5:"),
        }
        for i in 1..=4 {
            let row: Vec<String> = (1..=4).map(|j| classic.u1(i, j).to_string()).collect();
            println!("  [{}]", row.join(", "));
        }
        println!();
    }
}
