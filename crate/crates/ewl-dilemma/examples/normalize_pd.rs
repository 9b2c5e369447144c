//! Normalize raw Prisoner's Dilemma payoffs into the two-parameter form.
//!
//! Run with: cargo run --example normalize_pd

use ewl_dilemma::game::{normalize, RawPd};
use ewl_dilemma::rational::Rat;

fn main() {
    let cases = [
        (5, 3, 1, 0),  // the textbook payoffs
        (10, 6, 2, 0), // same game, scaled by two
        (7, 5, 2, 1),
    ];
    for (t, r, p, s) in cases {
        let raw = RawPd::new(Rat::int(t), Rat::int(r), Rat::int(p), Rat::int(s))
            .expect("payoffs satisfy T > R > P > S and 2R > T + S");
        let pd = normalize(&raw);
        println!("(T,R,P,S) = ({t},{r},{p},{s})  ->  r = {}, p = {}", pd.r(), pd.p());
    }

    // Violations are reported with the failing inequality.
    let bad = RawPd::new(Rat::int(5), Rat::int(2), Rat::int(1), Rat::int(0));
    println!("(5,2,1,0) rejected: {}", bad.unwrap_err());
}
