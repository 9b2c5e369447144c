//! Figure-ready payoff series: player payoffs at each NE profile of the A1
//! extension as a function of the weight a, in classic units.
//!
//! The same data is available from the binary:
//!   ewl-dilemma figure-data --class A1 --axis param --scale classic --format csv
//!
//! Run with: cargo run --example figure_series

use ewl_dilemma::cli::{figure_data_param, DisplayScale};
use ewl_dilemma::extensions::ExtensionClass;
use ewl_dilemma::game::NormalizedPd;
use ewl_dilemma::rational::Rat;

fn main() {
    let pd = NormalizedPd::standard();
    let scale = DisplayScale::classic(Rat::int(5), Rat::zero());
    let series = figure_data_param(
        ExtensionClass::A1,
        &pd,
        Some(&Rat::ratio(1, 8)),
        &scale,
    )
    .unwrap();

    println!("profile,x,payoff1,payoff2");
    for s in &series {
        for point in &s.points {
            println!("{},{},{},{}", s.label, point.x, point.payoff1, point.payoff2);
        }
    }

    let nonempty = series.iter().filter(|s| !s.points.is_empty()).count();
    println!("# {nonempty} of {} profiles have NE somewhere on the grid", series.len());
}
