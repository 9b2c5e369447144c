//! Cross-verify the closed-form regions against the brute-force oracle over
//! every class, on a coarse grid so the example finishes quickly.
//!
//! Run with: cargo run --release --example sweep_verification

use ewl_dilemma::extensions::ExtensionClass;
use ewl_dilemma::rational::Rat;
use ewl_dilemma::verify::{sweep_verify, GridSpec};

fn main() {
    let mut total = 0usize;
    for class in ExtensionClass::ALL {
        let grid = GridSpec {
            p_step: Rat::ratio(1, 10),
            r_step: Rat::ratio(1, 10),
            param_step: GridSpec::default_for(class).param_step,
        };
        let report = sweep_verify(class, &grid);
        println!(
            "{class}: {} grid points, {} mismatches",
            report.points_tested,
            report.entries.len()
        );
        for entry in report.entries.iter().take(3) {
            println!(
                "  disagreement at p={}, r={}, param={:?}: predicted {:?}, oracle {:?}",
                entry.p, entry.r, entry.param, entry.predicted, entry.oracle
            );
        }
        total += report.points_tested;
    }
    println!("checked {total} grid points in total");
}
