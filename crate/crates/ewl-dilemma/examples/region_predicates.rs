//! Closed-form NE region verdicts versus the brute-force oracle at a few
//! informative points, including exact boundary hits.
//!
//! Run with: cargo run --example region_predicates

use ewl_dilemma::extensions::{build_extension, ExtensionClass, ExtensionSpec};
use ewl_dilemma::game::{pure_nash_equilibria, NormalizedPd, StrategyProfile};
use ewl_dilemma::rational::Rat;
use ewl_dilemma::regions::{ne_condition, ne_region_table, RegionQuery};

fn main() {
    let std_pd = NormalizedPd::standard();
    let heavy = NormalizedPd::new(Rat::ratio(4, 5), Rat::ratio(3, 5)).unwrap();

    let queries = [
        (ExtensionClass::A1, (2, 2), &std_pd, Some(Rat::one())),
        (ExtensionClass::A1, (2, 3), &std_pd, Some(Rat::ratio(1, 3))), // exact boundary
        (ExtensionClass::A1, (3, 3), &std_pd, Some(Rat::ratio(7, 32))),
        (ExtensionClass::B, (3, 3), &std_pd, None),
        (ExtensionClass::C, (2, 2), &heavy, Some(Rat::ratio(1, 2))),
        (ExtensionClass::E1, (4, 4), &std_pd, Some(Rat::ratio(3, 4))),
        (ExtensionClass::D2, (2, 2), &std_pd, Some(Rat::ratio(1, 2))),
    ];
    for (class, (i, j), pd, param) in queries {
        let profile = StrategyProfile::new(i, j);
        let verdict = ne_condition(&RegionQuery {
            class,
            profile,
            pd: pd.clone(),
            param: param.clone(),
        })
        .unwrap();
        let spec = ExtensionSpec::new(class, param.clone()).unwrap();
        let oracle = pure_nash_equilibria(&build_extension(&spec, pd)).contains(&profile);
        let shown = param.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "{class} {profile} at p={}, r={}, param={shown}: predicate={} ({}), oracle={}",
            pd.p(),
            pd.r(),
            verdict.is_ne,
            verdict.branch_label(),
            oracle
        );
        assert_eq!(verdict.is_ne, oracle);
    }

    // Full predicted table for one configuration.
    let table = ne_region_table(ExtensionClass::B, &std_pd, None).unwrap();
    let labels: Vec<String> = table.iter().map(|p| p.to_string()).collect();
    println!("B-class NE set for the standard dilemma: {}", labels.join(" "));
}
