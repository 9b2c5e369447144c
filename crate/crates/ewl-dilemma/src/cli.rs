//! Command-line front end: every operation of the library behind one thin
//! binary with JSON (default) or CSV output.
//!
//! Exit codes: 0 on success, 2 on flag/validation errors (the message names
//! the offending flag), 1 on internal errors. Rational-valued flags accept
//! `"n"`, `"n/d"` or exact decimal strings such as `0.25`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::extensions::{build_extension, ExtensionClass, ExtensionError, ExtensionSpec, ParamKind};
use crate::game::{normalize, pure_nash_equilibria, BimatrixGame, NormalizedPd, RawPd, StrategyProfile};
use crate::rational::Rat;
use crate::regions::{ne_condition, ne_region_table, RegionQuery};
use crate::verify::{
    max_equal_payoff, reproduction_report, sweep_verify, ExtremalOutcome, ExtremalResult,
    GridSpec, MismatchReport, NumberValue, DEFAULT_SEED,
};

/// Errors surfaced to the command line.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{flag}: {message}")]
    Validation { flag: &'static str, message: String },
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation { .. } => 2,
            CliError::Internal(_) => 1,
        }
    }
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Payoff display scale: normalized `[0, 1]` units, or classic units
/// rescaled by `x -> (T - S) x + S` (defaults `T = 5`, `S = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Normalized,
    Classic,
}

#[derive(Debug, Parser)]
#[command(
    name = "ewl-dilemma",
    about = "Quantum four-strategy extensions of the Prisoner's Dilemma: exact equilibrium analysis",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    /// Payoff display scale.
    #[arg(long, global = true, value_enum, default_value_t = Scale::Normalized)]
    pub scale: Scale,

    /// Write output to a file instead of standard out.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for randomized checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

/// Payoff inputs: either normalized `--p/--r` or raw `--T/--R/--P/--S`.
#[derive(Debug, Clone, Default, Args)]
pub struct PdArgs {
    /// Normalized punishment payoff p (0 < p < r).
    #[arg(long)]
    pub p: Option<String>,
    /// Normalized reward payoff r (1/2 < r < 1).
    #[arg(long)]
    pub r: Option<String>,
    /// Raw temptation payoff T.
    #[arg(long = "T")]
    pub big_t: Option<String>,
    /// Raw reward payoff R.
    #[arg(long = "R")]
    pub big_r: Option<String>,
    /// Raw punishment payoff P.
    #[arg(long = "P")]
    pub big_p: Option<String>,
    /// Raw sucker payoff S.
    #[arg(long = "S")]
    pub big_s: Option<String>,
}

/// Class-parameter inputs.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// Weight a in [0, 1] (classes A1, A2).
    #[arg(long)]
    pub a: Option<String>,
    /// Weight t in (0, 1) (classes C, D1, D2, E1, E2).
    #[arg(long)]
    pub t: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalize raw payoffs T > R > P > S into the (r, p) parameters.
    Normalize {
        #[command(flatten)]
        pd: PdArgs,
    },
    /// Build the 4x4 extension bimatrix of a class.
    Build {
        #[arg(long)]
        class: String,
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        pd: PdArgs,
    },
    /// Enumerate pure Nash equilibria (of an extension, or of the 2x2
    /// normalized game when --class is omitted).
    Ne {
        #[arg(long)]
        class: Option<String>,
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        pd: PdArgs,
    },
    /// Evaluate the closed-form NE condition for one profile.
    Region {
        #[arg(long)]
        class: String,
        /// Strategy profile as "i,j" with 1-based indices.
        #[arg(long)]
        profile: String,
        #[command(flatten)]
        param: ParamArgs,
        #[command(flatten)]
        pd: PdArgs,
    },
    /// Cross-verify the closed-form regions against the brute-force oracle
    /// over a parameter grid.
    Sweep {
        #[arg(long)]
        class: String,
        /// Step for the p and r grids (default 1/20).
        #[arg(long = "grid-step")]
        grid_step: Option<String>,
        /// Step for the class parameter grid (defaults: a 1/32, t 1/64).
        #[arg(long = "param-step")]
        param_step: Option<String>,
    },
    /// Maximal equal NE payoff of a profile over the parameter grid.
    Extremal {
        #[arg(long)]
        class: String,
        #[arg(long)]
        profile: String,
        #[arg(long = "param-step")]
        param_step: Option<String>,
        #[command(flatten)]
        pd: PdArgs,
    },
    /// Figure-ready payoff series: per-profile NE payoffs against the class
    /// parameter, or against the raw payoffs P and R.
    FigureData {
        #[arg(long)]
        class: String,
        #[arg(long, value_enum)]
        axis: FigureAxis,
        #[arg(long = "grid-step")]
        grid_step: Option<String>,
        #[command(flatten)]
        pd: PdArgs,
    },
    /// Run the full reproduction bundle of documented checks.
    Report,
}

/// Axis of a figure-data request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureAxis {
    /// Player-1 NE payoff against the class parameter.
    Param,
    /// Payoffs against raw P and R at the per-profile extremal parameter.
    #[value(name = "PR", alias = "pr")]
    PR,
}

fn parse_rat(flag: &'static str, text: &str) -> Result<Rat, CliError> {
    text.parse().map_err(|e| CliError::Validation {
        flag,
        message: format!("{e}"),
    })
}

fn parse_class(text: &str) -> Result<ExtensionClass, CliError> {
    text.parse().map_err(|e: ExtensionError| CliError::Validation {
        flag: "--class",
        message: format!("{e}"),
    })
}

fn parse_profile(text: &str) -> Result<StrategyProfile, CliError> {
    let invalid = || CliError::Validation {
        flag: "--profile",
        message: format!("expected \"i,j\" with i, j in 1..=4, got {text:?}"),
    };
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    let (i, j) = trimmed.split_once(',').ok_or_else(invalid)?;
    let row: usize = i.trim().parse().map_err(|_| invalid())?;
    let col: usize = j.trim().parse().map_err(|_| invalid())?;
    if !(1..=4).contains(&row) || !(1..=4).contains(&col) {
        return Err(invalid());
    }
    Ok(StrategyProfile::new(row, col))
}

impl PdArgs {
    fn raw(&self) -> Result<Option<RawPd>, CliError> {
        let given = [&self.big_t, &self.big_r, &self.big_p, &self.big_s];
        if given.iter().all(|v| v.is_none()) {
            return Ok(None);
        }
        let t = parse_rat("--T", self.big_t.as_deref().ok_or(CliError::Validation {
            flag: "--T",
            message: "missing raw payoff (all of --T --R --P --S are required together)".into(),
        })?)?;
        let r = parse_rat("--R", self.big_r.as_deref().ok_or(CliError::Validation {
            flag: "--R",
            message: "missing raw payoff (all of --T --R --P --S are required together)".into(),
        })?)?;
        let p = parse_rat("--P", self.big_p.as_deref().ok_or(CliError::Validation {
            flag: "--P",
            message: "missing raw payoff (all of --T --R --P --S are required together)".into(),
        })?)?;
        let s = parse_rat("--S", self.big_s.as_deref().ok_or(CliError::Validation {
            flag: "--S",
            message: "missing raw payoff (all of --T --R --P --S are required together)".into(),
        })?)?;
        RawPd::new(t, r, p, s)
            .map(Some)
            .map_err(|e| CliError::Validation {
                flag: "--T/--R/--P/--S",
                message: format!("{e}"),
            })
    }

    /// The normalized dilemma described by the flags; defaults to the
    /// standard `(5,3,1,0)` payoffs when no flags are given.
    fn resolve(&self) -> Result<NormalizedPd, CliError> {
        match (&self.p, &self.r) {
            (Some(p), Some(r)) => {
                let p = parse_rat("--p", p)?;
                let r = parse_rat("--r", r)?;
                NormalizedPd::new(r, p).map_err(|e| CliError::Validation {
                    flag: "--p/--r",
                    message: format!("{e}"),
                })
            }
            (None, None) => match self.raw()? {
                Some(raw) => Ok(normalize(&raw)),
                None => Ok(NormalizedPd::standard()),
            },
            _ => Err(CliError::Validation {
                flag: "--p/--r",
                message: "both --p and --r are required together".into(),
            }),
        }
    }

    /// The classic display frame `(T, S)`, used by `--scale classic`.
    fn classic_frame(&self) -> Result<(Rat, Rat), CliError> {
        match self.raw()? {
            Some(raw) => Ok((raw.temptation().clone(), raw.sucker().clone())),
            None => Ok((Rat::int(5), Rat::zero())),
        }
    }
}

impl ParamArgs {
    /// Resolves the class parameter, insisting the right flag was used.
    fn resolve(&self, class: ExtensionClass) -> Result<Option<Rat>, CliError> {
        let kind = class.param_kind();
        if self.a.is_some() && kind != Some(ParamKind::Alpha) {
            return Err(CliError::Validation {
                flag: "--a",
                message: format!("class {class} does not take --a"),
            });
        }
        if self.t.is_some() && kind != Some(ParamKind::Theta) {
            return Err(CliError::Validation {
                flag: "--t",
                message: format!("class {class} does not take --t"),
            });
        }
        let (flag, text): (&'static str, Option<&String>) = match kind {
            Some(ParamKind::Alpha) => ("--a", self.a.as_ref()),
            Some(ParamKind::Theta) => ("--t", self.t.as_ref()),
            None => return Ok(None),
        };
        let text = text.ok_or(CliError::Validation {
            flag,
            message: format!("class {class} requires {flag}"),
        })?;
        let value = parse_rat(flag, text)?;
        ExtensionSpec::new(class, Some(value.clone())).map_err(|e| CliError::Validation {
            flag,
            message: format!("{e}"),
        })?;
        Ok(Some(value))
    }
}

/// Exact affine payoff rescaling for display.
#[derive(Debug, Clone)]
pub struct DisplayScale {
    lambda: Rat,
    mu: Rat,
}

impl DisplayScale {
    /// Identity scale (normalized units).
    pub fn normalized() -> DisplayScale {
        DisplayScale {
            lambda: Rat::one(),
            mu: Rat::zero(),
        }
    }

    /// Classic display units: `x -> (T - S) x + S`.
    pub fn classic(big_t: Rat, big_s: Rat) -> DisplayScale {
        DisplayScale {
            lambda: &big_t - &big_s,
            mu: big_s,
        }
    }

    fn resolve(scale: Scale, pd_args: &PdArgs) -> Result<DisplayScale, CliError> {
        match scale {
            Scale::Normalized => Ok(DisplayScale {
                lambda: Rat::one(),
                mu: Rat::zero(),
            }),
            Scale::Classic => {
                let (t, s) = pd_args.classic_frame()?;
                Ok(DisplayScale {
                    lambda: &t - &s,
                    mu: s,
                })
            }
        }
    }

    fn apply(&self, value: &Rat) -> Rat {
        &(&self.lambda * value) + &self.mu
    }

    fn apply_value(&self, value: &NumberValue) -> NumberValue {
        match value {
            NumberValue::Exact(v) => NumberValue::Exact(self.apply(v)),
            NumberValue::Approx(v) => {
                NumberValue::Approx(self.lambda.to_f64() * v + self.mu.to_f64())
            }
        }
    }
}

/// One emitted figure point.
#[derive(Debug, Clone, Serialize)]
pub struct FigurePoint {
    pub x: Rat,
    pub payoff1: Rat,
    pub payoff2: Rat,
}

/// One figure series: payoffs of a profile along the x axis, restricted to
/// its NE region (x is strictly increasing; off-region points are never
/// emitted).
#[derive(Debug, Clone, Serialize)]
pub struct FigureSeries {
    pub label: String,
    pub profile: StrategyProfile,
    pub points: Vec<FigurePoint>,
}

/// Payoff series of every profile against the class parameter, restricted
/// to the closed-form NE regions.
pub fn figure_data_param(
    class: ExtensionClass,
    pd: &NormalizedPd,
    step: Option<&Rat>,
    scale: &DisplayScale,
) -> Result<Vec<FigureSeries>, CliError> {
    if class.param_kind().is_none() {
        return Err(CliError::Validation {
            flag: "--axis",
            message: format!("class {class} has no parameter; axis=param is not available"),
        });
    }
    if let Some(step) = step {
        if !step.is_positive() {
            return Err(CliError::Validation {
                flag: "--grid-step",
                message: format!("step must be positive, got {step}"),
            });
        }
    }
    let grid_spec = GridSpec {
        p_step: Rat::ratio(1, 20),
        r_step: Rat::ratio(1, 20),
        param_step: step.cloned().or_else(|| {
            GridSpec::default_for(class).param_step
        }),
    };
    let mut series: BTreeMap<StrategyProfile, Vec<FigurePoint>> = (1..=4)
        .flat_map(|i| (1..=4).map(move |j| (StrategyProfile::new(i, j), Vec::new())))
        .collect();
    for param in grid_spec.param_points(class).into_iter().flatten() {
        let table = ne_region_table(class, pd, Some(&param)).expect("grid point is valid");
        if table.is_empty() {
            continue;
        }
        let spec = ExtensionSpec::new(class, Some(param.clone())).expect("grid point is valid");
        let game = build_extension(&spec, pd);
        for profile in table {
            let (u1, u2) = game.payoffs(profile);
            series.get_mut(&profile).expect("all profiles present").push(FigurePoint {
                x: param.clone(),
                payoff1: scale.apply(u1),
                payoff2: scale.apply(u2),
            });
        }
    }
    Ok(series
        .into_iter()
        .map(|(profile, points)| FigureSeries {
            label: profile.to_string(),
            profile,
            points,
        })
        .collect())
}

/// Payoff surfaces against the raw payoffs P and R (S and T fixed), each
/// profile evaluated at its extremal parameter from the reference dilemma.
/// One series is emitted per (profile, R) pair with x = P.
pub fn figure_data_pr(
    class: ExtensionClass,
    frame: &PrFrame,
    scale: &DisplayScale,
) -> Result<Vec<FigureSeries>, CliError> {
    let reference_raw = RawPd::new(
        frame.big_t.clone(),
        frame.reference_r.clone(),
        frame.reference_p.clone(),
        frame.big_s.clone(),
    )
    .map_err(|e| CliError::Validation {
        flag: "--P/--R",
        message: format!("reference payoffs: {e}"),
    })?;
    let reference = normalize(&reference_raw);

    // Extremal parameter (as an exactly testable rational witness) per
    // profile at the reference point.
    let mut witnesses: BTreeMap<StrategyProfile, Option<Rat>> = BTreeMap::new();
    for i in 1..=4 {
        for j in 1..=4 {
            let profile = StrategyProfile::new(i, j);
            let outcome = max_equal_payoff(class, &reference, profile, None)
                .map_err(|e| CliError::Internal(format!("{e}")))?;
            if let ExtremalOutcome::Found(result) = outcome {
                witnesses.insert(profile, result.witness_param);
            }
        }
    }

    let span = &frame.big_t - &frame.big_s;
    let step = frame
        .step
        .clone()
        .unwrap_or_else(|| &span / &Rat::int(20));
    if !step.is_positive() {
        return Err(CliError::Validation {
            flag: "--grid-step",
            message: format!("step must be positive, got {step}"),
        });
    }

    let mut series = Vec::new();
    for (profile, witness) in &witnesses {
        let mut r_value = &frame.big_s + &step;
        while r_value < frame.big_t {
            let mut points = Vec::new();
            let mut p_value = &frame.big_s + &step;
            while p_value < r_value {
                if let Ok(raw) = RawPd::new(
                    frame.big_t.clone(),
                    r_value.clone(),
                    p_value.clone(),
                    frame.big_s.clone(),
                ) {
                    let pd = normalize(&raw);
                    let in_region =
                        crate::regions::is_ne_unchecked(class, *profile, &pd, witness.as_ref());
                    if in_region {
                        let spec = ExtensionSpec::new(class, witness.clone())
                            .expect("witness is in range");
                        let game = build_extension(&spec, &pd);
                        let (u1, u2) = game.payoffs(*profile);
                        points.push(FigurePoint {
                            x: p_value.clone(),
                            payoff1: scale.apply(u1),
                            payoff2: scale.apply(u2),
                        });
                    }
                }
                p_value = &p_value + &step;
            }
            if !points.is_empty() {
                series.push(FigureSeries {
                    label: format!("{profile} R={r_value}"),
                    profile: *profile,
                    points,
                });
            }
            r_value = &r_value + &step;
        }
    }
    Ok(series)
}

/// Fixed quantities of a PR-axis figure request.
#[derive(Debug, Clone)]
pub struct PrFrame {
    pub big_t: Rat,
    pub big_s: Rat,
    pub reference_p: Rat,
    pub reference_r: Rat,
    pub step: Option<Rat>,
}

#[derive(Serialize)]
struct NormalizeOutput {
    r: Rat,
    p: Rat,
}

#[derive(Serialize)]
struct BuildOutput {
    class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    param: Option<Rat>,
    game: BimatrixGame,
}

#[derive(Serialize)]
struct NeOutput {
    equilibria: Vec<StrategyProfile>,
    payoffs: Vec<[Rat; 2]>,
}

#[derive(Serialize)]
struct RegionOutput {
    class: &'static str,
    profile: StrategyProfile,
    #[serde(skip_serializing_if = "Option::is_none")]
    param: Option<Rat>,
    is_ne: bool,
    active_branch: String,
}

#[derive(Serialize)]
struct FigureOutput {
    class: &'static str,
    axis: &'static str,
    series: Vec<FigureSeries>,
}

enum Rendered {
    Normalize(NormalizeOutput),
    Build(BuildOutput),
    Ne(NeOutput),
    Region(RegionOutput),
    Sweep(MismatchReport),
    Extremal(ExtremalResult),
    NoNe { class: &'static str, profile: StrategyProfile },
    Figure(FigureOutput),
    Report(crate::verify::ReproductionReport),
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(format!("{e}")))
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn finish_csv(writer: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Internal(format!("{e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(format!("{e}")))
}

impl Rendered {
    fn to_text(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Json => match self {
                Rendered::Normalize(v) => to_json(v),
                Rendered::Build(v) => to_json(v),
                Rendered::Ne(v) => to_json(v),
                Rendered::Region(v) => to_json(v),
                Rendered::Sweep(v) => to_json(v),
                Rendered::Extremal(v) => to_json(v),
                Rendered::NoNe { class, profile } => to_json(&serde_json::json!({
                    "class": class,
                    "profile": profile,
                    "result": "no NE on grid",
                })),
                Rendered::Figure(v) => to_json(v),
                Rendered::Report(v) => to_json(v),
            },
            OutputFormat::Csv => self.to_csv(),
        }
    }

    fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv_writer();
        let write = |w: &mut csv::Writer<Vec<u8>>, record: &[String]| {
            w.write_record(record)
                .map_err(|e| CliError::Internal(format!("{e}")))
        };
        match self {
            Rendered::Normalize(v) => {
                write(&mut w, &["r".into(), "p".into()])?;
                write(&mut w, &[v.r.to_string(), v.p.to_string()])?;
            }
            Rendered::Build(v) => {
                write(
                    &mut w,
                    &["row".into(), "col".into(), "payoff1".into(), "payoff2".into()],
                )?;
                for i in 1..=v.game.rows() {
                    for j in 1..=v.game.cols() {
                        write(
                            &mut w,
                            &[
                                i.to_string(),
                                j.to_string(),
                                v.game.u1(i, j).to_string(),
                                v.game.u2(i, j).to_string(),
                            ],
                        )?;
                    }
                }
            }
            Rendered::Ne(v) => {
                write(
                    &mut w,
                    &["row".into(), "col".into(), "payoff1".into(), "payoff2".into()],
                )?;
                for (profile, payoffs) in v.equilibria.iter().zip(v.payoffs.iter()) {
                    write(
                        &mut w,
                        &[
                            profile.row.to_string(),
                            profile.col.to_string(),
                            payoffs[0].to_string(),
                            payoffs[1].to_string(),
                        ],
                    )?;
                }
            }
            Rendered::Region(v) => {
                write(
                    &mut w,
                    &[
                        "class".into(),
                        "profile".into(),
                        "param".into(),
                        "is_ne".into(),
                        "active_branch".into(),
                    ],
                )?;
                write(
                    &mut w,
                    &[
                        v.class.to_string(),
                        v.profile.to_string(),
                        v.param.as_ref().map(|p| p.to_string()).unwrap_or_default(),
                        v.is_ne.to_string(),
                        v.active_branch.clone(),
                    ],
                )?;
            }
            Rendered::Sweep(report) => {
                write(
                    &mut w,
                    &[
                        "class".into(),
                        "p".into(),
                        "r".into(),
                        "param".into(),
                        "profile".into(),
                        "predicted".into(),
                        "oracle".into(),
                    ],
                )?;
                for entry in &report.entries {
                    let mut profiles: Vec<StrategyProfile> =
                        entry.predicted.union(&entry.oracle).copied().collect();
                    profiles.sort();
                    for profile in profiles {
                        let predicted = entry.predicted.contains(&profile);
                        let oracle = entry.oracle.contains(&profile);
                        if predicted == oracle {
                            continue;
                        }
                        write(
                            &mut w,
                            &[
                                report.class.to_string(),
                                entry.p.to_string(),
                                entry.r.to_string(),
                                entry.param.as_ref().map(|p| p.to_string()).unwrap_or_default(),
                                profile.to_string(),
                                predicted.to_string(),
                                oracle.to_string(),
                            ],
                        )?;
                    }
                }
            }
            Rendered::Extremal(result) => {
                write(
                    &mut w,
                    &[
                        "class".into(),
                        "profile".into(),
                        "param".into(),
                        "param_exact".into(),
                        "payoff".into(),
                        "payoff_exact".into(),
                        "supremum_only".into(),
                    ],
                )?;
                let describe = |value: &NumberValue| match value {
                    NumberValue::Exact(v) => (v.to_string(), true),
                    NumberValue::Approx(v) => (format!("{v}"), false),
                };
                let (param, param_exact) = result
                    .param_star
                    .as_ref()
                    .map(describe)
                    .unwrap_or((String::new(), true));
                let (payoff, payoff_exact) = describe(&result.payoff_star);
                write(
                    &mut w,
                    &[
                        result.class.to_string(),
                        result.profile.to_string(),
                        param,
                        param_exact.to_string(),
                        payoff,
                        payoff_exact.to_string(),
                        result.is_supremum_only.to_string(),
                    ],
                )?;
            }
            Rendered::NoNe { class, profile } => {
                write(&mut w, &["class".into(), "profile".into(), "result".into()])?;
                write(
                    &mut w,
                    &[class.to_string(), profile.to_string(), "no NE on grid".into()],
                )?;
            }
            Rendered::Figure(v) => {
                write(
                    &mut w,
                    &["profile".into(), "x".into(), "payoff1".into(), "payoff2".into()],
                )?;
                for series in &v.series {
                    for point in &series.points {
                        write(
                            &mut w,
                            &[
                                series.label.clone(),
                                point.x.to_string(),
                                point.payoff1.to_string(),
                                point.payoff2.to_string(),
                            ],
                        )?;
                    }
                }
            }
            Rendered::Report(report) => {
                write(
                    &mut w,
                    &["id".into(), "name".into(), "pass".into(), "detail".into()],
                )?;
                for criterion in &report.criteria {
                    write(
                        &mut w,
                        &[
                            criterion.id.to_string(),
                            criterion.name.to_string(),
                            criterion.pass.to_string(),
                            criterion.detail.clone(),
                        ],
                    )?;
                }
            }
        }
        finish_csv(w)
    }
}

/// Executes a parsed command and renders its output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let rendered = match &cli.command {
        Command::Normalize { pd } => {
            let raw = pd.raw()?.ok_or(CliError::Validation {
                flag: "--T/--R/--P/--S",
                message: "normalize requires the four raw payoffs".into(),
            })?;
            let normalized = normalize(&raw);
            Rendered::Normalize(NormalizeOutput {
                r: normalized.r().clone(),
                p: normalized.p().clone(),
            })
        }
        Command::Build { class, param, pd } => {
            let class = parse_class(class)?;
            let value = param.resolve(class)?;
            let normalized = pd.resolve()?;
            let scale = DisplayScale::resolve(cli.scale, pd)?;
            let spec = ExtensionSpec::new(class, value.clone()).expect("validated");
            let game = build_extension(&spec, &normalized);
            let game = crate::game::affine_transform(&game, &scale.lambda, &scale.mu)
                .map_err(|e| CliError::Internal(format!("{e}")))?;
            Rendered::Build(BuildOutput {
                class: class.name(),
                param: value,
                game,
            })
        }
        Command::Ne { class, param, pd } => {
            let normalized = pd.resolve()?;
            let scale = DisplayScale::resolve(cli.scale, pd)?;
            let game = match class {
                None => {
                    if param.a.is_some() || param.t.is_some() {
                        return Err(CliError::Validation {
                            flag: "--a",
                            message: "a class parameter requires --class".into(),
                        });
                    }
                    normalized.gamma()
                }
                Some(class) => {
                    let class = parse_class(class)?;
                    let value = param.resolve(class)?;
                    let spec = ExtensionSpec::new(class, value).expect("validated");
                    build_extension(&spec, &normalized)
                }
            };
            let equilibria: Vec<StrategyProfile> =
                pure_nash_equilibria(&game).into_iter().collect();
            let payoffs = equilibria
                .iter()
                .map(|profile| {
                    let (u1, u2) = game.payoffs(*profile);
                    [scale.apply(u1), scale.apply(u2)]
                })
                .collect();
            Rendered::Ne(NeOutput {
                equilibria,
                payoffs,
            })
        }
        Command::Region {
            class,
            profile,
            param,
            pd,
        } => {
            let class = parse_class(class)?;
            let profile = parse_profile(profile)?;
            let value = param.resolve(class)?;
            let normalized = pd.resolve()?;
            let verdict = ne_condition(&RegionQuery {
                class,
                profile,
                pd: normalized,
                param: value.clone(),
            })
            .map_err(|e| CliError::Internal(format!("{e}")))?;
            Rendered::Region(RegionOutput {
                class: class.name(),
                profile,
                param: value,
                is_ne: verdict.is_ne,
                active_branch: verdict.branch_label().to_string(),
            })
        }
        Command::Sweep {
            class,
            grid_step,
            param_step,
        } => {
            let class = parse_class(class)?;
            let mut grid = GridSpec::default_for(class);
            if let Some(step) = grid_step {
                let step = parse_rat("--grid-step", step)?;
                if !step.is_positive() {
                    return Err(CliError::Validation {
                        flag: "--grid-step",
                        message: format!("step must be positive, got {step}"),
                    });
                }
                grid.p_step = step.clone();
                grid.r_step = step;
            }
            if let Some(step) = param_step {
                let step = parse_rat("--param-step", step)?;
                if !step.is_positive() {
                    return Err(CliError::Validation {
                        flag: "--param-step",
                        message: format!("step must be positive, got {step}"),
                    });
                }
                grid.param_step = Some(step);
            }
            Rendered::Sweep(sweep_verify(class, &grid))
        }
        Command::Extremal {
            class,
            profile,
            param_step,
            pd,
        } => {
            let class = parse_class(class)?;
            let profile = parse_profile(profile)?;
            let normalized = pd.resolve()?;
            let scale = DisplayScale::resolve(cli.scale, pd)?;
            let step = match param_step {
                None => None,
                Some(step) => {
                    let step = parse_rat("--param-step", step)?;
                    if !step.is_positive() {
                        return Err(CliError::Validation {
                            flag: "--param-step",
                            message: format!("step must be positive, got {step}"),
                        });
                    }
                    Some(step)
                }
            };
            let outcome = max_equal_payoff(class, &normalized, profile, step.as_ref())
                .map_err(|e| CliError::Internal(format!("{e}")))?;
            match outcome {
                ExtremalOutcome::NoNeOnGrid => Rendered::NoNe {
                    class: class.name(),
                    profile,
                },
                ExtremalOutcome::Found(mut result) => {
                    result.payoff_star = scale.apply_value(&result.payoff_star);
                    Rendered::Extremal(result)
                }
            }
        }
        Command::FigureData {
            class,
            axis,
            grid_step,
            pd,
        } => {
            let class = parse_class(class)?;
            let scale = DisplayScale::resolve(cli.scale, pd)?;
            let step = match grid_step {
                None => None,
                Some(step) => Some(parse_rat("--grid-step", step)?),
            };
            let series = match axis {
                FigureAxis::Param => {
                    let normalized = pd.resolve()?;
                    figure_data_param(class, &normalized, step.as_ref(), &scale)?
                }
                FigureAxis::PR => {
                    let (big_t, big_s) = pd.classic_frame()?;
                    let reference_p = match &pd.big_p {
                        Some(text) => parse_rat("--P", text)?,
                        None => Rat::one(),
                    };
                    let reference_r = match &pd.big_r {
                        Some(text) => parse_rat("--R", text)?,
                        None => Rat::int(3),
                    };
                    let frame = PrFrame {
                        big_t,
                        big_s,
                        reference_p,
                        reference_r,
                        step,
                    };
                    figure_data_pr(class, &frame, &scale)?
                }
            };
            Rendered::Figure(FigureOutput {
                class: class.name(),
                axis: match axis {
                    FigureAxis::Param => "param",
                    FigureAxis::PR => "PR",
                },
                series,
            })
        }
        Command::Report => {
            let seed = cli.seed.unwrap_or(DEFAULT_SEED);
            Rendered::Report(reproduction_report(seed))
        }
    };
    rendered.to_text(cli.format)
}

/// Runs a parsed command line end to end and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(&cli) {
        Ok(text) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, text.as_bytes()) {
                    eprintln!("--out: {e}");
                    return 1;
                }
            } else {
                println!("{text}");
            }
            0
        }
        Err(error) => {
            eprintln!("error: {error}");
            error.exit_code()
        }
    }
}
