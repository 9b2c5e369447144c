//! Construction of the eight four-strategy quantum extensions of the
//! normalized Prisoner's Dilemma.
//!
//! Each extension is a 4x4 bimatrix assembled from 2x2 blocks that are convex
//! combinations of the normalized matrix and its swapped variants. The `A`
//! classes are driven by a weight `a` in `[0, 1]`; classes `C`, `D` and `E`
//! by a weight `t` in `(0, 1)`; class `B` has no free parameter. All
//! construction is exact rational arithmetic.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::game::{BimatrixGame, GammaFamily, NormalizedPd, StrategyProfile};
use crate::rational::Rat;

/// Errors from extension specification and construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("unknown extension class {0:?}")]
    UnknownClass(String),
    #[error("class {class} takes no parameter")]
    UnexpectedParam { class: ExtensionClass },
    #[error("class {class} requires parameter {name}")]
    MissingParam {
        class: ExtensionClass,
        name: &'static str,
    },
    #[error("parameter {name} = {value} outside {range}")]
    ParamOutOfRange {
        name: &'static str,
        value: String,
        range: &'static str,
    },
}

/// The five classes (eight variants) of four-strategy extensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtensionClass {
    A1,
    A2,
    B,
    C,
    D1,
    D2,
    E1,
    E2,
}

/// Which scalar parameter a class takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    /// Weight `a` in the closed interval `[0, 1]`.
    Alpha,
    /// Weight `t` in the open interval `(0, 1)`.
    Theta,
}

impl ParamKind {
    pub fn name(self) -> &'static str {
        match self {
            ParamKind::Alpha => "a",
            ParamKind::Theta => "t",
        }
    }

    pub fn range(self) -> &'static str {
        match self {
            ParamKind::Alpha => "[0, 1]",
            ParamKind::Theta => "(0, 1)",
        }
    }

    pub fn contains(self, value: &Rat) -> bool {
        match self {
            ParamKind::Alpha => !value.is_negative() && value <= &Rat::one(),
            ParamKind::Theta => value.is_positive() && value < &Rat::one(),
        }
    }
}

impl ExtensionClass {
    pub const ALL: [ExtensionClass; 8] = [
        ExtensionClass::A1,
        ExtensionClass::A2,
        ExtensionClass::B,
        ExtensionClass::C,
        ExtensionClass::D1,
        ExtensionClass::D2,
        ExtensionClass::E1,
        ExtensionClass::E2,
    ];

    pub fn param_kind(self) -> Option<ParamKind> {
        match self {
            ExtensionClass::A1 | ExtensionClass::A2 => Some(ParamKind::Alpha),
            ExtensionClass::B => None,
            _ => Some(ParamKind::Theta),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ExtensionClass::A1 => "A1",
            ExtensionClass::A2 => "A2",
            ExtensionClass::B => "B",
            ExtensionClass::C => "C",
            ExtensionClass::D1 => "D1",
            ExtensionClass::D2 => "D2",
            ExtensionClass::E1 => "E1",
            ExtensionClass::E2 => "E2",
        }
    }
}

impl fmt::Display for ExtensionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ExtensionClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl FromStr for ExtensionClass {
    type Err = ExtensionError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text.to_ascii_uppercase().as_str() {
            "A1" => Ok(ExtensionClass::A1),
            "A2" => Ok(ExtensionClass::A2),
            "B" => Ok(ExtensionClass::B),
            "C" => Ok(ExtensionClass::C),
            "D1" => Ok(ExtensionClass::D1),
            "D2" => Ok(ExtensionClass::D2),
            "E1" => Ok(ExtensionClass::E1),
            "E2" => Ok(ExtensionClass::E2),
            _ => Err(ExtensionError::UnknownClass(text.to_owned())),
        }
    }
}

/// A validated `(class, parameter)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSpec {
    class: ExtensionClass,
    param: Option<Rat>,
}

impl ExtensionSpec {
    /// Validates parameter presence and range for the class.
    pub fn new(class: ExtensionClass, param: Option<Rat>) -> Result<Self, ExtensionError> {
        match (class.param_kind(), param) {
            (None, None) => Ok(ExtensionSpec { class, param: None }),
            (None, Some(_)) => Err(ExtensionError::UnexpectedParam { class }),
            (Some(kind), None) => Err(ExtensionError::MissingParam {
                class,
                name: kind.name(),
            }),
            (Some(kind), Some(value)) => {
                if kind.contains(&value) {
                    Ok(ExtensionSpec {
                        class,
                        param: Some(value),
                    })
                } else {
                    Err(ExtensionError::ParamOutOfRange {
                        name: kind.name(),
                        value: value.to_string(),
                        range: kind.range(),
                    })
                }
            }
        }
    }

    pub fn class(&self) -> ExtensionClass {
        self.class
    }

    pub fn param(&self) -> Option<&Rat> {
        self.param.as_ref()
    }
}

impl Serialize for ExtensionSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let fields = if self.param.is_some() { 2 } else { 1 };
        let mut state = serializer.serialize_struct("ExtensionSpec", fields)?;
        state.serialize_field("class", self.class.name())?;
        if let Some(param) = &self.param {
            state.serialize_field("param", param)?;
        }
        state.end()
    }
}

impl<'de> Deserialize<'de> for ExtensionSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            class: String,
            #[serde(default)]
            param: Option<Rat>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let class: ExtensionClass = raw.class.parse().map_err(D::Error::custom)?;
        ExtensionSpec::new(class, raw.param).map_err(D::Error::custom)
    }
}

/// The derived weights of the `A` classes: `a' = 1 - a`, `b = (1 - 2a)^2`,
/// `b' = 4a(1 - a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedAParams {
    pub a: Rat,
    pub a_prime: Rat,
    pub b: Rat,
    pub b_prime: Rat,
}

/// Expands the single weight `a` into the four block coefficients.
pub fn derive_a_params(a: &Rat) -> Result<DerivedAParams, ExtensionError> {
    if !ParamKind::Alpha.contains(a) {
        return Err(ExtensionError::ParamOutOfRange {
            name: "a",
            value: a.to_string(),
            range: "[0, 1]",
        });
    }
    let one = Rat::one();
    let a_prime = &one - a;
    let b = (&one - &(&Rat::int(2) * a)).square();
    let b_prime = &one - &b;
    Ok(DerivedAParams {
        a: a.clone(),
        a_prime,
        b,
        b_prime,
    })
}

/// Entry-wise linear combination of 2x2 bimatrix blocks.
fn combine(terms: &[(&Rat, &BimatrixGame)]) -> BimatrixGame {
    let mut rows = Vec::with_capacity(2);
    for i in 1..=2 {
        let mut row = Vec::with_capacity(2);
        for j in 1..=2 {
            let mut u1 = Rat::zero();
            let mut u2 = Rat::zero();
            for (weight, block) in terms {
                u1 = &u1 + &(*weight * block.u1(i, j));
                u2 = &u2 + &(*weight * block.u2(i, j));
            }
            row.push((u1, u2));
        }
        rows.push(row);
    }
    BimatrixGame::from_rows(rows).expect("2x2 blocks are rectangular")
}

/// Stacks four 2x2 blocks into a 4x4 game.
fn assemble(
    top_left: &BimatrixGame,
    top_right: &BimatrixGame,
    bottom_left: &BimatrixGame,
    bottom_right: &BimatrixGame,
) -> BimatrixGame {
    let mut rows = Vec::with_capacity(4);
    for i in 1..=2 {
        let mut row = Vec::with_capacity(4);
        for j in 1..=2 {
            let (u1, u2) = top_left.payoffs(StrategyProfile::new(i, j));
            row.push((u1.clone(), u2.clone()));
        }
        for j in 1..=2 {
            let (u1, u2) = top_right.payoffs(StrategyProfile::new(i, j));
            row.push((u1.clone(), u2.clone()));
        }
        rows.push(row);
    }
    for i in 1..=2 {
        let mut row = Vec::with_capacity(4);
        for j in 1..=2 {
            let (u1, u2) = bottom_left.payoffs(StrategyProfile::new(i, j));
            row.push((u1.clone(), u2.clone()));
        }
        for j in 1..=2 {
            let (u1, u2) = bottom_right.payoffs(StrategyProfile::new(i, j));
            row.push((u1.clone(), u2.clone()));
        }
        rows.push(row);
    }
    BimatrixGame::from_rows(rows).expect("4x4 grid is rectangular")
}

/// Builds the 4x4 extension bimatrix for `spec` over the normalized
/// dilemma `pd`. The top-left block is always the classical matrix.
pub fn build_extension(spec: &ExtensionSpec, pd: &NormalizedPd) -> BimatrixGame {
    let GammaFamily {
        gamma,
        gamma1,
        gamma2,
        gamma3,
    } = pd.gamma_family();

    match spec.class() {
        ExtensionClass::A1 | ExtensionClass::A2 => {
            let weights =
                derive_a_params(spec.param().expect("A classes carry a parameter"))
                    .expect("spec validated on construction");
            let DerivedAParams {
                a,
                a_prime,
                b,
                b_prime,
            } = weights;
            if spec.class() == ExtensionClass::A1 {
                let off = combine(&[(&a, &gamma), (&a_prime, &gamma3)]);
                let corner = combine(&[(&b, &gamma), (&b_prime, &gamma3)]);
                assemble(&gamma, &off, &off, &corner)
            } else {
                let top = combine(&[(&a, &gamma2), (&a_prime, &gamma1)]);
                let bottom = combine(&[(&a, &gamma1), (&a_prime, &gamma2)]);
                let corner = combine(&[(&b, &gamma3), (&b_prime, &gamma)]);
                assemble(&gamma, &top, &bottom, &corner)
            }
        }
        ExtensionClass::B => {
            let quarter = Rat::ratio(1, 4);
            let mixed = combine(&[
                (&quarter, &gamma),
                (&quarter, &gamma1),
                (&quarter, &gamma2),
                (&quarter, &gamma3),
            ]);
            assemble(&gamma, &mixed, &mixed, &mixed)
        }
        ExtensionClass::C => {
            let t = spec.param().expect("C carries a parameter").clone();
            let t_prime = &Rat::one() - &t;
            let half_t = &t / &Rat::int(2);
            let half_tp = &t_prime / &Rat::int(2);
            let off = combine(&[
                (&half_t, &gamma),
                (&half_t, &gamma3),
                (&half_tp, &gamma1),
                (&half_tp, &gamma2),
            ]);
            let tp_sq = t_prime.square();
            let cross = &t * &t_prime;
            let t_sq = t.square();
            let corner = combine(&[
                (&tp_sq, &gamma),
                (&cross, &gamma1),
                (&cross, &gamma2),
                (&t_sq, &gamma3),
            ]);
            assemble(&gamma, &off, &off, &corner)
        }
        ExtensionClass::D1 | ExtensionClass::D2 | ExtensionClass::E1 | ExtensionClass::E2 => {
            let t = spec.param().expect("class carries a parameter").clone();
            let t_prime = &Rat::one() - &t;
            let t_sq = t.square();
            let cross = &t * &t_prime;
            let tp_sq = t_prime.square();
            let corner = combine(&[
                (&t_sq, &gamma),
                (&cross, &gamma1),
                (&cross, &gamma2),
                (&tp_sq, &gamma3),
            ]);
            let (top, bottom) = match spec.class() {
                ExtensionClass::D1 => (
                    combine(&[(&t, &gamma), (&t_prime, &gamma2)]),
                    combine(&[(&t, &gamma), (&t_prime, &gamma1)]),
                ),
                ExtensionClass::D2 => (
                    combine(&[(&t, &gamma3), (&t_prime, &gamma1)]),
                    combine(&[(&t, &gamma3), (&t_prime, &gamma2)]),
                ),
                ExtensionClass::E1 => (
                    combine(&[(&t, &gamma), (&t_prime, &gamma1)]),
                    combine(&[(&t, &gamma), (&t_prime, &gamma2)]),
                ),
                ExtensionClass::E2 => (
                    combine(&[(&t, &gamma3), (&t_prime, &gamma2)]),
                    combine(&[(&t, &gamma3), (&t_prime, &gamma1)]),
                ),
                _ => unreachable!(),
            };
            assemble(&gamma, &top, &bottom, &corner)
        }
    }
}

/// True iff the top-left 2x2 block of a 4x4 extension equals the classical
/// matrix of `pd` exactly.
pub fn classical_embedding_check(extension: &BimatrixGame, pd: &NormalizedPd) -> bool {
    if extension.rows() != 4 || extension.cols() != 4 {
        return false;
    }
    let gamma = pd.gamma();
    (1..=2).all(|i| {
        (1..=2).all(|j| {
            extension.u1(i, j) == gamma.u1(i, j) && extension.u2(i, j) == gamma.u2(i, j)
        })
    })
}
