//! Bimatrix games over exact rationals: pure Nash equilibrium enumeration,
//! best responses, symmetry and Pareto utilities, and normalization of the
//! Prisoner's Dilemma to its two-parameter form.
//!
//! Strategy indices are 1-based throughout, so results line up with the
//! usual (row, column) tables for these games.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::rational::Rat;

/// Errors from game construction and queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("game must have at least one row and one column")]
    Empty,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("strategy index {index} out of range 1..={limit}")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("affine transform requires lambda > 0, got {lambda}")]
    NonPositiveLambda { lambda: String },
    #[error("Prisoner's Dilemma payoffs must satisfy {inequality}")]
    PdOrdering { inequality: &'static str },
    #[error("normalized parameters must satisfy {inequality}")]
    NormalizedRange { inequality: &'static str },
}

/// A strategy profile `(i, j)`: player 1's row and player 2's column,
/// 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrategyProfile {
    pub row: usize,
    pub col: usize,
}

impl StrategyProfile {
    pub fn new(row: usize, col: usize) -> Self {
        StrategyProfile { row, col }
    }

    /// Mirror image `(j, i)`.
    pub fn swapped(self) -> Self {
        StrategyProfile::new(self.col, self.row)
    }
}

impl fmt::Display for StrategyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Serialize for StrategyProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StrategyProfile {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pair = <[usize; 2]>::deserialize(deserializer)?;
        Ok(StrategyProfile::new(pair[0], pair[1]))
    }
}

/// Which player a query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    One,
    Two,
}

/// A finite two-player game in strategic form: an `n x m` grid of exact
/// rational payoff pairs `(u1, u2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimatrixGame {
    rows: usize,
    cols: usize,
    entries: Vec<(Rat, Rat)>,
}

impl BimatrixGame {
    /// Builds a game from rows of `(u1, u2)` pairs. The grid must be
    /// non-empty and rectangular.
    pub fn from_rows(rows: Vec<Vec<(Rat, Rat)>>) -> Result<Self, GameError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(GameError::Empty);
        }
        let cols = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(GameError::Ragged {
                    row: i + 1,
                    found: row.len(),
                    expected: cols,
                });
            }
        }
        let n = rows.len();
        let entries = rows.into_iter().flatten().collect();
        Ok(BimatrixGame {
            rows: n,
            cols,
            entries,
        })
    }

    /// A game with every entry equal to `payoffs`.
    pub fn constant(rows: usize, cols: usize, payoffs: (Rat, Rat)) -> Self {
        assert!(rows > 0 && cols > 0);
        BimatrixGame {
            rows,
            cols,
            entries: vec![payoffs; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn index(&self, row: usize, col: usize) -> usize {
        assert!(
            (1..=self.rows).contains(&row) && (1..=self.cols).contains(&col),
            "profile ({row},{col}) out of range for {}x{} game",
            self.rows,
            self.cols
        );
        (row - 1) * self.cols + (col - 1)
    }

    /// Player 1's payoff at `(row, col)`, 1-based.
    pub fn u1(&self, row: usize, col: usize) -> &Rat {
        &self.entries[self.index(row, col)].0
    }

    /// Player 2's payoff at `(row, col)`, 1-based.
    pub fn u2(&self, row: usize, col: usize) -> &Rat {
        &self.entries[self.index(row, col)].1
    }

    pub fn payoffs(&self, profile: StrategyProfile) -> (&Rat, &Rat) {
        let entry = &self.entries[self.index(profile.row, profile.col)];
        (&entry.0, &entry.1)
    }

    /// Applies `x -> lambda * x + mu` to every payoff of the given player.
    fn map_payoffs(&self, f: impl Fn(&Rat) -> Rat) -> BimatrixGame {
        BimatrixGame {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(a, b)| (f(a), f(b))).collect(),
        }
    }

    /// True iff the game is square and `u2(i,j) = u1(j,i)` for all `i, j`.
    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                if self.u2(i, j) != self.u1(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// A copy with rows `a` and `b` exchanged (both players' payoffs move
    /// with the row).
    pub fn swapped_rows(&self, a: usize, b: usize) -> BimatrixGame {
        let mut out = self.clone();
        for col in 1..=self.cols {
            let ia = self.index(a, col);
            let ib = self.index(b, col);
            out.entries.swap(ia, ib);
        }
        out
    }

    /// A copy with columns `a` and `b` exchanged.
    pub fn swapped_cols(&self, a: usize, b: usize) -> BimatrixGame {
        let mut out = self.clone();
        for row in 1..=self.rows {
            let ia = self.index(row, a);
            let ib = self.index(row, b);
            out.entries.swap(ia, ib);
        }
        out
    }

    /// A copy with strategies `a` and `b` relabelled for both players.
    pub fn swapped_strategies(&self, a: usize, b: usize) -> BimatrixGame {
        self.swapped_rows(a, b).swapped_cols(a, b)
    }
}

impl Serialize for BimatrixGame {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let grid: Vec<Vec<[String; 2]>> = (1..=self.rows)
            .map(|i| {
                (1..=self.cols)
                    .map(|j| [self.u1(i, j).to_string(), self.u2(i, j).to_string()])
                    .collect()
            })
            .collect();
        let mut state = serializer.serialize_struct("BimatrixGame", 3)?;
        state.serialize_field("rows", &self.rows)?;
        state.serialize_field("cols", &self.cols)?;
        state.serialize_field("entries", &grid)?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for BimatrixGame {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<[String; 2]>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut rows = Vec::with_capacity(raw.entries.len());
        for row in &raw.entries {
            let mut out = Vec::with_capacity(row.len());
            for [a, b] in row {
                let u1: Rat = a.parse().map_err(D::Error::custom)?;
                let u2: Rat = b.parse().map_err(D::Error::custom)?;
                out.push((u1, u2));
            }
            rows.push(out);
        }
        let game = BimatrixGame::from_rows(rows).map_err(D::Error::custom)?;
        if game.rows() != raw.rows || game.cols() != raw.cols {
            return Err(D::Error::custom("declared shape does not match entries"));
        }
        Ok(game)
    }
}

/// All pure Nash equilibria of `game`: profiles `(i*, j*)` where `u1` is a
/// column maximum and `u2` a row maximum (weak inequalities, exact
/// comparisons). The set is ordered row-major.
pub fn pure_nash_equilibria(game: &BimatrixGame) -> BTreeSet<StrategyProfile> {
    let mut col_max: Vec<&Rat> = Vec::with_capacity(game.cols());
    for j in 1..=game.cols() {
        let mut best = game.u1(1, j);
        for i in 2..=game.rows() {
            if game.u1(i, j) > best {
                best = game.u1(i, j);
            }
        }
        col_max.push(best);
    }
    let mut row_max: Vec<&Rat> = Vec::with_capacity(game.rows());
    for i in 1..=game.rows() {
        let mut best = game.u2(i, 1);
        for j in 2..=game.cols() {
            if game.u2(i, j) > best {
                best = game.u2(i, j);
            }
        }
        row_max.push(best);
    }
    let mut out = BTreeSet::new();
    for i in 1..=game.rows() {
        for j in 1..=game.cols() {
            if game.u1(i, j) == col_max[j - 1] && game.u2(i, j) == row_max[i - 1] {
                out.insert(StrategyProfile::new(i, j));
            }
        }
    }
    out
}

/// The argmax set of `player`'s payoff against a fixed opponent strategy;
/// ties are all included.
pub fn best_responses(
    game: &BimatrixGame,
    player: Player,
    opponent_strategy: usize,
) -> Result<BTreeSet<usize>, GameError> {
    let (own_count, opp_count) = match player {
        Player::One => (game.rows(), game.cols()),
        Player::Two => (game.cols(), game.rows()),
    };
    if opponent_strategy == 0 || opponent_strategy > opp_count {
        return Err(GameError::IndexOutOfRange {
            index: opponent_strategy,
            limit: opp_count,
        });
    }
    let payoff = |own: usize| match player {
        Player::One => game.u1(own, opponent_strategy),
        Player::Two => game.u2(opponent_strategy, own),
    };
    let mut best = payoff(1);
    for own in 2..=own_count {
        if payoff(own) > best {
            best = payoff(own);
        }
    }
    Ok((1..=own_count).filter(|&own| payoff(own) == best).collect())
}

/// Replaces every payoff `x` by `lambda * x + mu` for both players.
pub fn affine_transform(
    game: &BimatrixGame,
    lambda: &Rat,
    mu: &Rat,
) -> Result<BimatrixGame, GameError> {
    if !lambda.is_positive() {
        return Err(GameError::NonPositiveLambda {
            lambda: lambda.to_string(),
        });
    }
    Ok(game.map_payoffs(|x| &(lambda * x) + mu))
}

/// Profiles not weakly dominated with a strict improvement for at least one
/// player by any other profile.
pub fn pareto_optimal_profiles(game: &BimatrixGame) -> BTreeSet<StrategyProfile> {
    let all: Vec<StrategyProfile> = (1..=game.rows())
        .flat_map(|i| (1..=game.cols()).map(move |j| StrategyProfile::new(i, j)))
        .collect();
    all.iter()
        .filter(|&&candidate| {
            let (c1, c2) = game.payoffs(candidate);
            !all.iter().any(|&other| {
                let (o1, o2) = game.payoffs(other);
                o1 >= c1 && o2 >= c2 && (o1 > c1 || o2 > c2)
            })
        })
        .copied()
        .collect()
}

/// Raw Prisoner's Dilemma payoffs `T > R > P > S` with `2R > T + S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPd {
    temptation: Rat,
    reward: Rat,
    punishment: Rat,
    sucker: Rat,
}

impl RawPd {
    /// Validates the PD ordering; the error names the first failing
    /// inequality.
    pub fn new(
        temptation: Rat,
        reward: Rat,
        punishment: Rat,
        sucker: Rat,
    ) -> Result<Self, GameError> {
        if temptation <= reward {
            return Err(GameError::PdOrdering { inequality: "T > R" });
        }
        if reward <= punishment {
            return Err(GameError::PdOrdering { inequality: "R > P" });
        }
        if punishment <= sucker {
            return Err(GameError::PdOrdering { inequality: "P > S" });
        }
        if &reward + &reward <= &temptation + &sucker {
            return Err(GameError::PdOrdering {
                inequality: "2R > T + S",
            });
        }
        Ok(RawPd {
            temptation,
            reward,
            punishment,
            sucker,
        })
    }

    pub fn temptation(&self) -> &Rat {
        &self.temptation
    }

    pub fn reward(&self) -> &Rat {
        &self.reward
    }

    pub fn punishment(&self) -> &Rat {
        &self.punishment
    }

    pub fn sucker(&self) -> &Rat {
        &self.sucker
    }

    /// The 2x2 bimatrix `[(R,R) (S,T); (T,S) (P,P)]`.
    pub fn game(&self) -> BimatrixGame {
        BimatrixGame::from_rows(vec![
            vec![
                (self.reward.clone(), self.reward.clone()),
                (self.sucker.clone(), self.temptation.clone()),
            ],
            vec![
                (self.temptation.clone(), self.sucker.clone()),
                (self.punishment.clone(), self.punishment.clone()),
            ],
        ])
        .expect("2x2 grid is rectangular")
    }
}

/// The normalized Prisoner's Dilemma: payoffs rescaled so `S -> 0`, `T -> 1`,
/// leaving parameters `0 < p < r < 1` with `r > 1/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizedPd {
    r: Rat,
    p: Rat,
}

impl NormalizedPd {
    pub fn new(r: Rat, p: Rat) -> Result<Self, GameError> {
        if !p.is_positive() {
            return Err(GameError::NormalizedRange { inequality: "p > 0" });
        }
        if p >= r {
            return Err(GameError::NormalizedRange { inequality: "p < r" });
        }
        if r >= Rat::one() {
            return Err(GameError::NormalizedRange { inequality: "r < 1" });
        }
        if r <= Rat::ratio(1, 2) {
            return Err(GameError::NormalizedRange {
                inequality: "r > 1/2",
            });
        }
        Ok(NormalizedPd { r, p })
    }

    /// The normalized form of the common `(T,R,P,S) = (5,3,1,0)` dilemma:
    /// `r = 3/5`, `p = 1/5`.
    pub fn standard() -> Self {
        NormalizedPd::new(Rat::ratio(3, 5), Rat::ratio(1, 5)).expect("standard PD is valid")
    }

    pub fn r(&self) -> &Rat {
        &self.r
    }

    pub fn p(&self) -> &Rat {
        &self.p
    }

    /// The normalized bimatrix `[(r,r) (0,1); (1,0) (p,p)]`.
    pub fn gamma(&self) -> BimatrixGame {
        let one = Rat::one();
        let zero = Rat::zero();
        BimatrixGame::from_rows(vec![
            vec![(self.r.clone(), self.r.clone()), (zero.clone(), one.clone())],
            vec![(one, zero), (self.p.clone(), self.p.clone())],
        ])
        .expect("2x2 grid is rectangular")
    }

    /// The normalized matrix together with its row-swapped, column-swapped
    /// and doubly swapped variants.
    pub fn gamma_family(&self) -> GammaFamily {
        let gamma = self.gamma();
        let gamma1 = gamma.swapped_rows(1, 2);
        let gamma2 = gamma.swapped_cols(1, 2);
        let gamma3 = gamma1.swapped_cols(1, 2);
        GammaFamily {
            gamma,
            gamma1,
            gamma2,
            gamma3,
        }
    }
}

/// The four 2x2 building blocks used by every extension class.
#[derive(Debug, Clone)]
pub struct GammaFamily {
    pub gamma: BimatrixGame,
    pub gamma1: BimatrixGame,
    pub gamma2: BimatrixGame,
    pub gamma3: BimatrixGame,
}

/// Maps a raw PD to its normalized parameters via `f(x) = (x - S)/(T - S)`:
/// `r = (R-S)/(T-S)`, `p = (P-S)/(T-S)`.
pub fn normalize(raw: &RawPd) -> NormalizedPd {
    let span = raw.temptation() - raw.sucker();
    let r = &(raw.reward() - raw.sucker()) / &span;
    let p = &(raw.punishment() - raw.sucker()) / &span;
    NormalizedPd::new(r, p).expect("RawPd invariants force the normalized range")
}
