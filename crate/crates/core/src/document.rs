//! The JSON game document.
//!
//! ```json
//! {
//!   "name": "dominance_2x2",
//!   "kind": "symmetric",
//!   "actions": ["A", "B"],
//!   "payoffs": [
//!     [4, 1],
//!     [2, 0]
//!   ],
//!   "numeric": "rational"
//! }
//! ```
//!
//! `values` is optional. Rational entries are integers or `"p/q"` strings;
//! decimals such as `0.5` are read exactly. Serialization is canonical, so
//! rational documents round-trip byte for byte.

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::game::{relative_payoff, ActionSet, PayoffGrid, SkewGame, SymmetricGame};
use crate::scalar::{NumericMode, Rational, Scalar, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Symmetric,
    Skew,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Symmetric => "symmetric",
            Kind::Skew => "skew",
        }
    }
}

/// A game of either kind in one numeric mode.
#[derive(Debug, Clone, PartialEq)]
pub enum Game<T> {
    Symmetric(SymmetricGame<T>),
    Skew(SkewGame<T>),
}

impl<T: Scalar> Game<T> {
    pub fn kind(&self) -> Kind {
        match self {
            Game::Symmetric(_) => Kind::Symmetric,
            Game::Skew(_) => Kind::Skew,
        }
    }

    pub fn actions(&self) -> &ActionSet<T> {
        match self {
            Game::Symmetric(g) => g.actions(),
            Game::Skew(d) => d.actions(),
        }
    }

    pub fn grid(&self) -> &PayoffGrid<T> {
        match self {
            Game::Symmetric(g) => g.payoffs(),
            Game::Skew(d) => d.grid(),
        }
    }

    /// The skew game analysed for saddle points: the relative payoff game of
    /// a symmetric input, or the input itself.
    pub fn skew(&self) -> SkewGame<T> {
        match self {
            Game::Symmetric(g) => relative_payoff(g),
            Game::Skew(d) => d.clone(),
        }
    }

    /// Any game read as a symmetric game (a skew grid is one too).
    pub fn as_symmetric(&self) -> SymmetricGame<T> {
        match self {
            Game::Symmetric(g) => g.clone(),
            Game::Skew(d) => SymmetricGame::new(d.actions().clone(), d.grid().clone())
                .expect("skew games have matching dimensions"),
        }
    }

    pub fn with_tolerance(self, tol: Tolerance) -> Self {
        match self {
            Game::Symmetric(g) => Game::Symmetric(g.with_tolerance(tol)),
            Game::Skew(d) => Game::Skew(d.with_tolerance(tol)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyGame {
    Rational(Game<Rational>),
    Float(Game<f64>),
}

impl AnyGame {
    pub fn mode(&self) -> NumericMode {
        match self {
            AnyGame::Rational(_) => NumericMode::Rational,
            AnyGame::Float(_) => NumericMode::Float,
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            AnyGame::Rational(g) => g.kind(),
            AnyGame::Float(g) => g.kind(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            AnyGame::Rational(g) => g.grid().size(),
            AnyGame::Float(g) => g.grid().size(),
        }
    }
}

/// A named game, the unit of exchange for every CLI command.
#[derive(Debug, Clone, PartialEq)]
pub struct GameDocument {
    pub name: String,
    pub game: AnyGame,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    name: String,
    kind: Kind,
    actions: Vec<String>,
    #[serde(default)]
    values: Option<Vec<Value>>,
    payoffs: Vec<Vec<Value>>,
    #[serde(default)]
    numeric: Option<String>,
}

fn decode_all<T: Scalar>(raw: &RawDocument) -> Result<(ActionSet<T>, PayoffGrid<T>)> {
    let field = |path: String, v: &Value| {
        T::decode(v).ok_or_else(|| Error::Parse(format!("{path}: invalid {} number {v}", T::MODE)))
    };
    let values = match &raw.values {
        Some(vs) => Some(
            vs.iter()
                .enumerate()
                .map(|(i, v)| field(format!("values[{i}]"), v))
                .collect::<Result<Vec<T>>>()?,
        ),
        None => None,
    };
    let rows = raw
        .payoffs
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| field(format!("payoffs[{i}][{j}]"), v))
                .collect::<Result<Vec<T>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let grid = PayoffGrid::from_rows(rows).map_err(|e| Error::Parse(format!("payoffs: {e}")))?;
    let actions = ActionSet::new(raw.actions.clone(), values)
        .map_err(|e| Error::Parse(format!("actions: {e}")))?;
    Ok((actions, grid))
}

fn build<T: Scalar>(raw: &RawDocument, tol: Tolerance) -> Result<Game<T>> {
    let (actions, grid) = decode_all::<T>(raw)?;
    if actions.len() != grid.size() {
        return Err(Error::Parse(format!(
            "actions: {} labels for a {}x{} payoff grid",
            actions.len(),
            grid.size(),
            grid.size()
        )));
    }
    let grid = grid.with_tolerance(tol);
    Ok(match raw.kind {
        Kind::Symmetric => Game::Symmetric(SymmetricGame::new(actions, grid)?),
        Kind::Skew => Game::Skew(SkewGame::new(actions, grid)?),
    })
}

/// Parses a UTF-8 JSON game document. `tol` applies to float documents.
pub fn parse_game(document: &[u8], tol: Tolerance) -> Result<GameDocument> {
    let raw: RawDocument =
        serde_json::from_slice(document).map_err(|e| Error::Parse(format!("malformed document: {e}")))?;
    let game = match raw.numeric.as_deref().unwrap_or("rational") {
        "rational" => AnyGame::Rational(build(&raw, tol)?),
        "float" => AnyGame::Float(build(&raw, tol)?),
        other => {
            return Err(Error::Parse(format!("numeric: expected \"rational\" or \"float\", got {other:?}")))
        }
    };
    Ok(GameDocument { name: raw.name, game })
}

fn json_str(s: &str) -> String {
    Value::String(s.to_string()).to_string()
}

fn json_list(items: impl IntoIterator<Item = Value>) -> String {
    let parts: Vec<String> = items.into_iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn write_game<T: Scalar>(name: &str, game: &Game<T>) -> String {
    let actions = game.actions();
    let grid = game.grid();
    let mut out = String::from("{\n");
    out += &format!("  \"name\": {},\n", json_str(name));
    out += &format!("  \"kind\": {},\n", json_str(game.kind().as_str()));
    out += &format!(
        "  \"actions\": {},\n",
        json_list(actions.labels().iter().map(|l| Value::String(l.clone())))
    );
    if let Some(values) = actions.values() {
        out += &format!("  \"values\": {},\n", json_list(values.iter().map(Scalar::encode)));
    }
    out += "  \"payoffs\": [\n";
    let rows: Vec<String> = (0..grid.size())
        .map(|r| format!("    {}", json_list(grid.row(r).iter().map(Scalar::encode))))
        .collect();
    out += &rows.join(",\n");
    out += "\n  ],\n";
    out += &format!("  \"numeric\": {}\n", json_str(T::MODE.as_str()));
    out += "}\n";
    out
}

/// Canonical document text.
pub fn serialize_game(doc: &GameDocument) -> String {
    match &doc.game {
        AnyGame::Rational(g) => write_game(&doc.name, g),
        AnyGame::Float(g) => write_game(&doc.name, g),
    }
}

/// Compact canonical encoding of the payoff grid, used for report hashes.
pub fn payoff_fingerprint<T: Scalar>(grid: &PayoffGrid<T>) -> String {
    json_list((0..grid.size()).map(|r| Value::Array(grid.row(r).iter().map(Scalar::encode).collect())))
}
