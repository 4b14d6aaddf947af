use thiserror::Error;

/// Everything that can go wrong while building or analysing a game.
///
/// Action indices carried by variants are 0-based; `Display` renders them
/// 1-based to match the document and CLI conventions.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("payoff grid is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("payoff grid is empty")]
    Empty,

    #[error("payoff at ({}, {}) is not finite", .row + 1, .col + 1)]
    NonFinite { row: usize, col: usize },

    #[error("grid has {grid} actions but the action set has {actions}")]
    DimensionMismatch { grid: usize, actions: usize },

    #[error("duplicate action label {0:?}")]
    DuplicateLabel(String),

    #[error("action values must be strictly increasing (position {})", .0 + 1)]
    ValuesNotIncreasing(usize),

    #[error("{}", skew_message(*.row, *.col))]
    SkewViolation { row: usize, col: usize },

    #[error("ordering is not a permutation of 1..={0}")]
    BadOrdering(usize),

    #[error("{m} actions exceeds the exhaustive search cap of {max}")]
    Capacity { m: usize, max: usize },

    #[error(
        "input is not quasiconcave: column {} rises again at row {} after falling from row {} to row {}",
        .column + 1, .rows[2] + 1, .rows[0] + 1, .rows[1] + 1
    )]
    NotQuasiconcave { column: usize, rows: [usize; 3] },

    #[error("law violated: {0}")]
    LawViolation(String),

    #[error("invalid tolerance {0}")]
    Tolerance(f64),

    #[error("invalid number {0:?}")]
    Number(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// True for errors that signal a broken invariant rather than bad input.
    pub fn is_law_violation(&self) -> bool {
        matches!(self, Error::LawViolation(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn skew_message(row: usize, col: usize) -> String {
    if row == col {
        format!("skew-symmetry violated: nonzero diagonal at cell ({}, {})", row + 1, col + 1)
    } else {
        format!("skew-symmetry violated at cells ({}, {}) and ({}, {})", row + 1, col + 1, col + 1, row + 1)
    }
}
