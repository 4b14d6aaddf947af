//! Pure saddle points of finite symmetric zero-sum games, structural
//! classification of skew-symmetric payoff matrices, and finite-population
//! evolutionarily stable strategies computed through relative payoffs.
//!
//! ```
//! use saddlescope::prelude::*;
//!
//! let rps = SkewGame::<Rational>::from_grid(
//!     PayoffGrid::from_ints(&[[0, -1, 1], [1, 0, -1], [-1, 1, 0]]).unwrap(),
//! )
//! .unwrap();
//! assert!(is_grps(&rps));
//! assert!(pure_saddle_points(&rps).is_empty());
//! ```

pub mod cli;
pub mod document;
pub mod error;
pub mod fess;
pub mod game;
pub mod report;
pub mod saddle;
pub mod scalar;
pub mod structure;
pub mod zoo;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::document::{AnyGame, Game, GameDocument, Kind};
    pub use crate::error::{Error, Result};
    pub use crate::fess::{
        fess_equivalence_classes, fess_report, fess_set, is_fess, fess_saddle_crosscheck,
        symmetric_pure_nash, FessReport,
    };
    pub use crate::game::{
        halve_embed, relative_payoff, validate_skew, ActionSet, PayoffGrid, SkewGame, SymmetricGame,
    };
    pub use crate::saddle::{
        best_response_set, find_quasiconcave_ordering, is_grps, is_quasiconcave_under,
        pure_saddle_points, saddle_by_induction, saddle_exists, strong_solution_set,
        symmetric_saddle_actions, ActionOrdering, SaddlePoint, DEFAULT_MAX_SEARCH,
    };
    pub use crate::scalar::{compare, NumericMode, Rational, Scalar, Tolerance};
    pub use crate::structure::{
        build_exact_potential, constant_best_reply_check, find_exact_potential,
        has_decreasing_differences, has_increasing_differences, is_valuation,
        quasiconcave_order_from_h, separable_decomposition, structure_report,
        verify_exact_potential, PotentialWitness, SeparableWitness, StructureReport,
    };
    pub use crate::zoo::{generate, zoo_catalog, Family, FamilySpec, GridSpec};
}
