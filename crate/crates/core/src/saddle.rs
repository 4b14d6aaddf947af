//! Pure saddle points of symmetric zero-sum games.
//!
//! A skew game has a pure saddle point exactly when it is not a
//! *generalized rock-paper-scissors* (GRPS) matrix, i.e. when some column
//! contains no strictly positive entry. Brute-force enumeration
//! ([`pure_saddle_points`]) is kept as the oracle for every existence
//! verdict. Quasiconcave (single-peaked) games always have one, and
//! [`saddle_by_induction`] builds it constructively by growing the leading
//! block of the matrix one action at a time.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::game::SkewGame;
use crate::scalar::Scalar;

/// Largest action count [`find_quasiconcave_ordering`] accepts by default.
pub const DEFAULT_MAX_SEARCH: usize = 9;

/// An enumeration of the action set: position `i` holds action `perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionOrdering(Vec<usize>);

impl ActionOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let m = perm.len();
        let mut seen = vec![false; m];
        for &p in &perm {
            if p >= m || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadOrdering(m));
            }
        }
        Ok(ActionOrdering(perm))
    }

    pub fn identity(m: usize) -> Self {
        ActionOrdering((0..m).collect())
    }

    /// Builds an ordering from 1-based action indices.
    pub fn from_one_based(indices: &[usize]) -> Result<Self> {
        let m = indices.len();
        let perm = indices
            .iter()
            .map(|&i| i.checked_sub(1).ok_or(Error::BadOrdering(m)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(perm)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SaddlePoint<T> {
    pub row: usize,
    pub col: usize,
    pub value: T,
}

/// Rows attaining the column maximum of `col`.
pub fn best_response_set<T: Scalar>(d: &SkewGame<T>, col: usize) -> Vec<usize> {
    let tol = d.tolerance();
    let grid = d.grid();
    let max = grid
        .column(col)
        .cloned()
        .reduce(|best, v| if v.gt_tol(&best, tol) { v } else { best })
        .expect("games have at least one action");
    (0..d.size()).filter(|&r| grid.get(r, col).eq_tol(&max, tol)).collect()
}

/// Exhaustive enumeration: `(i, j)` is listed iff `delta(i, j)` is a maximum
/// of column `j` and a minimum of row `i`.
pub fn pure_saddle_points<T: Scalar>(d: &SkewGame<T>) -> Vec<SaddlePoint<T>> {
    let m = d.size();
    let tol = d.tolerance();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let v = d.delta(i, j);
            let col_max = (0..m).all(|r| d.delta(r, j).le_tol(v, tol));
            let row_min = (0..m).all(|c| d.delta(i, c).ge_tol(v, tol));
            if col_max && row_min {
                out.push(SaddlePoint { row: i, col: j, value: v.clone() });
            }
        }
    }
    out
}

/// Is `(x, x)` a saddle point of the leading `n x n` block?
fn is_symmetric_saddle_of_block<T: Scalar>(d: &SkewGame<T>, x: usize, n: usize) -> bool {
    let zero = T::zero();
    let tol = d.tolerance();
    (0..n).all(|r| d.delta(r, x).le_tol(&zero, tol))
}

/// Actions `x` with `(x, x)` a saddle point, i.e. no row beats `x`.
pub fn symmetric_saddle_actions<T: Scalar>(d: &SkewGame<T>) -> Vec<usize> {
    (0..d.size()).filter(|&x| is_symmetric_saddle_of_block(d, x, d.size())).collect()
}

/// Every column holds a strictly positive entry.
pub fn is_grps<T: Scalar>(d: &SkewGame<T>) -> bool {
    let zero = T::zero();
    let tol = d.tolerance();
    (0..d.size()).all(|j| d.grid().column(j).any(|v| v.gt_tol(&zero, tol)))
}

pub fn saddle_exists<T: Scalar>(d: &SkewGame<T>) -> bool {
    !is_grps(d)
}

/// First `(a, b, c)` with `a < b < c` and `s[a] > s[b] < s[c]`, if any.
fn single_peak_violation<'a, T: Scalar>(
    seq: impl Iterator<Item = &'a T>,
    tol: crate::scalar::Tolerance,
) -> Option<[usize; 3]> {
    let mut prev: Option<&T> = None;
    let mut fall_top: Option<usize> = None;
    for (i, v) in seq.enumerate() {
        if let Some(p) = prev {
            match (fall_top, v.compare(p, tol)) {
                (None, std::cmp::Ordering::Less) => fall_top = Some(i - 1),
                (Some(top), std::cmp::Ordering::Greater) => return Some([top, i - 1, i]),
                _ => {}
            }
        }
        prev = Some(v);
    }
    None
}

/// First single-peakedness violation among the leading `rows` positions of
/// the permuted game, reported in permuted positions.
fn quasiconcavity_violation<T: Scalar>(
    d: &SkewGame<T>,
    perm: &[usize],
    rows: usize,
) -> Option<(usize, [usize; 3])> {
    let tol = d.tolerance();
    (0..rows).find_map(|col| {
        let column = perm[..rows].iter().map(|&r| d.delta(r, perm[col]));
        single_peak_violation(column, tol).map(|w| (col, w))
    })
}

/// Single-peakedness of every column after enumerating actions by `ord`.
/// Inequalities are weak, so plateaus are allowed.
pub fn is_quasiconcave_under<T: Scalar>(d: &SkewGame<T>, ord: &ActionOrdering) -> bool {
    assert_eq!(ord.len(), d.size(), "ordering size must match the game");
    quasiconcavity_violation(d, ord.as_slice(), d.size()).is_none()
}

/// Exhaustive search over all `m!` enumerations; returns the lexicographically
/// smallest one under which the game is quasiconcave.
pub fn find_quasiconcave_ordering<T: Scalar>(
    d: &SkewGame<T>,
    max_m: usize,
) -> Result<Option<ActionOrdering>> {
    let m = d.size();
    if m > max_m {
        return Err(Error::Capacity { m, max: max_m });
    }
    Ok((0..m)
        .permutations(m)
        .find(|perm| quasiconcavity_violation(d, perm, m).is_none())
        .map(ActionOrdering))
}

/// One extension step of the inductive construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InductionStep {
    /// The 1x1 block; its only action is a saddle.
    Base,
    /// The newly adjoined action is itself a symmetric saddle of the block.
    NewSaddle { block: usize, saddle: usize },
    /// The adjoined action does not beat the current saddle, which survives.
    Kept { block: usize, saddle: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionTrace {
    pub saddle: usize,
    pub steps: Vec<InductionStep>,
}

/// Constructive saddle finder for games that are quasiconcave in their
/// given enumeration.
///
/// Keeps `k`, the largest symmetric saddle action of the leading block.
/// When action `n` is adjoined, either it becomes a saddle itself (then it
/// is the new largest), or it fails to beat `k` and `k` survives. Any other
/// outcome is impossible for single-peaked columns, so it is reported with
/// a violating column as witness.
pub fn saddle_by_induction_trace<T: Scalar>(d: &SkewGame<T>) -> Result<InductionTrace> {
    let m = d.size();
    let zero = T::zero();
    let tol = d.tolerance();
    let mut k = 0;
    let mut steps = vec![InductionStep::Base];
    for n in 1..m {
        let block = n + 1;
        if is_symmetric_saddle_of_block(d, n, block) {
            k = n;
            steps.push(InductionStep::NewSaddle { block, saddle: k });
        } else if d.delta(n, k).le_tol(&zero, tol) {
            steps.push(InductionStep::Kept { block, saddle: k });
        } else {
            let identity: Vec<usize> = (0..m).collect();
            return Err(match quasiconcavity_violation(d, &identity, block) {
                Some((column, rows)) => Error::NotQuasiconcave { column, rows },
                None => Error::LawViolation(format!(
                    "no saddle for leading block of size {block} although its columns are single-peaked"
                )),
            });
        }
    }
    Ok(InductionTrace { saddle: k, steps })
}

pub fn saddle_by_induction<T: Scalar>(d: &SkewGame<T>) -> Result<usize> {
    saddle_by_induction_trace(d).map(|t| t.saddle)
}

/// The symmetric saddle actions, after checking that every cross pair of
/// them is itself a saddle point (interchangeability).
pub fn strong_solution_set<T: Scalar>(d: &SkewGame<T>) -> Result<Vec<usize>> {
    let set = symmetric_saddle_actions(d);
    let saddles = pure_saddle_points(d);
    for &x in &set {
        for &y in &set {
            if !saddles.iter().any(|s| s.row == x && s.col == y) {
                return Err(Error::LawViolation(format!(
                    "saddle actions {} and {} are not interchangeable",
                    x + 1,
                    y + 1
                )));
            }
        }
    }
    Ok(set)
}
