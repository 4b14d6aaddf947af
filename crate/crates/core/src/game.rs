//! Game representations and the relative-payoff transform.
//!
//! Actions are identified by position (`0..m`). Labels and numeric values
//! are carried along as metadata only.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Tolerance};

/// The shared action set of a symmetric game.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionSet<T> {
    labels: Vec<String>,
    values: Option<Vec<T>>,
}

impl<T: Scalar> ActionSet<T> {
    pub fn new(labels: Vec<String>, values: Option<Vec<T>>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Empty);
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        if let Some(values) = &values {
            if values.len() != labels.len() {
                return Err(Error::DimensionMismatch { grid: values.len(), actions: labels.len() });
            }
            if let Some(i) = values.iter().position(|v| !v.is_finite()) {
                return Err(Error::ValuesNotIncreasing(i));
            }
            let exact = Tolerance::new(0.0)?;
            for (i, pair) in values.windows(2).enumerate() {
                if pair[0].compare(&pair[1], exact).is_ge() {
                    return Err(Error::ValuesNotIncreasing(i + 1));
                }
            }
        }
        Ok(ActionSet { labels, values })
    }

    /// Labels `1..=m`, no values.
    pub fn indexed(m: usize) -> Self {
        ActionSet { labels: (1..=m).map(|i| i.to_string()).collect(), values: None }
    }

    /// Labels rendered from strictly increasing numeric values.
    pub fn from_values(values: Vec<T>) -> Result<Self> {
        let labels = values.iter().map(|v| v.to_string()).collect();
        ActionSet::new(labels, Some(values))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, action: usize) -> &str {
        &self.labels[action]
    }

    pub fn values(&self) -> Option<&[T]> {
        self.values.as_deref()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn reordered(&self, perm: &[usize]) -> Self {
        // values lose monotonicity under a reordering, so they are dropped
        ActionSet { labels: perm.iter().map(|&i| self.labels[i].clone()).collect(), values: None }
    }
}

/// Square payoff matrix, row-major, together with its comparison tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffGrid<T> {
    m: usize,
    entries: Vec<T>,
    tol: Tolerance,
}

impl<T: Scalar> PayoffGrid<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::Empty);
        }
        let mut entries = Vec::with_capacity(m * m);
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != m {
                return Err(Error::NotSquare { row, len: values.len(), expected: m });
            }
            for (col, v) in values.into_iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFinite { row, col });
                }
                entries.push(v);
            }
        }
        Ok(PayoffGrid { m, entries, tol: Tolerance::default() })
    }

    pub fn from_fn(m: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let rows = (0..m).map(|i| (0..m).map(|j| f(i, j)).collect()).collect();
        Self::from_rows(rows)
    }

    /// Integer convenience constructor.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter().map(|r| r.as_ref().iter().map(|&v| T::from_int(v)).collect()).collect(),
        )
    }

    pub fn with_tolerance(mut self, tol: Tolerance) -> Self {
        self.tol = tol;
        self
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.m + col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.entries[row * self.m..(row + 1) * self.m]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = &T> + '_ {
        (0..self.m).map(move |r| self.get(r, col))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.m).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> PayoffGrid<U> {
        PayoffGrid { m: self.m, entries: self.entries.iter().map(f).collect(), tol: self.tol }
    }

    /// Applies `perm` to rows and columns: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let m = self.m;
        let entries = (0..m * m).map(|k| self.get(perm[k / m], perm[k % m]).clone()).collect();
        PayoffGrid { m, entries, tol: self.tol }
    }

    /// First cell pair `(i, j)`, `i <= j`, where `grid(i,j) + grid(j,i) != 0`.
    pub fn skew_violation(&self) -> Option<(usize, usize)> {
        let zero = T::zero();
        for i in 0..self.m {
            for j in i..self.m {
                let sum = self.get(i, j).clone() + self.get(j, i).clone();
                if !sum.eq_tol(&zero, self.tol) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// True iff `|grid(i,j) + grid(j,i)| <= eps` for every pair of cells.
pub fn validate_skew<T: Scalar>(grid: &PayoffGrid<T>) -> bool {
    grid.skew_violation().is_none()
}

/// A finite symmetric two-player game; `payoff(i, j)` goes to the player
/// choosing `i` against an opponent choosing `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricGame<T> {
    actions: ActionSet<T>,
    payoffs: PayoffGrid<T>,
}

impl<T: Scalar> SymmetricGame<T> {
    pub fn new(actions: ActionSet<T>, payoffs: PayoffGrid<T>) -> Result<Self> {
        if actions.len() != payoffs.size() {
            return Err(Error::DimensionMismatch { grid: payoffs.size(), actions: actions.len() });
        }
        Ok(SymmetricGame { actions, payoffs })
    }

    pub fn from_grid(payoffs: PayoffGrid<T>) -> Self {
        SymmetricGame { actions: ActionSet::indexed(payoffs.size()), payoffs }
    }

    pub fn actions(&self) -> &ActionSet<T> {
        &self.actions
    }

    pub fn payoffs(&self) -> &PayoffGrid<T> {
        &self.payoffs
    }

    pub fn payoff(&self, row: usize, col: usize) -> &T {
        self.payoffs.get(row, col)
    }

    pub fn size(&self) -> usize {
        self.payoffs.size()
    }

    pub fn tolerance(&self) -> Tolerance {
        self.payoffs.tolerance()
    }

    pub fn with_tolerance(mut self, tol: Tolerance) -> Self {
        self.payoffs = self.payoffs.with_tolerance(tol);
        self
    }
}

/// A symmetric zero-sum game: `delta(i, j) = -delta(j, i)`, zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewGame<T> {
    actions: ActionSet<T>,
    delta: PayoffGrid<T>,
}

impl<T: Scalar> SkewGame<T> {
    pub fn new(actions: ActionSet<T>, delta: PayoffGrid<T>) -> Result<Self> {
        if actions.len() != delta.size() {
            return Err(Error::DimensionMismatch { grid: delta.size(), actions: actions.len() });
        }
        if let Some((row, col)) = delta.skew_violation() {
            return Err(Error::SkewViolation { row, col });
        }
        Ok(SkewGame { actions, delta })
    }

    pub fn from_grid(delta: PayoffGrid<T>) -> Result<Self> {
        Self::new(ActionSet::indexed(delta.size()), delta)
    }

    pub fn actions(&self) -> &ActionSet<T> {
        &self.actions
    }

    pub fn grid(&self) -> &PayoffGrid<T> {
        &self.delta
    }

    pub fn delta(&self, row: usize, col: usize) -> &T {
        self.delta.get(row, col)
    }

    pub fn size(&self) -> usize {
        self.delta.size()
    }

    pub fn tolerance(&self) -> Tolerance {
        self.delta.tolerance()
    }

    pub fn with_tolerance(mut self, tol: Tolerance) -> Self {
        self.delta = self.delta.with_tolerance(tol);
        self
    }

    /// Relabels the game so that position `i` holds action `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        SkewGame { actions: self.actions.reordered(perm), delta: self.delta.permuted(perm) }
    }
}

/// `delta(x, y) = pi(x, y) - pi(y, x)`.
pub fn relative_payoff<T: Scalar>(game: &SymmetricGame<T>) -> SkewGame<T> {
    let p = game.payoffs();
    let delta = PayoffGrid::from_fn(p.size(), |i, j| p.get(i, j).clone() - p.get(j, i).clone())
        .expect("differences of finite payoffs are finite")
        .with_tolerance(p.tolerance());
    SkewGame { actions: game.actions().clone(), delta }
}

/// The symmetric game with payoffs `delta / 2`, whose relative payoff game
/// is `delta` again.
pub fn halve_embed<T: Scalar>(game: &SkewGame<T>) -> SymmetricGame<T> {
    SymmetricGame { actions: game.actions().clone(), payoffs: game.grid().map(|v| v.half()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn grid(rows: &[&[i64]]) -> PayoffGrid<Rational> {
        PayoffGrid::from_ints(rows).unwrap()
    }

    #[test]
    fn skew_check_on_small_grids() {
        assert!(validate_skew(&grid(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]])));
        assert!(!validate_skew(&grid(&[&[1, 0], &[0, 1]])));
        assert!(validate_skew(&grid(&[&[0, 3], &[-3, 0]])));
    }

    #[test]
    fn float_skew_check_uses_tolerance() {
        let g = PayoffGrid::from_rows(vec![vec![1e-12, 1.0], vec![-1.0 + 1e-12, 0.0]]).unwrap();
        assert!(validate_skew(&g));
        assert!(!validate_skew(&g.with_tolerance(Tolerance::new(0.0).unwrap())));
    }

    #[test]
    fn non_square_is_structural_error() {
        let err = PayoffGrid::<Rational>::from_ints(&[vec![0, 1], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::NotSquare { row: 1, .. }));
        let nan = PayoffGrid::from_rows(vec![vec![f64::NAN]]).unwrap_err();
        assert_eq!(nan, Error::NonFinite { row: 0, col: 0 });
    }

    #[test]
    fn skew_game_reports_offending_pair() {
        let err = SkewGame::from_grid(grid(&[&[0, 2], &[-1, 0]])).unwrap_err();
        assert_eq!(err, Error::SkewViolation { row: 0, col: 1 });
        assert_eq!(err.to_string(), "skew-symmetry violated at cells (1, 2) and (2, 1)");
    }

    #[test]
    fn relative_payoff_of_dominance_game() {
        let g = SymmetricGame::from_grid(grid(&[&[4, 1], &[2, 0]]));
        assert_eq!(relative_payoff(&g).grid(), &grid(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn relative_payoff_doubles_skew_input() {
        let d = grid(&[&[0, 3, -2], &[-3, 0, 1], &[2, -1, 0]]);
        let g = SymmetricGame::from_grid(d.clone());
        assert_eq!(relative_payoff(&g).grid(), &d.map(|v| v.twice()));
    }

    #[test]
    fn diamond_search_cancels_symmetric_term() {
        // pi(x, y) = xy - x^2 on {0, 1, 2}
        let pi = PayoffGrid::<Rational>::from_fn(3, |i, j| {
            let (x, y) = (i as i64, j as i64);
            Rational::from_int(x * y - x * x)
        })
        .unwrap();
        let d = relative_payoff(&SymmetricGame::from_grid(pi));
        for i in 0..3i64 {
            for j in 0..3i64 {
                assert_eq!(d.delta(i as usize, j as usize), &Rational::from_int(j * j - i * i));
            }
        }
    }

    #[test]
    fn halve_embed_examples() {
        let d = SkewGame::from_grid(grid(&[&[0, 2], &[-2, 0]])).unwrap();
        assert_eq!(halve_embed(&d).payoffs(), &grid(&[&[0, 1], &[-1, 0]]));
        let rps = SkewGame::from_grid(grid(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]])).unwrap();
        let half = halve_embed(&rps);
        assert_eq!(half.payoff(0, 2), &Rational::from_int(1).half());
        assert_eq!(relative_payoff(&half), rps);
    }

    #[test]
    fn action_set_invariants() {
        let labels = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert!(matches!(
            ActionSet::<Rational>::new(labels(&["a", "a"]), None),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(ActionSet::<Rational>::new(vec![], None).is_err());
        let vals = vec![Rational::from_int(1), Rational::from_int(1)];
        assert!(matches!(
            ActionSet::new(labels(&["a", "b"]), Some(vals)),
            Err(Error::ValuesNotIncreasing(1))
        ));
        let ok = ActionSet::from_values(vec![Rational::from_int(0), Rational::from_int(1).half()]).unwrap();
        assert_eq!(ok.labels(), &["0".to_string(), "1/2".to_string()]);
    }
}
