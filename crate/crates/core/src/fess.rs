//! Finite-population evolutionarily stable strategies.
//!
//! `x` is a fESS of `(X, pi)` when `pi(x, y) >= pi(y, x)` for every `y`.
//! The set is computed on `pi` directly; [`fess_saddle_crosscheck`] then
//! compares it with the symmetric saddle actions of the relative payoff
//! game, which must coincide.

use crate::error::{Error, Result};
use crate::game::{relative_payoff, SymmetricGame};
use crate::saddle::symmetric_saddle_actions;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FessReport {
    pub fess_set: Vec<usize>,
    pub nash_set: Vec<usize>,
    pub saddle_crosscheck_ok: bool,
    /// fESS actions grouped by identical relative-payoff rows.
    pub equivalence_classes: Vec<Vec<usize>>,
}

pub fn is_fess<T: Scalar>(g: &SymmetricGame<T>, x: usize) -> bool {
    let tol = g.tolerance();
    (0..g.size()).all(|y| g.payoff(x, y).ge_tol(g.payoff(y, x), tol))
}

pub fn fess_set<T: Scalar>(g: &SymmetricGame<T>) -> Vec<usize> {
    (0..g.size()).filter(|&x| is_fess(g, x)).collect()
}

/// Symmetric pure Nash equilibrium actions of the original game:
/// `pi(x, x) >= pi(y, x)` for every `y`.
pub fn symmetric_pure_nash<T: Scalar>(g: &SymmetricGame<T>) -> Vec<usize> {
    let tol = g.tolerance();
    (0..g.size())
        .filter(|&x| (0..g.size()).all(|y| g.payoff(x, x).ge_tol(g.payoff(y, x), tol)))
        .collect()
}

pub fn fess_saddle_crosscheck<T: Scalar>(g: &SymmetricGame<T>) -> bool {
    fess_set(g) == symmetric_saddle_actions(&relative_payoff(g))
}

/// Partitions the fESS set: `x ~ y` iff `delta(x, z) = delta(y, z)` for all `z`.
///
/// More than one class is possible (the discretised Nash demand game has
/// several), so this is a diagnostic and nothing is asserted about it.
pub fn fess_equivalence_classes<T: Scalar>(g: &SymmetricGame<T>) -> Vec<Vec<usize>> {
    let d = relative_payoff(g);
    let tol = d.tolerance();
    let same_row = |x: usize, y: usize| (0..d.size()).all(|z| d.delta(x, z).eq_tol(d.delta(y, z), tol));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in fess_set(g) {
        match classes.iter_mut().find(|c| same_row(c[0], x)) {
            Some(class) => class.push(x),
            None => classes.push(vec![x]),
        }
    }
    classes
}

/// Full fESS record. Fails with a law violation if the direct fESS set and
/// the saddle-point route disagree.
pub fn fess_report<T: Scalar>(g: &SymmetricGame<T>) -> Result<FessReport> {
    let fess = fess_set(g);
    let saddle = symmetric_saddle_actions(&relative_payoff(g));
    if fess != saddle {
        return Err(Error::LawViolation(format!(
            "fESS set {:?} differs from symmetric saddle actions {:?} of the relative payoff game",
            one_based(&fess),
            one_based(&saddle)
        )));
    }
    Ok(FessReport {
        fess_set: fess,
        nash_set: symmetric_pure_nash(g),
        saddle_crosscheck_ok: true,
        equivalence_classes: fess_equivalence_classes(g),
    })
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}
