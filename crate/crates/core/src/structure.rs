//! Ordered-structure checks on skew games: increasing and decreasing
//! differences, valuations, additive separability and exact potentials.
//!
//! For a skew game these five properties coincide. Each one is still
//! computed by its own route so that [`structure_report`] can cross-check them.

use crate::error::{Error, Result};
use crate::game::{PayoffGrid, SkewGame};
use crate::saddle::{best_response_set, ActionOrdering};
use crate::scalar::Scalar;

/// `delta(x, y) = h(x) - h(y)`, with `h(base) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparableWitness<T> {
    pub h: Vec<T>,
    pub base: usize,
}

/// An exact potential `P` for the game.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialWitness<T> {
    pub potential: PayoffGrid<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StructureReport<T> {
    pub decreasing_differences: bool,
    pub increasing_differences: bool,
    pub valuation: bool,
    pub separable: Option<SeparableWitness<T>>,
    pub potential: Option<PotentialWitness<T>>,
}

impl<T> StructureReport<T> {
    pub fn is_separable(&self) -> bool {
        self.separable.is_some()
    }

    pub fn has_potential(&self) -> bool {
        self.potential.is_some()
    }

    /// The five flags in the order (decreasing, increasing, valuation,
    /// separable, potential).
    pub fn flags(&self) -> [bool; 5] {
        [
            self.decreasing_differences,
            self.increasing_differences,
            self.valuation,
            self.is_separable(),
            self.has_potential(),
        ]
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Increasing,
    Decreasing,
}

/// First quadruple of positions `(x', x'', y', y'')` breaking the requested
/// differences inequality under `ord`.
fn differences_violation<T: Scalar>(
    d: &SkewGame<T>,
    ord: &ActionOrdering,
    dir: Direction,
) -> Option<[usize; 4]> {
    let p = ord.as_slice();
    let m = d.size();
    let tol = d.tolerance();
    let at = |x: usize, y: usize| d.delta(p[x], p[y]).clone();
    for x_lo in 0..m {
        for x_hi in x_lo + 1..m {
            for y_lo in 0..m {
                for y_hi in y_lo + 1..m {
                    let upper = at(x_hi, y_hi) - at(x_lo, y_hi);
                    let lower = at(x_hi, y_lo) - at(x_lo, y_lo);
                    let ok = match dir {
                        Direction::Increasing => upper.ge_tol(&lower, tol),
                        Direction::Decreasing => upper.le_tol(&lower, tol),
                    };
                    if !ok {
                        return Some([x_lo, x_hi, y_lo, y_hi]);
                    }
                }
            }
        }
    }
    None
}

/// For all `x'' > x'`, `y'' > y'` in `ord`:
/// `delta(x'', y'') - delta(x', y'') >= delta(x'', y') - delta(x', y')`.
pub fn has_increasing_differences<T: Scalar>(d: &SkewGame<T>, ord: &ActionOrdering) -> bool {
    differences_violation(d, ord, Direction::Increasing).is_none()
}

/// As [`has_increasing_differences`] with the inequality reversed.
pub fn has_decreasing_differences<T: Scalar>(d: &SkewGame<T>, ord: &ActionOrdering) -> bool {
    differences_violation(d, ord, Direction::Decreasing).is_none()
}

pub fn is_valuation<T: Scalar>(d: &SkewGame<T>, ord: &ActionOrdering) -> bool {
    has_increasing_differences(d, ord) && has_decreasing_differences(d, ord)
}

/// Anchors `h(x) = delta(x, x0)` at the first action and checks
/// `delta(x, y) = h(x) - h(y)` everywhere.
pub fn separable_decomposition<T: Scalar>(d: &SkewGame<T>) -> Option<SeparableWitness<T>> {
    let m = d.size();
    let tol = d.tolerance();
    let base = 0;
    let h: Vec<T> = (0..m).map(|x| d.delta(x, base).clone()).collect();
    for x in 0..m {
        for y in 0..m {
            let expected = h[x].clone() - h[y].clone();
            if !d.delta(x, y).eq_tol(&expected, tol) {
                return None;
            }
        }
    }
    Some(SeparableWitness { h, base })
}

/// Both exact-potential identities, checked for every `x, x', y`:
///
/// ```text
/// delta(x, y) - delta(x', y) = P(x, y) - P(x', y)
/// delta(x, y) - delta(x', y) = P(y, x) - P(y, x')
/// ```
pub fn verify_exact_potential<T: Scalar>(d: &SkewGame<T>, potential: &PayoffGrid<T>) -> bool {
    let m = d.size();
    if potential.size() != m {
        return false;
    }
    let tol = d.tolerance();
    let p = |r: usize, c: usize| potential.get(r, c).clone();
    for y in 0..m {
        for x in 0..m {
            for x2 in 0..m {
                let gain = d.delta(x, y).clone() - d.delta(x2, y).clone();
                let first = p(x, y) - p(x2, y);
                let second = p(y, x) - p(y, x2);
                if !gain.eq_tol(&first, tol) || !gain.eq_tol(&second, tol) {
                    return false;
                }
            }
        }
    }
    true
}

/// `P(x, y) = h(x) + h(y)`, verified before it is returned.
pub fn build_exact_potential<T: Scalar>(
    d: &SkewGame<T>,
    w: &SeparableWitness<T>,
) -> Result<PotentialWitness<T>> {
    let potential = PayoffGrid::from_fn(w.h.len(), |x, y| w.h[x].clone() + w.h[y].clone())?
        .with_tolerance(d.tolerance());
    if verify_exact_potential(d, &potential) {
        Ok(PotentialWitness { potential })
    } else {
        Err(Error::LawViolation(
            "potential built from a separable witness fails the exact-potential identities".into(),
        ))
    }
}

/// Decides potential existence without going through separability.
///
/// Treats the game as a two-player game with `u1(a, b) = delta(a, b)` and
/// `u2(a, b) = delta(b, a)`, builds the path-integral candidate
/// `P(a, b) = u1(a, 0) - u1(0, 0) + u2(a, b) - u2(a, 0)` and verifies it.
/// A game has an exact potential iff this candidate is one.
pub fn find_exact_potential<T: Scalar>(d: &SkewGame<T>) -> Option<PotentialWitness<T>> {
    let u1 = |a: usize, b: usize| d.delta(a, b).clone();
    let u2 = |a: usize, b: usize| d.delta(b, a).clone();
    let potential = PayoffGrid::from_fn(d.size(), |a, b| {
        u1(a, 0) - u1(0, 0) + u2(a, b) - u2(a, 0)
    })
    .ok()?
    .with_tolerance(d.tolerance());
    verify_exact_potential(d, &potential).then_some(PotentialWitness { potential })
}

/// Runs all five checks under `ord` and enforces their agreement:
/// increasing and decreasing differences coincide, and so do valuation,
/// separability and potential existence.
pub fn structure_report<T: Scalar>(d: &SkewGame<T>, ord: &ActionOrdering) -> Result<StructureReport<T>> {
    let increasing = differences_violation(d, ord, Direction::Increasing);
    let decreasing = differences_violation(d, ord, Direction::Decreasing);
    let separable = separable_decomposition(d);
    let potential = find_exact_potential(d);
    let report = StructureReport {
        decreasing_differences: decreasing.is_none(),
        increasing_differences: increasing.is_none(),
        valuation: decreasing.is_none() && increasing.is_none(),
        separable,
        potential,
    };

    if report.increasing_differences != report.decreasing_differences {
        let [a, b, c, e] = increasing.or(decreasing).expect("one direction failed");
        let p = ord.as_slice();
        return Err(Error::LawViolation(format!(
            "increasing and decreasing differences disagree; witness x'={}, x''={}, y'={}, y''={}",
            p[a] + 1,
            p[b] + 1,
            p[c] + 1,
            p[e] + 1
        )));
    }
    let [_, _, valuation, separable, potential] = report.flags();
    if valuation != separable || separable != potential {
        return Err(Error::LawViolation(format!(
            "valuation={valuation}, separable={separable}, potential={potential} must agree"
        )));
    }
    if let Some(w) = &report.separable {
        build_exact_potential(d, w)?;
    }
    Ok(report)
}

/// Actions sorted by ascending `h`, ties kept in index order. Every column
/// of a separable game is nondecreasing along this ordering.
pub fn quasiconcave_order_from_h<T: Scalar>(w: &SeparableWitness<T>) -> ActionOrdering {
    let tol = crate::scalar::Tolerance::new(0.0).expect("zero is a valid tolerance");
    let mut perm: Vec<usize> = (0..w.h.len()).collect();
    perm.sort_by(|&a, &b| w.h[a].compare(&w.h[b], tol));
    ActionOrdering::new(perm).expect("sorting preserves the permutation")
}

/// `Some(set)` when every column has the same best-response set.
pub fn constant_best_reply<T: Scalar>(d: &SkewGame<T>) -> Option<Vec<usize>> {
    let first = best_response_set(d, 0);
    (1..d.size()).all(|y| best_response_set(d, y) == first).then_some(first)
}

pub fn constant_best_reply_check<T: Scalar>(d: &SkewGame<T>) -> bool {
    constant_best_reply(d).is_some()
}

/// Actions attaining the maximum of `h`.
pub fn argmax_h<T: Scalar>(d: &SkewGame<T>, w: &SeparableWitness<T>) -> Vec<usize> {
    let tol = d.tolerance();
    let max = w
        .h
        .iter()
        .cloned()
        .reduce(|a, b| if b.gt_tol(&a, tol) { b } else { a })
        .expect("games have at least one action");
    (0..w.h.len()).filter(|&x| w.h[x].eq_tol(&max, tol)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::saddle::is_quasiconcave_under;
    use crate::scalar::Rational;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    fn skew(rows: &[&[i64]]) -> SkewGame<Rational> {
        SkewGame::from_grid(PayoffGrid::from_ints(rows).unwrap()).unwrap()
    }

    fn separable(h: &[i64]) -> SkewGame<Rational> {
        SkewGame::from_grid(PayoffGrid::from_fn(h.len(), |i, j| Rational::from_int(h[i] - h[j])).unwrap())
            .unwrap()
    }

    fn rps() -> SkewGame<Rational> {
        skew(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]])
    }

    #[test]
    fn separable_games_have_both_differences() {
        let d = separable(&[5, -2, 7, 0]);
        for perm in [vec![0, 1, 2, 3], vec![3, 1, 0, 2]] {
            let ord = ActionOrdering::new(perm).unwrap();
            assert!(has_increasing_differences(&d, &ord));
            assert!(has_decreasing_differences(&d, &ord));
            assert!(is_valuation(&d, &ord));
        }
    }

    #[test]
    fn rps_fails_differences() {
        let id = ActionOrdering::identity(3);
        assert!(!has_increasing_differences(&rps(), &id));
        assert!(!has_decreasing_differences(&rps(), &id));
        assert!(!is_valuation(&rps(), &id));
        let d = rps();
        let [a, b, c, e] = differences_violation(&d, &id, Direction::Increasing).unwrap();
        let upper = d.delta(b, e).clone() - d.delta(a, e).clone();
        let lower = d.delta(b, c).clone() - d.delta(a, c).clone();
        assert!(upper < lower);
    }

    #[test]
    fn two_by_two_is_valuation() {
        for a in -4..=4 {
            let d = skew(&[&[0, a], &[-a, 0]]);
            let id = ActionOrdering::identity(2);
            assert!(has_increasing_differences(&d, &id));
            assert!(has_decreasing_differences(&d, &id));
            assert!(is_valuation(&d, &id));
        }
    }

    #[test]
    fn diamond_search_decomposition() {
        // delta = c(y) - c(x), c(x) = x^2 on {0, 1, 2}
        let c = [0i64, 1, 4];
        let d = SkewGame::from_grid(PayoffGrid::from_fn(3, |i, j| Rational::from_int(c[j] - c[i])).unwrap())
            .unwrap();
        let w = separable_decomposition(&d).unwrap();
        assert_eq!(w.h, ints(&[0, -1, -4]));
        assert_eq!(w.base, 0);
        let p = build_exact_potential(&d, &w).unwrap();
        assert_eq!(
            p.potential,
            PayoffGrid::from_ints(&[[0, -1, -4], [-1, -2, -5], [-4, -5, -8]]).unwrap()
        );
    }

    #[test]
    fn rps_is_not_separable() {
        assert!(separable_decomposition(&rps()).is_none());
        assert!(find_exact_potential(&rps()).is_none());
    }

    #[test]
    fn ratio_game_is_not_separable() {
        // delta(x, y) = x/y - y/x on {1, 3/2, 2}
        let xs = [Rational::from_int(1), Rational::from_int(3).half(), Rational::from_int(2)];
        let d = SkewGame::from_grid(
            PayoffGrid::from_fn(3, |i, j| xs[i].clone() / xs[j].clone() - xs[j].clone() / xs[i].clone())
                .unwrap(),
        )
        .unwrap();
        let seven_twelfths = Rational::new(7.into(), 12.into());
        assert_eq!(d.delta(1, 2), &-seven_twelfths);
        let h12 = d.delta(1, 0).clone() - d.delta(2, 0).clone();
        assert_eq!(h12, Rational::new((-2).into(), 3.into()));
        assert!(separable_decomposition(&d).is_none());
    }

    #[test]
    fn potential_examples() {
        for a in [-3i64, 0, 2] {
            let d = skew(&[&[0, a], &[-a, 0]]);
            let w = separable_decomposition(&d).unwrap();
            assert_eq!(w.h, ints(&[0, -a]));
            let p = build_exact_potential(&d, &w).unwrap();
            assert_eq!(p.potential, PayoffGrid::from_ints(&[[0, -a], [-a, -2 * a]]).unwrap());
        }
        let zero = separable(&[0, 0, 0]);
        let p = build_exact_potential(&zero, &separable_decomposition(&zero).unwrap()).unwrap();
        assert!(p.potential.to_rows().iter().flatten().all(|v| *v == Rational::from_int(0)));
    }

    #[test]
    fn verify_potential_cases() {
        let d = separable(&[0, -1, -4]);
        let built = build_exact_potential(&d, &separable_decomposition(&d).unwrap()).unwrap().potential;
        assert!(verify_exact_potential(&d, &built));
        let shifted = built.map(|v| v.clone() + Rational::from_int(17));
        assert!(verify_exact_potential(&d, &shifted));
        let zero = PayoffGrid::from_fn(3, |_, _| Rational::from_int(0)).unwrap();
        assert!(!verify_exact_potential(&rps(), &zero));
    }

    #[test]
    fn path_potential_agrees_with_separable_route() {
        let d = separable(&[2, -3, 5, 1]);
        let found = find_exact_potential(&d).unwrap();
        let built = build_exact_potential(&d, &separable_decomposition(&d).unwrap()).unwrap();
        // both are potentials, so they differ by a constant
        let diff = found.potential.get(0, 0).clone() - built.potential.get(0, 0).clone();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(
                    found.potential.get(x, y).clone() - built.potential.get(x, y).clone(),
                    diff
                );
            }
        }
    }

    #[test]
    fn structure_report_examples() {
        let report = structure_report(&rps(), &ActionOrdering::identity(3)).unwrap();
        assert_eq!(report.flags(), [false; 5]);
        // Cournot b = 10, c(x) = 2x on {0..10}: h(x) = 8x - x^2
        let h: Vec<i64> = (0..=10).map(|x| 8 * x - x * x).collect();
        let report = structure_report(&separable(&h), &ActionOrdering::identity(11)).unwrap();
        assert_eq!(report.flags(), [true; 5]);
        assert_eq!(report.separable.unwrap().h, ints(&h));
    }

    #[test]
    fn h_ordering() {
        let w = |h: &[i64]| SeparableWitness { h: ints(h), base: 0 };
        assert_eq!(quasiconcave_order_from_h(&w(&[0, -1, -4])).to_one_based(), vec![3, 2, 1]);
        assert_eq!(quasiconcave_order_from_h(&w(&[0, 0, 0])).to_one_based(), vec![1, 2, 3]);
        assert_eq!(quasiconcave_order_from_h(&w(&[3, 1, 2])).to_one_based(), vec![2, 3, 1]);
        let d = separable(&[3, 1, 2]);
        let wit = separable_decomposition(&d).unwrap();
        assert!(is_quasiconcave_under(&d, &quasiconcave_order_from_h(&wit)));
    }

    #[test]
    fn best_reply_constancy() {
        let d = separable(&[0, -1, -4]);
        assert_eq!(constant_best_reply(&d), Some(vec![0]));
        assert!(!constant_best_reply_check(&rps()));
        assert_eq!(constant_best_reply(&separable(&[0, 0, 0])), Some(vec![0, 1, 2]));
    }
}
