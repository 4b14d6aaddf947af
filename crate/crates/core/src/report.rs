//! Full analysis of one game document, rendered as text or JSON.
//!
//! Action references in the JSON report are 1-based indices into
//! `game.actions`. Every cross-check between independently computed
//! quantities is recorded under `checks`; a `"violated"` entry means a bug.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::document::{payoff_fingerprint, AnyGame, Game, GameDocument};
use crate::error::Result;
use crate::fess::{fess_equivalence_classes, fess_set, symmetric_pure_nash};
use crate::saddle::{
    find_quasiconcave_ordering, is_grps, is_quasiconcave_under, pure_saddle_points, saddle_by_induction,
    saddle_exists, strong_solution_set, symmetric_saddle_actions, ActionOrdering, DEFAULT_MAX_SEARCH,
};
use crate::scalar::{Scalar, Tolerance};
use crate::structure::{argmax_h, constant_best_reply, quasiconcave_order_from_h, structure_report};
use crate::game::validate_skew;

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    /// Enumeration used by the order-dependent checks; document order if `None`.
    pub order: Option<ActionOrdering>,
    pub search_orderings: bool,
    pub max_search: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { order: None, search_orderings: false, max_search: DEFAULT_MAX_SEARCH }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Consistency {
    Consistent,
    Violated,
    NotApplicable,
}

impl Consistency {
    fn of(holds: bool) -> Self {
        if holds {
            Consistency::Consistent
        } else {
            Consistency::Violated
        }
    }

    fn when(applicable: bool, holds: impl FnOnce() -> bool) -> Self {
        if applicable {
            Self::of(holds())
        } else {
            Consistency::NotApplicable
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GameIdentity {
    pub name: String,
    pub kind: String,
    pub numeric: String,
    pub actions: Vec<String>,
    pub payoff_hash: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SaddleEntry {
    pub row: usize,
    pub col: usize,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuasiconcaveEntry {
    pub under_order: bool,
    /// Saddle action built inductively along the order, when it applies.
    pub induction_saddle: Option<usize>,
    pub searched: bool,
    /// Lexicographically smallest quasiconcave ordering; `null` when the
    /// search ran and found none, or did not run.
    pub found_ordering: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureEntry {
    pub decreasing_differences: bool,
    pub increasing_differences: bool,
    pub valuation: bool,
    pub separable: bool,
    pub exact_potential: bool,
    pub h: Option<Vec<Value>>,
    pub potential: Option<Vec<Vec<Value>>>,
    pub h_order: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BestReplyEntry {
    pub constant: bool,
    pub set: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FessEntry {
    pub fess_set: Vec<usize>,
    pub nash_set: Vec<usize>,
    pub equivalence_classes: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Checks {
    pub saddle_exists_matches_enumeration: Consistency,
    pub symmetric_reduction: Consistency,
    pub saddle_values_zero: Consistency,
    pub interchangeability: Consistency,
    pub structure_agreement: Consistency,
    pub quasiconcave_implies_saddle: Consistency,
    pub induction_matches_enumeration: Consistency,
    pub separable_quasiconcave: Consistency,
    pub separable_constant_best_reply: Consistency,
    pub fess_matches_saddles: Consistency,
}

impl Checks {
    fn entries(&self) -> [(&'static str, Consistency); 10] {
        [
            ("saddle_exists_matches_enumeration", self.saddle_exists_matches_enumeration),
            ("symmetric_reduction", self.symmetric_reduction),
            ("saddle_values_zero", self.saddle_values_zero),
            ("interchangeability", self.interchangeability),
            ("structure_agreement", self.structure_agreement),
            ("quasiconcave_implies_saddle", self.quasiconcave_implies_saddle),
            ("induction_matches_enumeration", self.induction_matches_enumeration),
            ("separable_quasiconcave", self.separable_quasiconcave),
            ("separable_constant_best_reply", self.separable_constant_best_reply),
            ("fess_matches_saddles", self.fess_matches_saddles),
        ]
    }

    pub fn violations(&self) -> Vec<&'static str> {
        self.entries().into_iter().filter(|(_, c)| *c == Consistency::Violated).map(|(n, _)| n).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub game: GameIdentity,
    pub tolerance: Option<f64>,
    pub order: Vec<usize>,
    pub skew_valid: bool,
    pub saddle_points: Vec<SaddleEntry>,
    pub symmetric_saddle_actions: Vec<usize>,
    pub strong_solution: Vec<usize>,
    pub grps: bool,
    pub saddle_exists: bool,
    pub quasiconcave: QuasiconcaveEntry,
    pub structure: Option<StructureEntry>,
    pub best_reply: BestReplyEntry,
    pub fess: Option<FessEntry>,
    pub checks: Checks,
}

impl AnalysisReport {
    pub fn is_consistent(&self) -> bool {
        self.checks.violations().is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let label = |i: &usize| self.game.actions[i - 1].clone();
        let set = |v: &[usize]| {
            if v.is_empty() {
                "none".to_string()
            } else {
                format!("{{{}}}", v.iter().map(label).collect::<Vec<_>>().join(", "))
            }
        };
        let yn = |b: bool| if b { "yes" } else { "no" };
        let values = |v: &[Value]| v.iter().map(|x| x.to_string().replace('"', "")).collect::<Vec<_>>().join(" ");
        let mut out = Vec::new();
        out.push(format!(
            "game: {} ({}, {}, {} actions)",
            self.game.name,
            self.game.kind,
            self.game.numeric,
            self.game.actions.len()
        ));
        out.push(format!("actions: {}", self.game.actions.join(" ")));
        out.push(format!("payoff hash: {}", self.game.payoff_hash));
        if let Some(eps) = self.tolerance {
            out.push(format!("tolerance: {eps:e}"));
        }
        out.push(format!("order: {}", self.order.iter().map(label).collect::<Vec<_>>().join(" ")));
        let saddles = if self.saddle_points.is_empty() {
            "none".to_string()
        } else {
            self.saddle_points
                .iter()
                .map(|s| format!("({}, {})", label(&s.row), label(&s.col)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push(format!("pure saddle points: {saddles}"));
        out.push(format!("symmetric saddle actions: {}", set(&self.symmetric_saddle_actions)));
        out.push(format!("strong solution: {}", set(&self.strong_solution)));
        out.push(format!("generalized rock-paper-scissors: {}", yn(self.grps)));
        out.push(format!("saddle exists: {}", yn(self.saddle_exists)));
        out.push(format!("quasiconcave under order: {}", yn(self.quasiconcave.under_order)));
        if let Some(k) = self.quasiconcave.induction_saddle {
            out.push(format!("inductive saddle: {}", label(&k)));
        }
        if self.quasiconcave.searched {
            let found = match &self.quasiconcave.found_ordering {
                Some(o) => o.iter().map(label).collect::<Vec<_>>().join(" "),
                None => "none".to_string(),
            };
            out.push(format!("quasiconcave ordering: {found}"));
        }
        match &self.structure {
            Some(s) => {
                out.push(format!("decreasing differences: {}", yn(s.decreasing_differences)));
                out.push(format!("increasing differences: {}", yn(s.increasing_differences)));
                out.push(format!("valuation: {}", yn(s.valuation)));
                out.push(format!("additively separable: {}", yn(s.separable)));
                out.push(format!("exact potential: {}", yn(s.exact_potential)));
                if let Some(h) = &s.h {
                    out.push(format!("h: {}", values(h)));
                }
                if let Some(o) = &s.h_order {
                    out.push(format!("h-ascending order: {}", o.iter().map(label).collect::<Vec<_>>().join(" ")));
                }
            }
            None => out.push("structure: unavailable".to_string()),
        }
        out.push(format!(
            "constant best reply: {}",
            match &self.best_reply.set {
                Some(s) => set(s),
                None => "no".to_string(),
            }
        ));
        if let Some(f) = &self.fess {
            out.push(format!("fESS: {}", set(&f.fess_set)));
            out.push(format!("symmetric pure Nash: {}", set(&f.nash_set)));
            out.push(format!(
                "fESS classes: {}",
                if f.equivalence_classes.is_empty() {
                    "none".to_string()
                } else {
                    f.equivalence_classes.iter().map(|c| set(c)).collect::<Vec<_>>().join(" ")
                }
            ));
        }
        let violations = self.checks.violations();
        if violations.is_empty() {
            out.push("checks: consistent".to_string());
        } else {
            out.push(format!("checks: VIOLATED {}", violations.join(", ")));
        }
        out.join("\n") + "\n"
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn analyze_game<T: Scalar>(name: &str, game: &Game<T>, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let d = game.skew();
    let m = d.size();
    let tol = d.tolerance();
    let order = match &opts.order {
        Some(o) if o.len() != m => return Err(crate::Error::BadOrdering(m)),
        Some(o) => o.clone(),
        None => ActionOrdering::identity(m),
    };

    let hash = {
        let text = format!("{}:{}", T::MODE, payoff_fingerprint(game.grid()));
        hex::encode(Sha256::digest(text.as_bytes()))
    };
    let identity = GameIdentity {
        name: name.to_string(),
        kind: game.kind().as_str().to_string(),
        numeric: T::MODE.as_str().to_string(),
        actions: game.actions().labels().to_vec(),
        payoff_hash: hash,
    };

    let saddles = pure_saddle_points(&d);
    let symmetric = symmetric_saddle_actions(&d);
    let strong = strong_solution_set(&d);
    let grps = is_grps(&d);
    let exists = saddle_exists(&d);

    let under_order = is_quasiconcave_under(&d, &order);
    let induction = if under_order {
        let permuted = d.permuted(order.as_slice());
        Some(saddle_by_induction(&permuted).map(|pos| order.as_slice()[pos]))
    } else {
        None
    };
    let found = if opts.search_orderings { find_quasiconcave_ordering(&d, opts.max_search)? } else { None };

    let structure = structure_report(&d, &order);
    let best = constant_best_reply(&d);

    let zero = T::zero();
    let separable = structure.as_ref().ok().and_then(|s| s.separable.clone());
    let checks = Checks {
        saddle_exists_matches_enumeration: Consistency::of(exists == !saddles.is_empty()),
        symmetric_reduction: Consistency::of(saddles.is_empty() == symmetric.is_empty()),
        saddle_values_zero: Consistency::of(saddles.iter().all(|s| s.value.eq_tol(&zero, tol))),
        interchangeability: Consistency::of(strong.is_ok()),
        structure_agreement: Consistency::of(structure.is_ok()),
        quasiconcave_implies_saddle: Consistency::when(under_order || found.is_some(), || exists),
        induction_matches_enumeration: Consistency::when(induction.is_some(), || {
            matches!(&induction, Some(Ok(k)) if symmetric.contains(k))
        }),
        separable_quasiconcave: Consistency::when(separable.is_some(), || {
            is_quasiconcave_under(&d, &quasiconcave_order_from_h(separable.as_ref().unwrap()))
        }),
        separable_constant_best_reply: Consistency::when(separable.is_some(), || {
            let top = argmax_h(&d, separable.as_ref().unwrap());
            best.as_ref() == Some(&top) && symmetric == top
        }),
        fess_matches_saddles: match game {
            Game::Symmetric(g) => Consistency::of(fess_set(g) == symmetric),
            Game::Skew(_) => Consistency::NotApplicable,
        },
    };

    let structure = structure.ok().map(|s| StructureEntry {
        decreasing_differences: s.decreasing_differences,
        increasing_differences: s.increasing_differences,
        valuation: s.valuation,
        separable: s.separable.is_some(),
        exact_potential: s.potential.is_some(),
        h_order: s.separable.as_ref().map(|w| quasiconcave_order_from_h(w).to_one_based()),
        h: s.separable.map(|w| w.h.iter().map(Scalar::encode).collect()),
        potential: s.potential.map(|p| {
            p.potential.to_rows().iter().map(|r| r.iter().map(Scalar::encode).collect()).collect()
        }),
    });

    let fess = match game {
        Game::Symmetric(g) => Some(FessEntry {
            fess_set: one_based(&fess_set(g)),
            nash_set: one_based(&symmetric_pure_nash(g)),
            equivalence_classes: fess_equivalence_classes(g).iter().map(|c| one_based(c)).collect(),
        }),
        Game::Skew(_) => None,
    };

    Ok(AnalysisReport {
        game: identity,
        tolerance: (T::MODE == crate::scalar::NumericMode::Float).then_some(tol.epsilon()),
        order: order.to_one_based(),
        skew_valid: validate_skew(d.grid()),
        saddle_points: saddles
            .iter()
            .map(|s| SaddleEntry { row: s.row + 1, col: s.col + 1, value: s.value.encode() })
            .collect(),
        symmetric_saddle_actions: one_based(&symmetric),
        strong_solution: one_based(&strong.unwrap_or_default()),
        grps,
        saddle_exists: exists,
        quasiconcave: QuasiconcaveEntry {
            under_order,
            induction_saddle: induction.and_then(|r| r.ok()).map(|k| k + 1),
            searched: opts.search_orderings,
            found_ordering: found.map(|o| o.to_one_based()),
        },
        structure,
        best_reply: BestReplyEntry { constant: best.is_some(), set: best.map(|b| one_based(&b)) },
        fess,
        checks,
    })
}

/// Analyses a document. Input problems (a bad ordering, too many actions
/// for the requested search) are errors; broken cross-checks are reported
/// in [`AnalysisReport::checks`].
pub fn analyze(doc: &GameDocument, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    match &doc.game {
        AnyGame::Rational(g) => analyze_game(&doc.name, g, opts),
        AnyGame::Float(g) => analyze_game(&doc.name, g, opts),
    }
}

/// Re-reads a float document's grids with `tol`.
pub fn with_tolerance(doc: GameDocument, tol: Tolerance) -> GameDocument {
    let game = match doc.game {
        AnyGame::Float(g) => AnyGame::Float(g.with_tolerance(tol)),
        other => other,
    };
    GameDocument { name: doc.name, game }
}
