use saddlescope::prelude::*;
use saddlescope::scalar::parse_rational;

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn rational(doc: &GameDocument) -> SymmetricGame<Rational> {
    match &doc.game {
        AnyGame::Rational(Game::Symmetric(g)) => g.clone(),
        other => panic!("expected rational symmetric game, got {other:?}"),
    }
}

fn family(name: &str, params: &[(&str, &str)], grid: Option<&str>) -> GameDocument {
    let fam: Family = name.parse().unwrap();
    let mut spec = FamilySpec::defaults(fam);
    for (k, v) in params {
        spec.set(k, v).unwrap();
    }
    let grid: GridSpec = match grid {
        Some(g) => g.parse().unwrap(),
        None => spec.grid.clone().unwrap(),
    };
    generate(&spec, &grid).unwrap()
}

/// fESS by definition over an explicit payoff function.
fn fess_by_definition(xs: &[Rational], pi: impl Fn(&Rational, &Rational) -> Rational) -> Vec<usize> {
    (0..xs.len())
        .filter(|&i| xs.iter().all(|y| pi(&xs[i], y) >= pi(y, &xs[i])))
        .collect()
}

fn cycle_separable<T: Scalar>(d: &SkewGame<T>) -> bool {
    let m = d.size();
    let tol = d.tolerance();
    (0..m).all(|x| {
        (0..m).all(|y| {
            (0..m).all(|z| {
                let s = d.delta(x, y).clone() + d.delta(y, z).clone() + d.delta(z, x).clone();
                s.eq_tol(&T::zero(), tol)
            })
        })
    })
}

fn ints(lo: i64, hi: i64) -> Vec<Rational> {
    (lo..=hi).map(Rational::from_int).collect()
}

#[test]
fn cournot_fess_is_argmax_of_h() {
    let g = rational(&family("cournot", &[("b", "10"), ("c", "2")], Some("0:10:11")));
    // delta(x, y) = h(x) - h(y) with h(x) = (b - c) x - x^2
    let h: Vec<i64> = (0..=10).map(|x| 8 * x - x * x).collect();
    let best = *h.iter().max().unwrap();
    let argmax: Vec<usize> = (0..h.len()).filter(|&i| h[i] == best).collect();
    assert_eq!(argmax, vec![4]);
    assert_eq!(fess_set(&g), argmax);
    assert_eq!(g.payoff(4, 4), &q("0"));
    let w = separable_decomposition(&relative_payoff(&g)).unwrap();
    let expected: Vec<Rational> = h.iter().map(|&v| Rational::from_int(v)).collect();
    assert_eq!(w.h, expected);
}

#[test]
fn rent_seeking_fess_is_five() {
    let g = rational(&family("rent_seeking", &[("v", "10")], Some("0:10:11")));
    let xs = ints(0, 10);
    let v = q("10");
    let pi = |x: &Rational, y: &Rational| {
        let t = x.clone() + y.clone();
        if t == q("0") {
            q("0")
        } else {
            v.clone() * x.clone() / t - x.clone()
        }
    };
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in xs.iter().enumerate() {
            assert_eq!(g.payoff(i, j), &pi(x, y));
        }
    }
    assert_eq!(fess_by_definition(&xs, pi), vec![5]);
    assert_eq!(fess_set(&g), vec![5]);
    let d = relative_payoff(&g);
    assert!(is_quasiconcave_under(&d, &ActionOrdering::identity(11)));
}

#[test]
fn min_effort_fess_is_lowest_action() {
    for (c, grid) in [("1/2", "1:3:3"), ("1/4", "0:5:6"), ("3/4", "2:4:5")] {
        let g = rational(&family("min_effort", &[("c", c)], Some(grid)));
        assert_eq!(fess_set(&g), vec![0], "c={c} grid={grid}");
        assert!(symmetric_pure_nash(&g).len() > 1, "coordination game has several equilibria");
    }
}

#[test]
fn nash_demand_fess_and_classes() {
    let doc = family("nash_demand", &[("s", "10")], Some("0:10:11"));
    let g = rational(&doc);
    let xs = ints(0, 10);
    let pi = |x: &Rational, y: &Rational| if x.clone() + y.clone() <= q("10") { x.clone() } else { q("0") };
    let expected: Vec<usize> = (5..=10).collect();
    assert_eq!(fess_by_definition(&xs, pi), expected);
    assert_eq!(fess_set(&g), expected);
    assert!(fess_equivalence_classes(&g).len() > 1);
}

#[test]
fn ratio_game_is_quasiconcave_but_not_separable() {
    let g = rational(&family("ratio", &[], None));
    let d = relative_payoff(&g);
    assert!(!cycle_separable(&d));
    assert!(separable_decomposition(&d).is_none());
    assert!(find_quasiconcave_ordering(&d, DEFAULT_MAX_SEARCH).unwrap().is_some());
    assert!(saddle_exists(&d));
    for grid in ["1:4:7", "1/2:3:6"] {
        let d = relative_payoff(&rational(&family("ratio", &[], Some(grid))));
        assert!(separable_decomposition(&d).is_none(), "{grid}");
        assert!(find_quasiconcave_ordering(&d, DEFAULT_MAX_SEARCH).unwrap().is_some(), "{grid}");
    }
}

#[test]
fn additively_separable_families() {
    let cases: &[(&str, &[(&str, &str)])] = &[
        ("cournot", &[]),
        ("cournot", &[("cost", "quadratic")]),
        ("bertrand", &[]),
        ("public_goods", &[("g", "square")]),
        ("min_effort", &[]),
        ("synergy", &[]),
        ("diamond", &[]),
        ("common_pool", &[]),
        ("arms_race", &[]),
        ("arms_race", &[("cost", "quadratic")]),
    ];
    for (name, params) in cases {
        let d = relative_payoff(&rational(&family(name, params, None)));
        assert!(cycle_separable(&d), "{name} {params:?}");
        assert!(separable_decomposition(&d).is_some(), "{name} {params:?}");
        assert!(find_exact_potential(&d).is_some(), "{name} {params:?}");
    }
    // the square-root public good is only available in float mode
    let doc = family("public_goods", &[], None);
    let AnyGame::Float(Game::Symmetric(g)) = &doc.game else { panic!("expected float game") };
    let d = relative_payoff(g);
    assert!(cycle_separable(&d));
    assert!(separable_decomposition(&d).is_some());
}

#[test]
fn cubic_arms_race_is_not_separable() {
    let d = relative_payoff(&rational(&family("arms_race", &[("h", "cubic")], None)));
    assert!(!cycle_separable(&d));
    assert!(separable_decomposition(&d).is_none());
}

#[test]
fn bertrand_and_synergy_fess_match_analytic_points() {
    // bertrand: h(x) = (a + c/2 + b c) x - x^2 / 2, peak at 13
    let g = rational(&family("bertrand", &[], None));
    let xs = ints(0, 20);
    let (a, b, c) = (q("10"), q("1/4"), q("4"));
    let pi = |x: &Rational, y: &Rational| {
        (x.clone() - c.clone()) * (a.clone() + b.clone() * y.clone() - x.clone() / q("2"))
    };
    assert_eq!(fess_by_definition(&xs, pi), vec![13]);
    assert_eq!(fess_set(&g), vec![13]);

    let g = rational(&family("synergy", &[], None));
    let xs = ints(0, 6);
    let pi = |x: &Rational, y: &Rational| x.clone() * (q("4") + y.clone() - x.clone());
    assert_eq!(fess_by_definition(&xs, pi), vec![2]);
    assert_eq!(fess_set(&g), vec![2]);
}

#[test]
fn common_pool_fess_is_argmax_of_h() {
    let g = rational(&family("common_pool", &[], None));
    // h(x) = (a - c) x - b x^2 = 4x - x^2 / 4 on {1..10}
    let h: Vec<Rational> = ints(1, 10).iter().map(|x| q("4") * x.clone() - x.clone() * x.clone() / q("4")).collect();
    let best = h.iter().max().unwrap().clone();
    let argmax: Vec<usize> = (0..h.len()).filter(|&i| h[i] == best).collect();
    assert_eq!(argmax, vec![7]);
    assert_eq!(fess_set(&g), argmax);
}

#[test]
fn every_family_is_consistent() {
    for spec in zoo_catalog() {
        let doc = spec.generate().unwrap();
        let d = match &doc.game {
            AnyGame::Rational(g) => {
                let d = g.skew();
                assert!(validate_skew(d.grid()));
                saddle_exists(&d)
            }
            AnyGame::Float(g) => saddle_exists(&g.skew()),
        };
        let analysis = saddlescope::report::analyze(&doc, &Default::default()).unwrap();
        assert!(analysis.is_consistent(), "{}", spec.family);
        assert_eq!(analysis.saddle_exists, d);
    }
}

#[test]
fn generation_is_deterministic() {
    for spec in zoo_catalog() {
        let a = saddlescope::document::serialize_game(&spec.generate().unwrap());
        let b = saddlescope::document::serialize_game(&spec.generate().unwrap());
        assert_eq!(a, b);
    }
}
