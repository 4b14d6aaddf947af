//! Parameterised generators for textbook symmetric games on finite grids.
//!
//! Grid families evaluate their payoffs exactly over the rationals. The one
//! exception is `public_goods` with the square-root benefit, which is
//! produced in float mode.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use crate::document::{AnyGame, Game, GameDocument};
use crate::error::{Error, Result};
use crate::game::{ActionSet, PayoffGrid, SkewGame, SymmetricGame};
use crate::scalar::{format_rational, parse_rational, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Rps,
    RpsB,
    Cournot,
    Bertrand,
    PublicGoods,
    CommonPool,
    MinEffort,
    Synergy,
    ArmsRace,
    Diamond,
    NashDemand,
    RentSeeking,
    Ratio,
    Dominance2x2,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Rps,
        Family::RpsB,
        Family::Cournot,
        Family::Bertrand,
        Family::PublicGoods,
        Family::CommonPool,
        Family::MinEffort,
        Family::Synergy,
        Family::ArmsRace,
        Family::Diamond,
        Family::NashDemand,
        Family::RentSeeking,
        Family::Ratio,
        Family::Dominance2x2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Rps => "rps",
            Family::RpsB => "rps_b",
            Family::Cournot => "cournot",
            Family::Bertrand => "bertrand",
            Family::PublicGoods => "public_goods",
            Family::CommonPool => "common_pool",
            Family::MinEffort => "min_effort",
            Family::Synergy => "synergy",
            Family::ArmsRace => "arms_race",
            Family::Diamond => "diamond",
            Family::NashDemand => "nash_demand",
            Family::RentSeeking => "rent_seeking",
            Family::Ratio => "ratio",
            Family::Dominance2x2 => "dominance_2x2",
        }
    }

    /// Families defined by a fixed matrix; they ignore the grid.
    pub fn is_fixed(self) -> bool {
        matches!(self, Family::Rps | Family::RpsB | Family::Dominance2x2)
    }

    /// Numeric parameters accepted by `FamilySpec::set`.
    fn numeric_keys(self) -> &'static [&'static str] {
        match self {
            Family::Cournot => &["b", "c"],
            Family::Bertrand => &["a", "b", "c"],
            Family::PublicGoods => &["c"],
            Family::CommonPool => &["e", "a", "b", "c"],
            Family::MinEffort => &["c"],
            Family::Synergy => &["c"],
            Family::ArmsRace => &["k", "c"],
            Family::Diamond => &["alpha", "c"],
            Family::NashDemand => &["s"],
            Family::RentSeeking => &["v"],
            Family::Rps | Family::RpsB | Family::Ratio | Family::Dominance2x2 => &[],
        }
    }

    /// Whether `c` is the coefficient of a cost function `c(x)`.
    fn has_cost_function(self) -> bool {
        matches!(
            self,
            Family::Cournot | Family::PublicGoods | Family::MinEffort | Family::ArmsRace | Family::Diamond
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown family {s:?}")))
    }
}

/// Shape of the cost function `c(x)`; the coefficient is the `c` parameter.
#[derive(Debug, Clone, PartialEq)]
pub enum Cost {
    Linear,
    Quadratic,
    /// One cost per grid point, in grid order.
    Table(Vec<Rational>),
}

/// Family-specific functional form selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Arms race `h(z) = k z`; the default.
    Linear,
    /// Arms race `h(z) = k z^3`. Odd but not concave, so the relative payoff
    /// game is not separable; kept as a negative example.
    Cubic,
    /// Public goods benefit `sqrt(x + y)`; the default.
    SqrtSum,
    /// Public goods benefit `(x + y)^2`.
    SquaredSum,
}

/// Inclusive uniform grid `lo, lo + step, ..., hi` with `count` points.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub lo: Rational,
    pub hi: Rational,
    pub count: usize,
}

impl GridSpec {
    pub fn new(lo: Rational, hi: Rational, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::Parameter("grid count must be at least 1".into()));
        }
        if lo > hi {
            return Err(Error::Parameter("grid requires lo <= hi".into()));
        }
        if count > 1 && lo == hi {
            return Err(Error::Parameter("grid with several points requires lo < hi".into()));
        }
        Ok(GridSpec { lo, hi, count })
    }

    /// Integer grid `lo..=hi`.
    pub fn integers(lo: i64, hi: i64) -> Self {
        GridSpec::new(Rational::from_int(lo), Rational::from_int(hi), (hi - lo + 1) as usize)
            .expect("valid integer range")
    }

    pub fn values(&self) -> Vec<Rational> {
        if self.count == 1 {
            return vec![self.lo.clone()];
        }
        let step = (self.hi.clone() - self.lo.clone()) / Rational::from_int(self.count as i64 - 1);
        (0..self.count)
            .map(|i| self.lo.clone() + step.clone() * Rational::from_int(i as i64))
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = Error;

    /// `lo:hi:count`
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, count] = parts.as_slice() else {
            return Err(Error::Parameter(format!("grid {s:?} is not lo:hi:count")));
        };
        let count = count
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("grid count {count:?} is not a positive integer")))?;
        GridSpec::new(parse_rational(lo)?, parse_rational(hi)?, count)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", format_rational(&self.lo), format_rational(&self.hi), self.count)
    }
}

type Defaults = (&'static [(&'static str, &'static str)], Cost, Option<Shape>, Option<GridSpec>);

/// A family plus its parameters and default grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<String, Rational>,
    pub cost: Cost,
    pub shape: Option<Shape>,
    /// `None` for fixed-matrix families.
    pub grid: Option<GridSpec>,
}

fn q(text: &str) -> Rational {
    parse_rational(text).expect("literal rational")
}

impl FamilySpec {
    /// Default parameters for `family`.
    pub fn defaults(family: Family) -> Self {
        let (params, cost, shape, grid): Defaults =
            match family {
                Family::Rps | Family::RpsB | Family::Dominance2x2 => (&[], Cost::Linear, None, None),
                // fESS at (b - c) / 2 = 4
                Family::Cournot => (&[("b", "10"), ("c", "2")], Cost::Linear, None, Some(GridSpec::integers(0, 10))),
                // fESS at a + c/2 + bc = 13
                Family::Bertrand => (
                    &[("a", "10"), ("b", "1/4"), ("c", "4")],
                    Cost::Linear,
                    None,
                    Some(GridSpec::integers(0, 20)),
                ),
                Family::PublicGoods => {
                    (&[("c", "1")], Cost::Linear, Some(Shape::SqrtSum), Some(GridSpec::integers(0, 10)))
                }
                // strictly positive grid: the boundary branch of the payoff is
                // not separable
                Family::CommonPool => (
                    &[("e", "10"), ("a", "5"), ("b", "1/4"), ("c", "1")],
                    Cost::Linear,
                    None,
                    Some(GridSpec::integers(1, 10)),
                ),
                Family::MinEffort => (&[("c", "1/2")], Cost::Linear, None, Some(GridSpec::integers(1, 3))),
                Family::Synergy => (&[("c", "4")], Cost::Linear, None, Some(GridSpec::integers(0, 6))),
                Family::ArmsRace => (
                    &[("k", "1"), ("c", "1")],
                    Cost::Linear,
                    Some(Shape::Linear),
                    Some(GridSpec::integers(0, 5)),
                ),
                Family::Diamond => {
                    (&[("alpha", "1"), ("c", "1")], Cost::Quadratic, None, Some(GridSpec::integers(0, 2)))
                }
                Family::NashDemand => (&[("s", "10")], Cost::Linear, None, Some(GridSpec::integers(0, 10))),
                Family::RentSeeking => (&[("v", "10")], Cost::Linear, None, Some(GridSpec::integers(0, 10))),
                Family::Ratio => (&[], Cost::Linear, None, Some(GridSpec::new(q("1"), q("2"), 3).unwrap())),
            };
        FamilySpec {
            family,
            params: params.iter().map(|(k, v)| (k.to_string(), q(v))).collect(),
            cost,
            shape,
            grid,
        }
    }

    /// Sets one `key=value` parameter. Besides the numeric parameters of the
    /// family, `cost=linear|quadratic`, `cost_table=v1,v2,...`,
    /// `h=linear|cubic` (arms race) and `g=sqrt|square` (public goods) are
    /// understood.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let family = self.family;
        let unknown = || Error::Parameter(format!("family {family} has no parameter {key:?}"));
        match key {
            "cost" if family.has_cost_function() => {
                self.cost = match value {
                    "linear" => Cost::Linear,
                    "quadratic" => Cost::Quadratic,
                    _ => return Err(Error::Parameter(format!("cost must be linear or quadratic, got {value:?}"))),
                }
            }
            "cost_table" if family.has_cost_function() => {
                let table = value.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
                self.cost = Cost::Table(table);
            }
            "h" if family == Family::ArmsRace => {
                self.shape = Some(match value {
                    "linear" => Shape::Linear,
                    "cubic" => Shape::Cubic,
                    _ => return Err(Error::Parameter(format!("h must be linear or cubic, got {value:?}"))),
                })
            }
            "g" if family == Family::PublicGoods => {
                self.shape = Some(match value {
                    "sqrt" => Shape::SqrtSum,
                    "square" => Shape::SquaredSum,
                    _ => return Err(Error::Parameter(format!("g must be sqrt or square, got {value:?}"))),
                })
            }
            _ if family.numeric_keys().contains(&key) => {
                self.params.insert(key.to_string(), parse_rational(value)?);
            }
            _ => return Err(unknown()),
        }
        Ok(())
    }

    fn param(&self, key: &str) -> Rational {
        self.params.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Generates the game on the family's default grid.
    pub fn generate(&self) -> Result<GameDocument> {
        match &self.grid {
            Some(grid) => generate(self, grid),
            None => generate(self, &GridSpec::integers(0, 0)),
        }
    }
}

/// Default specs for every family.
pub fn zoo_catalog() -> Vec<FamilySpec> {
    Family::ALL.into_iter().map(FamilySpec::defaults).collect()
}

fn fixed(name: &str, labels: &[&str], rows: &[&[i64]], skew: bool) -> Result<GameDocument> {
    let actions = ActionSet::new(labels.iter().map(|l| l.to_string()).collect(), None)?;
    let grid = PayoffGrid::from_ints(rows)?;
    let game = if skew {
        Game::Skew(SkewGame::new(actions, grid)?)
    } else {
        Game::Symmetric(SymmetricGame::new(actions, grid)?)
    };
    Ok(GameDocument { name: name.to_string(), game: AnyGame::Rational(game) })
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(what.to_string()))
    }
}

fn positive(r: &Rational) -> bool {
    r.is_positive()
}

/// Builds the family's game over `grid` (ignored by fixed-matrix families).
type CostFn = Box<dyn Fn(usize, &Rational) -> Rational>;

pub fn generate(spec: &FamilySpec, grid: &GridSpec) -> Result<GameDocument> {
    let family = spec.family;
    match family {
        Family::Rps => return fixed("rps", &["R", "P", "S"], &[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]], true),
        Family::RpsB => {
            return fixed(
                "rps_b",
                &["R", "P", "S", "B"],
                &[&[0, -1, 1, -1], &[1, 0, -1, -1], &[-1, 1, 0, -1], &[1, 1, 1, 0]],
                true,
            )
        }
        Family::Dominance2x2 => return fixed("dominance_2x2", &["A", "B"], &[&[4, 1], &[2, 0]], false),
        _ => {}
    }

    let xs = grid.values();
    let zero = Rational::from_int(0);
    let p = |k: &str| spec.param(k);
    let nonnegative_grid = xs[0] >= zero;

    let cost: CostFn = match &spec.cost {
        Cost::Linear => {
            let c = p("c");
            Box::new(move |_, x| c.clone() * x.clone())
        }
        Cost::Quadratic => {
            let c = p("c");
            Box::new(move |_, x| c.clone() * x.clone() * x.clone())
        }
        Cost::Table(table) => {
            require(table.len() == xs.len(), "cost_table length must equal the grid count")?;
            let table = table.clone();
            Box::new(move |i, _| table[i].clone())
        }
    };

    let exact = |f: &dyn Fn(usize, &Rational, &Rational) -> Rational| -> Result<GameDocument> {
        let grid = PayoffGrid::from_fn(xs.len(), |i, j| f(i, &xs[i], &xs[j]))?;
        let game = SymmetricGame::new(ActionSet::from_values(xs.clone())?, grid)?;
        Ok(GameDocument { name: family.name().to_string(), game: AnyGame::Rational(Game::Symmetric(game)) })
    };

    match family {
        Family::Cournot => {
            let b = p("b");
            require(positive(&b), "cournot requires b > 0")?;
            exact(&|i, x, y| x.clone() * (b.clone() - x.clone() - y.clone()) - cost(i, x))
        }
        Family::Bertrand => {
            let (a, b, c) = (p("a"), p("b"), p("c"));
            require(positive(&a), "bertrand requires a > 0")?;
            require(b >= zero && b < q("1/2"), "bertrand requires 0 <= b < 1/2")?;
            exact(&|_, x, y| (x.clone() - c.clone()) * (a.clone() + b.clone() * y.clone() - x.half()))
        }
        Family::PublicGoods => {
            require(nonnegative_grid, "public_goods requires a nonnegative grid")?;
            match spec.shape.unwrap_or(Shape::SqrtSum) {
                Shape::SquaredSum => exact(&|i, x, y| {
                    let s = x.clone() + y.clone();
                    s.clone() * s - cost(i, x)
                }),
                _ => {
                    let fx: Vec<f64> = xs.iter().map(Scalar::to_f64).collect();
                    let grid = PayoffGrid::from_fn(xs.len(), |i, j| {
                        (fx[i] + fx[j]).sqrt() - cost(i, &xs[i]).to_f64()
                    })?;
                    let labels = xs.iter().map(format_rational).collect();
                    let game = SymmetricGame::new(ActionSet::new(labels, Some(fx))?, grid)?;
                    Ok(GameDocument {
                        name: family.name().to_string(),
                        game: AnyGame::Float(Game::Symmetric(game)),
                    })
                }
            }
        }
        Family::CommonPool => {
            let (e, a, b, c) = (p("e"), p("a"), p("b"), p("c"));
            require(
                positive(&e) && positive(&a) && positive(&b) && positive(&c),
                "common_pool requires e, a, b, c > 0",
            )?;
            require(nonnegative_grid && grid.hi <= e, "common_pool requires a grid inside [0, e]")?;
            exact(&|_, x, y| {
                let outside = c.clone() * (e.clone() - x.clone());
                if x > &zero && y > &zero {
                    let total = x.clone() + y.clone();
                    let pool = a.clone() * total.clone() - b.clone() * total.clone() * total.clone();
                    outside + x.clone() / total * pool
                } else {
                    c.clone() * e.clone()
                }
            })
        }
        Family::MinEffort => exact(&|i, x, y| x.clone().min(y.clone()) - cost(i, x)),
        Family::Synergy => {
            let c = p("c");
            require(positive(&c), "synergy requires c > 0")?;
            require(nonnegative_grid, "synergy requires a nonnegative grid")?;
            exact(&|_, x, y| x.clone() * (c.clone() + y.clone() - x.clone()))
        }
        Family::ArmsRace => {
            let k = p("k");
            let cubic = spec.shape == Some(Shape::Cubic);
            exact(&|i, x, y| {
                let z = x.clone() - y.clone();
                let h = if cubic { k.clone() * z.clone() * z.clone() * z } else { k.clone() * z };
                h - cost(i, x)
            })
        }
        Family::Diamond => {
            let alpha = p("alpha");
            require(positive(&alpha), "diamond requires alpha > 0")?;
            exact(&|i, x, y| alpha.clone() * x.clone() * y.clone() - cost(i, x))
        }
        Family::NashDemand => {
            let s = p("s");
            require(positive(&s), "nash_demand requires s > 0")?;
            require(nonnegative_grid, "nash_demand requires a nonnegative grid")?;
            exact(&|_, x, y| if x.clone() + y.clone() <= s { x.clone() } else { zero.clone() })
        }
        Family::RentSeeking => {
            let v = p("v");
            require(positive(&v), "rent_seeking requires v > 0")?;
            require(nonnegative_grid, "rent_seeking requires a nonnegative grid")?;
            exact(&|_, x, y| {
                let total = x.clone() + y.clone();
                if total == zero {
                    // nobody bids: no one wins, and the bid x = 0 costs nothing
                    zero.clone()
                } else {
                    x.clone() / total * v.clone() - x.clone()
                }
            })
        }
        Family::Ratio => {
            if xs.iter().any(|x| x == &zero) {
                return Err(Error::Domain("ratio game is undefined on a grid containing 0".into()));
            }
            if !positive(&xs[0]) {
                return Err(Error::Domain("ratio game requires a positive grid".into()));
            }
            exact(&|_, x, y| x.clone() / y.clone())
        }
        Family::Rps | Family::RpsB | Family::Dominance2x2 => unreachable!("handled above"),
    }
}
