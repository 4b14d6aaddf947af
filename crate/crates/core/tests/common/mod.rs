//! Brute-force oracles over plain integer matrices, written without the
//! library so they can referee it.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use saddlescope::prelude::*;

pub type Matrix = Vec<Vec<i64>>;

/// Skew matrix from its strict upper triangle, read row by row.
pub fn skew_from_upper(m: usize, upper: &[i64]) -> Matrix {
    let mut d = vec![vec![0; m]; m];
    let mut it = upper.iter();
    for i in 0..m {
        for j in i + 1..m {
            let v = *it.next().expect("upper triangle too short");
            d[i][j] = v;
            d[j][i] = -v;
        }
    }
    d
}

pub fn random_skew<R: Rng>(rng: &mut R, m: usize, lo: i64, hi: i64) -> Matrix {
    let upper: Vec<i64> = (0..m * (m.saturating_sub(1)) / 2).map(|_| rng.gen_range(lo..=hi)).collect();
    skew_from_upper(m, &upper)
}

pub fn random_square<R: Rng>(rng: &mut R, m: usize, lo: i64, hi: i64) -> Matrix {
    (0..m).map(|_| (0..m).map(|_| rng.gen_range(lo..=hi)).collect()).collect()
}

pub fn random_permutation<R: Rng>(rng: &mut R, m: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..m).collect();
    p.shuffle(rng);
    p
}

pub fn skew_game(d: &Matrix) -> SkewGame<Rational> {
    SkewGame::from_grid(PayoffGrid::from_ints(d).expect("square")).expect("skew")
}

pub fn symmetric_game(pi: &Matrix) -> SymmetricGame<Rational> {
    SymmetricGame::from_grid(PayoffGrid::from_ints(pi).expect("square"))
}

/// Cells that are simultaneously a column maximum and a row minimum.
pub fn oracle_saddles(d: &Matrix) -> Vec<(usize, usize)> {
    let m = d.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let col_max = (0..m).map(|r| d[r][j]).max().unwrap();
            let row_min = d[i].iter().copied().min().unwrap();
            if d[i][j] == col_max && d[i][j] == row_min {
                out.push((i, j));
            }
        }
    }
    out
}

/// Diagonal saddle actions from the cell list.
pub fn oracle_symmetric_saddles(d: &Matrix) -> Vec<usize> {
    oracle_saddles(d).into_iter().filter(|(i, j)| i == j).map(|(i, _)| i).collect()
}

/// Finite-population ESS straight from the payoff matrix.
pub fn oracle_fess(pi: &Matrix) -> Vec<usize> {
    let m = pi.len();
    (0..m).filter(|&x| (0..m).all(|y| pi[x][y] >= pi[y][x])).collect()
}

/// Single-peaked: nondecreasing up to the first maximum, nonincreasing after.
pub fn single_peaked(seq: &[i64]) -> bool {
    let Some(max) = seq.iter().max() else { return true };
    let p = seq.iter().position(|v| v == max).unwrap();
    seq[..=p].windows(2).all(|w| w[0] <= w[1]) && seq[p..].windows(2).all(|w| w[0] >= w[1])
}

/// Every column single-peaked when rows are listed in `ord`.
pub fn oracle_quasiconcave(d: &Matrix, ord: &[usize]) -> bool {
    (0..d.len()).all(|j| single_peaked(&ord.iter().map(|&r| d[r][j]).collect::<Vec<_>>()))
}

/// `d(x, y) = h(x) - h(y)` for some `h` iff every 3-cycle sums to zero.
pub fn oracle_separable(d: &Matrix) -> bool {
    let m = d.len();
    (0..m).all(|x| (0..m).all(|y| (0..m).all(|z| d[x][y] + d[y][z] + d[z][x] == 0)))
}

/// Monderer-Shapley 4-cycle test for the two-player game with
/// `u1(a, b) = d(a, b)` and `u2(a, b) = d(b, a)`.
pub fn oracle_potential(d: &Matrix) -> bool {
    let m = d.len();
    let u1 = |a: usize, b: usize| d[a][b];
    let u2 = |a: usize, b: usize| d[b][a];
    for a in 0..m {
        for a2 in 0..m {
            for b in 0..m {
                for b2 in 0..m {
                    let cycle = (u1(a2, b) - u1(a, b)) + (u2(a2, b2) - u2(a2, b)) + (u1(a, b2) - u1(a2, b2))
                        + (u2(a, b) - u2(a, b2));
                    if cycle != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Increasing (`sign = 1`) or decreasing (`sign = -1`) differences under `ord`.
pub fn oracle_differences(d: &Matrix, ord: &[usize], sign: i64) -> bool {
    let m = d.len();
    for xl in 0..m {
        for xh in xl + 1..m {
            for yl in 0..m {
                for yh in yl + 1..m {
                    let (xl, xh, yl, yh) = (ord[xl], ord[xh], ord[yl], ord[yh]);
                    let upper = d[xh][yh] - d[xl][yh];
                    let lower = d[xh][yl] - d[xl][yl];
                    if sign * (upper - lower) < 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn relative(pi: &Matrix) -> Matrix {
    let m = pi.len();
    (0..m).map(|x| (0..m).map(|y| pi[x][y] - pi[y][x]).collect()).collect()
}

/// A skew grid quasiconcave in its natural order. Half the draws are
/// `f(h(x) - h(y))` for a single-peaked `h` and an odd nondecreasing `f`;
/// the rest are uniform skew grids kept only if they pass the oracle.
pub fn random_quasiconcave_skew<R: Rng>(rng: &mut R, m: usize) -> Matrix {
    loop {
        let d = if rng.gen_bool(0.5) {
            let mut h: Vec<i64> = (0..m).map(|_| rng.gen_range(-6..=6)).collect();
            // single-peaked h keeps every column d(., y) = f(h(.) - h(y)) single-peaked
            let peak = rng.gen_range(0..m);
            h[..peak].sort_unstable();
            h[peak..].sort_unstable_by(|a, b| b.cmp(a));
            let f = match rng.gen_range(0..3) {
                0 => |t: i64| t,
                1 => |t: i64| t * t * t,
                _ => |t: i64| t.signum(),
            };
            let mut d = vec![vec![0; m]; m];
            for x in 0..m {
                for y in 0..m {
                    d[x][y] = f(h[x] - h[y]);
                }
            }
            d
        } else {
            random_skew(rng, m, -3, 3)
        };
        if oracle_quasiconcave(&d, &(0..m).collect::<Vec<_>>()) {
            return d;
        }
    }
}

pub const REFERENCE_GAMES: [&str; 3] = ["rps", "rps_b", "dominance_2x2"];

pub fn test_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn fixture(name: &str) -> String {
    test_dir().join("fixtures").join(format!("{name}.json")).to_string_lossy().into_owned()
}

pub fn golden(name: &str) -> Vec<u8> {
    let path = test_dir().join("golden").join(name);
    std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub struct Output {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

/// Runs the built binary with a clean tolerance environment plus `env`.
pub fn saddlescope(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = std::process::Command::new(env!("CARGO_BIN_EXE_saddlescope"));
    cmd.args(args).env_remove("SADDLESCOPE_TOLERANCE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Output {
        code: out.status.code().expect("exit code"),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

/// `(golden file, arguments)` for every byte-compared invocation.
pub fn golden_cases() -> Vec<(String, Vec<String>)> {
    let mut cases = Vec::new();
    for g in REFERENCE_GAMES {
        let f = fixture(g);
        let s = |v: &[&str]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>();
        cases.push((format!("analyze_{g}.txt"), s(&["analyze", &f, "--search-orderings"])));
        cases.push((format!("analyze_{g}.json"), s(&["analyze", &f, "--search-orderings", "--format", "json"])));
        cases.push((format!("transform_{g}.json"), s(&["transform", &f])));
        cases.push((format!("../fixtures/{g}.json"), s(&["generate", g])));
    }
    cases
}

/// Input errors that must exit with status 1.
pub fn input_error_cases() -> Vec<Vec<String>> {
    let s = |v: &[&str]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>();
    vec![
        s(&["analyze", &fixture("bad_diagonal")]),
        s(&["analyze", &fixture("malformed")]),
        s(&["analyze", &fixture("does_not_exist")]),
        s(&["analyze", &fixture("rps"), "--order", "1,2"]),
        s(&["analyze", &fixture("rps"), "--order", "1,1,2"]),
        s(&["analyze", &fixture("rps"), "--tolerance", "-1"]),
        s(&["generate", "chess"]),
        s(&["generate", "cournot", "--param", "b"]),
        s(&["generate", "cournot", "--param", "zeta=3"]),
        s(&["generate", "ratio", "--grid", "0:2:3"]),
        s(&["check", "fess", &fixture("rps")]),
        s(&["check", "nonsense", &fixture("rps")]),
        s(&["frobnicate"]),
    ]
}
