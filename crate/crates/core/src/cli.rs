//! The `saddlescope` command line.
//!
//! Exit codes: 0 on success, 1 on bad input or usage, 2 when an analysis
//! cross-check fails.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::document::{parse_game, serialize_game, AnyGame, Game, GameDocument};
use crate::error::Error;
use crate::game::{relative_payoff, SkewGame};
use crate::report::{analyze, AnalysisReport, AnalyzeOptions};
use crate::saddle::{find_quasiconcave_ordering, is_grps, is_quasiconcave_under, saddle_exists, ActionOrdering};
use crate::scalar::{Scalar, Tolerance};
use crate::structure::{find_exact_potential, separable_decomposition};
use crate::zoo::{generate, Family, FamilySpec, GridSpec};
use crate::fess::fess_set;

pub const TOLERANCE_ENV: &str = "SADDLESCOPE_TOLERANCE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_LAW: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "saddlescope", version, about = "Pure saddle points and fESS of symmetric games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Grps,
    Saddle,
    Quasiconcave,
    Separable,
    Potential,
    Fess,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full analysis report for one or more game documents.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Action enumeration as 1-based indices, e.g. 3,1,2.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        /// Search all orderings for one under which the game is quasiconcave.
        #[arg(long)]
        search_orderings: bool,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Analyse several files concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Write a game document for a named family.
    Generate {
        family: String,
        /// key=value, repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        /// lo:hi:count
        #[arg(long)]
        grid: Option<String>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Write the relative payoff game of a document as a skew document.
    Transform {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Probe a single property.
    Check {
        #[arg(value_enum)]
        property: Property,
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_law_violation() { EXIT_LAW } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

fn resolve_tolerance(flag: Option<f64>) -> Result<Tolerance, Failure> {
    if let Some(eps) = flag {
        return Ok(Tolerance::new(eps)?);
    }
    match std::env::var(TOLERANCE_ENV) {
        Ok(text) => {
            let eps: f64 = text
                .trim()
                .parse()
                .map_err(|_| input_error(format!("{TOLERANCE_ENV}={text:?} is not a number")))?;
            Ok(Tolerance::new(eps)?)
        }
        Err(_) => Ok(Tolerance::default()),
    }
}

fn read_document(path: &Path, tol: Tolerance) -> Result<GameDocument, Failure> {
    let bytes = std::fs::read(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    parse_game(&bytes, tol).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| input_error(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| input_error(e.to_string())),
    }
}

fn ordering(order: Option<Vec<usize>>) -> Result<Option<ActionOrdering>, Failure> {
    order.map(|o| ActionOrdering::from_one_based(&o)).transpose().map_err(Failure::from)
}

fn analyze_one(path: &Path, tol: Tolerance, opts: &AnalyzeOptions) -> Result<AnalysisReport, Failure> {
    let doc = read_document(path, tol)?;
    analyze(&doc, opts).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn run_analyze(
    files: Vec<PathBuf>,
    opts: AnalyzeOptions,
    tol: Tolerance,
    format: Format,
    jobs: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let results: Vec<Result<AnalysisReport, Failure>> = if jobs > 1 && files.len() > 1 {
        let chunk = files.len().div_ceil(jobs);
        std::thread::scope(|s| {
            let handles: Vec<_> = files
                .chunks(chunk)
                .map(|batch| {
                    let opts = &opts;
                    s.spawn(move || batch.iter().map(|f| analyze_one(f, tol, opts)).collect::<Vec<_>>())
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("analysis thread panicked")).collect()
        })
    } else {
        files.iter().map(|f| analyze_one(f, tol, &opts)).collect()
    };

    let mut code = EXIT_OK;
    for result in results {
        match result {
            Ok(report) => {
                let text = match format {
                    Format::Text => report.to_text(),
                    Format::Json => report.to_json(),
                };
                let _ = out.write_all(text.as_bytes());
                let violations = report.checks.violations();
                if !violations.is_empty() {
                    let _ = writeln!(err, "error: {}: violated checks: {}", report.game.name, violations.join(", "));
                    code = code.max(EXIT_LAW);
                }
            }
            Err(f) => {
                let _ = writeln!(err, "error: {}", f.message);
                code = code.max(f.code);
            }
        }
    }
    code
}

fn run_generate(
    family: &str,
    params: &[String],
    grid: Option<&str>,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let family: Family = family.parse()?;
    let mut spec = FamilySpec::defaults(family);
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| input_error(format!("--param {p:?} is not key=value")))?;
        spec.set(k.trim(), v.trim())?;
    }
    let grid = match grid {
        Some(g) => g.parse::<GridSpec>()?,
        None => spec.grid.clone().unwrap_or_else(|| GridSpec::integers(0, 0)),
    };
    let doc = generate(&spec, &grid)?;
    write_output(output, &serialize_game(&doc), out)
}

fn transform_game<T: Scalar>(game: &Game<T>) -> (SkewGame<T>, bool) {
    match game {
        Game::Symmetric(g) => (relative_payoff(g), false),
        Game::Skew(_) => (relative_payoff(&game.as_symmetric()), true),
    }
}

fn run_transform(path: &Path, output: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let doc = read_document(path, resolve_tolerance(None)?)?;
    let (game, was_skew) = match &doc.game {
        AnyGame::Rational(g) => {
            let (d, s) = transform_game(g);
            (AnyGame::Rational(Game::Skew(d)), s)
        }
        AnyGame::Float(g) => {
            let (d, s) = transform_game(g);
            (AnyGame::Float(Game::Skew(d)), s)
        }
    };
    if was_skew {
        let _ = writeln!(err, "warning: {} is already skew; emitting its doubled grid", path.display());
    }
    let result = GameDocument { name: format!("{}_relative", doc.name), game };
    write_output(output, &serialize_game(&result), out)
}

fn check_game<T: Scalar>(
    property: Property,
    game: &Game<T>,
    order: Option<ActionOrdering>,
) -> Result<String, Failure> {
    let d = game.skew();
    let m = d.size();
    let labels = |v: &[usize]| v.iter().map(|&i| d.actions().label(i).to_string()).collect::<Vec<_>>().join(" ");
    let order = match order {
        Some(o) if o.len() != m => return Err(Error::BadOrdering(m).into()),
        Some(o) => o,
        None => ActionOrdering::identity(m),
    };
    Ok(match property {
        Property::Grps => format!("grps: {}\n", is_grps(&d)),
        Property::Saddle => format!("saddle: {}\n", saddle_exists(&d)),
        Property::Quasiconcave => {
            let mut s = format!("quasiconcave: {}\n", is_quasiconcave_under(&d, &order));
            if m <= crate::saddle::DEFAULT_MAX_SEARCH {
                let found = find_quasiconcave_ordering(&d, crate::saddle::DEFAULT_MAX_SEARCH)?;
                s += &format!("ordering: {}\n", found.map_or("none".to_string(), |o| labels(o.as_slice())));
            }
            s
        }
        Property::Separable => match separable_decomposition(&d) {
            Some(w) => format!(
                "separable: true\nh: {}\n",
                w.h.iter().map(|v| v.encode().to_string().replace('"', "")).collect::<Vec<_>>().join(" ")
            ),
            None => "separable: false\n".to_string(),
        },
        Property::Potential => format!("potential: {}\n", find_exact_potential(&d).is_some()),
        Property::Fess => match game {
            Game::Symmetric(g) => format!("fess: {}\n", labels(&fess_set(g))),
            Game::Skew(_) => return Err(input_error("fess requires a symmetric game document")),
        },
    })
}

fn run_check(
    property: Property,
    path: &Path,
    order: Option<Vec<usize>>,
    tolerance: Option<f64>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let doc = read_document(path, resolve_tolerance(tolerance)?)?;
    let order = ordering(order)?;
    let text = match &doc.game {
        AnyGame::Rational(g) => check_game(property, g, order)?,
        AnyGame::Float(g) => check_game(property, g, order)?,
    };
    out.write_all(text.as_bytes()).map_err(|e| input_error(e.to_string()))
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };

    let result = match cli.command {
        Command::Analyze { files, order, search_orderings, tolerance, format, jobs } => {
            let setup = resolve_tolerance(tolerance).and_then(|tol| Ok((tol, ordering(order)?)));
            match setup {
                Ok((tol, order)) => {
                    let opts = AnalyzeOptions { order, search_orderings, ..Default::default() };
                    return run_analyze(files, opts, tol, format, jobs.max(1), out, err);
                }
                Err(f) => Err(f),
            }
        }
        Command::Generate { family, params, grid, output } => {
            run_generate(&family, &params, grid.as_deref(), output.as_deref(), out)
        }
        Command::Transform { file, output } => run_transform(&file, output.as_deref(), out, err),
        Command::Check { property, file, order, tolerance } => run_check(property, &file, order, tolerance, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            if f.code == EXIT_INPUT {
                let _ = writeln!(err, "run `saddlescope --help` for usage");
            }
            f.code
        }
    }
}
