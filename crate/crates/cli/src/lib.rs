//! Command-line front end for `bkr-core`: formula parsing, the `bkr`
//! commands, and text/JSON run reports.

pub mod parallel;
pub mod parser;
pub mod report;
pub mod selftest;

use std::io::{Read, Write};
use std::time::Instant;

use bkr_core::{
    convert, lookup_sem, DecisionError, Engine, Fork, Method, Poly, QueryStats, RawFormula, Sequential, SignAssignment,
    SignDetError,
};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use parallel::Rayon;
pub use parser::{parse_formula, parse_poly, print_formula, ParseError};
pub use report::{report_stats, MethodChoice, Quantifier, RunReport};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "bkr", version, about = "Exact decision procedure for univariate real arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Sign-determination method; `both` cross-checks the two.
    #[arg(long, value_enum, global = true, default_value_t = MethodChoice::Bkr)]
    pub method: MethodChoice,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Print query counts and timing in text output.
    #[arg(long, global = true)]
    pub stats: bool,
    /// Run independent subproblems and recursion branches on a thread pool.
    #[arg(long, global = true)]
    pub parallel: bool,
    /// Allow the naive method on more than 16 factors.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide a quantified formula. Exit status 0 means true, 1 false.
    #[command(group(ArgGroup::new("quantifier").required(true).args(["forall", "exists"])))]
    Decide {
        #[arg(long)]
        forall: bool,
        #[arg(long)]
        exists: bool,
        /// Formula text, `@path` to read a file, or `-` for stdin.
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// List every sign assignment the formula's polynomials realize.
    Signs {
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// List the sign vectors of `qs` at the real roots of `p`.
    SignsAtRoots {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Semicolon-separated polynomials.
        #[arg(long, allow_hyphen_values = true)]
        qs: String,
    },
    /// Cross-check both methods against known roots on random instances.
    Selftest {
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Query counts and timings of both methods on products of 1..=n linear factors.
    Bench {
        #[arg(long, default_value_t = 8)]
        max_factors: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<DecisionError> for Failure {
    fn from(e: DecisionError) -> Self {
        match e {
            DecisionError::SignDet(SignDetError::NTooLarge { n, limit }) => Failure::Usage(format!(
                "naive method refuses {n} factors (limit {limit}); pass --force to run it anyway"
            )),
            DecisionError::SignDet(e @ (SignDetError::NotCoprime { .. } | SignDetError::ZeroP)) => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Internal(e.to_string()),
        }
    }
}

impl From<SignDetError> for Failure {
    fn from(e: SignDetError) -> Self {
        DecisionError::from(e).into()
    }
}

/// Runs a parsed command line, writing the report to `out` and diagnostics
/// to `err`. Returns the process exit status.
pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    let (report, code) = match &cli.command {
        Command::Decide { forall, formula, .. } => {
            let quantifier = if *forall { Quantifier::Forall } else { Quantifier::Exists };
            decide(cli, quantifier, &read_formula(formula, stdin)?)?
        }
        Command::Signs { formula } => signs(cli, &read_formula(formula, stdin)?)?,
        Command::SignsAtRoots { p, qs } => signs_at_roots(cli, p, qs)?,
        Command::Selftest { cases, seed } => {
            let summary = selftest::run(*cases, *seed, cli.force);
            let _ = write!(out, "{summary}");
            return Ok(if summary.failures.is_empty() { EXIT_TRUE } else { EXIT_INTERNAL });
        }
        Command::Bench { max_factors } => {
            let _ = write!(out, "{}", selftest::bench(*max_factors));
            return Ok(EXIT_TRUE);
        }
    };
    let text = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(cli.stats),
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Internal(format!("writing output: {e}")))?;
    Ok(code)
}

fn read_formula(arg: &str, stdin: &mut dyn Read) -> Result<RawFormula, Failure> {
    let src = if arg == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        s
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?
    } else {
        arg.to_string()
    };
    Ok(parse_formula(src.trim())?)
}

fn engine<F: Fork>(cli: &Cli, method: Method, fork: F) -> Engine<F> {
    let engine = Engine::new(method).with_fork(fork);
    if cli.force {
        engine.with_naive_limit(usize::MAX)
    } else {
        engine
    }
}

struct Determined {
    assignments: Vec<SignAssignment>,
    factor_degrees: Vec<usize>,
    runs: Vec<(Method, QueryStats)>,
}

/// Realizable sign vectors of `polys` under every selected method; fails on
/// divergence between methods.
fn determine(cli: &Cli, polys: &[Poly]) -> Result<Determined, Failure> {
    let mut result: Option<Determined> = None;
    for &method in cli.method.methods() {
        let mut stats = QueryStats::default();
        let found = if cli.parallel {
            engine(cli, method, Rayon).find_consistent_signs(polys, &mut stats)?
        } else {
            engine(cli, method, Sequential).find_consistent_signs(polys, &mut stats)?
        };
        match &mut result {
            None => {
                result = Some(Determined {
                    assignments: found.assignments,
                    factor_degrees: found.basis.basis.iter().map(degree).collect(),
                    runs: vec![(method, stats)],
                })
            }
            Some(d) => {
                if d.assignments != found.assignments {
                    return Err(Failure::Internal(format!(
                        "methods diverge: bkr found {} sign assignments, naive found {}",
                        d.assignments.len(),
                        found.assignments.len()
                    )));
                }
                d.runs.push((method, stats));
            }
        }
    }
    Ok(result.expect("at least one method"))
}

fn degree(p: &Poly) -> usize {
    p.coeffs().len().saturating_sub(1)
}

fn decide(cli: &Cli, quantifier: Quantifier, raw: &RawFormula) -> Result<(RunReport, i32), Failure> {
    let start = Instant::now();
    let (structure, polys) = convert(&raw.desugar());
    let d = determine(cli, &polys)?;
    let mut holds = d.assignments.iter().map(|s| lookup_sem(&structure, s.signs()));
    let verdict = match quantifier {
        Quantifier::Forall => holds.all(|h| h),
        Quantifier::Exists => holds.any(|h| h),
    };
    let mut report = report_stats(cli.method, &d.runs, &d.factor_degrees, &d.assignments, start.elapsed());
    report.verdict = Some(verdict);
    report.quantifier = Some(quantifier);
    Ok((report, if verdict { EXIT_TRUE } else { EXIT_FALSE }))
}

/// Atom polynomials in order of first occurrence.
pub fn formula_polys(raw: &RawFormula) -> Vec<Poly> {
    fn walk(f: &RawFormula, out: &mut Vec<Poly>) {
        match f {
            RawFormula::Atom(p, _) => {
                if !out.contains(p) {
                    out.push(p.clone());
                }
            }
            RawFormula::Not(a) => walk(a, out),
            RawFormula::And(a, b) | RawFormula::Or(a, b) => {
                walk(a, out);
                walk(b, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(raw, &mut out);
    out
}

fn signs(cli: &Cli, raw: &RawFormula) -> Result<(RunReport, i32), Failure> {
    let start = Instant::now();
    let d = determine(cli, &formula_polys(raw))?;
    let mut report = report_stats(cli.method, &d.runs, &d.factor_degrees, &d.assignments, start.elapsed());
    report.assignments = Some(d.assignments.iter().map(|a| a.to_i8s()).collect());
    Ok((report, EXIT_TRUE))
}

fn signs_at_roots(cli: &Cli, p: &str, qs: &str) -> Result<(RunReport, i32), Failure> {
    let start = Instant::now();
    let p = parse_poly(p)?;
    let qs = qs
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(parse_poly)
        .collect::<Result<Vec<_>, _>>()?;
    let mut runs = Vec::new();
    let mut first: Option<Vec<SignAssignment>> = None;
    for &method in cli.method.methods() {
        let mut stats = QueryStats::default();
        let mut found = if cli.parallel {
            engine(cli, method, Rayon).find_consistent_signs_at_roots(&p, &qs, &mut stats)?
        } else {
            engine(cli, method, Sequential).find_consistent_signs_at_roots(&p, &qs, &mut stats)?
        };
        found.sort();
        match &first {
            Some(prev) if *prev != found => {
                return Err(Failure::Internal("methods diverge on sign assignments at roots".into()))
            }
            Some(_) => {}
            None => first = Some(found),
        }
        runs.push((method, stats));
    }
    let assignments = first.expect("at least one method");
    let degrees: Vec<usize> = qs.iter().map(degree).collect();
    let mut report = report_stats(cli.method, &runs, &degrees, &assignments, start.elapsed());
    report.assignments = Some(assignments.iter().map(|a| a.to_i8s()).collect());
    Ok((report, EXIT_TRUE))
}
