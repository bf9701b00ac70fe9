//! Command-line frontend: `demazure <char|decompose|word|verify|limit>`.

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::branching::decompose;
use crate::cartan::{AlgebraLabel, CartanData};
use crate::charring::{terms_tsv, FiniteCharacter};
use crate::demazure::{demazure_character, project_character};
use crate::error::Error;
use crate::frame::Frame;
use crate::theorems::{self, VerificationReport};
use crate::weight::FiniteWeight;
use crate::weylgroup::ExtAffineElement;

const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;

/// Worker cap for `verify all`.
pub const WORKERS_ENV: &str = "DEMAZURE_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "demazure",
    version,
    about = "Demazure characters of affine Kac-Moody algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Args, Debug)]
struct Target {
    /// Algebra label such as A3, C2^1, A4^2, D4^3.
    #[arg(long)]
    algebra: String,
    /// Basepoint vertex (a special vertex).
    #[arg(long, default_value_t = 0)]
    vertex: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite part of the Demazure character of the translation by a coweight.
    Char {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        level: i64,
        /// Fundamental-coweight coordinates, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        coweight: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Irreducible decomposition of a Demazure character.
    Decompose {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        level: i64,
        #[arg(long, allow_hyphen_values = true)]
        coweight: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Reduced word of the translation by a coweight.
    Word {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        coweight: String,
    },
    /// Check a theorem instance; exit status 1 if it fails.
    Verify {
        #[command(subcommand)]
        claim: Claim,
    },
    /// Truncated limit identity with `N` copies of the W-module.
    Limit {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        level: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long = "n", short = 'n')]
        n: usize,
        #[command(flatten)]
        out: ReportOpts,
    },
}

#[derive(Args, Debug)]
struct ReportOpts {
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Include elapsed time in reports.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Claim {
    /// Factorization over a partition of a coweight.
    Thm1 {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        level: i64,
        /// Parts separated by semicolons, coordinates by commas.
        #[arg(long, allow_hyphen_values = true)]
        parts: String,
        #[command(flatten)]
        out: ReportOpts,
    },
    /// Factorization with a minuscule first part at level (m, s).
    Thm1a {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        node: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        rest: String,
        #[command(flatten)]
        out: ReportOpts,
    },
    /// Closed-form decomposition of a fundamental Demazure module.
    Thm2 {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        node: usize,
        #[arg(long)]
        level: i64,
        #[command(flatten)]
        out: ReportOpts,
    },
    /// Decomposition of the Demazure module of `w_0 z s_0`.
    Hilf8 {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        level: i64,
        /// Word in the stabilizer of the highest root.
        #[arg(long, default_value = "")]
        z: String,
        #[command(flatten)]
        out: ReportOpts,
    },
    /// Trivial multiplicity in the W-module.
    Wmodule {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        level: i64,
        #[command(flatten)]
        out: ReportOpts,
    },
    /// Factorization at a special vertex of a twisted algebra.
    Twisted {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        level: i64,
        #[arg(long, allow_hyphen_values = true)]
        parts: String,
        #[command(flatten)]
        out: ReportOpts,
    },
    /// Twisted decomposition list.
    TwistedList {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        node: usize,
        #[arg(long)]
        level: i64,
        #[command(flatten)]
        out: ReportOpts,
    },
    /// The full grid.
    All {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value_t = 2)]
        max_level: i64,
        #[command(flatten)]
        out: ReportOpts,
    },
}

#[derive(Debug)]
enum CliError {
    Parse {
        arg: &'static str,
        column: usize,
        reason: String,
    },
    Engine(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse {
                arg,
                column,
                reason,
            } => write!(f, "--{arg}: column {column}: {reason}"),
            CliError::Engine(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Comma-separated integers; `offset` is the column of the first byte.
fn parse_vector(arg: &'static str, s: &str, offset: usize) -> CliResult<FiniteWeight> {
    let mut coords = Vec::new();
    let mut col = offset;
    for field in s.split(',') {
        let trimmed = field.trim();
        let lead = field.len() - field.trim_start().len();
        if trimmed.is_empty() {
            return Err(CliError::Parse {
                arg,
                column: col + lead,
                reason: "expected an integer".into(),
            });
        }
        let v = trimmed.parse::<i64>().map_err(|_| CliError::Parse {
            arg,
            column: col + lead,
            reason: format!("expected an integer, found `{trimmed}`"),
        })?;
        coords.push(v);
        col += field.len() + 1;
    }
    Ok(FiniteWeight::new(coords))
}

/// Semicolon-separated vectors; an empty string is an empty list.
fn parse_parts(arg: &'static str, s: &str) -> CliResult<Vec<FiniteWeight>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut col = 1;
    for part in s.split(';') {
        out.push(parse_vector(arg, part, col)?);
        col += part.len() + 1;
    }
    Ok(out)
}

fn parse_letters(arg: &'static str, s: &str) -> CliResult<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let v = parse_vector(arg, s, 1)?;
    v.coords()
        .iter()
        .map(|&x| {
            usize::try_from(x).map_err(|_| CliError::Parse {
                arg,
                column: 1,
                reason: format!("node index {x} is negative"),
            })
        })
        .collect()
}

fn frame(target: &Target) -> CliResult<Arc<Frame>> {
    let label: AlgebraLabel = target.algebra.parse()?;
    let cd = Arc::new(CartanData::build(label.affinized())?);
    Ok(Frame::new(cd, target.vertex)?)
}

fn checked_vector(frame: &Frame, arg: &'static str, s: &str) -> CliResult<FiniteWeight> {
    let v = parse_vector(arg, s, 1)?;
    frame.check_finite(&v)?;
    Ok(v)
}

fn finite_output(frame: &Frame, x: &FiniteCharacter, level: i64, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", x.to_json(&frame.label().to_string(), level)),
        Format::Tsv => terms_tsv(x.sorted_terms().into_iter().map(|(w, c)| (w.coords(), c))),
    }
}

fn report_output(reports: &[VerificationReport], opts: &ReportOpts) -> String {
    let mut out = String::new();
    for r in reports {
        match opts.format {
            Format::Json => out.push_str(&r.to_json(opts.timing).to_string()),
            Format::Tsv => {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}",
                    r.claim,
                    if r.passed { "pass" } else { "fail" },
                    Value::Object(r.instance.clone()),
                    r.lhs.dim,
                    r.rhs.dim
                ));
                if opts.timing {
                    out.push_str(&format!("\t{}", r.elapsed.as_millis()));
                }
            }
        }
        out.push('\n');
    }
    out
}

fn sigma_json(sigma: &[usize]) -> Value {
    if sigma.iter().enumerate().all(|(i, &p)| i == p) {
        json!("id")
    } else {
        json!(sigma)
    }
}

fn configure_workers() {
    if let Some(n) = std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
    {
        if n > 0 {
            // a pool that already exists keeps its size
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

/// Runs a command, writing results to `out`; the return value is the exit
/// status and `Err` carries the diagnostic for usage errors.
fn execute(cmd: Command) -> CliResult<(String, bool)> {
    let single = |r: VerificationReport, opts: &ReportOpts| {
        let ok = r.passed;
        (report_output(&[r], opts), ok)
    };
    Ok(match cmd {
        Command::Char {
            target,
            level,
            coweight,
            format,
        } => {
            let f = frame(&target)?;
            let cw = checked_vector(&f, "coweight", &coweight)?;
            let x = demazure_character(&f, &cw, &f.lift(&FiniteWeight::zero(f.rank()), level))?;
            let (_, fin) = project_character(&f, &x)?;
            (finite_output(&f, &fin, level, format), true)
        }
        Command::Decompose {
            target,
            level,
            coweight,
            format,
        } => {
            let f = frame(&target)?;
            let cw = checked_vector(&f, "coweight", &coweight)?;
            let fin = theorems::module_part(&f, &cw, level)?;
            let d = decompose(&f, &fin)?;
            let text = match format {
                Format::Json => format!("{}\n", d.to_json(f.roots())),
                Format::Tsv => d
                    .parts()
                    .iter()
                    .map(|(w, c)| {
                        let coords: Vec<String> =
                            w.coords().iter().map(|x| x.to_string()).collect();
                        format!(
                            "{}\t{}\t{}\n",
                            coords.join("\t"),
                            c,
                            f.roots().weyl_dimension(w)
                        )
                    })
                    .collect(),
            };
            (text, true)
        }
        Command::Word { target, coweight } => {
            let f = frame(&target)?;
            let cw = checked_vector(&f, "coweight", &coweight)?;
            let w = ExtAffineElement::translation_element(&f, &cw)?.peel()?;
            (
                format!(
                    "{}\n",
                    json!({ "letters": w.letters, "sigma": sigma_json(&w.sigma) })
                ),
                true,
            )
        }
        Command::Limit {
            target,
            level,
            lambda,
            n,
            out,
        } => {
            let f = frame(&target)?;
            let l = checked_vector(&f, "lambda", &lambda)?;
            single(theorems::verify_limit(&f, level, &l, n)?, &out)
        }
        Command::Verify { claim } => match claim {
            Claim::Thm1 {
                target,
                level,
                parts,
                out,
            } => {
                let f = frame(&target)?;
                let p = parse_parts("parts", &parts)?;
                single(theorems::verify_thm1(&f, level, &p)?, &out)
            }
            Claim::Thm1a {
                target,
                m,
                s,
                node,
                rest,
                out,
            } => {
                let f = frame(&target)?;
                let r = parse_parts("rest", &rest)?;
                single(theorems::verify_thm1a(&f, m, s, node, &r)?, &out)
            }
            Claim::Thm2 {
                target,
                node,
                level,
                out,
            } => {
                let f = frame(&target)?;
                single(theorems::verify_thm2(&f, node, level)?, &out)
            }
            Claim::Hilf8 {
                target,
                level,
                z,
                out,
            } => {
                let f = frame(&target)?;
                let z = parse_letters("z", &z)?;
                single(theorems::lemma_hilf8_check(&f, level, &z)?, &out)
            }
            Claim::Wmodule { target, level, out } => {
                let f = frame(&target)?;
                single(theorems::verify_wmodule(&f, level)?, &out)
            }
            Claim::Twisted {
                target,
                level,
                parts,
                out,
            } => {
                let f = frame(&target)?;
                let p = parse_parts("parts", &parts)?;
                single(theorems::verify_twisted_thm(&f, level, &p)?, &out)
            }
            Claim::TwistedList {
                target,
                node,
                level,
                out,
            } => {
                let f = frame(&target)?;
                single(theorems::verify_twisted_list(&f, node, level)?, &out)
            }
            Claim::All {
                max_rank,
                max_level,
                out,
            } => {
                configure_workers();
                let tasks = theorems::grid_tasks(max_rank, max_level)?;
                let reports = theorems::run_tasks(&tasks)
                    .into_iter()
                    .collect::<Result<Vec<_>, _>>()?;
                let ok = reports.iter().all(|r| r.passed);
                (report_output(&reports, &out), ok)
            }
        },
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, ok)) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("demazure").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn vector_columns() {
        assert_eq!(
            parse_vector("x", "1,-2", 1).unwrap(),
            FiniteWeight::from([1, -2])
        );
        match parse_parts("parts", "1,0;0,x") {
            Err(CliError::Parse { column, .. }) => assert_eq!(column, 7),
            other => panic!("{other:?}"),
        }
        match parse_vector("x", "1,,2", 1) {
            Err(CliError::Parse { column, .. }) => assert_eq!(column, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn word_output() {
        let (code, out, _) = call(&["word", "--algebra", "A1^1", "--coweight", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"letters":[1,0],"sigma":"id"}"#);
        let (_, out, _) = call(&["word", "--algebra", "A1^1", "--coweight", "1"]);
        assert_eq!(out.trim(), r#"{"letters":[1],"sigma":[1,0]}"#);
    }

    #[test]
    fn errors_exit_two() {
        let (code, _, err) = call(&[
            "char",
            "--algebra",
            "A1^1",
            "--level",
            "1",
            "--coweight",
            "-1",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("not dominant"), "{err}");
        let (code, _, err) = call(&["char", "--algebra", "H2", "--level", "1", "--coweight", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("column 1"), "{err}");
        let (code, _, _) = call(&["frobnicate"]);
        assert_eq!(code, 2);
    }
}
