//! `ptdiag analyze|family|oracle <file>`.
//!
//! Exit codes: 0 diagonalizable or analysis complete, 3 defective, 1 input
//! error, 2 internal invariant violation (including an oracle mismatch).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use crate::diag::{adjugate_oracle, diagnose, oracle_diagonalizable, Verdict};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::family::{cross_check_generic_d, exceptional_locus, pointwise_verdict, region_census};
use crate::matrix::{charpoly_and_adjugate, ParitySpec, COFACTOR_ORACLE_MAX_DIM};
use crate::problem::{load_problem, parse_rational_field, Mode, Problem};
use crate::report::{self, Format, OracleCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;
pub const EXIT_DEFECTIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ptdiag",
    version,
    about = "Exact diagonalizability and exceptional points of PT-symmetric matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,

    /// Census points for `family`, comma separated rationals.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    samples: Option<Vec<String>>,

    /// Width of the root isolating intervals [default: 1/1024].
    #[arg(long, global = true)]
    isolate_width: Option<String>,

    /// Parity operator. Without the flag the file's parity is used if it
    /// has one, the anti-diagonal unit matrix otherwise.
    #[arg(long, global = true, value_enum)]
    parity: Option<ParityArg>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Diagnose a numeric matrix.
    Analyze { file: PathBuf },
    /// Exceptional-point locus of a family, with an optional census.
    Family { file: PathBuf },
    /// Cross-check the decision procedure against independent routes.
    Oracle { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParityArg {
    Default,
    None,
    File,
}

struct Settings {
    format: Format,
    samples: Option<Vec<Rational>>,
    /// From `--isolate-width`; the file's value applies otherwise.
    width: Option<Rational>,
    parity: Option<ParityArg>,
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => EXIT_INVARIANT,
        _ => EXIT_INPUT,
    }
}

/// Run with the given arguments; `argv[0]` is the program name.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn settings(cli: &Cli) -> Result<Settings> {
    let samples = cli
        .samples
        .as_ref()
        .map(|v| {
            v.iter()
                .map(|s| parse_rational_field("--samples", s))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let width = match &cli.isolate_width {
        Some(s) => Some(parse_rational_field("--isolate-width", s)?),
        None => None,
    };
    Ok(Settings {
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        samples,
        width,
        parity: cli.parity,
    })
}

fn read_problem(path: &Path) -> Result<Problem> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Problem(format!("{}: {e}", path.display())))?;
    load_problem(&text)
}

fn resolve_parity(choice: Option<ParityArg>, problem: &Problem) -> Result<Option<ParitySpec>> {
    let n = problem.matrix.dim();
    Ok(match choice {
        None => Some(problem.parity.clone().unwrap_or_else(|| ParitySpec::anti_diagonal(n))),
        Some(ParityArg::Default) => Some(ParitySpec::anti_diagonal(n)),
        Some(ParityArg::None) => None,
        Some(ParityArg::File) => Some(
            problem
                .parity
                .clone()
                .ok_or_else(|| Error::Problem("--parity file given but the file has no parity".into()))?,
        ),
    })
}

fn emit(out: &mut dyn Write, text: String) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Problem(format!("writing output: {e}")))
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let s = settings(cli)?;
    match &cli.command {
        Command::Analyze { file } => analyze(&read_problem(file)?, &s, out),
        Command::Family { file } => family(&read_problem(file)?, &s, out),
        Command::Oracle { file } => oracle(&read_problem(file)?, &s, out),
    }
}

fn isolate_width(s: &Settings, problem: &Problem) -> Result<Rational> {
    let w = s
        .width
        .clone()
        .or_else(|| problem.isolate_width.clone())
        .unwrap_or_else(|| Rational::new(1.into(), 1024.into()));
    if !w.is_positive() {
        return Err(Error::Problem(format!("isolation width must be positive, got {w}")));
    }
    Ok(w)
}

fn analyze(problem: &Problem, s: &Settings, out: &mut dyn Write) -> Result<i32> {
    let m = problem
        .numeric_matrix()
        .ok_or_else(|| Error::Problem("entries mention eps; use `family`".into()))?;
    let parity = resolve_parity(s.parity, problem)?;
    let r = diagnose(&m, parity.as_ref())?;
    emit(
        out,
        match s.format {
            Format::Text => report::diagnosis_text(&r),
            Format::Json => report::json_string(&report::diagnosis_json(&r)),
        },
    )?;
    if r.realness_violated() {
        return Err(Error::invariant(
            "PT-invariant matrix produced non-real polynomial coefficients",
        ));
    }
    Ok(match r.verdict {
        Verdict::Diagonalizable => EXIT_OK,
        Verdict::Defective => EXIT_DEFECTIVE,
    })
}

fn family(problem: &Problem, s: &Settings, out: &mut dyn Write) -> Result<i32> {
    let parity = resolve_parity(s.parity, problem)?;
    let width = isolate_width(s, problem)?;
    let locus = exceptional_locus(&problem.matrix, &width, parity.as_ref())?;
    let samples = s.samples.clone().unwrap_or_else(|| problem.samples.clone());
    let census = if samples.is_empty() {
        Vec::new()
    } else {
        region_census(&problem.matrix, &samples)?
    };
    emit(
        out,
        match s.format {
            Format::Text => report::family_text(&locus, &census),
            Format::Json => report::json_string(&report::family_json(&locus, &census)),
        },
    )?;
    Ok(EXIT_OK)
}

fn oracle(problem: &Problem, s: &Settings, out: &mut dyn Write) -> Result<i32> {
    let mut checks = Vec::new();
    let mut check = |name: String, ok: bool| checks.push(OracleCheck { name, ok });
    match problem.mode {
        Mode::Numeric => {
            let m = problem.numeric_matrix().expect("numeric mode");
            let r = diagnose(&m, None)?;
            check(
                "verdict vs square-free annihilator".into(),
                (r.verdict == Verdict::Diagonalizable) == oracle_diagonalizable(&m),
            );
            check("p = d * m".into(), r.factorization_holds());
            if m.dim() <= COFACTOR_ORACLE_MAX_DIM {
                let fl = charpoly_and_adjugate(&m).1.to_matrix();
                check("adjugate vs cofactors".into(), adjugate_oracle(&m)? == fl);
            }
        }
        Mode::Parametric => {
            check(
                "generic d: PRS vs naive Euclid".into(),
                cross_check_generic_d(&problem.matrix)?,
            );
            let locus = exceptional_locus(&problem.matrix, &isolate_width(s, problem)?, None)?;
            let mut points: Vec<Rational> = locus.confirmed_points().into_iter().cloned().collect();
            points.extend(locus.cleared.iter().cloned());
            points.extend(s.samples.clone().unwrap_or_else(|| problem.samples.clone()));
            for e in points {
                let m = problem.matrix.specialize(&e);
                let r = pointwise_verdict(&problem.matrix, &e, None)?;
                check(
                    format!(
                        "eps = {}: verdict vs square-free annihilator",
                        crate::exact::rational_string(&e)
                    ),
                    (r.verdict == Verdict::Diagonalizable) == oracle_diagonalizable(&m),
                );
            }
        }
    }
    let all_ok = checks.iter().all(|c| c.ok);
    emit(
        out,
        match s.format {
            Format::Text => report::oracle_text(&checks),
            Format::Json => report::json_string(&report::oracle_json(&checks)),
        },
    )?;
    Ok(if all_ok { EXIT_OK } else { EXIT_INVARIANT })
}
