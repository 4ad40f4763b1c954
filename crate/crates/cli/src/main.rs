//! `heffter`: build, check and classify integer Heffter arrays and array sets.
//!
//! Exit codes: 0 success, 1 the input failed verification, 2 bad
//! parameters or unreadable input, 3 parameters outside what is built
//! here (external construction or open), 4 an internal self-check failed.

mod io;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heffter::ihs::{appendix_ihs, appendix_list};
use heffter::oracle::{brute_heffter_small, cross_check_lemma, FamilyId, SearchBudget, SearchOutcome};
use heffter::{build_ihs, build_integer_heffter, classify, verify_ihs, verify_integer_heffter, Error};

use io::{emit, read_document, Format};

#[derive(Parser)]
#[command(name = "heffter", version, about = "Integer Heffter arrays and integer Heffter array sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Clone)]
pub struct Global {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Node limit for exhaustive searches
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget_nodes: u64,
    /// Time limit in seconds for exhaustive searches
    #[arg(long, global = true, default_value_t = 60.0)]
    budget_seconds: f64,
}

impl Global {
    fn budget(&self) -> SearchBudget {
        SearchBudget::new(self.budget_nodes, Duration::from_secs_f64(self.budget_seconds.max(0.0)))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a set IHS(m,n;c) or an array H(m,n;s,k)
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Check a file in any of the supported formats
    Verify {
        path: PathBuf,
        /// Check as an integer Heffter array with this many filled cells per row
        #[arg(long, requires = "k")]
        s: Option<usize>,
        /// Filled cells per column, with --s
        #[arg(long, requires = "s")]
        k: Option<usize>,
    },
    /// Say whether H(m,n;s,k) exists, is built here, or is open
    Classify { m: usize, n: usize, s: usize, k: usize },
    /// Build and verify every tuple in a range, writing a CSV report
    Sweep {
        #[command(subcommand)]
        what: sweep::SweepKind,
    },
    /// Exhaustive searches and family cross-checks
    Oracle {
        #[command(subcommand)]
        what: Oracle,
    },
    /// The embedded IHS(7,7;c) tables
    Appendix {
        #[command(subcommand)]
        what: Appendix,
    },
}

#[derive(Subcommand)]
enum Construct {
    Ihs { m: usize, n: usize, c: usize },
    Heffter { m: usize, n: usize, s: usize, k: usize },
}

#[derive(Subcommand)]
enum Oracle {
    /// Search for a small H(m,n;s,k)
    Heffter { m: usize, n: usize, s: usize, k: usize },
    /// Compare a block family with its independent re-derivation
    Lemma {
        #[arg(value_enum)]
        family: LemmaArg,
        #[arg(allow_hyphen_values = true)]
        params: Vec<i64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaArg {
    AAlpha,
    A2,
    A3,
    BFamily,
    B2Family,
    B3Family,
    B4Family,
}

impl From<LemmaArg> for FamilyId {
    fn from(f: LemmaArg) -> Self {
        match f {
            LemmaArg::AAlpha => FamilyId::AAlpha,
            LemmaArg::A2 => FamilyId::A2,
            LemmaArg::A3 => FamilyId::A3,
            LemmaArg::BFamily => FamilyId::BFamily,
            LemmaArg::B2Family => FamilyId::B2Family,
            LemmaArg::B3Family => FamilyId::B3Family,
            LemmaArg::B4Family => FamilyId::B4Family,
        }
    }
}

#[derive(Subcommand)]
enum Appendix {
    List,
    Export { c: usize },
}

/// A failure with its exit code.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidParams(_) | Error::Parse(_) | Error::Domain { .. } | Error::Arity { .. } => 2,
        Error::ExternalConstruction(_) | Error::Unsupported(_) | Error::Redirected(_) => 3,
        Error::SelfCheck { .. } | Error::Partition(_) | Error::InvalidBlock(_) | Error::MalformedInterval { .. } => 4,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(exit_code(&e), e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    match cli.command {
        Command::Construct { what } => match what {
            Construct::Ihs { m, n, c } => emit(g, &io::render_set(g.format, &build_ihs(m, n, c)?)),
            Construct::Heffter { m, n, s, k } => {
                let h = build_integer_heffter(m, n, s, k)?;
                emit(g, &io::render_set(g.format, std::slice::from_ref(&h)))
            }
        },
        Command::Verify { path, s, k } => {
            let doc = read_document(&path)?;
            let arrays = doc.arrays();
            let first = arrays.first().ok_or_else(|| Failure::new(2, "no arrays in input"))?;
            let heffter_shape = arrays.len() == 1 && (s.is_some() || !first.is_totally_filled());
            let (label, report) = if heffter_shape {
                let s = s.unwrap_or_else(|| first.row_filled(0));
                let k = k.unwrap_or_else(|| first.col_filled(0));
                (format!("H({},{};{s},{k})", first.rows(), first.cols()), verify_integer_heffter(first, s, k))
            } else {
                let (m, n, c) = (first.rows(), first.cols(), arrays.len());
                (format!("IHS({m},{n};{c})"), verify_ihs(arrays, m, n, c))
            };
            let text = match g.format {
                Format::Json => serde_json::json!({ "candidate": label, "report": report }).to_string() + "\n",
                _ => format!("{label}: {report}"),
            };
            emit(g, &text)?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::new(1, format!("{label} failed verification")))
            }
        }
        Command::Classify { m, n, s, k } => {
            let f = classify(m, n, s, k);
            let text = match g.format {
                Format::Json => serde_json::json!({ "m": m, "n": n, "s": s, "k": k, "feasibility": f }).to_string() + "\n",
                _ => format!("H({m},{n};{s},{k}): {f}\n"),
            };
            emit(g, &text)
        }
        Command::Sweep { what } => sweep::run(g, &what),
        Command::Oracle { what } => match what {
            Oracle::Heffter { m, n, s, k } => match brute_heffter_small(m, n, s, k, g.budget()) {
                SearchOutcome::Exists(a) => {
                    emit(g, &io::render_set(g.format, std::slice::from_ref(&a)))
                }
                SearchOutcome::NotExists => emit(g, &format!("H({m},{n};{s},{k}): does not exist\n")),
                SearchOutcome::Inconclusive => Err(Failure::new(3, format!("H({m},{n};{s},{k}): budget exhausted"))),
            },
            Oracle::Lemma { family, params } => {
                let id = FamilyId::from(family);
                if params.len() != id.arity() {
                    return Err(Failure::new(2, format!("{} takes {} parameters", id.name(), id.arity())));
                }
                let r = cross_check_lemma(id, &params);
                let text = match g.format {
                    Format::Json => serde_json::to_string(&r).expect("report serialises") + "\n",
                    _ if r.ok() => format!("{} {:?}: ok\n", r.family.name(), r.params),
                    _ => format!("{} {:?}:\n  {}\n", r.family.name(), r.params, r.mismatches.join("\n  ")),
                };
                emit(g, &text)?;
                if r.ok() {
                    Ok(())
                } else {
                    Err(Failure::new(4, "family disagrees with its re-derivation"))
                }
            }
        },
        Command::Appendix { what } => match what {
            Appendix::List => {
                let list = appendix_list();
                let text = match g.format {
                    Format::Json => serde_json::to_string(&list).expect("list serialises") + "\n",
                    Format::Csv => std::iter::once("m,n,c".to_string())
                        .chain(list.iter().map(|(m, n, c)| format!("{m},{n},{c}")))
                        .map(|l| l + "\n")
                        .collect(),
                    Format::Text => list.iter().map(|(m, n, c)| format!("IHS({m},{n};{c})\n")).collect(),
                };
                emit(g, &text)
            }
            Appendix::Export { c } => emit(g, &io::render_set(g.format, &appendix_ihs(c)?)),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
