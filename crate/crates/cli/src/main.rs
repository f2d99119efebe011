use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use ordrep_cli::report::{self, EquivMode, VerifyReport};
use ordrep_cli::spec::{self, Loaded, SpecError};
use ordrep_core::imprimitivity::BlockConvention;
use ordrep_core::verify::{self, VerifyOptions};
use ordrep_core::{PermGroup, DEFAULT_CAP};
use serde::Serialize;

/// Positive representations of finite groups on R^n, in exact arithmetic.
#[derive(Parser)]
#[command(name = "ordrep", version)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on group and subgroup enumeration.
    #[arg(long, global = true, env = "ORDREP_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Which block systems count as trivial.
    #[arg(long, global = true, value_enum, default_value_t = Convention::Literal)]
    block_convention: Convention,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Literal,
    Maximal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Order,
    Linear,
}

#[derive(Subcommand)]
enum Command {
    /// Factor each representation as m pi m^-1.
    Factor { files: Vec<PathBuf> },
    /// Decompose into irreducibles with multiplicities.
    Decompose { files: Vec<PathBuf> },
    /// Compare two representations of the same group.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Order)]
        mode: Mode,
    },
    /// List the irreducibles up to order equivalence.
    OrderDual {
        file: Option<PathBuf>,
        /// Named group instead of a file, e.g. "symmetric 3".
        #[arg(long)]
        group: Option<String>,
    },
    /// Induce [rep] from [subgroup] to [group].
    Induce { file: PathBuf },
    /// Multiplicity table for Frobenius reciprocity.
    Frobenius { file: PathBuf },
    /// Block systems and the primitive chain.
    Imprimitivity { files: Vec<PathBuf> },
    /// Run the built-in checks of the worked examples and property suites.
    VerifyPaper {
        /// Comma-separated check keys or numbers.
        #[arg(long)]
        filter: Option<String>,
    },
}

enum Failure {
    Input(String),
    Negative,
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<ordrep_core::Error> for Failure {
    fn from(e: ordrep_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn emit<T: Serialize>(json: bool, reports: &[T], human: impl Fn(&T) -> String, labels: &[String]) {
    if json {
        if let [one] = reports {
            println!("{}", report::to_json(one));
        } else {
            println!("{}", report::to_json(&reports));
        }
        return;
    }
    for (i, r) in reports.iter().enumerate() {
        if let (true, Some(label)) = (reports.len() > 1, labels.get(i)) {
            println!("== {label}");
        }
        print!("{}", human(r));
    }
}

fn load_all(files: &[PathBuf], cap: usize) -> Result<Vec<Loaded>, Failure> {
    if files.is_empty() {
        return Err(Failure::Input("no input files".into()));
    }
    files
        .iter()
        .map(|f| spec::load(f, cap).map_err(Failure::from))
        .collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cap = cli.cap;
    let json = cli.json;
    let convention = match cli.block_convention {
        Convention::Literal => BlockConvention::Literal,
        Convention::Maximal => BlockConvention::Maximal,
    };
    match cli.command {
        Command::Factor { files } => {
            let loaded = load_all(&files, cap)?;
            let reports = loaded
                .iter()
                .map(|l| Ok(report::factor_report(&l.rep()?)?))
                .collect::<Result<Vec<_>, Failure>>()?;
            let labels: Vec<String> = loaded.iter().map(|l| l.source.clone()).collect();
            emit(json, &reports, report::FactorReport::human, &labels);
        }
        Command::Decompose { files } => {
            let loaded = load_all(&files, cap)?;
            let reports = loaded
                .iter()
                .map(|l| Ok(report::decompose_report(&l.rep()?)))
                .collect::<Result<Vec<_>, Failure>>()?;
            let labels: Vec<String> = loaded.iter().map(|l| l.source.clone()).collect();
            emit(json, &reports, report::DecomposeReport::human, &labels);
        }
        Command::Equiv {
            first,
            second,
            mode,
        } => {
            let a = spec::load(&first, cap)?;
            let b = spec::load(&second, cap)?;
            let mode = match mode {
                Mode::Order => EquivMode::Order,
                Mode::Linear => EquivMode::Linear,
            };
            let r = report::equiv_report(&a.rep()?, &b.rep()?, mode)?;
            emit(json, std::slice::from_ref(&r), report::EquivReport::human, &[]);
            if !r.equivalent {
                return Err(Failure::Negative);
            }
        }
        Command::OrderDual { file, group } => {
            let g: Arc<PermGroup> = match (file, group) {
                (Some(f), None) => spec::load(&f, cap)?.group,
                (None, Some(name)) => Arc::new(spec::inline_group(&name, cap)?),
                _ => return Err(Failure::Input("give exactly one of FILE or --group".into())),
            };
            let r = report::order_dual_report(&g);
            emit(json, std::slice::from_ref(&r), report::OrderDualReport::human, &[]);
        }
        Command::Induce { file } => {
            let l = spec::load(&file, cap)?;
            let (h, theta) = l.subgroup_rep()?;
            let r = report::induce_report(&theta, &h, &l.group)?;
            emit(json, std::slice::from_ref(&r), report::InduceReport::human, &[]);
        }
        Command::Frobenius { file } => {
            let l = spec::load(&file, cap)?;
            let h = l.subgroup()?;
            let r = report::frobenius_report(&l.group, &h)?;
            emit(json, std::slice::from_ref(&r), report::FrobeniusReport::human, &[]);
        }
        Command::Imprimitivity { files } => {
            let loaded = load_all(&files, cap)?;
            let reports = loaded
                .iter()
                .map(|l| Ok(report::imprimitivity_report(&l.rep()?, convention)?))
                .collect::<Result<Vec<_>, Failure>>()?;
            let labels: Vec<String> = loaded.iter().map(|l| l.source.clone()).collect();
            emit(json, &reports, report::ImprimitivityReport::human, &labels);
        }
        Command::VerifyPaper { filter } => {
            if let Some(f) = &filter {
                let known = f.split(',').map(str::trim).all(|k| {
                    verify::CHECKS
                        .iter()
                        .any(|(id, key, _)| verify::matches_filter(Some(k), *id, key))
                });
                if !known {
                    return Err(Failure::Input(format!("unknown check in filter {f:?}")));
                }
            }
            let options = VerifyOptions {
                filter,
                ..VerifyOptions::default()
            };
            let r = VerifyReport::new(verify::run(&options));
            emit(json, std::slice::from_ref(&r), VerifyReport::human, &[]);
            if !r.passed {
                return Err(Failure::Negative);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
