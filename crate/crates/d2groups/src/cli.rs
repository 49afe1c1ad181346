//! Argument parsing and output routing.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use d2groups_core::pool::{Fault, DEFAULT_POOL_MAX_ORDER};
use d2groups_core::{Limits, DEFAULT_MAX_COSETS, DEFAULT_MAX_ORDER};

use crate::commands::{self, CommandError, ExitCode, GroupSource, Output};
use crate::report::to_canonical_string;

#[derive(Debug, Parser)]
#[command(name = "d2groups", version, about = "Analyse finite groups with periodic cohomology")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Largest group order any construction may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Coset budget for presentation enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COSETS)]
    pub max_cosets: usize,
    /// Write the JSON document to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print a human-readable summary instead of JSON on standard output.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Reserved; every algorithm is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the full classification report for one group.
    Analyze(AnalyzeArgs),
    /// Realize a presentation and compare it with an expected group.
    VerifyPresentation {
        file: PathBuf,
        /// Expected group, in the expression language.
        #[arg(long)]
        expect: String,
    },
    /// Run the property suites over the built-in pool.
    Selftest {
        /// Largest order of the named pool groups.
        #[arg(long, default_value_t = DEFAULT_POOL_MAX_ORDER)]
        pool_max_order: usize,
        /// Corrupt one recorded m_H before checking, to exercise the suites.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// List or build catalog groups.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct AnalyzeArgs {
    /// Group expression such as `Qt:4,1,3,1 * C:5`.
    #[arg(long)]
    pub expr: Option<String>,
    /// File of permutation generators, one per line in cycle notation.
    #[arg(long)]
    pub perm: Option<PathBuf>,
    /// File holding a presentation `<gens | relators>`.
    #[arg(long)]
    pub pres: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Show the constructors of the expression language.
    List,
    /// Build a group and print basic invariants.
    Build {
        expr: String,
        /// Include the multiplication table.
        #[arg(long)]
        table: bool,
    },
}

impl AnalyzeArgs {
    fn source(&self) -> GroupSource {
        match (&self.expr, &self.perm, &self.pres) {
            (Some(e), _, _) => GroupSource::Expr(e.clone()),
            (_, Some(p), _) => GroupSource::Perm(p.clone()),
            (_, _, Some(p)) => GroupSource::Pres(p.clone()),
            _ => unreachable!("clap requires exactly one source"),
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, CommandError> {
    let g = &cli.global;
    let limits = Limits {
        max_order: g.max_order,
        max_cosets: g.max_cosets,
        ..Limits::default()
    };
    match &cli.command {
        Command::Analyze(a) => commands::analyze(&a.source(), limits),
        Command::VerifyPresentation { file, expect } => {
            commands::verify_presentation(file, expect, limits)
        }
        Command::Selftest {
            pool_max_order,
            inject_fault,
        } => {
            let fault = if *inject_fault {
                Fault::FlipQuaternionicCount
            } else {
                Fault::None
            };
            commands::selftest(*pool_max_order, limits, fault)
        }
        Command::Catalog(CatalogCommand::List) => Ok(commands::catalog_list()),
        Command::Catalog(CatalogCommand::Build { expr, table }) => {
            commands::catalog_build(expr, *table, limits)
        }
    }
}

/// Parses `args`, runs the command and writes its output. Returns the exit
/// code; nothing is written to standard output on error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { ExitCode::Parse as i32 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let output = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            return e.code as i32;
        }
    };
    let json = to_canonical_string(&output.document, false);
    if let Some(path) = &cli.global.out {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            let _ = writeln!(stderr, "error: {}: {e}", path.display());
            return ExitCode::Parse as i32;
        }
    }
    let is_selftest = matches!(cli.command, Command::Selftest { .. });
    if cli.global.pretty {
        let _ = write!(stdout, "{}", output.summary);
    } else {
        if is_selftest {
            let _ = write!(stderr, "{}", output.summary);
        }
        if cli.global.out.is_none() {
            let _ = writeln!(stdout, "{json}");
        }
    }
    if output.passed {
        ExitCode::Ok as i32
    } else {
        ExitCode::Fail as i32
    }
}
