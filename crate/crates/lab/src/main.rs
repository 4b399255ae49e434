use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use algext_lab::output::render;
use algext_lab::report::property_report;
use algext_lab::{parse_spec, Document, Format, LabError, Options, Workspace};
use clap::{Parser, Subcommand};

/// Build and inspect algebraic extensions of normed algebras.
///
/// Exit status: 0 when every check passes, 1 when a check fails, 2 on
/// input errors.
#[derive(Parser, Debug)]
#[command(name = "algext", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Output format: `text` or `json` (aliases `structured`, `json-like-structured`).
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Seed for random sampling in checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Relative tolerance for clustering roots.
    #[arg(long, global = true)]
    tol_root: Option<f64>,

    /// Threshold replacing the default of every tolerance check.
    #[arg(long, global = true)]
    tol_check: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build every declaration and run the file's commands.
    Build { spec: PathBuf },
    /// Property report for one algebra.
    Report {
        spec: PathBuf,
        #[arg(long)]
        algebra: String,
    },
    /// Run the worked-example gallery.
    Gallery,
    /// Compare standard and multivariate extensions by a set of polynomials.
    Compare {
        spec: PathBuf,
        /// Comma-separated polynomial names over a common algebra.
        #[arg(long)]
        set: String,
    },
}

fn load(path: &PathBuf, opts: Options, run: bool) -> Result<Workspace, LabError> {
    let text = std::fs::read_to_string(path)?;
    Workspace::build(&parse_spec(&text)?, opts, run)
}

fn execute(cli: &Cli) -> Result<Document, LabError> {
    let mut opts = Options {
        seed: cli.seed,
        tol_check: cli.tol_check,
        ..Options::default()
    };
    if let Some(t) = cli.tol_root {
        opts.tol_root = t;
    }
    match &cli.command {
        Cmd::Build { spec } => Ok(load(spec, opts, true)?.document),
        Cmd::Report { spec, algebra } => {
            let ws = load(spec, opts, false)?;
            let alg = Arc::clone(&ws.algebra(algebra)?.alg);
            let mut doc = ws.document;
            doc.algebras.retain(|a| &a.name == algebra);
            doc.reports.push(property_report(algebra, &alg, opts.tol_check.unwrap_or(1e-8))?);
            Ok(doc)
        }
        Cmd::Gallery => algext_lab::gallery::run_gallery(opts),
        Cmd::Compare { spec, set } => {
            let mut ws = load(spec, opts, false)?;
            let names: Vec<String> = set.split(',').map(|s| s.trim().to_string()).collect();
            let mut over = None;
            for n in &names {
                let (alg, _) = ws.poly(n)?;
                match &over {
                    None => over = Some(alg.clone()),
                    Some(o) if o != alg => {
                        return Err(LabError::Parse {
                            line: 0,
                            message: format!("`{n}` is over `{alg}`, not `{o}`"),
                        })
                    }
                    _ => {}
                }
            }
            let base = over.ok_or_else(|| LabError::Parse {
                line: 0,
                message: "empty polynomial set".into(),
            })?;
            let checks = ws.compare(&base, &names)?;
            let mut doc = ws.document;
            doc.checks = checks;
            Ok(doc)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: Format = match cli.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let doc = match execute(&cli) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match render(&doc, format) {
        Ok(s) => print!("{s}"),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if doc.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
