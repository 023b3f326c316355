//! Command-line front end: JSON in, JSON out, diagnostics on stderr.
//!
//! Exit codes are a stable contract: 0 ok, 2 input error, 3 inadmissible
//! data, 4 no solutions (proven impossible or search exhausted),
//! 5 verification failure.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use schur_interp::config::Tolerances;
use schur_interp::error::Error;
use schur_interp::io::{
    cmd_analyze, cmd_solve, cmd_verify, SolveRequest, VerifyInput, SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(
    name = "schur-interp",
    version,
    about = "Rational Schur-class interpolation from Taylor data under a degree budget"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check admissibility and report feasibility thresholds
    Analyze(Common),
    /// Construct verified interpolants within the degree budget
    Solve(Common),
    /// Independently re-verify candidate solutions
    Verify(Common),
}

#[derive(Args)]
struct Common {
    /// Input JSON file (standard input when omitted)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Tolerance overrides, as a JSON file with any subset of the fields
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override the unit-circle sampling grid size
    #[arg(long)]
    grid: Option<usize>,
    /// Override the request's random seed
    #[arg(long)]
    seed: Option<u64>,
    /// Override the request's solution count
    #[arg(long)]
    count: Option<usize>,
    /// Override the request's degree budget
    #[arg(long)]
    k: Option<usize>,
    /// Override the constant-coefficient strategy: bound | bisect | <value>
    #[arg(long)]
    alpha0: Option<String>,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code_for(&e);
            let doc = ErrorDoc {
                schema_version: SCHEMA_VERSION,
                status: status_for(code).to_string(),
                error: e.to_string(),
            };
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            eprintln!("error: {e}");
            code
        }
    }
}

#[derive(Serialize)]
struct ErrorDoc {
    schema_version: u32,
    status: String,
    error: String,
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::DimensionMismatch(_) => 2,
        Error::SingularData { .. }
        | Error::IndefiniteData { .. }
        | Error::NotAdmissible { .. }
        | Error::AdmissibilityMismatch { .. } => 3,
        Error::SearchExhausted { .. } | Error::InfeasibleNullspace { .. } => 4,
        _ => 1,
    }
}

fn status_for(code: i32) -> &'static str {
    match code {
        2 => "invalid_input",
        3 => "not_admissible",
        4 => "no_solutions",
        _ => "error",
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Error> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::InvalidInput(format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<Option<Tolerances>, Error> {
    match path {
        None => Ok(None),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", p.display())))?;
            let t: Tolerances = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("malformed config: {e}")))?;
            Ok(Some(t))
        }
    }
}

fn parse_request(text: &str) -> Result<SolveRequest, Error> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed request: {e}")))
}

fn apply_overrides(req: &mut SolveRequest, args: &Common) {
    if let Some(seed) = args.seed {
        req.seed = seed;
    }
    if let Some(count) = args.count {
        req.count = count;
    }
    if let Some(k) = args.k {
        req.degree_budget = Some(k);
    }
    if let Some(a) = &args.alpha0 {
        req.alpha0_strategy = a.clone();
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).unwrap());
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Analyze(args) => {
            let mut req = parse_request(&read_input(&args.input)?)?;
            apply_overrides(&mut req, &args);
            let tols = req.effective_tolerances(load_config(&args.config)?, args.grid);
            let resp = cmd_analyze(&req, &tols)?;
            for line in &resp.reports {
                eprintln!("note: {line}");
            }
            print_json(&resp);
            Ok(if resp.admissible { 0 } else { 3 })
        }
        Command::Solve(args) => {
            let mut req = parse_request(&read_input(&args.input)?)?;
            apply_overrides(&mut req, &args);
            let tols = req.effective_tolerances(load_config(&args.config)?, args.grid);
            let resp = cmd_solve(&req, &tols)?;
            for line in &resp.reports {
                eprintln!("note: {line}");
            }
            print_json(&resp);
            Ok(if resp.solutions.is_empty() { 4 } else { 0 })
        }
        Command::Verify(args) => {
            let text = read_input(&args.input)?;
            let mut input: VerifyInput = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("malformed verify input: {e}")))?;
            let (req_tols, req_mut): (_, &mut SolveRequest) = match &mut input {
                VerifyInput::Single { request, .. } => (request.tolerances.clone(), request),
                VerifyInput::Piped { request, .. } => (request.tolerances.clone(), request),
            };
            if let Some(k) = args.k {
                req_mut.degree_budget = Some(k);
            }
            let tols = {
                let mut t = load_config(&args.config)?.or(req_tols).unwrap_or_default();
                if let Some(g) = args.grid {
                    t.circle_grid = g;
                }
                t
            };
            let resp = cmd_verify(&input, &tols)?;
            for r in &resp.reports {
                if r.pass {
                    eprintln!("note: candidate {} passed", r.candidate);
                } else {
                    eprintln!("note: candidate {} FAILED: {}", r.candidate, r.reasons.join("; "));
                }
            }
            print_json(&resp);
            Ok(if resp.all_pass { 0 } else { 5 })
        }
    }
}
