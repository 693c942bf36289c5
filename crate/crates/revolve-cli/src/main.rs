//! `revolve` — exact coverage analysis of surfaces of revolution.
//!
//! Subcommands: `analyze` (critical set of the classical parametrization),
//! `reachable` (exact reachability of a rational point), `implicitize`
//! (implicit equations of profile and surface) and `sample` (CSV export
//! for external plotting).
//!
//! Exit codes: 0 success, 1 input error, 2 degenerate or non-proper
//! profile, 3 internal invariant failure.

mod report;
mod sample;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use revolve_core::exactpoly::rat::rat_from_str;
use revolve_core::ratexpr::parse_ratfunc;
use revolve_core::{Point3, ProfileCurve, ProfileError, Rat};

#[derive(Parser)]
#[command(name = "revolve", version, about = "Critical sets of surface-of-revolution parametrizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report symmetry, normality and the critical set of the surface
    Analyze(AnalyzeArgs),
    /// Decide whether a rational point is reached by the parametrization
    Reachable(ReachableArgs),
    /// Print implicit equations: profile f, A/B split, or surface F
    Implicitize(ImplicitizeArgs),
    /// Export surface (and critical-set) samples as CSV
    Sample(SampleArgs),
}

#[derive(Args)]
struct ProfileArgs {
    /// Profile y-component p(t), e.g. "t^5/(t^4+1)"
    #[arg(long = "p", allow_hyphen_values = true)]
    p: String,
    /// Profile z-component q(t)
    #[arg(long = "q", allow_hyphen_values = true)]
    q: String,
    /// Trust the input to be proper instead of verifying (user-asserted)
    #[arg(long)]
    skip_proper_check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    profile: ProfileArgs,
    /// Also report the complex axis levels carrying line pairs
    #[arg(long)]
    complex: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ReachableArgs {
    #[command(flatten)]
    profile: ProfileArgs,
    /// Query point "x,y,z" with rational components, e.g. "0,1/2,1"
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum What {
    Profile,
    Surface,
    Ab,
}

#[derive(Args)]
struct ImplicitizeArgs {
    #[command(flatten)]
    profile: ProfileArgs,
    /// Which equation to print in text mode
    #[arg(long, value_enum, default_value = "profile")]
    what: What,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    profile: ProfileArgs,
    /// Grid resolution: n×n surface samples
    #[arg(long = "n")]
    n: usize,
    /// Rotation parameter range "a:b" (rational endpoints)
    #[arg(long, allow_hyphen_values = true)]
    s_range: String,
    /// Profile parameter range "a:b"
    #[arg(long, allow_hyphen_values = true)]
    t_range: String,
    /// Append mirror-curve, circle and point samples of the critical set
    #[arg(long)]
    include_critical: bool,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

enum CliError {
    /// Malformed expressions, points or ranges (exit 1).
    Input(String),
    /// Degenerate or non-proper profile (exit 2).
    Profile(ProfileError),
    /// Invariant violation inside the computation (exit 3).
    Internal(String),
}

impl From<ProfileError> for CliError {
    fn from(e: ProfileError) -> CliError {
        CliError::Profile(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = std::panic::catch_unwind(|| run(&cli.command));
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError::Input(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(CliError::Profile(e))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Ok(Err(CliError::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unexpected panic".to_string());
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: &Command) -> Result<(), CliError> {
    match command {
        Command::Analyze(args) => {
            let pc = build_profile(&args.profile)?;
            let started = std::time::Instant::now();
            let rep = report::analyze(&pc, &args.profile, args.complex)?;
            let elapsed = started.elapsed().as_millis();
            match args.format {
                Format::Json => println!("{}", report::to_json(&rep)),
                Format::Text => {
                    print!("{}", report::analyze_text(&rep));
                    println!("time: {elapsed} ms");
                }
            }
            Ok(())
        }
        Command::Reachable(args) => {
            let pc = build_profile(&args.profile)?;
            let point = parse_point(&args.point)?;
            let rep = report::reachability(&pc, &point);
            match args.format {
                Format::Json => println!("{}", report::to_json(&rep)),
                Format::Text => print!("{}", report::reachability_text(&rep)),
            }
            Ok(())
        }
        Command::Implicitize(args) => {
            let pc = build_profile(&args.profile)?;
            let rep = report::implicit_equations(&pc);
            match args.format {
                Format::Json => println!("{}", report::to_json(&rep)),
                Format::Text => {
                    let text = match args.what {
                        What::Profile => rep.f.clone(),
                        What::Surface => rep.big_f.clone(),
                        What::Ab => format!("A = {}\nB = {}", rep.a, rep.b),
                    };
                    println!("{text}");
                }
            }
            Ok(())
        }
        Command::Sample(args) => {
            let pc = build_profile(&args.profile)?;
            let spec = sample::SampleSpec {
                n: args.n,
                s_range: parse_range(&args.s_range)?,
                t_range: parse_range(&args.t_range)?,
                include_critical: args.include_critical,
            };
            let (csv, skipped) = sample::run(&pc, &spec);
            match &args.out {
                Some(path) => {
                    let mut file = std::fs::File::create(path)
                        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
                    file.write_all(csv.as_bytes())
                        .map_err(|e| CliError::Input(format!("write failed: {e}")))?;
                }
                None => print!("{csv}"),
            }
            if skipped > 0 {
                eprintln!("note: skipped {skipped} pole samples");
            }
            Ok(())
        }
    }
}

fn build_profile(args: &ProfileArgs) -> Result<ProfileCurve, CliError> {
    let p = parse_ratfunc(&args.p).map_err(|e| CliError::Input(format!("--p: {e}")))?;
    let q = parse_ratfunc(&args.q).map_err(|e| CliError::Input(format!("--q: {e}")))?;
    let pc = if args.skip_proper_check {
        ProfileCurve::new_assume_proper(p, q)?
    } else {
        ProfileCurve::new(p, q)?
    };
    Ok(pc)
}

fn parse_point(text: &str) -> Result<Point3, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Input(format!(
            "point must be \"x,y,z\", got {text:?}"
        )));
    }
    let coord = |s: &str| -> Result<Rat, CliError> {
        rat_from_str(s).map_err(CliError::Input)
    };
    Ok(Point3::new(coord(parts[0])?, coord(parts[1])?, coord(parts[2])?))
}

fn parse_range(text: &str) -> Result<(Rat, Rat), CliError> {
    let Some((a, b)) = text.split_once(':') else {
        return Err(CliError::Input(format!(
            "range must be \"a:b\", got {text:?}"
        )));
    };
    Ok((
        rat_from_str(a).map_err(CliError::Input)?,
        rat_from_str(b).map_err(CliError::Input)?,
    ))
}
