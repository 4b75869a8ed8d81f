use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use codezeta::cli::{self, CliError, CodeView, FfInput};
use codezeta::code::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(name = "codezeta", version, about = "Zeta polynomials of linear codes and function fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a linear code given as JSON.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Function-field analysis.
    #[command(subcommand)]
    Ff(FfCmd),
    /// Emit a built-in code.
    Fixtures {
        #[arg(long)]
        name: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random generators.
    #[command(subcommand)]
    Rand(RandCmd),
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Full report.
    Analyze(CodeArgs),
    /// Weight distributions of the code and its dual.
    Wdist(CodeArgs),
    /// Zeta and reduced polynomials.
    Zeta(CodeArgs),
    /// Formal self-duality checks.
    Fsd(CodeArgs),
    /// Riemann hypothesis analogue.
    Rha(CodeArgs),
}

#[derive(Args)]
struct CodeArgs {
    /// Code JSON file.
    #[arg(long, conflicts_with = "dir", required_unless_present = "dir")]
    input: Option<PathBuf>,
    /// Analyse every JSON file in a directory (`--out` is then a directory).
    #[arg(long)]
    dir: Option<PathBuf>,
    /// Write JSON here instead of a table to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Maximum number of codewords to enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Print JSON instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum FfCmd {
    Analyze {
        /// L-polynomial coefficients, comma separated.
        #[arg(long, conflicts_with = "points", required_unless_present = "points", allow_hyphen_values = true)]
        lpoly: Option<String>,
        /// Point counts N_1..N_g, comma separated.
        #[arg(long)]
        points: Option<String>,
        #[arg(long)]
        q: u64,
        /// Number of B_i terms (default 3g).
        #[arg(long)]
        window: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RandCmd {
    /// Random full-rank code with no zero column.
    Code {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn print(text: Option<String>) {
    if let Some(t) = text {
        println!("{t}");
    }
}

fn run_code(args: CodeArgs, view: CodeView) -> Result<(), CliError> {
    if let Some(dir) = &args.dir {
        let results = cli::cmd_code_analyze_dir(dir, args.budget)?;
        let mut worst = None;
        for (path, r) in results {
            match r {
                Ok(report) => match &args.out {
                    Some(out) => {
                        std::fs::create_dir_all(out)
                            .map_err(|e| CliError::validation(format!("IoError: {}: {e}", out.display())))?;
                        let name = path.file_name().expect("file name");
                        cli::emit_json(&report.view_json(view), Some(&out.join(name)))?;
                    }
                    None => println!("== {}\n{}", path.display(), report.table(view)),
                },
                Err(e) => {
                    eprintln!("{}", serde_json::json!({ "file": path, "error": e.kind, "message": e.message }));
                    if worst.as_ref().is_none_or(|w: &CliError| w.exit_code < e.exit_code) {
                        worst = Some(e);
                    }
                }
            }
        }
        return worst.map_or(Ok(()), Err);
    }
    let input = args.input.expect("clap enforces --input or --dir");
    let report = cli::cmd_code_analyze(&input, args.budget)?;
    if args.out.is_some() || args.json {
        print(cli::emit_json(&report.view_json(view), args.out.as_deref())?);
    } else {
        print!("{}", report.table(view));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Code(c) => match c {
            CodeCmd::Analyze(a) => run_code(a, CodeView::Analyze),
            CodeCmd::Wdist(a) => run_code(a, CodeView::Wdist),
            CodeCmd::Zeta(a) => run_code(a, CodeView::Zeta),
            CodeCmd::Fsd(a) => run_code(a, CodeView::Fsd),
            CodeCmd::Rha(a) => run_code(a, CodeView::Rha),
        },
        Command::Ff(FfCmd::Analyze { lpoly, points, q, window, out, json }) => {
            let input = match (lpoly, points) {
                (Some(l), _) => FfInput::LPoly(cli::parse_int_list(&l)?),
                (None, Some(p)) => FfInput::Points(cli::parse_int_list(&p)?),
                (None, None) => unreachable!("clap enforces --lpoly or --points"),
            };
            let report = cli::cmd_ff_analyze(&input, q, window)?;
            if out.is_some() || json {
                print(cli::emit_json(&report, out.as_deref())?);
            } else {
                print!("{}", report.table());
            }
            Ok(())
        }
        Command::Fixtures { name, q, n, k, out } => {
            print(cli::emit_json(&cli::cmd_fixtures(&name, q, n, k)?, out.as_deref())?);
            Ok(())
        }
        Command::Rand(RandCmd::Code { q, n, k, seed, out }) => {
            print(cli::emit_json(&cli::cmd_random_code(q, n, k, seed)?, out.as_deref())?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code as u8)
        }
    }
}
