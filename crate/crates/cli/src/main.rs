use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use apollonian_cli::{
    cmd_classify, cmd_diffplot, cmd_enumerate, cmd_missing, cmd_sporadic, cmd_verify,
    load_or_enumerate, parse_bound, parse_quad, CliError, Format,
};
use clap::{Args, Parser, Subcommand};

/// Classify integral Apollonian circle packings, predict their reciprocity
/// obstructions and check them against enumerated curvatures.
#[derive(Parser)]
#[command(name = "apollo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extended type, admissible residues and predicted obstructions (JSON).
    Classify {
        #[arg(long, allow_hyphen_values = true, value_name = "A,B,C,D")]
        quad: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate curvatures up to a bound and write an APBM bitmap.
    Enumerate {
        #[arg(long, allow_hyphen_values = true, value_name = "A,B,C,D")]
        quad: String,
        /// Largest curvature, e.g. 1000000 or 1e6.
        #[arg(long)]
        bound: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        threads: u16,
    },
    /// Admissible curvatures that do not occur, by residue class.
    Missing(ReportArgs),
    /// Missing curvatures outside the predicted obstruction families.
    Sporadic(ReportArgs),
    /// Check the predicted obstructions and congruence conditions.
    Verify(Source),
    /// Successive differences of a sporadic or missing report, as CSV.
    Diffplot {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Source {
    #[arg(long, allow_hyphen_values = true, value_name = "A,B,C,D")]
    quad: String,
    #[arg(long)]
    bound: Option<String>,
    /// Read curvatures from this bitmap instead of enumerating.
    #[arg(long)]
    bitmap: Option<PathBuf>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn load(
    src: &Source,
) -> Result<
    (
        apollonian::packing::Quadruple,
        apollonian::enumerate::CurvatureBitmap,
    ),
    CliError,
> {
    let q = parse_quad(&src.quad)?;
    let bound = src.bound.as_deref().map(parse_bound).transpose()?;
    let bm = load_or_enumerate(&q, bound, src.bitmap.as_deref(), src.threads as usize)?;
    Ok((q, bm))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { quad, out } => {
            let report = cmd_classify(&parse_quad(&quad)?)?;
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            emit(out.as_deref(), &text)
        }
        Command::Enumerate {
            quad,
            bound,
            out,
            threads,
        } => {
            let q = parse_quad(&quad)?;
            let s = cmd_enumerate(&q, parse_bound(&bound)?, threads as usize, &out)?;
            println!(
                "root {} bound {}: {} nodes, {} curvatures set, {:.3} s -> {}",
                s.root,
                s.bound,
                s.nodes,
                s.set_bits,
                s.elapsed.as_secs_f64(),
                out.display()
            );
            Ok(())
        }
        Command::Missing(args) => {
            let (q, bm) = load(&args.source)?;
            emit(args.out.as_deref(), &cmd_missing(&q, &bm, args.format)?)
        }
        Command::Sporadic(args) => {
            let (q, bm) = load(&args.source)?;
            emit(args.out.as_deref(), &cmd_sporadic(&q, &bm, args.format)?)
        }
        Command::Verify(src) => {
            let (q, bm) = load(&src)?;
            let v = cmd_verify(&q, &bm)?;
            print!("{}", v.render());
            match v.first_failure() {
                None => Ok(()),
                Some(c) => Err(CliError::Verification(format!(
                    "{} failed: {}",
                    c.name, c.detail
                ))),
            }
        }
        Command::Diffplot { input, out } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| CliError::Io(format!("{}: {e}", input.display())))?;
            emit(out.as_deref(), &cmd_diffplot(&text)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("apollo: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
