use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fujita_cli::{run, CliError, Command, Format, JobSpec, Options, Report};

/// Exact-arithmetic analysis of cyclic covers of the line: eigenspace Hodge
/// data, hypergeometric monodromy finiteness, and direct-image decomposition
/// reports.
#[derive(Parser)]
#[command(name = "fujita", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Input JSON file; "-" reads standard input.
    #[arg(long, default_value = "-")]
    input: String,
    /// Output format.
    #[arg(long, value_parser = ["json", "text"], default_value = "json")]
    format: String,
}

#[derive(clap::Args)]
struct BoundedArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Element cap for the group-closure search.
    #[arg(long, default_value_t = fujita_core::DEFAULT_BFS_BOUND)]
    bfs_bound: usize,
}

#[derive(Subcommand)]
enum Sub {
    /// Genus, eigenspace dimensions, eigensheaf degrees and flatness flags of
    /// a cyclic cover from branch data.
    AnalyzeCover(CommonArgs),
    /// Riemann scheme, local orders, irreducibility and finiteness verdicts
    /// of a Gauss hypergeometric equation.
    ClassifyHg(CommonArgs),
    /// Exact monodromy generators, invariant Hermitian form, conjugate
    /// signatures and a group-closure search.
    Monodromy(BoundedArgs),
    /// Hirzebruch-Jung resolution string of a cyclic quotient singularity.
    ResolveSing(CommonArgs),
    /// Minimal local base-change order for semistable reduction.
    Reduce(CommonArgs),
    /// Full direct-image decomposition report with semi-ampleness verdict.
    FujitaReport(BoundedArgs),
    /// Consistency of the Kodaira-fibration degree identities.
    KodairaCheck(CommonArgs),
    /// Run a complete job object: {"command": ..., "input": ..., "options": ...}.
    Run(CommonArgs),
    /// Print the shipped JSON schema of the wire format.
    Schema,
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::new("io-error", format!("{e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::new("io-error", format!("{path}: {e}")))
    }
}

fn parse_format(s: &str) -> Format {
    if s == "text" {
        Format::Text
    } else {
        Format::Json
    }
}

fn job_from_body(
    command: Command,
    args: &CommonArgs,
    bfs_bound: Option<usize>,
) -> Result<(JobSpec, Format), CliError> {
    let text = read_input(&args.input)?;
    let input: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CliError::new("invalid-json", format!("{e}")))?;
    let mut options = Options::default();
    if let Some(b) = bfs_bound {
        options.bfs_bound = b;
    }
    let format = parse_format(&args.format);
    options.format = format;
    Ok((
        JobSpec {
            schema_version: fujita_cli::SCHEMA_VERSION,
            command,
            input,
            options,
        },
        format,
    ))
}

fn execute() -> Result<(Report, Format), CliError> {
    let cli = Cli::parse();
    let (job, format) = match &cli.command {
        Sub::AnalyzeCover(a) => job_from_body(Command::AnalyzeCover, a, None)?,
        Sub::ClassifyHg(a) => job_from_body(Command::ClassifyHg, a, None)?,
        Sub::Monodromy(a) => job_from_body(Command::Monodromy, &a.common, Some(a.bfs_bound))?,
        Sub::ResolveSing(a) => job_from_body(Command::ResolveSing, a, None)?,
        Sub::Reduce(a) => job_from_body(Command::Reduce, a, None)?,
        Sub::FujitaReport(a) => job_from_body(Command::FujitaReport, &a.common, Some(a.bfs_bound))?,
        Sub::KodairaCheck(a) => job_from_body(Command::KodairaCheck, a, None)?,
        Sub::Run(a) => {
            let text = read_input(&a.input)?;
            let job: JobSpec = serde_json::from_str(&text)
                .map_err(|e| CliError::new("schema-violation", format!("{e}")))?;
            let format = job.options.format;
            (job, format)
        }
        Sub::Schema => {
            print!("{}", fujita_cli::JSON_SCHEMA);
            std::process::exit(0);
        }
    };
    let report = run(&job)?;
    Ok((report, format))
}

fn main() -> ExitCode {
    match execute() {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!("{}", e.to_json());
            ExitCode::from(2)
        }
    }
}
