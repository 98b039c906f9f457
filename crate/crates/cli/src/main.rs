use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use supercong_core::report::Suite;
use supercong_core::runner::{self, catalog, RunConfig, DEFAULT_SEED};

const CONFIG_ERROR: u8 = 2;

/// Exact verification of hypergeometric identities and p-adic congruences.
#[derive(Debug, Parser)]
#[command(name = "supercong", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the selected checks and report the results.
    Verify(VerifyArgs),
    /// Print the check catalog.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text, env = "SUPERCONG_FORMAT")]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Identities,
    Congruences,
    All,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// Suites to run (comma separated or repeated).
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all", env = "SUPERCONG_SUITE")]
    suite: Vec<SuiteArg>,
    /// Restrict to the named checks (repeatable).
    #[arg(long = "check", value_delimiter = ',', env = "SUPERCONG_CHECK")]
    checks: Vec<String>,
    #[arg(long, default_value_t = 5, env = "SUPERCONG_PRIME_MIN")]
    prime_min: u64,
    #[arg(long, default_value_t = 199, env = "SUPERCONG_PRIME_MAX")]
    prime_max: u64,
    /// Upper end of the identity parameter ranges.
    #[arg(long, default_value_t = 200, env = "SUPERCONG_MAX_N")]
    max_n: u64,
    /// Seed for sampled parameters; decimal or 0x-prefixed hex.
    #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED, env = "SUPERCONG_SEED")]
    seed: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "SUPERCONG_JOBS")]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text, env = "SUPERCONG_FORMAT")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, env = "SUPERCONG_OUTPUT")]
    output: Option<PathBuf>,
    /// Also run p = 3; its failures are reported as informational skips.
    #[arg(long, env = "SUPERCONG_INCLUDE_P3")]
    include_p3: bool,
    /// Print one line per evaluated instance in text output.
    #[arg(long, short, env = "SUPERCONG_VERBOSE")]
    verbose: bool,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

impl VerifyArgs {
    fn config(&self) -> RunConfig {
        let suites: BTreeSet<Suite> = self
            .suite
            .iter()
            .flat_map(|s| match s {
                SuiteArg::Identities => vec![Suite::Identities],
                SuiteArg::Congruences => vec![Suite::Congruences],
                SuiteArg::All => vec![Suite::Identities, Suite::Congruences],
            })
            .collect();
        let defaults = RunConfig::default();
        RunConfig {
            suites,
            checks: self.checks.clone(),
            prime_min: self.prime_min,
            prime_max: self.prime_max,
            max_n: self.max_n,
            seed: self.seed,
            jobs: self.jobs.unwrap_or(defaults.jobs),
            include_p3: self.include_p3,
        }
    }
}

fn verify(args: &VerifyArgs) -> ExitCode {
    let report = match runner::run(&args.config()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(CONFIG_ERROR);
        }
    };
    let body = match args.format {
        Format::Text => report.to_text(args.verbose),
        Format::Json => report.to_json(),
    };
    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(CONFIG_ERROR);
            }
            let s = report.summary;
            eprintln!("pass={} fail={} skipped={}", s.pass, s.fail, s.skipped);
        }
        None => print!("{body}"),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn list(format: Format) -> ExitCode {
    let entries = catalog();
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&entries).expect("catalog serializes"));
        }
        Format::Text => {
            for e in entries {
                println!("{} | {} | {} | {}", e.name, e.tag, e.modulus, e.domain);
            }
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify(args) => verify(args),
        Command::List { format } => list(*format),
    }
}
