use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "fieldnet", version, about = "Aligned network diagonalization over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub m: usize,
    /// Generating polynomial, e.g. "1 + x + x^3" or "[1,1,0,1]".
    #[arg(long)]
    pub pi: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Comma-separated primes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub p: Vec<u32>,
    /// Comma-separated extension degrees.
    #[arg(long, value_delimiter = ',', required = true)]
    pub m: Vec<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct MessageArgs {
    /// Source 1 symbols, comma separated (default all zero).
    #[arg(long, value_delimiter = ',')]
    pub w1: Option<Vec<u32>>,
    /// Source 2 symbols, comma separated (default all zero).
    #[arg(long, value_delimiter = ',')]
    pub w2: Option<Vec<u32>>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Generating polynomial, primitive element and companion matrix.
    FieldInfo(FieldArgs),
    /// Every valid channel of a small field: feasibility and decoding.
    Scan(FieldArgs),
    /// Monte Carlo feasibility sweep.
    Mc {
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Exact feasibility fraction, lower bound and normalized rate.
    Bounds {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// End-to-end simulation of a scalar channel file.
    Simulate {
        #[arg(long)]
        channel: PathBuf,
        #[command(flatten)]
        msg: MessageArgs,
    },
    /// End-to-end simulation of a MIMO channel, from a file or drawn at random.
    SymbolExt {
        #[arg(long, conflicts_with_all = ["p", "m"])]
        channel: Option<PathBuf>,
        #[arg(long, requires = "m")]
        p: Option<u32>,
        #[arg(long, requires = "p")]
        m: Option<usize>,
        /// Required when drawing a random channel.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        msg: MessageArgs,
    },
    /// Field extension against diagonal symbol extension.
    CompareExt {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

/// Validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        if let Some(out) = &cli.out {
            let parent = out.parent().filter(|p| !p.as_os_str().is_empty());
            if let Some(dir) = parent {
                if !dir.is_dir() {
                    return Err(format!("output directory {} does not exist", dir.display()));
                }
            }
        }
        match &cli.command {
            Command::Simulate { channel, .. } | Command::SymbolExt { channel: Some(channel), .. } => {
                if !channel.is_file() {
                    return Err(format!("channel file {} not found", channel.display()));
                }
            }
            Command::SymbolExt { channel: None, p, seed, .. } => {
                if p.is_none() {
                    return Err("symbol-ext needs --channel or --p/--m".into());
                }
                if seed.is_none() {
                    return Err("--seed is required when drawing a random channel".into());
                }
            }
            Command::Mc { trials, .. } | Command::CompareExt { trials, .. } if *trials == 0 => {
                return Err("--trials must be at least 1".into());
            }
            _ => {}
        }
        let csv_ok = matches!(cli.command, Command::Mc { .. } | Command::Bounds { .. });
        if cli.format == Format::Csv && !csv_ok {
            return Err("csv output is only available for mc and bounds".into());
        }
        Ok(RunConfig { command: cli.command, out: cli.out, format: cli.format })
    }
}
