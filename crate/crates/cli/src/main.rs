use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

#[derive(Parser, Debug)]
#[command(
    name = "pqg",
    version,
    about = "Partition calculus, fusion rules and fusion-set classification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for sampled verifications.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the partitions of one class with k upper and l lower points.
    Enumerate(EnumerateArgs),
    /// Check the functor laws of the tensor-map realization.
    TpVerify(TpVerifyArgs),
    /// Rank of the Gram matrix of a category's maps between two words.
    Gram(GramArgs),
    /// Tensor products of words in a free fusion semiring.
    FusionTable(FusionTableArgs),
    /// Fusion triple of a fusion set given as JSON.
    Classify { file: PathBuf },
    /// Fusion set realizing a fusion triple given as JSON.
    Realize { file: PathBuf },
    /// Word-set checks for the simplicity argument on a fusion set.
    Appendix(AppendixArgs),
    /// One-row classes of the category generated by the partitions in a file.
    Closure(ClosureArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("class").args(["all", "nc", "pair", "nc_pair"])))]
pub struct EnumerateArgs {
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub nc: bool,
    #[arg(long)]
    pub pair: bool,
    #[arg(long)]
    pub nc_pair: bool,
    pub k: usize,
    pub l: usize,
}

#[derive(Args, Debug)]
pub struct TpVerifyArgs {
    /// Largest number of points per row.
    #[arg(long, default_value_t = 2)]
    pub max_row: usize,
    /// Dimensions N to check; repeat the flag for several.
    #[arg(long = "dim", value_parser = clap::value_parser!(u64).range(1..), default_values_t = [1u64, 2, 3])]
    pub dims: Vec<u64>,
    /// Number of random pairs; 0 checks every pair.
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["builtin", "category"])))]
pub struct CategoryArgs {
    /// Builtin category: ALL, NC or NC2.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Category descriptor JSON file.
    #[arg(long)]
    pub category: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GramArgs {
    #[command(flatten)]
    pub source: CategoryArgs,
    /// Upper colour word, names separated by commas.
    #[arg(long, default_value = "")]
    pub upper: String,
    /// Lower colour word, names separated by commas.
    #[arg(long, default_value = "")]
    pub lower: String,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub dim: u64,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("fsource").required(true).args(["builtin", "category", "fusion_set"])))]
pub struct FusionTableArgs {
    /// Builtin category: ALL, NC or NC2.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Category descriptor JSON file.
    #[arg(long)]
    pub category: Option<PathBuf>,
    /// Fusion set JSON file.
    #[arg(long)]
    pub fusion_set: Option<PathBuf>,
    /// Use only the first this many elements as letters of the factors.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub letters: Option<u64>,
    /// Longest factor word.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub maxlen: u64,
    /// Point bound for computing the one-block classes of a category.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: u64,
}

#[derive(Args, Debug)]
pub struct AppendixArgs {
    pub file: PathBuf,
    /// Element β, by name or index.
    #[arg(long)]
    pub beta: String,
    /// Element γ, by name or index.
    #[arg(long)]
    pub gamma: String,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    pub maxlen: u64,
}

#[derive(Args, Debug)]
pub struct ClosureArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: u64,
    /// Extra points allowed in intermediate results; defaults to the bound.
    #[arg(long)]
    pub slack: Option<u64>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let message = rendered
                .lines()
                .take_while(|line| !line.starts_with("Usage:"))
                .map(str::trim)
                .filter(|line| !line.is_empty())
                .collect::<Vec<_>>()
                .join(" ");
            let message = message.trim_start_matches("error: ");
            println!(
                "{}",
                serde_json::json!({ "status": "error", "kind": "Usage", "message": message })
            );
            return ExitCode::FAILURE;
        }
    };
    let result = match &cli.command {
        Command::Enumerate(a) => commands::enumerate(a),
        Command::TpVerify(a) => commands::tp_verify(a, cli.seed),
        Command::Gram(a) => commands::gram(a),
        Command::FusionTable(a) => commands::fusion_table(a),
        Command::Classify { file } => commands::classify(file),
        Command::Realize { file } => commands::realize(file),
        Command::Appendix(a) => commands::appendix(a),
        Command::Closure(a) => commands::closure(a),
    };
    match result {
        Ok(out) => {
            out.print(cli.format);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            println!("{}", commands::failure_record(&e));
            ExitCode::FAILURE
        }
    }
}
