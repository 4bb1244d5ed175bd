//! `reptree`: command-line front end.
//!
//! Exit codes: 0 success, 1 domain negative (witness found, table row
//! failed, tree exhausted before the target), 2 usage or parse error,
//! 3 budget exceeded.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "reptree",
    version,
    about = "Generalized repetition avoidance in words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check words read from stdin, one per line, for freeness.
    Check {
        #[arg(long)]
        k: usize,
        /// Forbidden repetitions, e.g. "3/2+ @ 2".
        #[arg(long)]
        spec: String,
    },
    /// Explore the whole avoidance tree and print its statistics.
    Tree {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Depth at which the tree is split between workers.
        #[arg(long)]
        split_depth: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Write a resumable snapshot to this file while exploring.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Snapshot cadence in visited nodes.
        #[arg(long, default_value_t = 10_000_000)]
        checkpoint_every: u64,
        /// Continue from a snapshot.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Depth-first search for the lexicographically least free word of a
    /// given length.
    Grow {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        spec: String,
        #[arg(long)]
        target: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Recompute tabulated tree statistics and compare them exactly.
    Table {
        #[arg(long, value_enum, default_value_t = TierFilter::Fast)]
        tier: TierFilter,
        /// Select rows by "k,ℓ,alpha" (any tier).
        #[arg(long)]
        row: Vec<String>,
        #[arg(long, default_value_t = 1)]
        shards: usize,
    },
    /// Uniform morphism tools.
    #[command(subcommand)]
    Morphism(MorphismCommand),
}

#[derive(Subcommand)]
enum MorphismCommand {
    /// Test the synchronizing property of a uniform morphism.
    VerifySync(MorphismSource),
    /// Map a 7/5+-free quaternary word through h and check the image for
    /// (3/2+, 2)-freeness.
    Theorem3 {
        #[arg(long, default_value_t = 600)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Exhaustively check images of all short free source words for
    /// repetitions with small periods.
    Smallcase {
        #[command(flatten)]
        source: MorphismSource,
        #[arg(long, default_value = "7/5+ @ 1")]
        source_spec: String,
        #[arg(long, default_value = "3/2+ @ 2")]
        image_spec: String,
        #[arg(long, default_value_t = 100)]
        max_root: usize,
        /// Abandon after this many source words.
        #[arg(long, default_value_t = 100_000_000)]
        cap: u64,
    },
}

#[derive(Args)]
struct MorphismSource {
    /// Built-in morphism name.
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
    /// File with one "LETTER -> IMAGE" line per source letter.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    #[arg(long)]
    max_nodes: Option<u64>,
    #[arg(long)]
    max_depth: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TierFilter {
    Fast,
    Slow,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Check { k, spec } => commands::check(k, &spec),
        Command::Tree {
            k,
            spec,
            budget,
            shards,
            split_depth,
            json,
            checkpoint,
            checkpoint_every,
            resume,
        } => commands::tree(commands::TreeArgs {
            k,
            spec,
            budget: budget.into(),
            shards,
            split_depth,
            json,
            checkpoint,
            checkpoint_every,
            resume,
        }),
        Command::Grow {
            k,
            spec,
            target,
            budget,
        } => commands::grow(k, &spec, target, budget.into()),
        Command::Table { tier, row, shards } => commands::table(tier.into(), &row, shards),
        Command::Morphism(MorphismCommand::VerifySync(src)) => {
            commands::verify_sync(src.builtin.as_deref(), src.file.as_deref())
        }
        Command::Morphism(MorphismCommand::Theorem3 { n, budget }) => {
            commands::theorem3(n, budget.into())
        }
        Command::Morphism(MorphismCommand::Smallcase {
            source,
            source_spec,
            image_spec,
            max_root,
            cap,
        }) => commands::smallcase(
            source.builtin.as_deref(),
            source.file.as_deref(),
            &source_spec,
            &image_spec,
            max_root,
            cap,
        ),
    };
    ExitCode::from(status as u8)
}

impl From<BudgetArgs> for reptree::Budget {
    fn from(b: BudgetArgs) -> Self {
        reptree::Budget {
            max_nodes: b.max_nodes,
            max_depth: b.max_depth,
        }
    }
}

impl From<TierFilter> for Option<reptree::table::Tier> {
    fn from(t: TierFilter) -> Self {
        match t {
            TierFilter::Fast => Some(reptree::table::Tier::Fast),
            TierFilter::Slow => Some(reptree::table::Tier::Slow),
            TierFilter::All => None,
        }
    }
}
