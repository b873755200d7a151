use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use drstax_core::drs::Format;
use drstax_core::matcher::MatchMode;

mod commands;
mod io;

use io::CliError;

/// Taxonomical WordNet encodings, DRS format conversion and Smatch scoring.
#[derive(Debug, Parser)]
#[command(name = "drstax", version, about)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Concept dictionary TSV written by build-encodings.
    #[arg(long, global = true, env = "DRSTAX_DICT")]
    pub dict: Option<PathBuf>,
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads for corpus operations (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Print summaries as JSON and mirror each report as <report>.json.
    #[arg(long, global = true)]
    pub json: bool,
    /// More logging (-v info, -vv debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the taxonomy from WordNet and write the concept dictionary.
    BuildEncodings {
        /// Directory with the WordNet 3.0 data.* and index.* files.
        #[arg(long, env = "WORDNET_DIR")]
        wordnet: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Convert blocks between lps, wid and tax.
    Convert {
        #[arg(long)]
        from: Format,
        #[arg(long)]
        to: Format,
        /// Input file (blocks separated by blank lines); stdin when omitted.
        input: Option<PathBuf>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check blocks for dangling indices, cycles and malformed lines.
    Validate {
        #[arg(long, default_value = "lps")]
        format: Format,
        input: Option<PathBuf>,
        /// Per-block TSV: block, well_formed, faults.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Wu-Palmer similarity of two concepts.
    Similarity {
        a: String,
        b: String,
        /// Token format of A and B.
        #[arg(long, default_value = "lps")]
        format: Format,
        /// Score on the raw WordNet graph (needs --wordnet) instead of the codes.
        #[arg(long)]
        wordnet: Option<PathBuf>,
    },
    /// Hard or soft Smatch of predicted against gold blocks.
    Smatch {
        #[arg(long, default_value = "hard")]
        mode: MatchMode,
        #[arg(long, default_value = "lps")]
        format: Format,
        #[arg(long)]
        gold: PathBuf,
        #[arg(long)]
        pred: PathBuf,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        /// Per-block TSV report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Map tax or wid output back to lps, snapping unknown codes to the nearest concept.
    Interpret {
        #[arg(long)]
        format: Format,
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-token decisions as TSV.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Concept identification scores from pairs or from aligned corpora.
    ConceptId(ConceptIdArgs),
    /// Histogram of sense numbers in an lps corpus.
    SenseDist {
        input: PathBuf,
        #[arg(long, default_value = "lps")]
        format: Format,
        /// Histogram TSV; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Plot-ready CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ConceptIdArgs {
    /// Pairs TSV (gold, predicted, optional category/system/reference).
    #[arg(long, conflicts_with_all = ["gold", "pred", "targets"])]
    pub pairs: Option<PathBuf>,
    #[arg(long, requires_all = ["pred", "targets"])]
    pub gold: Option<PathBuf>,
    #[arg(long)]
    pub pred: Option<PathBuf>,
    /// Targets TSV: gold_mr_block_ref, target_lps, optional sentence.
    #[arg(long)]
    pub targets: Option<PathBuf>,
    /// Manual corrections: block, gold key, corrected prediction.
    #[arg(long)]
    pub review: Option<PathBuf>,
    #[arg(long, default_value = "lps")]
    pub format: Format,
    /// Matching mode used for the alignment.
    #[arg(long, default_value = "soft")]
    pub mode: MatchMode,
    /// Aligned pairs, loadable again with --pairs.
    #[arg(long)]
    pub pairs_out: Option<PathBuf>,
    /// Per-pair scores.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = &cli.global;
    match cli.command {
        Command::BuildEncodings { wordnet, out } => commands::build_encodings(g, &wordnet, &out),
        Command::Convert { from, to, input, out } => commands::convert(g, from, to, input, out),
        Command::Validate { format, input, report } => commands::validate(g, format, input, report),
        Command::Similarity { a, b, format, wordnet } => commands::similarity(g, &a, &b, format, wordnet),
        Command::Smatch {
            mode,
            format,
            gold,
            pred,
            restarts,
            report,
        } => commands::smatch(g, mode, format, &gold, &pred, restarts, report),
        Command::Interpret {
            format,
            input,
            out,
            trace,
        } => commands::interpret(g, format, input, out, trace),
        Command::ConceptId(args) => commands::concept_id(g, args),
        Command::SenseDist { input, format, out, csv } => commands::sense_dist(g, &input, format, out, csv),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let level = match cli.global.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();
    if let Some(n) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            log::warn!("could not size the worker pool: {e}");
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
