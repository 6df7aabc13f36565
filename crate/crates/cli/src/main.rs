mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use voteselect::baselines::Method;
use voteselect::rational::parse_rational;
use voteselect::{BallotVariant, Rational, RuleId};

#[derive(Parser)]
#[command(name = "voteselect", version, about = "Instance selection by multi-winner approval voting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a dataset and write the kept instance indices, one per line.
    Reduce(ReduceArgs),
    /// Check a committee against EJR/PJR, the safe-trace conditions or the
    /// KNN guarantee.
    Verify(VerifyArgs),
    /// Cross-validate selectors over datasets and write a results table.
    Experiment(ExperimentArgs),
    /// Project a dataset onto its leading principal components.
    Pca(PcaArgs),
    /// Run every rule on a small election and print the traces.
    RulesDemo(DemoArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Sejr,
    S2ejr,
    Es,
    Seqp,
}

impl From<RuleArg> for RuleId {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Sejr => RuleId::Sejr,
            RuleArg::S2ejr => RuleId::S2ejr,
            RuleArg::Es => RuleId::EqualShares,
            RuleArg::Seqp => RuleId::SeqPhragmen,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Included,
    Excluded,
}

impl From<VariantArg> for BallotVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Included => BallotVariant::Included,
            VariantArg::Excluded => BallotVariant::Excluded,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum BaselineArg {
    /// No reduction.
    None,
    Random,
    Noapproved,
    Cnn,
    Enn,
    Lssm,
    Lsbo,
    Icf,
}

impl BaselineArg {
    fn method(self, fraction: f64, k: usize) -> Option<Method> {
        Some(match self {
            BaselineArg::None => return None,
            BaselineArg::Random => Method::Random { fraction },
            BaselineArg::Noapproved => Method::NoApproved,
            BaselineArg::Cnn => Method::Cnn,
            BaselineArg::Enn => Method::Enn { k },
            BaselineArg::Lssm => Method::Lssm,
            BaselineArg::Lsbo => Method::Lsbo,
            BaselineArg::Icf => Method::Icf { k },
        })
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum CheckArg {
    Ejr,
    Pjr,
    /// EJR for groups of cohesiveness 1 and 2.
    #[value(name = "2ejr")]
    TwoEjr,
    SafeTrace,
    TheoremKnn,
}

fn parse_q(s: &str) -> Result<Rational, String> {
    let q = parse_rational(s).map_err(|e| e.to_string())?;
    if q <= Rational::from_integer(0.into()) {
        return Err(format!("q must be positive, got {s}"));
    }
    Ok(q)
}

#[derive(Args)]
struct DataArgs {
    /// The first row holds data, not column names.
    #[arg(long)]
    no_header: bool,
    /// 0-based column holding the class label [default: last column].
    #[arg(long, value_name = "COL")]
    label_column: Option<usize>,
    /// Min-max scale every feature to [0, 1] before anything else.
    #[arg(long)]
    normalize: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("selector").required(true).args(["rule", "baseline"])))]
struct ReduceArgs {
    /// Comma-separated dataset, label last unless --label-column is given.
    dataset: PathBuf,
    /// Voting rule electing the reduced set.
    #[arg(long, value_enum)]
    rule: Option<RuleArg>,
    /// Baseline selector instead of a voting rule.
    #[arg(long, value_enum)]
    baseline: Option<BaselineArg>,
    /// Committee size as a fraction t/n of the voters ("3/2", "0.75").
    #[arg(long, value_parser = parse_q, default_value = "2")]
    q: Rational,
    /// Integer target committee size for seq-Phragmen [default: floor(q*n)].
    #[arg(long)]
    t: Option<usize>,
    /// Whether each instance approves itself.
    #[arg(long, value_enum, default_value = "included")]
    variant: VariantArg,
    /// Fraction kept by the random baseline.
    #[arg(long, default_value_t = 0.9)]
    fraction: f64,
    /// Neighbours used by the ENN and ICF baselines.
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Index file [default: standard output].
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[command(flatten)]
    data: DataArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["dataset", "election", "random"])))]
struct VerifyArgs {
    /// Dataset whose local-set election is checked.
    dataset: Option<PathBuf>,
    /// Election fixture file instead of a dataset.
    #[arg(long)]
    election: Option<PathBuf>,
    /// Check this many seeded random elections instead.
    #[arg(long, value_name = "COUNT")]
    random: Option<usize>,
    #[arg(long, value_enum)]
    rule: RuleArg,
    /// Checks to run, comma-separated.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    check: Vec<CheckArg>,
    /// t/n for dataset elections, or an override of a fixture's own q
    /// [default: 2 for datasets].
    #[arg(long, value_parser = parse_q)]
    q: Option<Rational>,
    /// Integer target committee size for seq-Phragmen [default: floor(q*n)].
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value = "included")]
    variant: VariantArg,
    /// KNN neighbours for theorem-knn.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Seed of the random election corpus.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Print reports for passing checks too.
    #[arg(long, short)]
    verbose: bool,
    #[command(flatten)]
    data: DataArgs,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Dataset names (looked up in --data-dir) or paths.
    datasets: Vec<String>,
    /// More datasets, comma-separated.
    #[arg(long = "datasets", value_delimiter = ',', value_name = "NAMES")]
    dataset_list: Vec<String>,
    /// Directory holding <name>.csv for named datasets.
    #[arg(long, default_value = "data")]
    data_dir: PathBuf,
    /// Voting rules, comma-separated.
    #[arg(long, value_enum, value_delimiter = ',')]
    rules: Vec<RuleArg>,
    /// t/n values, comma-separated.
    #[arg(long, value_parser = parse_q, value_delimiter = ',', default_value = "2")]
    q: Vec<Rational>,
    /// Ballot variants, comma-separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "included")]
    variant: Vec<VariantArg>,
    /// Baseline selectors, comma-separated.
    #[arg(long, value_enum, value_delimiter = ',')]
    baseline: Vec<BaselineArg>,
    /// Fraction kept by the random baseline.
    #[arg(long, default_value_t = 0.9)]
    fraction: f64,
    /// Every rule (or those in --rules) over the full t/n grids; --q is
    /// ignored.
    #[arg(long)]
    full_grid: bool,
    /// KNN neighbours, also used by ENN and ICF.
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 10)]
    folds: usize,
    /// Seed of the fold split and the random baseline.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Fill the seconds column (makes reruns differ).
    #[arg(long)]
    timings: bool,
    /// Results table [default: standard output].
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Accuracy/reduction points averaged over datasets.
    #[arg(long)]
    scatter: Option<PathBuf>,
    /// Published reference figures for the same datasets.
    #[arg(long)]
    published: Option<PathBuf>,
    #[command(flatten)]
    data: DataArgs,
}

#[derive(Args)]
struct PcaArgs {
    dataset: PathBuf,
    /// Number of components.
    #[arg(long, default_value_t = 2)]
    dims: usize,
    /// Projection file [default: standard output].
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[command(flatten)]
    data: DataArgs,
}

#[derive(Args)]
struct DemoArgs {
    /// Election fixture [default: four voters, ballots {0,1} {0,1} {2} {2}, q = 1].
    #[arg(long)]
    election: Option<PathBuf>,
    /// Override the election's t/n.
    #[arg(long, value_parser = parse_q)]
    q: Option<Rational>,
    /// Override the seq-Phragmen target size.
    #[arg(long)]
    t: Option<usize>,
    /// Rules to run, comma-separated [default: all].
    #[arg(long, value_enum, value_delimiter = ',')]
    rules: Vec<RuleArg>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Reduce(a) => commands::reduce(a),
        Command::Verify(a) => commands::verify(a),
        Command::Experiment(a) => commands::experiment(a),
        Command::Pca(a) => commands::pca(a),
        Command::RulesDemo(a) => commands::rules_demo(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("voteselect: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
