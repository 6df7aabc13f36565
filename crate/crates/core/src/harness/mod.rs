//! k-fold cross-validation of instance selectors with a KNN classifier.
//!
//! For every fold the remaining folds form the training set, the selector
//! reduces it (elections are rebuilt from that training set alone), and KNN
//! over the reduced set labels the held-out fold. Accuracy is the total
//! number of correct predictions over the dataset size; reduction is the
//! mean over folds of `(|train| - |kept|) / |train|`.

pub mod published;
mod report;

use std::borrow::Cow;
use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use report::{published_cell, write_published_csv, write_results_csv, write_scatter_csv, PublishedCell};

use crate::baselines::{self, Method, SelectionResult};
use crate::classify::count_correct;
use crate::data::{load_dataset, make_folds, normalize_minmax, Dataset, LoadOptions};
use crate::error::{Error, Result};
use crate::localset::{BallotVariant, LocalSetTable};
use crate::rational::{ratio, Rational};
use crate::voting::RuleId;

/// Datasets shipped in `data/`, each a headed CSV with the label last.
pub const BUNDLED_DATASETS: [&str; 5] = ["iris", "wine", "glass", "ecoli", "heart-statlog"];

/// Loads `<dir>/<name>.csv`. `heart` is accepted for `heart-statlog`.
pub fn load_bundled(dir: &std::path::Path, name: &str) -> Result<Dataset> {
    let file = match name {
        "heart" => "heart-statlog",
        other => other,
    };
    load_dataset(
        dir.join(format!("{file}.csv")),
        LoadOptions {
            has_header: true,
            ..LoadOptions::default()
        },
    )
}

/// `t/n` values used for SEJR, S2EJR and Equal Shares.
pub fn utcs_grid() -> Vec<Rational> {
    vec![ratio(2, 1), ratio(3, 2), ratio(1, 1), ratio(3, 4), ratio(1, 2), ratio(1, 4)]
}

/// `t/n` values used for seq-Phragmén: 0.9 down to 0.1.
pub fn seqp_grid() -> Vec<Rational> {
    (1..=9).rev().map(|k| ratio(k, 10)).collect()
}

/// Short decimal form of a ratio when one exists (`2`, `1.5`, `0.25`),
/// otherwise `a/b`.
pub fn format_q(q: &Rational) -> String {
    let mut scaled = q.clone();
    for digits in 0..=6 {
        if scaled.is_integer() {
            let int = scaled.to_integer().to_string();
            if digits == 0 {
                return int;
            }
            let (sign, body) = match int.strip_prefix('-') {
                Some(b) => ("-", b.to_string()),
                None => ("", int),
            };
            let body = format!("{body:0>width$}", width = digits + 1);
            let (whole, frac) = body.split_at(body.len() - digits);
            return format!("{sign}{whole}.{frac}");
        }
        scaled *= Rational::from_integer(10.into());
    }
    q.to_string()
}

#[derive(Debug, Clone, PartialEq)]
pub enum Selector {
    /// Train on the whole training set.
    None,
    Rule {
        rule: RuleId,
        q: Rational,
        variant: BallotVariant,
    },
    Baseline(Method),
}

impl Selector {
    pub fn name(&self) -> String {
        match self {
            Selector::None => "none".into(),
            Selector::Rule { rule, .. } => rule.name().into(),
            Selector::Baseline(m) => match m {
                Method::Random { .. } => "random".into(),
                other => other.to_string(),
            },
        }
    }

    pub fn q_label(&self) -> String {
        match self {
            Selector::Rule { q, .. } => format_q(q),
            Selector::Baseline(Method::Random { fraction }) => fraction.to_string(),
            _ => String::new(),
        }
    }

    pub fn variant_label(&self) -> String {
        match self {
            Selector::Rule { variant, .. } => variant.to_string(),
            _ => String::new(),
        }
    }

    fn select(&self, train: &Dataset, fold_seed: (u64, usize)) -> Result<Selection> {
        let n = train.len();
        match self {
            Selector::None => Ok(Selection::plain((0..n).collect())),
            Selector::Rule { rule, q, variant } => {
                let table = LocalSetTable::from_dataset(train)?;
                let election = table.election(*variant, q.clone(), None)?;
                let (committee, _) = rule.run(&election)?;
                let early = *rule == RuleId::SeqPhragmen && committee.len() < election.t_int();
                Ok(Selection {
                    kept: committee.sorted(),
                    fallback: committee.fallback,
                    early_stop: early,
                    emptied: false,
                })
            }
            Selector::Baseline(method) => {
                let result = run_baseline(*method, train, fold_seed)?;
                Ok(Selection {
                    emptied: result.emptied,
                    ..Selection::plain(result.kept)
                })
            }
        }
    }
}

impl fmt::Display for Selector {
    /// `sejr-2-included`, `random-0.9`, `none`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        let q = self.q_label();
        if !q.is_empty() {
            write!(f, "-{q}")?;
        }
        let v = self.variant_label();
        if !v.is_empty() {
            write!(f, "-{v}")?;
        }
        Ok(())
    }
}

fn run_baseline(method: Method, train: &Dataset, (seed, fold): (u64, usize)) -> Result<SelectionResult> {
    match method {
        Method::Random { fraction } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(fold as u64 + 1);
            baselines::select_random_with(train, fraction, &mut rng)
        }
        Method::NoApproved => baselines::select_noapproved(train),
        Method::Cnn => baselines::select_cnn(train),
        Method::Enn { k } => baselines::select_enn(train, k),
        Method::Lssm => baselines::select_lssm(train),
        Method::Lsbo => baselines::select_lsbo(train),
        Method::Icf { k } => baselines::select_icf(train, k),
    }
}

struct Selection {
    kept: Vec<usize>,
    fallback: bool,
    early_stop: bool,
    emptied: bool,
}

impl Selection {
    fn plain(kept: Vec<usize>) -> Self {
        Self {
            kept,
            fallback: false,
            early_stop: false,
            emptied: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub selector: Selector,
    /// Neighbours used by the KNN classifier.
    pub k: usize,
    pub folds: usize,
    pub seed: u64,
    /// Min-max scale the whole dataset before splitting.
    pub normalize: bool,
}

impl ExperimentConfig {
    pub fn new(selector: Selector) -> Self {
        Self {
            selector,
            k: 3,
            folds: 10,
            seed: 42,
            normalize: false,
        }
    }

    pub fn rule(rule: RuleId, q: Rational, variant: BallotVariant) -> Self {
        Self::new(Selector::Rule { rule, q, variant })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FoldResult {
    pub fold: usize,
    pub train_size: usize,
    pub kept: usize,
    pub test_size: usize,
    pub correct: usize,
    /// The rule elected nobody and fell back to the most-approved candidate.
    pub fallback: bool,
    /// seq-Phragmén ran out of approved candidates before `t` winners.
    pub early_stop: bool,
    /// A baseline removed everything and its input was kept.
    pub emptied: bool,
    pub seconds: f64,
}

impl FoldResult {
    pub fn reduction(&self) -> f64 {
        (self.train_size - self.kept) as f64 / self.train_size as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub dataset: String,
    pub config: ExperimentConfig,
    pub folds: Vec<FoldResult>,
    pub accuracy: f64,
    pub reduction: f64,
    pub seconds: f64,
}

impl ExperimentResult {
    /// `adapted-stop;fallback:2` style summary of unusual fold outcomes, or
    /// `-` when there are none.
    pub fn committee_flags(&self) -> String {
        let mut parts = Vec::new();
        if matches!(
            self.config.selector,
            Selector::Rule {
                rule: RuleId::SeqPhragmen,
                ..
            }
        ) {
            parts.push("adapted-stop".to_string());
        }
        let count = |f: fn(&FoldResult) -> bool| self.folds.iter().filter(|r| f(r)).count();
        for (name, n) in [
            ("fallback", count(|r| r.fallback)),
            ("early-stop", count(|r| r.early_stop)),
            ("emptied", count(|r| r.emptied)),
        ] {
            if n > 0 {
                parts.push(format!("{name}:{n}"));
            }
        }
        if parts.is_empty() {
            "-".into()
        } else {
            parts.join(";")
        }
    }
}

/// Runs one configuration on one dataset. Folds run in parallel; results do
/// not depend on scheduling.
pub fn run_experiment(name: &str, ds: &Dataset, cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    let start = Instant::now();
    let data: Cow<Dataset> = if cfg.normalize {
        Cow::Owned(normalize_minmax(ds))
    } else {
        Cow::Borrowed(ds)
    };
    let needs_two_classes = !matches!(
        cfg.selector,
        Selector::None | Selector::Baseline(Method::Random { .. } | Method::Cnn)
    );
    if needs_two_classes && data.distinct_label_count() < 2 {
        return Err(Error::NoEnemy { index: 0 });
    }
    let folds = make_folds(&data, cfg.folds, cfg.seed)?;
    let results = (0..cfg.folds)
        .into_par_iter()
        .map(|f| {
            run_fold(&data, &folds, f, cfg).map_err(|e| Error::Fold {
                fold: f,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let correct: usize = results.iter().map(|r| r.correct).sum();
    let reduction = results.iter().map(FoldResult::reduction).sum::<f64>() / results.len() as f64;
    Ok(ExperimentResult {
        dataset: name.to_string(),
        config: cfg.clone(),
        accuracy: correct as f64 / data.len() as f64,
        reduction,
        folds: results,
        seconds: start.elapsed().as_secs_f64(),
    })
}

fn run_fold(
    data: &Dataset,
    folds: &crate::data::FoldAssignment,
    fold: usize,
    cfg: &ExperimentConfig,
) -> Result<FoldResult> {
    let start = Instant::now();
    let train_idx = folds.complement(fold);
    let test_idx = folds.members(fold);
    let train = data.subset(&train_idx);
    let selection = cfg.selector.select(&train, (cfg.seed, fold))?;
    let kept: Vec<usize> = selection.kept.iter().map(|&i| train_idx[i]).collect();
    let correct = count_correct(data, &kept, &test_idx, cfg.k)?;
    Ok(FoldResult {
        fold,
        train_size: train_idx.len(),
        kept: kept.len(),
        test_size: test_idx.len(),
        correct,
        fallback: selection.fallback,
        early_stop: selection.early_stop,
        emptied: selection.emptied,
        seconds: start.elapsed().as_secs_f64(),
    })
}

#[derive(Debug, Clone)]
pub struct GridCell {
    pub dataset: String,
    pub config: ExperimentConfig,
    pub outcome: std::result::Result<ExperimentResult, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AverageRow {
    pub config: ExperimentConfig,
    pub accuracy: f64,
    pub reduction: f64,
    /// Datasets that contributed.
    pub count: usize,
}

#[derive(Debug, Clone)]
pub struct GridReport {
    /// One cell per (dataset, config), datasets outermost.
    pub cells: Vec<GridCell>,
}

impl GridReport {
    /// Mean accuracy and reduction of each config over its successful
    /// cells, in grid order.
    pub fn averages(&self) -> Vec<AverageRow> {
        let mut rows: Vec<AverageRow> = Vec::new();
        for cell in &self.cells {
            let Ok(result) = &cell.outcome else { continue };
            match rows.iter_mut().find(|r| r.config == cell.config) {
                Some(row) => {
                    row.accuracy += result.accuracy;
                    row.reduction += result.reduction;
                    row.count += 1;
                }
                None => rows.push(AverageRow {
                    config: cell.config.clone(),
                    accuracy: result.accuracy,
                    reduction: result.reduction,
                    count: 1,
                }),
            }
        }
        for row in &mut rows {
            row.accuracy /= row.count as f64;
            row.reduction /= row.count as f64;
        }
        rows
    }

    pub fn failures(&self) -> usize {
        self.cells.iter().filter(|c| c.outcome.is_err()).count()
    }
}

/// Every config on every dataset. Failing cells are recorded, not fatal.
pub fn run_grid(datasets: &[(String, Dataset)], grid: &[ExperimentConfig]) -> GridReport {
    let jobs: Vec<(&String, &Dataset, &ExperimentConfig)> = datasets
        .iter()
        .flat_map(|(name, ds)| grid.iter().map(move |cfg| (name, ds, cfg)))
        .collect();
    let cells = jobs
        .into_par_iter()
        .map(|(name, ds, cfg)| GridCell {
            dataset: name.clone(),
            config: cfg.clone(),
            outcome: run_experiment(name, ds, cfg).map_err(|e| e.to_string()),
        })
        .collect();
    GridReport { cells }
}
