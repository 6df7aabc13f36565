use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use voteselect::axioms::{self, random_corpus};
use voteselect::baselines;
use voteselect::classify::check_theorem_pjr_knn;
use voteselect::data::{normalize_minmax, LabelColumn};
use voteselect::harness::{
    self, load_bundled, run_grid, seqp_grid, utcs_grid, ExperimentConfig, Selector,
};
use voteselect::pca::{pca_project, write_projection};
use voteselect::rational::{int, ratio};
use voteselect::{load_dataset, BallotVariant, Dataset, Election, LoadOptions, LocalSetTable, RuleId};

use crate::{
    BaselineArg, CheckArg, DataArgs, DemoArgs, ExperimentArgs, PcaArgs, ReduceArgs, VerifyArgs,
};

/// `print!` that reports failure instead of panicking, so a closed pipe
/// ends the run quietly.
macro_rules! say {
    ($($arg:tt)*) => {
        write!(io::stdout(), $($arg)*).map_err(|source| CliError::Write {
            path: "standard output".into(),
            source,
        })
    };
}

macro_rules! sayln {
    ($($arg:tt)*) => {
        writeln!(io::stdout(), $($arg)*).map_err(|source| CliError::Write {
            path: "standard output".into(),
            source,
        })
    };
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] voteselect::Error),
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    /// A check or experiment ran and reported failure.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    /// Output went to a reader that has gone away.
    pub fn is_broken_pipe(&self) -> bool {
        matches!(self, CliError::Write { source, .. } if source.kind() == io::ErrorKind::BrokenPipe)
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(e) if is_guard(e) => 3,
            _ => 1,
        }
    }
}

fn is_guard(e: &voteselect::Error) -> bool {
    match e {
        voteselect::Error::EnumerationBound { .. } => true,
        voteselect::Error::Fold { source, .. } => is_guard(source),
        _ => false,
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn load(path: &Path, data: &DataArgs) -> CliResult<Dataset> {
    let options = LoadOptions {
        has_header: !data.no_header,
        label_column: data.label_column.map_or(LabelColumn::Last, LabelColumn::Index),
    };
    let ds = load_dataset(path, options)?;
    Ok(if data.normalize { normalize_minmax(&ds) } else { ds })
}

struct Output {
    path: Option<PathBuf>,
    inner: Box<dyn Write>,
}

impl Output {
    fn open(path: Option<&Path>) -> CliResult<Self> {
        let inner: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|source| CliError::Write {
                path: p.to_path_buf(),
                source,
            })?)),
            None => Box::new(io::stdout().lock()),
        };
        Ok(Self {
            path: path.map(Path::to_path_buf),
            inner,
        })
    }

    fn is_stdout(&self) -> bool {
        self.path.is_none()
    }

    fn err(&self, source: io::Error) -> CliError {
        CliError::Write {
            path: self.path.clone().unwrap_or_else(|| "standard output".into()),
            source,
        }
    }

    fn line(&mut self, text: &str) -> CliResult {
        writeln!(self.inner, "{text}").map_err(|e| self.err(e))
    }

    fn finish(mut self) -> CliResult {
        self.inner.flush().map_err(|e| self.err(e))
    }
}

impl Write for Output {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.inner.write(buf)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

pub fn reduce(a: ReduceArgs) -> CliResult {
    let ds = load(&a.dataset, &a.data)?;
    let (kept, note) = match (a.rule, a.baseline) {
        (Some(rule), _) => {
            let table = LocalSetTable::from_dataset(&ds)?;
            let election = table.election(a.variant.into(), a.q.clone(), a.t)?;
            let (committee, _) = RuleId::from(rule).run(&election)?;
            let note = committee
                .fallback
                .then_some("no candidate met the rule's threshold; kept the most-approved instance");
            (committee.sorted(), note)
        }
        (None, Some(BaselineArg::None)) => ((0..ds.len()).collect(), None),
        (None, Some(b)) => {
            let method = b.method(a.fraction, a.k).expect("not the identity baseline");
            let result = match method {
                baselines::Method::Random { fraction } => baselines::select_random(&ds, fraction, a.seed)?,
                baselines::Method::NoApproved => baselines::select_noapproved(&ds)?,
                baselines::Method::Cnn => baselines::select_cnn(&ds)?,
                baselines::Method::Enn { k } => baselines::select_enn(&ds, k)?,
                baselines::Method::Lssm => baselines::select_lssm(&ds)?,
                baselines::Method::Lsbo => baselines::select_lsbo(&ds)?,
                baselines::Method::Icf { k } => baselines::select_icf(&ds, k)?,
            };
            let note = result
                .emptied
                .then_some("the baseline removed every instance; kept the whole input");
            (result.kept, note)
        }
        (None, None) => return Err(usage("one of --rule or --baseline is required")),
    };
    if let Some(note) = note {
        eprintln!("voteselect: {note}");
    }
    let mut out = Output::open(a.output.as_deref())?;
    for i in &kept {
        out.line(&i.to_string())?;
    }
    let summary = format!(
        "kept={} reduction={:.4}",
        kept.len(),
        (ds.len() - kept.len()) as f64 / ds.len() as f64
    );
    if out.is_stdout() {
        out.line(&summary)?;
        out.finish()
    } else {
        out.finish()?;
        sayln!("{summary}")?;
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    passed: usize,
    failed: usize,
    skipped: usize,
}

impl Tally {
    fn record(&mut self, label: &str, check: &str, verdict: Verdict, verbose: bool) -> CliResult {
        match verdict {
            Verdict::Pass(detail) => {
                self.passed += 1;
                sayln!("{label}{check}: pass")?;
                if verbose && !detail.is_empty() {
                    sayln!("{}", indent(&detail))?;
                }
            }
            Verdict::Fail(detail) => {
                self.failed += 1;
                sayln!("{label}{check}: FAIL")?;
                sayln!("{}", indent(&detail))?;
            }
            Verdict::Skip(why) => {
                self.skipped += 1;
                sayln!("{label}{check}: skipped ({why})")?;
            }
        }
        Ok(())
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n")
}

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn check_name(c: CheckArg) -> &'static str {
    match c {
        CheckArg::Ejr => "ejr",
        CheckArg::Pjr => "pjr",
        CheckArg::TwoEjr => "2ejr",
        CheckArg::SafeTrace => "safe-trace",
        CheckArg::TheoremKnn => "theorem-knn",
    }
}

/// Runs the election checks in `checks` on one election.
fn check_election(rule: RuleId, e: &Election, checks: &[CheckArg]) -> CliResult<Vec<(CheckArg, Verdict)>> {
    let mut verdicts = Vec::new();
    if rule == RuleId::SeqPhragmen && (e.t_int() == 0 || e.t_int() > e.num_candidates()) {
        for &c in checks {
            let why = format!("target size {} outside 1..={}", e.t_int(), e.num_candidates());
            verdicts.push((c, Verdict::Skip(why)));
        }
        return Ok(verdicts);
    }
    let (committee, trace) = rule.run(e)?;
    let w = committee.sorted();
    for &check in checks {
        let found = match check {
            CheckArg::Ejr => axioms::check_ejr(&w, e)?,
            CheckArg::Pjr => axioms::check_pjr(&w, e)?,
            CheckArg::TwoEjr => axioms::check_ejr_up_to(&w, e, 2)?,
            CheckArg::SafeTrace => {
                let report = axioms::check_safe_trace(&trace, e)?;
                let detail = report.to_string();
                let verdict = if report.all_safe() && report.lemma2_holds() {
                    Verdict::Pass(detail)
                } else {
                    Verdict::Fail(detail)
                };
                verdicts.push((check, verdict));
                continue;
            }
            CheckArg::TheoremKnn => unreachable!("rejected before any election is built"),
        };
        let committee_line = format!("committee {w:?}");
        verdicts.push((
            check,
            match found {
                None => Verdict::Pass(committee_line),
                Some(v) => Verdict::Fail(format!("{committee_line}\n{v}")),
            },
        ));
    }
    Ok(verdicts)
}

pub fn verify(a: VerifyArgs) -> CliResult {
    let rule = RuleId::from(a.rule);
    if a.check.contains(&CheckArg::SafeTrace) && rule != RuleId::EqualShares {
        return Err(usage("--check safe-trace needs --rule es"));
    }
    if a.check.contains(&CheckArg::TheoremKnn) && a.dataset.is_none() {
        return Err(usage("--check theorem-knn needs a dataset"));
    }
    let election_checks: Vec<CheckArg> = a
        .check
        .iter()
        .copied()
        .filter(|&c| c != CheckArg::TheoremKnn)
        .collect();
    let mut tally = Tally::default();

    if let Some(count) = a.random {
        for (idx, item) in random_corpus(a.seed, count).iter().enumerate() {
            let e = match &a.q {
                Some(q) => item.election.with_q(q.clone(), a.t)?,
                None => item.election.clone(),
            };
            let label = format!("election {idx} (n={}, q={}) ", e.num_voters(), e.q());
            for (c, v) in check_election(rule, &e, &election_checks)? {
                tally.record(&label, check_name(c), v, a.verbose)?;
            }
        }
    } else if let Some(path) = &a.election {
        let text = fs::read_to_string(path).map_err(|source| voteselect::Error::Io {
            path: path.clone(),
            source,
        })?;
        let mut e: Election = text.parse()?;
        if a.q.is_some() || a.t.is_some() {
            let q = a.q.clone().unwrap_or_else(|| e.q().clone());
            e = e.with_q(q, a.t)?;
        }
        for (c, v) in check_election(rule, &e, &election_checks)? {
            tally.record("", check_name(c), v, a.verbose)?;
        }
    } else if let Some(path) = &a.dataset {
        let ds = load(path, &a.data)?;
        if !election_checks.is_empty() {
            let table = LocalSetTable::from_dataset(&ds)?;
            let q = a.q.clone().unwrap_or_else(|| int(2));
            let e = table.election(a.variant.into(), q, a.t)?;
            for (c, v) in check_election(rule, &e, &election_checks)? {
                tally.record("", check_name(c), v, a.verbose)?;
            }
        }
        if a.check.contains(&CheckArg::TheoremKnn) {
            let report = check_theorem_pjr_knn(&ds, rule, a.k)?;
            let detail = format!(
                "K={} kept={} guaranteed={} failures={}",
                report.k,
                report.kept.len(),
                report.guaranteed.len(),
                report.failures.len()
            );
            let verdict = if report.holds() {
                Verdict::Pass(detail)
            } else {
                Verdict::Fail(format!("{detail}\nmisclassified: {:?}", report.failures))
            };
            tally.record("", "theorem-knn", verdict, true)?;
        }
    }

    sayln!(
        "checks={} passed={} failed={} skipped={}",
        tally.passed + tally.failed + tally.skipped,
        tally.passed,
        tally.failed,
        tally.skipped
    )?;
    if tally.failed > 0 {
        Err(CliError::Failed(format!("{} check(s) failed", tally.failed)))
    } else {
        Ok(())
    }
}

fn resolve_dataset(name: &str, dir: &Path, data: &DataArgs) -> CliResult<(String, Dataset)> {
    let as_path = Path::new(name);
    let ds = if as_path.is_file() {
        load(as_path, data)?
    } else {
        let ds = load_bundled(dir, name)?;
        if data.normalize { normalize_minmax(&ds) } else { ds }
    };
    let stem = as_path
        .file_stem()
        .map_or_else(|| name.to_string(), |s| s.to_string_lossy().into_owned());
    Ok((stem, ds))
}

pub fn experiment(a: ExperimentArgs) -> CliResult {
    let names: Vec<&String> = a.datasets.iter().chain(&a.dataset_list).collect();
    if names.is_empty() {
        return Err(usage("no datasets given"));
    }
    if a.k == 0 || a.k % 2 == 0 {
        return Err(usage(format!("--k must be a positive odd number, got {}", a.k)));
    }
    if a.folds < 2 {
        return Err(usage("--folds must be at least 2"));
    }
    if a.rules.is_empty() && a.baseline.is_empty() && !a.full_grid {
        return Err(usage("nothing to run: give --rules, --baseline or --full-grid"));
    }
    let datasets = names
        .iter()
        .map(|n| resolve_dataset(n, &a.data_dir, &a.data))
        .collect::<CliResult<Vec<_>>>()?;

    let rules: Vec<RuleId> = if a.rules.is_empty() && a.full_grid {
        RuleId::ALL.to_vec()
    } else {
        a.rules.iter().map(|&r| r.into()).collect()
    };
    let mut selectors = Vec::new();
    for &variant in &a.variant {
        let variant = BallotVariant::from(variant);
        for &rule in &rules {
            let qs = match (a.full_grid, rule) {
                (false, _) => a.q.clone(),
                (true, RuleId::SeqPhragmen) => seqp_grid(),
                (true, _) => utcs_grid(),
            };
            for q in qs {
                selectors.push(Selector::Rule { rule, q, variant });
            }
        }
    }
    for &b in &a.baseline {
        selectors.push(match b.method(a.fraction, a.k) {
            Some(m) => Selector::Baseline(m),
            None => Selector::None,
        });
    }
    let grid: Vec<ExperimentConfig> = selectors
        .into_iter()
        .map(|selector| ExperimentConfig {
            selector,
            k: a.k,
            folds: a.folds,
            seed: a.seed,
            normalize: false,
        })
        .collect();

    let report = run_grid(&datasets, &grid);

    let mut out = Output::open(a.output.as_deref())?;
    harness::write_results_csv(&report, &mut out, a.timings)?;
    let results_on_stdout = out.is_stdout();
    out.finish()?;
    if let Some(path) = &a.scatter {
        let mut out = Output::open(Some(path))?;
        harness::write_scatter_csv(&report, &mut out)?;
        out.finish()?;
    }
    if let Some(path) = &a.published {
        let names: Vec<String> = datasets.iter().map(|(n, _)| n.clone()).collect();
        let mut out = Output::open(Some(path))?;
        harness::write_published_csv(&names, &mut out)?;
        out.finish()?;
    }
    if !results_on_stdout {
        for row in report.averages() {
            sayln!(
                "average {} accuracy={:.4} reduction={:.4} datasets={}",
                row.config.selector, row.accuracy, row.reduction, row.count
            )?;
        }
    }
    for cell in &report.cells {
        if let Err(msg) = &cell.outcome {
            eprintln!("voteselect: {} {}: {msg}", cell.dataset, cell.config.selector);
        }
    }
    if report.failures() == report.cells.len() {
        return Err(CliError::Failed("every experiment cell failed".into()));
    }
    Ok(())
}

pub fn pca(a: PcaArgs) -> CliResult {
    let ds = load(&a.dataset, &a.data)?;
    let rows = pca_project(&ds, a.dims)?;
    let mut out = Output::open(a.output.as_deref())?;
    write_projection(&ds, &rows, &mut out)?;
    out.finish()
}

fn demo_election() -> Election {
    Election::new(4, vec![vec![0, 1], vec![0, 1], vec![2], vec![2]], ratio(1, 1), None)
        .expect("valid demo election")
}

pub fn rules_demo(a: DemoArgs) -> CliResult {
    let mut e = match &a.election {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|source| voteselect::Error::Io {
                path: path.clone(),
                source,
            })?;
            text.parse::<Election>()?
        }
        None => demo_election(),
    };
    if a.q.is_some() || a.t.is_some() {
        let q = a.q.clone().unwrap_or_else(|| e.q().clone());
        e = e.with_q(q, a.t)?;
    }
    let rules: Vec<RuleId> = if a.rules.is_empty() {
        RuleId::ALL.to_vec()
    } else {
        a.rules.iter().map(|&r| r.into()).collect()
    };
    say!("{e}")?;
    for rule in rules {
        sayln!()?;
        match rule.run(&e) {
            Ok((committee, trace)) => {
                let text = trace.to_string();
                say!("{text}")?;
                if !text.ends_with('\n') {
                    sayln!()?;
                }
                sayln!("committee={:?}", committee.members)?;
            }
            Err(err) => sayln!("rule={} error: {err}", rule.name())?,
        }
    }
    Ok(())
}
