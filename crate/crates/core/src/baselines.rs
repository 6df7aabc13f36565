//! Reference instance selectors: random sampling, the no-approval rule and
//! the classical CNN, ENN, LSSm, LSBo and ICF methods.
//!
//! Every selector returns indices into the training set it was given, in
//! ascending order. A selector that would keep nothing returns its input
//! unchanged and sets [`SelectionResult::emptied`].

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{majority, nearest};
use crate::data::Dataset;
use crate::error::{Error, Result};
use crate::localset::LocalSetTable;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    Random { fraction: f64 },
    NoApproved,
    Cnn,
    Enn { k: usize },
    Lssm,
    Lsbo,
    Icf { k: usize },
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Random { fraction } => write!(f, "random-{fraction}"),
            Method::NoApproved => f.write_str("noapproved"),
            Method::Cnn => f.write_str("cnn"),
            Method::Enn { k } => write!(f, "enn-{k}"),
            Method::Lssm => f.write_str("lssm"),
            Method::Lsbo => f.write_str("lsbo"),
            Method::Icf { k } => write!(f, "icf-{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelectionResult {
    pub kept: Vec<usize>,
    pub method: Method,
    /// The method removed everything and the input was kept instead.
    pub emptied: bool,
    /// Instances removed by each filtering pass (ICF only).
    pub passes: Vec<usize>,
}

impl SelectionResult {
    fn new(method: Method, kept: Vec<usize>, n: usize) -> Self {
        let emptied = kept.is_empty();
        Self {
            kept: if emptied { (0..n).collect() } else { kept },
            method,
            emptied,
            passes: Vec::new(),
        }
    }

    pub fn reduction(&self, n: usize) -> f64 {
        (n - self.kept.len()) as f64 / n as f64
    }
}

/// Keeps `round(fraction * n)` instances drawn uniformly without
/// replacement.
pub fn select_random(train: &Dataset, fraction: f64, seed: u64) -> Result<SelectionResult> {
    select_random_with(train, fraction, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn select_random_with<R: Rng>(
    train: &Dataset,
    fraction: f64,
    rng: &mut R,
) -> Result<SelectionResult> {
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::Argument(format!("fraction must lie in (0, 1], got {fraction}")));
    }
    let n = train.len();
    let m = ((fraction * n as f64).round() as usize).min(n);
    let mut kept = sample(rng, n, m).into_vec();
    kept.sort_unstable();
    Ok(SelectionResult::new(Method::Random { fraction }, kept, n))
}

/// Keeps the instances that belong to the local set of some other instance.
pub fn select_noapproved(train: &Dataset) -> Result<SelectionResult> {
    let table = LocalSetTable::from_dataset(train)?;
    let mut approved = vec![false; train.len()];
    for (j, set) in table.local_sets().iter().enumerate() {
        for &i in set {
            if i != j {
                approved[i] = true;
            }
        }
    }
    let kept = (0..train.len()).filter(|&i| approved[i]).collect();
    Ok(SelectionResult::new(Method::NoApproved, kept, train.len()))
}

/// Edited nearest neighbour: drops, in one pass over the original set, every
/// instance whose `k` nearest other instances vote for a different label.
pub fn select_enn(train: &Dataset, k: usize) -> Result<SelectionResult> {
    let n = train.len();
    if k == 0 || n <= k {
        return Err(Error::Argument(format!(
            "ENN needs 1 <= K < n, got K = {k} with n = {n}"
        )));
    }
    let kept = enn_keep(train, &(0..n).collect::<Vec<_>>(), k);
    Ok(SelectionResult::new(Method::Enn { k }, kept, n))
}

fn enn_keep(ds: &Dataset, pool: &[usize], k: usize) -> Vec<usize> {
    pool.iter()
        .copied()
        .filter(|&i| {
            let neighbours = nearest(ds, pool, &ds.instance(i).features, k, Some(i));
            majority(ds, &neighbours) == ds.label(i)
        })
        .collect()
}

/// Local set-based smoother: drops instances that are the nearest enemy of
/// more instances than the number of local sets they belong to (their own
/// included).
pub fn select_lssm(train: &Dataset) -> Result<SelectionResult> {
    let table = LocalSetTable::from_dataset(train)?;
    let kept = lssm_keep(&table);
    Ok(SelectionResult::new(Method::Lssm, kept, train.len()))
}

fn lssm_keep(table: &LocalSetTable) -> Vec<usize> {
    let usefulness = table.coverage_counts();
    let harmfulness = table.enemy_counts();
    (0..table.len())
        .filter(|&i| harmfulness[i] <= usefulness[i])
        .collect()
}

/// Local set border selector: LSSm, then a greedy pass over the survivors in
/// ascending local-set size, adding an instance unless its local set (itself
/// excluded) already meets the selection.
pub fn select_lsbo(train: &Dataset) -> Result<SelectionResult> {
    let first = lssm_keep(&LocalSetTable::from_dataset(train)?);
    let smoothed = train.subset(&first);
    if first.is_empty() || smoothed.distinct_label_count() < 2 {
        return Ok(SelectionResult::new(Method::Lsbo, first, train.len()));
    }
    let table = LocalSetTable::from_dataset(&smoothed)?;
    let mut order: Vec<usize> = (0..smoothed.len()).collect();
    order.sort_by_key(|&i| (table.local_set(i).len(), i));
    let mut chosen = vec![false; smoothed.len()];
    for i in order {
        if !table.local_set(i).iter().any(|&j| j != i && chosen[j]) {
            chosen[i] = true;
        }
    }
    let mut kept: Vec<usize> = (0..smoothed.len())
        .filter(|&i| chosen[i])
        .map(|i| first[i])
        .collect();
    kept.sort_unstable();
    Ok(SelectionResult::new(Method::Lsbo, kept, train.len()))
}

/// Iterative case filtering: ENN, then repeated passes removing every
/// instance whose local set outnumbers the local sets it belongs to, until a
/// pass removes nothing. Stops early if only one class is left, and keeps
/// the last nonempty set if a pass would remove everything.
pub fn select_icf(train: &Dataset, k: usize) -> Result<SelectionResult> {
    let mut current = select_enn(train, k)?.kept;
    let mut passes = Vec::new();
    loop {
        let sub = train.subset(&current);
        if sub.distinct_label_count() < 2 {
            break;
        }
        let table = LocalSetTable::from_dataset(&sub)?;
        let coverage = table.coverage_counts();
        let next: Vec<usize> = (0..sub.len())
            .filter(|&i| table.local_set(i).len() <= coverage[i])
            .map(|i| current[i])
            .collect();
        let removed = current.len() - next.len();
        if removed == 0 || next.is_empty() {
            break;
        }
        passes.push(removed);
        current = next;
    }
    let mut result = SelectionResult::new(Method::Icf { k }, current, train.len());
    result.passes = passes;
    Ok(result)
}

/// Condensed nearest neighbour, seeded with instance 0. Sweeps the remaining
/// instances in index order, moving every instance 1-NN over the current
/// selection misclassifies into the selection, until a sweep moves nothing.
pub fn select_cnn(train: &Dataset) -> Result<SelectionResult> {
    let n = train.len();
    if n == 0 {
        return Err(Error::Argument("empty training set".into()));
    }
    let mut chosen = vec![false; n];
    chosen[0] = true;
    let mut selected = vec![0];
    loop {
        let mut moved = false;
        for i in 0..n {
            if chosen[i] {
                continue;
            }
            let nn = nearest(train, &selected, &train.instance(i).features, 1, None);
            if train.label(nn[0]) != train.label(i) {
                chosen[i] = true;
                selected.push(i);
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    selected.sort_unstable();
    Ok(SelectionResult::new(Method::Cnn, selected, n))
}
