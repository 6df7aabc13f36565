//! K-nearest-neighbour classification over a subset of a dataset.

use rayon::prelude::*;

use crate::data::{squared_distance, Dataset, LabelId};
use crate::error::{Error, Result};
use crate::localset::{BallotVariant, LocalSetTable};
use crate::rational;
use crate::voting::RuleId;

/// KNN over the instances `train` of `ds`.
#[derive(Debug, Clone)]
pub struct KnnModel<'a> {
    ds: &'a Dataset,
    train: Vec<usize>,
    k: usize,
}

impl<'a> KnnModel<'a> {
    /// `k` must be odd and `train` nonempty.
    pub fn new(ds: &'a Dataset, train: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 || k % 2 == 0 {
            return Err(Error::Argument(format!("K must be a positive odd number, got {k}")));
        }
        if train.is_empty() {
            return Err(Error::Argument("empty training set".into()));
        }
        if let Some(&bad) = train.iter().find(|&&i| i >= ds.len()) {
            return Err(Error::Argument(format!("training index {bad} out of range")));
        }
        Ok(Self { ds, train, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn train(&self) -> &[usize] {
        &self.train
    }

    pub fn predict(&self, query: &[f64]) -> Result<LabelId> {
        if query.len() != self.ds.feature_count() {
            return Err(Error::Argument(format!(
                "query has {} features, expected {}",
                query.len(),
                self.ds.feature_count()
            )));
        }
        let neighbours = nearest(self.ds, &self.train, query, self.k, None);
        Ok(majority(self.ds, &neighbours))
    }

    /// Predicts instance `i` of the underlying dataset.
    pub fn predict_instance(&self, i: usize) -> LabelId {
        let neighbours = nearest(self.ds, &self.train, &self.ds.instance(i).features, self.k, None);
        majority(self.ds, &neighbours)
    }
}

/// The `k` members of `pool` closest to `query`, nearest first, ties by
/// lowest index. `skip` is left out of the pool.
pub(crate) fn nearest(
    ds: &Dataset,
    pool: &[usize],
    query: &[f64],
    k: usize,
    skip: Option<usize>,
) -> Vec<usize> {
    let mut scored: Vec<(f64, usize)> = pool
        .iter()
        .filter(|&&j| Some(j) != skip)
        .map(|&j| (squared_distance(query, &ds.instance(j).features), j))
        .collect();
    let order = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
    if scored.len() > k {
        scored.select_nth_unstable_by(k - 1, order);
        scored.truncate(k);
    }
    scored.sort_unstable_by(order);
    scored.into_iter().map(|(_, j)| j).collect()
}

/// Most frequent label among `neighbours` (nearest first). Between tied
/// labels, the one held by the nearest neighbour wins.
pub(crate) fn majority(ds: &Dataset, neighbours: &[usize]) -> LabelId {
    let mut counts = vec![0usize; ds.class_labels().len()];
    for &j in neighbours {
        counts[ds.label(j)] += 1;
    }
    let top = counts.iter().copied().max().unwrap_or(0);
    neighbours
        .iter()
        .map(|&j| ds.label(j))
        .find(|&l| counts[l] == top)
        .expect("at least one neighbour")
}

/// Number of `test` instances whose label KNN over `train` gets right.
pub fn count_correct(ds: &Dataset, train: &[usize], test: &[usize], k: usize) -> Result<usize> {
    let model = KnnModel::new(ds, train.to_vec(), k)?;
    Ok(test
        .par_iter()
        .filter(|&&i| model.predict_instance(i) == ds.label(i))
        .count())
}

/// Fraction of `test` classified correctly by KNN over `train`.
pub fn evaluate_accuracy(ds: &Dataset, train: &[usize], test: &[usize], k: usize) -> Result<f64> {
    if test.is_empty() {
        return Err(Error::Argument("empty test set".into()));
    }
    Ok(count_correct(ds, train, test, k)? as f64 / test.len() as f64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub rule: RuleId,
    pub k: usize,
    pub kept: Vec<usize>,
    /// Instances approving at least `(K+1)/2` candidates.
    pub guaranteed: Vec<usize>,
    /// Guaranteed instances that the reduced set misclassifies.
    pub failures: Vec<usize>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reduces `train` with `rule` at `q = (K+1)/2` on the self-approving
/// election, then checks that KNN over the reduced set classifies every
/// instance whose ballot has at least `(K+1)/2` members correctly.
///
/// This holds for rules satisfying `(K+1)/2`-PJR: SEJR and Equal Shares for
/// any odd `K`, S2EJR only up to `K = 3`.
pub fn check_theorem_pjr_knn(train: &Dataset, rule: RuleId, k: usize) -> Result<TheoremReport> {
    if k == 0 || k % 2 == 0 {
        return Err(Error::Argument(format!("K must be a positive odd number, got {k}")));
    }
    let ell = (k + 1) / 2;
    match rule {
        RuleId::Sejr | RuleId::EqualShares => {}
        RuleId::S2ejr if ell <= 2 => {}
        _ => {
            return Err(Error::Argument(format!(
                "{rule} does not guarantee {ell}-PJR, so the check does not apply for K = {k}"
            )))
        }
    }
    let table = LocalSetTable::from_dataset(train)?;
    let election = table.election(BallotVariant::Included, rational::int(ell), None)?;
    let (committee, _) = rule.run(&election)?;
    let kept = committee.sorted();
    let model = KnnModel::new(train, kept.clone(), k)?;
    let guaranteed: Vec<usize> = (0..train.len())
        .filter(|&i| election.ballot(i).len() >= ell)
        .collect();
    let failures = guaranteed
        .iter()
        .copied()
        .filter(|&i| model.predict_instance(i) != train.label(i))
        .collect();
    Ok(TheoremReport {
        rule,
        k,
        kept,
        guaranteed,
        failures,
    })
}
