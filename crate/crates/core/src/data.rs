//! Datasets, Euclidean distances, cross-validation folds and min-max scaling.
//!
//! Instance indices are positions in the containing [`Dataset`] and double as
//! the global tie-breaking order: whenever two instances are otherwise
//! indistinguishable, the one with the lower index wins.

use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Identifier of a class label inside a [`Dataset`]'s label alphabet.
pub type LabelId = usize;

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub index: usize,
    pub features: Vec<f64>,
    pub label: LabelId,
}

/// An ordered list of labelled feature vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    instances: Vec<Instance>,
    feature_count: usize,
    class_labels: Vec<String>,
}

/// Where the class label lives in each row of a comma-separated file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelColumn {
    #[default]
    Last,
    /// 0-based column position.
    Index(usize),
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LoadOptions {
    pub has_header: bool,
    pub label_column: LabelColumn,
}

impl Dataset {
    /// Builds a dataset from parallel feature rows and label strings. Label
    /// ids are assigned in order of first appearance.
    pub fn from_rows<S: AsRef<str>>(features: Vec<Vec<f64>>, labels: &[S]) -> Result<Self> {
        if features.len() != labels.len() {
            return Err(Error::Dimension {
                expected: features.len(),
                got: labels.len(),
            });
        }
        let feature_count = features.first().map_or(0, Vec::len);
        let mut class_labels: Vec<String> = Vec::new();
        let mut instances = Vec::with_capacity(features.len());
        for (index, (row, label)) in features.into_iter().zip(labels).enumerate() {
            if row.len() != feature_count {
                return Err(Error::Format(format!(
                    "instance {index} has {} features, expected {feature_count}",
                    row.len()
                )));
            }
            if let Some(column) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::Format(format!(
                    "instance {index} has a non-finite value in feature {column}"
                )));
            }
            let label = label.as_ref();
            let id = match class_labels.iter().position(|l| l == label) {
                Some(id) => id,
                None => {
                    class_labels.push(label.to_string());
                    class_labels.len() - 1
                }
            };
            instances.push(Instance {
                index,
                features: row,
                label: id,
            });
        }
        Ok(Self {
            instances,
            feature_count,
            class_labels,
        })
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn feature_count(&self) -> usize {
        self.feature_count
    }

    pub fn instances(&self) -> &[Instance] {
        &self.instances
    }

    pub fn instance(&self, index: usize) -> &Instance {
        &self.instances[index]
    }

    pub fn class_labels(&self) -> &[String] {
        &self.class_labels
    }

    pub fn label_name(&self, id: LabelId) -> &str {
        &self.class_labels[id]
    }

    pub fn label(&self, index: usize) -> LabelId {
        self.instances[index].label
    }

    /// Number of distinct labels actually carried by instances.
    pub fn distinct_label_count(&self) -> usize {
        let mut seen = vec![false; self.class_labels.len()];
        for inst in &self.instances {
            seen[inst.label] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// Returns the instances at `indices` (in that order) as a new dataset
    /// whose instance indices are re-numbered from 0. The label alphabet is
    /// shared with `self`, so label ids stay comparable.
    pub fn subset(&self, indices: &[usize]) -> Dataset {
        let instances = indices
            .iter()
            .enumerate()
            .map(|(pos, &i)| Instance {
                index: pos,
                features: self.instances[i].features.clone(),
                label: self.instances[i].label,
            })
            .collect();
        Dataset {
            instances,
            feature_count: self.feature_count,
            class_labels: self.class_labels.clone(),
        }
    }
}

/// Reads a comma-separated dataset file.
pub fn load_dataset(path: impl AsRef<Path>, options: LoadOptions) -> Result<Dataset> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_dataset(&text, options)
}

/// Parses comma-separated text; see [`load_dataset`].
pub fn parse_dataset(text: &str, options: LoadOptions) -> Result<Dataset> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(options.has_header)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut features = Vec::new();
    let mut labels = Vec::new();
    let mut width = None;
    for (pos, record) in reader.records().enumerate() {
        let row = pos + 1;
        let record = record.map_err(|e| Error::Format(format!("row {row}: {e}")))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let columns = record.len();
        match width {
            None => {
                if columns < 2 {
                    return Err(Error::Format(format!(
                        "row {row} has {columns} column(s); need at least one feature and a label"
                    )));
                }
                width = Some(columns);
            }
            Some(w) if w != columns => {
                return Err(Error::Format(format!(
                    "row {row} has {columns} columns, expected {w}"
                )));
            }
            Some(_) => {}
        }
        let label_at = match options.label_column {
            LabelColumn::Last => columns - 1,
            LabelColumn::Index(i) if i < columns => i,
            LabelColumn::Index(i) => {
                return Err(Error::Argument(format!(
                    "label column {} out of range for {columns} columns",
                    i + 1
                )))
            }
        };
        let mut values = Vec::with_capacity(columns - 1);
        for (col, cell) in record.iter().enumerate() {
            if col == label_at {
                continue;
            }
            match cell.parse::<f64>() {
                Ok(v) if v.is_finite() => values.push(v),
                _ => {
                    return Err(Error::Parse {
                        row,
                        column: col + 1,
                        value: cell.to_string(),
                    })
                }
            }
        }
        features.push(values);
        labels.push(record[label_at].to_string());
    }
    if features.is_empty() {
        return Err(Error::Format("no data rows".into()));
    }
    Dataset::from_rows(features, &labels)
}

pub fn euclidean_distance(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Dimension {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(squared_distance(a, b).sqrt())
}

#[inline]
pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Dense symmetric matrix of pairwise Euclidean distances.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }
}

/// Rows are computed in parallel. Each entry depends only on its own pair of
/// feature vectors, so the result is identical to a sequential computation.
pub fn distance_matrix(ds: &Dataset) -> DistanceMatrix {
    let n = ds.len();
    let mut entries = vec![0.0; n * n];
    entries
        .par_chunks_mut(n.max(1))
        .enumerate()
        .for_each(|(i, row)| {
            let fi = &ds.instances[i].features;
            for (j, slot) in row.iter_mut().enumerate() {
                if i != j {
                    *slot = squared_distance(fi, &ds.instances[j].features).sqrt();
                }
            }
        });
    DistanceMatrix { n, entries }
}

/// Assignment of every instance to one of `k` cross-validation folds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldAssignment {
    pub k: usize,
    pub fold_of: Vec<usize>,
    pub seed: u64,
}

impl FoldAssignment {
    /// Instance indices in fold `fold`, ascending.
    pub fn members(&self, fold: usize) -> Vec<usize> {
        (0..self.fold_of.len())
            .filter(|&i| self.fold_of[i] == fold)
            .collect()
    }

    /// Instance indices outside fold `fold`, ascending.
    pub fn complement(&self, fold: usize) -> Vec<usize> {
        (0..self.fold_of.len())
            .filter(|&i| self.fold_of[i] != fold)
            .collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &f in &self.fold_of {
            sizes[f] += 1;
        }
        sizes
    }
}

/// Seeded Fisher-Yates shuffle of the indices followed by a split into `k`
/// contiguous blocks; the first `n mod k` blocks get one extra instance.
pub fn make_folds(ds: &Dataset, k: usize, seed: u64) -> Result<FoldAssignment> {
    let n = ds.len();
    if k == 0 || k > n {
        return Err(Error::Argument(format!(
            "fold count {k} must be between 1 and the number of instances ({n})"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);

    let base = n / k;
    let extra = n % k;
    let mut fold_of = vec![0; n];
    let mut pos = 0;
    for fold in 0..k {
        let size = base + usize::from(fold < extra);
        for &i in &order[pos..pos + size] {
            fold_of[i] = fold;
        }
        pos += size;
    }
    Ok(FoldAssignment { k, fold_of, seed })
}

/// Rescales every feature to [0, 1] with its own min and max. Constant
/// features become 0.
pub fn normalize_minmax(ds: &Dataset) -> Dataset {
    let m = ds.feature_count;
    let mut lo = vec![f64::INFINITY; m];
    let mut hi = vec![f64::NEG_INFINITY; m];
    for inst in &ds.instances {
        for (f, &v) in inst.features.iter().enumerate() {
            lo[f] = lo[f].min(v);
            hi[f] = hi[f].max(v);
        }
    }
    let instances = ds
        .instances
        .iter()
        .map(|inst| Instance {
            index: inst.index,
            label: inst.label,
            features: inst
                .features
                .iter()
                .enumerate()
                .map(|(f, &v)| {
                    let range = hi[f] - lo[f];
                    if range > 0.0 {
                        ((v - lo[f]) / range).clamp(0.0, 1.0)
                    } else {
                        0.0
                    }
                })
                .collect(),
        })
        .collect();
    Dataset {
        instances,
        feature_count: m,
        class_labels: ds.class_labels.clone(),
    }
}
