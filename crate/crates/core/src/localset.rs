//! Nearest enemies, local sets, and the elections derived from them.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::data::{distance_matrix, Dataset, DistanceMatrix};
use crate::election::Election;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearestEnemy {
    pub index: usize,
    pub distance: f64,
}

/// The closest instance with a different label; the lowest index wins ties.
pub fn nearest_enemy(i: usize, ds: &Dataset, dm: &DistanceMatrix) -> Result<NearestEnemy> {
    let label = ds.label(i);
    let row = dm.row(i);
    let mut best: Option<NearestEnemy> = None;
    for (j, inst) in ds.instances().iter().enumerate() {
        if inst.label == label {
            continue;
        }
        if best.map_or(true, |b| row[j] < b.distance) {
            best = Some(NearestEnemy {
                index: j,
                distance: row[j],
            });
        }
    }
    best.ok_or(Error::NoEnemy { index: i })
}

/// Instances strictly closer to `i` than its nearest enemy, ascending. This
/// includes `i` itself unless the enemy sits at distance zero.
pub fn local_set(i: usize, ds: &Dataset, dm: &DistanceMatrix) -> Result<Vec<usize>> {
    let enemy = nearest_enemy(i, ds, dm)?;
    Ok(members_within(dm.row(i), enemy.distance))
}

fn members_within(row: &[f64], radius: f64) -> Vec<usize> {
    row.iter()
        .enumerate()
        .filter(|&(_, &d)| d < radius)
        .map(|(j, _)| j)
        .collect()
}

/// Nearest enemy and local set of every instance of a dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalSetTable {
    enemies: Vec<NearestEnemy>,
    local_sets: Vec<Vec<usize>>,
}

impl LocalSetTable {
    pub fn new(ds: &Dataset, dm: &DistanceMatrix) -> Result<Self> {
        let rows: Vec<(NearestEnemy, Vec<usize>)> = (0..ds.len())
            .into_par_iter()
            .map(|i| {
                let enemy = nearest_enemy(i, ds, dm)?;
                Ok((enemy, members_within(dm.row(i), enemy.distance)))
            })
            .collect::<Result<_>>()?;
        let (enemies, local_sets) = rows.into_iter().unzip();
        Ok(Self {
            enemies,
            local_sets,
        })
    }

    pub fn from_dataset(ds: &Dataset) -> Result<Self> {
        Self::new(ds, &distance_matrix(ds))
    }

    pub fn len(&self) -> usize {
        self.local_sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.local_sets.is_empty()
    }

    pub fn nearest_enemy(&self, i: usize) -> NearestEnemy {
        self.enemies[i]
    }

    pub fn local_set(&self, i: usize) -> &[usize] {
        &self.local_sets[i]
    }

    pub fn local_sets(&self) -> &[Vec<usize>] {
        &self.local_sets
    }

    /// For every instance, the number of local sets it belongs to (its own
    /// included).
    pub fn coverage_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.len()];
        for set in &self.local_sets {
            for &j in set {
                counts[j] += 1;
            }
        }
        counts
    }

    /// For every instance, the number of instances it is the nearest enemy of.
    pub fn enemy_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.len()];
        for e in &self.enemies {
            counts[e.index] += 1;
        }
        counts
    }

    /// Approval ballots for `variant`.
    pub fn ballots(&self, variant: BallotVariant) -> Vec<Vec<usize>> {
        self.local_sets
            .iter()
            .enumerate()
            .map(|(i, set)| match variant {
                BallotVariant::Included => set.clone(),
                BallotVariant::Excluded => set.iter().copied().filter(|&j| j != i).collect(),
            })
            .collect()
    }

    pub fn election(
        &self,
        variant: BallotVariant,
        q: Rational,
        t_int: Option<usize>,
    ) -> Result<Election> {
        Election::new(self.len(), self.ballots(variant), q, t_int)
    }
}

/// Whether an instance approves itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BallotVariant {
    Included,
    Excluded,
}

impl BallotVariant {
    pub const ALL: [BallotVariant; 2] = [BallotVariant::Included, BallotVariant::Excluded];
}

impl fmt::Display for BallotVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BallotVariant::Included => "included",
            BallotVariant::Excluded => "excluded",
        })
    }
}

impl FromStr for BallotVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "included" | "incl" => Ok(BallotVariant::Included),
            "excluded" | "excl" => Ok(BallotVariant::Excluded),
            _ => Err(Error::Argument(format!(
                "unknown ballot variant {s:?} (expected included or excluded)"
            ))),
        }
    }
}

/// The local-set-derived election of a training set: every instance is a
/// voter and a candidate, and approves (a subset of) its local set.
pub fn build_election(
    train: &Dataset,
    variant: BallotVariant,
    q: Rational,
    t_int: Option<usize>,
) -> Result<Election> {
    if train.is_empty() {
        return Err(Error::Argument("empty training set".into()));
    }
    LocalSetTable::from_dataset(train)?.election(variant, q, t_int)
}
