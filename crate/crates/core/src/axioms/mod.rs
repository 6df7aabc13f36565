//! Brute-force checks of the proportionality axioms.
//!
//! A group of voters is `ell`-cohesive when `|group| * q >= ell` and the
//! group jointly approves at least `ell` candidates. A committee `W` violates
//! `ell`-EJR if some cohesive group has every member approving fewer than
//! `ell` winners, and `ell`-PJR if the whole group approves fewer than `ell`
//! winners in total.
//!
//! Searches are anchored on `ell`-subsets of candidates: a violating group
//! exists iff, for some set `T` of `ell` candidates, the unsatisfied voters
//! approving all of `T` are numerous enough.

mod corpus;
mod safety;

use std::fmt;

pub use corpus::{random_corpus, random_election, CorpusElection};
pub use safety::{
    check_safe_trace, classify_candidate, entitlement, g_value, CandidateClass, IterationSafety,
    SafetyReport,
};

use crate::election::Election;
use crate::error::{Error, Result};
use crate::rational::floor_times;
use crate::voting::satisfaction;

/// Default cap on the number of candidate subsets an oracle may enumerate.
pub const DEFAULT_MAX_ENUM: u128 = 10_000_000;

/// The enumeration cap, overridable through `VOTESELECT_MAX_ENUM`.
pub fn enumeration_bound() -> u128 {
    std::env::var("VOTESELECT_MAX_ENUM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ENUM)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Ejr,
    Pjr,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Ejr => "EJR",
            Axiom::Pjr => "PJR",
        })
    }
}

/// A cohesive group left under-represented by a committee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub ell: usize,
    pub witness_voters: Vec<usize>,
    /// `ell` candidates every witness approves.
    pub common_candidates: Vec<usize>,
    /// `|A_i ∩ W|` for each witness, in witness order.
    pub satisfaction: Vec<usize>,
    /// `|W ∩ union of witness ballots|`.
    pub union_hits: usize,
}

impl AxiomViolation {
    fn build(axiom: Axiom, ell: usize, voters: Vec<usize>, common: Vec<usize>, w: &[usize], e: &Election) -> Self {
        let satisfaction = voters
            .iter()
            .map(|&i| w.iter().filter(|&&c| e.approves(i, c)).count())
            .collect();
        let union_hits = w
            .iter()
            .filter(|&&c| voters.iter().any(|&i| e.approves(i, c)))
            .count();
        Self {
            axiom,
            ell,
            witness_voters: voters,
            common_candidates: common,
            satisfaction,
            union_hits,
        }
    }

    /// Re-derives the violation from scratch against `w` and `e`.
    pub fn revalidate(&self, w: &[usize], e: &Election) -> bool {
        let voters = &self.witness_voters;
        if !is_l_cohesive(voters, self.ell, e)
            || self.common_candidates.len() < self.ell
            || !self
                .common_candidates
                .iter()
                .all(|&c| voters.iter().all(|&i| e.approves(i, c)))
        {
            return false;
        }
        let fresh = Self::build(self.axiom, self.ell, voters.clone(), self.common_candidates.clone(), w, e);
        if fresh.satisfaction != self.satisfaction || fresh.union_hits != self.union_hits {
            return false;
        }
        match self.axiom {
            Axiom::Ejr => self.satisfaction.iter().all(|&s| s < self.ell),
            Axiom::Pjr => self.union_hits < self.ell,
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-{} violated: voters {:?} jointly approve {:?}",
            self.ell, self.axiom, self.witness_voters, self.common_candidates
        )?;
        match self.axiom {
            Axiom::Ejr => write!(f, " but hold {:?} winners each", self.satisfaction),
            Axiom::Pjr => write!(f, " but their ballots cover only {} winners", self.union_hits),
        }
    }
}

/// Whether `voters` form an `ell`-cohesive group. The empty group never is.
pub fn is_l_cohesive(voters: &[usize], ell: usize, e: &Election) -> bool {
    let mut voters = voters.to_vec();
    voters.sort_unstable();
    voters.dedup();
    let Some((&first, rest)) = voters.split_first() else {
        return false;
    };
    if !e.large_enough(voters.len(), ell) {
        return false;
    }
    let common = e
        .ballot(first)
        .iter()
        .filter(|&&c| rest.iter().all(|&i| e.approves(i, c)))
        .count();
    common >= ell
}

/// `n choose k`, saturating.
pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Candidates with enough eligible approvers to anchor a group.
fn pool(e: &Election, eligible: &[bool], ell: usize) -> Vec<usize> {
    (0..e.num_candidates())
        .filter(|&c| {
            let k = e.approvers(c).iter().filter(|&&i| eligible[i]).count();
            k > 0 && e.large_enough(k, ell)
        })
        .collect()
}

/// First (lexicographic) `ell`-subset of `pool` jointly approved by a large
/// enough set of eligible voters, with that voter set.
fn find_group(
    e: &Election,
    eligible: &[bool],
    pool: &[usize],
    ell: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    fn dfs(
        e: &Election,
        pool: &[usize],
        ell: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        voters: &[usize],
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if chosen.len() == ell {
            return Some((chosen.clone(), voters.to_vec()));
        }
        let need = ell - chosen.len();
        for idx in start..pool.len() {
            if pool.len() - idx < need {
                break;
            }
            let c = pool[idx];
            let next = intersect(voters, e.approvers(c));
            if next.is_empty() || !e.large_enough(next.len(), ell) {
                continue;
            }
            chosen.push(c);
            if let Some(found) = dfs(e, pool, ell, idx + 1, chosen, &next) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    let voters: Vec<usize> = (0..e.num_voters()).filter(|&i| eligible[i]).collect();
    dfs(e, pool, ell, 0, &mut Vec::with_capacity(ell), &voters)
}

fn guard(ell: usize, count: u128, bound: u128) -> Result<()> {
    if count > bound {
        Err(Error::EnumerationBound { level: ell, count, bound })
    } else {
        Ok(())
    }
}

/// `ell`-EJR check against the bound from [`enumeration_bound`].
pub fn check_l_ejr(w: &[usize], e: &Election, ell: usize) -> Result<Option<AxiomViolation>> {
    check_l_ejr_bounded(w, e, ell, enumeration_bound())
}

pub fn check_l_ejr_bounded(
    w: &[usize],
    e: &Election,
    ell: usize,
    bound: u128,
) -> Result<Option<AxiomViolation>> {
    if ell == 0 {
        return Err(Error::Argument("ell must be at least 1".into()));
    }
    let sat = satisfaction(w, e);
    let eligible: Vec<bool> = sat.iter().map(|&s| s < ell).collect();
    let pool = pool(e, &eligible, ell);
    guard(ell, binomial(pool.len(), ell), bound)?;
    Ok(find_group(e, &eligible, &pool, ell)
        .map(|(common, voters)| AxiomViolation::build(Axiom::Ejr, ell, voters, common, w, e)))
}

/// `ell`-PJR check against the bound from [`enumeration_bound`].
pub fn check_l_pjr(w: &[usize], e: &Election, ell: usize) -> Result<Option<AxiomViolation>> {
    check_l_pjr_bounded(w, e, ell, enumeration_bound())
}

/// A group with `|W ∩ union A_i| < ell` has all its approved winners inside
/// some `Y ⊆ W` with `|Y| = min(ell - 1, |W|)`, so the search runs over
/// those `Y` and keeps the voters whose approved winners fit in `Y`.
pub fn check_l_pjr_bounded(
    w: &[usize],
    e: &Election,
    ell: usize,
    bound: u128,
) -> Result<Option<AxiomViolation>> {
    if ell == 0 {
        return Err(Error::Argument("ell must be at least 1".into()));
    }
    let mut w_sorted = w.to_vec();
    w_sorted.sort_unstable();
    w_sorted.dedup();
    let sat = satisfaction(&w_sorted, e);
    let loose: Vec<bool> = sat.iter().map(|&s| s < ell).collect();
    let k = (ell - 1).min(w_sorted.len());
    let outer = binomial(w_sorted.len(), k);
    let inner = binomial(pool(e, &loose, ell).len(), ell);
    guard(ell, outer.saturating_mul(inner.max(1)), bound)?;

    let mut y_mask = vec![false; e.num_candidates()];
    let mut found = None;
    for_each_subset(&w_sorted, k, &mut |y| {
        for &c in y {
            y_mask[c] = true;
        }
        let eligible: Vec<bool> = (0..e.num_voters())
            .map(|i| {
                loose[i]
                    && w_sorted
                        .iter()
                        .all(|&c| y_mask[c] || !e.approves(i, c))
            })
            .collect();
        for &c in y {
            y_mask[c] = false;
        }
        let pool = pool(e, &eligible, ell);
        if let Some((common, voters)) = find_group(e, &eligible, &pool, ell) {
            found = Some(AxiomViolation::build(Axiom::Pjr, ell, voters, common, &w_sorted, e));
            return true;
        }
        false
    });
    Ok(found)
}

/// Calls `f` on every `k`-subset of `items` in lexicographic order until it
/// returns `true`.
fn for_each_subset(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for idx in start..items.len() {
            if items.len() - idx < k - cur.len() {
                break;
            }
            cur.push(items[idx]);
            if go(items, k, idx + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// Largest `ell` any group could be cohesive for: `floor(q * n)`, and no
/// more than the longest ballot.
fn max_level(e: &Election) -> usize {
    let longest = e.ballots().iter().map(Vec::len).max().unwrap_or(0);
    floor_times(e.q(), e.num_voters()).min(longest)
}

/// EJR for every level `ell = 1..=floor(q n)`; returns the first violation.
pub fn check_ejr(w: &[usize], e: &Election) -> Result<Option<AxiomViolation>> {
    check_ejr_up_to(w, e, usize::MAX)
}

/// EJR restricted to levels `1..=max_ell` (`max_ell = 2` gives 2-EJR).
pub fn check_ejr_up_to(w: &[usize], e: &Election, max_ell: usize) -> Result<Option<AxiomViolation>> {
    let bound = enumeration_bound();
    for ell in 1..=max_level(e).min(max_ell) {
        if let Some(v) = check_l_ejr_bounded(w, e, ell, bound)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// PJR for every level `ell = 1..=floor(q n)`; returns the first violation.
pub fn check_pjr(w: &[usize], e: &Election) -> Result<Option<AxiomViolation>> {
    let bound = enumeration_bound();
    for ell in 1..=max_level(e) {
        if let Some(v) = check_l_pjr_bounded(w, e, ell, bound)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}
