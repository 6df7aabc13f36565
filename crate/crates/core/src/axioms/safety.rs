//! Safe-iteration checks for Equal Shares traces.
//!
//! With `W` the winners so far and `c` the next one, the approvers of `c`
//! must keep `g_i(c) = 1 - |A_i ∩ W'| / en(i, W')` of their budget, where
//! `W' = W ∪ {c}` and `en` is the entitlement, whenever
//! `en(i, W') > |A_i ∩ W'|`. An iteration is safe when (1) exactly `n/t` of
//! budget leaves the election, (2) every approver keeps at least `g_i(c)`,
//! and (3) nobody else pays.

use std::fmt;

use num::Zero;

use crate::election::Election;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::voting::{plausibility_with, satisfaction, RuleId, RuleTrace, StepDetail};

/// `en(i, W)`: the largest plausibility among `i`'s approved non-winners.
pub fn entitlement(i: usize, w: &[usize], e: &Election) -> usize {
    let sat = satisfaction(w, e);
    e.ballot(i)
        .iter()
        .filter(|c| !w.contains(c))
        .map(|&c| plausibility_with(e.approvers(c), &sat, e, None))
        .max()
        .unwrap_or(0)
}

/// `g_i(c)` for voter `i` when `c` joins `w`.
pub fn g_value(i: usize, c: usize, w: &[usize], e: &Election) -> Rational {
    let mut next = w.to_vec();
    if !next.contains(&c) {
        next.push(c);
    }
    let have = next.iter().filter(|&&d| e.approves(i, d)).count();
    g_formula(have, entitlement(i, &next, e))
}

fn g_formula(have: usize, en: usize) -> Rational {
    if en > have {
        rational::one() - Rational::new(have.into(), en.into())
    } else {
        Rational::zero()
    }
}

/// Class of candidate `c` given winners `w` and current budgets.
pub fn classify_candidate(c: usize, w: &[usize], budgets: &[Rational], e: &Election) -> CandidateClass {
    let mut state = State {
        e,
        in_w: vec![false; e.num_candidates()],
        sat: vec![0; e.num_voters()],
        budgets: budgets.to_vec(),
    };
    for &d in w {
        state.add(d);
    }
    state.classify(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateClass {
    /// Approvers hold less than one seat's price.
    Weak,
    /// Affordable, but only by eating into budgets that must be kept.
    Risky,
    Safe,
}

impl fmt::Display for CandidateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CandidateClass::Weak => "weak",
            CandidateClass::Risky => "risky",
            CandidateClass::Safe => "safe",
        })
    }
}

/// Mutable election state shared by the checks: winners, per-voter
/// satisfaction and budgets.
struct State<'a> {
    e: &'a Election,
    in_w: Vec<bool>,
    sat: Vec<usize>,
    budgets: Vec<Rational>,
}

impl State<'_> {
    fn add(&mut self, c: usize) {
        self.in_w[c] = true;
        for &i in self.e.approvers(c) {
            self.sat[i] += 1;
        }
    }

    fn remove(&mut self, c: usize) {
        self.in_w[c] = false;
        for &i in self.e.approvers(c) {
            self.sat[i] -= 1;
        }
    }

    fn entitlement(&self, i: usize, memo: &mut [Option<usize>]) -> usize {
        self.e
            .ballot(i)
            .iter()
            .filter(|&&c| !self.in_w[c])
            .map(|&c| {
                *memo[c].get_or_insert_with(|| {
                    plausibility_with(self.e.approvers(c), &self.sat, self.e, None)
                })
            })
            .max()
            .unwrap_or(0)
    }

    /// `g_i(c)` for every approver of `c`, in approver order.
    fn g_values(&mut self, c: usize) -> Vec<Rational> {
        self.add(c);
        let mut memo = vec![None; self.e.num_candidates()];
        let out = self
            .e
            .approvers(c)
            .iter()
            .map(|&i| g_formula(self.sat[i], self.entitlement(i, &mut memo)))
            .collect();
        self.remove(c);
        out
    }

    fn classify(&mut self, c: usize) -> CandidateClass {
        let price = self.e.price();
        let held: Rational = self.e.approvers(c).iter().map(|&i| &self.budgets[i]).sum();
        if held < price {
            return CandidateClass::Weak;
        }
        let kept: Rational = self.g_values(c).into_iter().sum();
        if held < price + kept {
            CandidateClass::Risky
        } else {
            CandidateClass::Safe
        }
    }

    /// Voters breaking `rho(i) >= 1 - |A_i ∩ W| / en(i, W)`.
    fn lemma2_failures(&self) -> Vec<usize> {
        let mut memo = vec![None; self.e.num_candidates()];
        (0..self.e.num_voters())
            .filter(|&i| {
                let en = self.entitlement(i, &mut memo);
                en > self.sat[i] && self.budgets[i] < g_formula(self.sat[i], en)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationSafety {
    /// 1-based.
    pub iteration: usize,
    pub candidate: usize,
    /// Safe-iteration conditions (1, 2 or 3) that failed.
    pub failed: Vec<u8>,
    /// Class of the elected candidate just before it was elected.
    pub elected_class: CandidateClass,
}

impl IterationSafety {
    pub fn is_safe(&self) -> bool {
        self.failed.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SafetyReport {
    /// The run elected nobody and returned the most-approved candidate; no
    /// rule iteration took place.
    pub fallback: bool,
    pub iterations: Vec<IterationSafety>,
    /// `(j, voter)` pairs where the budget bound failed after `j` safe
    /// iterations.
    pub lemma2_failures: Vec<(usize, usize)>,
    /// Class of every non-winner once the rule stopped.
    pub terminal: Vec<(usize, CandidateClass)>,
}

impl SafetyReport {
    pub fn all_safe(&self) -> bool {
        self.iterations.iter().all(IterationSafety::is_safe)
    }

    pub fn first_unsafe(&self) -> Option<&IterationSafety> {
        self.iterations.iter().find(|it| !it.is_safe())
    }

    pub fn terminal_all_weak(&self) -> bool {
        self.terminal.iter().all(|&(_, k)| k == CandidateClass::Weak)
    }

    pub fn lemma2_holds(&self) -> bool {
        self.lemma2_failures.is_empty()
    }
}

impl fmt::Display for SafetyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fallback {
            writeln!(f, "fallback committee, no rule iterations")?;
        }
        for it in &self.iterations {
            if it.is_safe() {
                writeln!(f, "iteration {} (c={}): safe", it.iteration, it.candidate)?;
            } else {
                writeln!(
                    f,
                    "iteration {} (c={}): NOT safe, failed conditions {:?}",
                    it.iteration, it.candidate, it.failed
                )?;
            }
        }
        for &(j, i) in &self.lemma2_failures {
            writeln!(f, "budget bound fails for voter {i} after {j} iterations")?;
        }
        let weak = self.terminal.iter().filter(|t| t.1 == CandidateClass::Weak).count();
        write!(
            f,
            "overall: {}; terminal: {weak}/{} remaining candidates weak",
            if self.all_safe() { "safe" } else { "NOT safe" },
            self.terminal.len()
        )
    }
}

/// Replays an Equal Shares trace on `e` and checks every iteration.
pub fn check_safe_trace(trace: &RuleTrace, e: &Election) -> Result<SafetyReport> {
    if trace.rule != RuleId::EqualShares {
        return Err(Error::Argument(format!(
            "safe-trace check needs an equal-shares trace, got {}",
            trace.rule
        )));
    }
    let n = e.num_voters();
    let m = e.num_candidates();
    let price = e.price();
    let mut state = State {
        e,
        in_w: vec![false; m],
        sat: vec![0; n],
        budgets: vec![rational::one(); n],
    };
    let mut report = SafetyReport {
        fallback: trace.is_fallback(),
        ..SafetyReport::default()
    };
    let steps = if report.fallback { &[][..] } else { &trace.steps[..] };

    for (j, step) in steps.iter().enumerate() {
        let StepDetail::EqualShares { budgets, .. } = &step.detail else {
            return Err(Error::Argument(format!("step {} is not an equal-shares step", j + 1)));
        };
        let c = step.candidate;
        if c >= m || state.in_w[c] || budgets.len() != n {
            return Err(Error::Argument(format!(
                "step {} does not match the election (candidate {c}, {} budgets)",
                j + 1,
                budgets.len()
            )));
        }
        if report.all_safe() {
            report
                .lemma2_failures
                .extend(state.lemma2_failures().into_iter().map(|i| (j, i)));
        }
        let elected_class = state.classify(c);

        let mut failed = Vec::new();
        let before: Rational = state.budgets.iter().sum();
        let after: Rational = budgets.iter().sum();
        if before - after != price {
            failed.push(1);
        }
        let g = state.g_values(c);
        if e.approvers(c)
            .iter()
            .zip(&g)
            .any(|(&i, gi)| budgets[i] < *gi)
        {
            failed.push(2);
        }
        if (0..n).any(|i| !e.approves(i, c) && budgets[i] != state.budgets[i]) {
            failed.push(3);
        }
        report.iterations.push(IterationSafety {
            iteration: j + 1,
            candidate: c,
            failed,
            elected_class,
        });
        state.add(c);
        state.budgets.clone_from(budgets);
    }
    if report.all_safe() {
        report
            .lemma2_failures
            .extend(state.lemma2_failures().into_iter().map(|i| (steps.len(), i)));
    }
    let remaining: Vec<usize> = (0..m).filter(|&c| !state.in_w[c]).collect();
    report.terminal = remaining.into_iter().map(|c| (c, state.classify(c))).collect();
    Ok(report)
}
