//! Approval-based multi-winner rules over exact rationals.
//!
//! All rules break ties in favour of the lowest candidate index. The three
//! rules that may stop short of `t` winners (SEJR, S2EJR, Equal Shares)
//! return the single most-approved candidate when they would otherwise elect
//! nobody.

mod classes;
mod equal_shares;
mod phragmen;
mod plausibility;
mod queue;
mod sejr;

use std::fmt;
use std::str::FromStr;

pub use equal_shares::{gamma, run_equal_shares};
pub use phragmen::run_seqphragmen;
pub use plausibility::{plausibility, satisfaction};
pub(crate) use plausibility::plausibility_with;
pub use sejr::{run_s2ejr, run_sejr};

use crate::election::Election;
use crate::error::{Error, Result};
use crate::rational::Rational;
pub(crate) use queue::LazyMin;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Sejr,
    S2ejr,
    EqualShares,
    SeqPhragmen,
}

impl RuleId {
    pub const ALL: [RuleId; 4] = [
        RuleId::Sejr,
        RuleId::S2ejr,
        RuleId::EqualShares,
        RuleId::SeqPhragmen,
    ];

    /// Rules that accept any target ratio and may return fewer than `t`
    /// winners.
    pub fn is_utcs(self) -> bool {
        !matches!(self, RuleId::SeqPhragmen)
    }

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Sejr => "sejr",
            RuleId::S2ejr => "s2ejr",
            RuleId::EqualShares => "es",
            RuleId::SeqPhragmen => "seqp",
        }
    }

    /// Runs the rule. seq-Phragmén uses the adapted stop, so it never fails
    /// on elections with too few approved candidates.
    pub fn run(self, e: &Election) -> Result<(Committee, RuleTrace)> {
        match self {
            RuleId::Sejr => Ok(run_sejr(e)),
            RuleId::S2ejr => Ok(run_s2ejr(e)),
            RuleId::EqualShares => Ok(run_equal_shares(e)),
            RuleId::SeqPhragmen => run_seqphragmen(e, true),
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sejr" => Ok(RuleId::Sejr),
            "s2ejr" => Ok(RuleId::S2ejr),
            "es" | "equal-shares" | "mes" => Ok(RuleId::EqualShares),
            "seqp" | "seq-phragmen" | "phragmen" => Ok(RuleId::SeqPhragmen),
            _ => Err(Error::Argument(format!(
                "unknown rule {s:?} (expected sejr, s2ejr, es or seqp)"
            ))),
        }
    }
}

/// Elected candidates in selection order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Committee {
    pub members: Vec<usize>,
    pub q: Rational,
    /// Set when the rule elected nobody and the most-approved candidate was
    /// returned instead.
    pub fallback: bool,
}

impl Committee {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.members.contains(&c)
    }

    /// Members in ascending order.
    pub fn sorted(&self) -> Vec<usize> {
        let mut m = self.members.clone();
        m.sort_unstable();
        m
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepDetail {
    Plausibility(usize),
    /// Payment per approver and every voter's budget after the step.
    EqualShares { gamma: Rational, budgets: Vec<Rational> },
    /// New common load of the approvers and every voter's load after the step.
    Phragmen { score: Rational, loads: Vec<Rational> },
    /// Most-approved candidate returned because the rule elected nobody.
    Fallback { approvals: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub candidate: usize,
    pub detail: StepDetail,
}

/// One record per elected candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleTrace {
    pub rule: RuleId,
    pub steps: Vec<Step>,
}

impl RuleTrace {
    pub fn is_fallback(&self) -> bool {
        matches!(
            self.steps.as_slice(),
            [Step {
                detail: StepDetail::Fallback { .. },
                ..
            }]
        )
    }
}

fn join(values: &[Rational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// One line per step, e.g. `2 c=1 gamma=1/2 rho=1/2 0 1 1`.
impl fmt::Display for RuleTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rule={}", self.rule)?;
        for (j, step) in self.steps.iter().enumerate() {
            write!(f, "{} c={}", j + 1, step.candidate)?;
            match &step.detail {
                StepDetail::Plausibility(p) => writeln!(f, " pl={p}")?,
                StepDetail::EqualShares { gamma, budgets } => {
                    writeln!(f, " gamma={gamma} rho={}", join(budgets))?
                }
                StepDetail::Phragmen { score, loads } => {
                    writeln!(f, " s={score} load={}", join(loads))?
                }
                StepDetail::Fallback { approvals } => {
                    writeln!(f, " fallback approvals={approvals}")?
                }
            }
        }
        Ok(())
    }
}

/// The most-approved candidate, lowest index on ties.
pub(crate) fn most_approved(e: &Election) -> usize {
    (0..e.num_candidates())
        .max_by(|&a, &b| {
            e.approvers(a)
                .len()
                .cmp(&e.approvers(b).len())
                .then(b.cmp(&a))
        })
        .unwrap_or(0)
}

pub(crate) fn fallback(e: &Election, rule: RuleId) -> (Committee, RuleTrace) {
    let c = most_approved(e);
    (
        Committee {
            members: vec![c],
            q: e.q().clone(),
            fallback: true,
        },
        RuleTrace {
            rule,
            steps: vec![Step {
                candidate: c,
                detail: StepDetail::Fallback {
                    approvals: e.approvers(c).len(),
                },
            }],
        },
    )
}

/// Candidates whose score may change once `elected` wins: those approved by
/// any approver of `elected`.
pub(crate) fn touched(e: &Election, elected: usize, mark: &mut [bool]) -> Vec<usize> {
    let mut out = Vec::new();
    for &i in e.approvers(elected) {
        for &c in e.ballot(i) {
            if !mark[c] {
                mark[c] = true;
                out.push(c);
            }
        }
    }
    for &c in &out {
        mark[c] = false;
    }
    out
}
