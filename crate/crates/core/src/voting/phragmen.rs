use num::Zero;

use super::classes::ValueClasses;
use super::{touched, LazyMin, Committee, RuleId, RuleTrace, Step, StepDetail};
use crate::election::Election;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

fn score(e: &Election, c: usize, loads: &mut ValueClasses) -> Option<Rational> {
    let approvers = e.approvers(c);
    if approvers.is_empty() {
        return None;
    }
    let total: Rational = loads
        .histogram(approvers)
        .into_iter()
        .map(|(k, n)| loads.class_value(k) * rational::int(n))
        .sum();
    Some((total + rational::one()) / rational::int(approvers.len()))
}

/// Sequential Phragmén. Elects until `e.t_int()` winners. Each step picks the
/// candidate whose approvers would end with the smallest common load
/// `(1 + sum of their loads) / |N_c|`.
///
/// Candidates without approvers are never eligible. When none are left
/// before `t_int` winners, the standard rule fails with
/// [`Error::Exhausted`], while `adapted_stop` simply ends the run.
pub fn run_seqphragmen(e: &Election, adapted_stop: bool) -> Result<(Committee, RuleTrace)> {
    let target = e.t_int();
    if target == 0 || target > e.num_candidates() {
        return Err(Error::Argument(format!(
            "seq-Phragmen needs 1 <= t <= {} candidates, got t = {target}",
            e.num_candidates()
        )));
    }
    let m = e.num_candidates();
    let mut loads = ValueClasses::uniform(e.num_voters(), Rational::zero());
    let mut mark = vec![false; m];
    let mut queue = LazyMin::new((0..m).map(|c| (c, score(e, c, &mut loads))));
    let mut members = Vec::with_capacity(target);
    let mut steps = Vec::with_capacity(target);

    // Loads never decrease (each new common load is at least the previous
    // one), so queued scores are lower bounds.
    while members.len() < target {
        let Some((c, s)) = queue.pop(|d| score(e, d, &mut loads)) else {
            if adapted_stop {
                break;
            }
            return Err(Error::Exhausted {
                iteration: members.len() + 1,
                target,
            });
        };
        let class = loads.push(s.clone());
        for &i in e.approvers(c) {
            loads.set(i, class);
        }
        members.push(c);
        steps.push(Step {
            candidate: c,
            detail: StepDetail::Phragmen {
                score: s,
                loads: loads.snapshot(),
            },
        });
        for d in touched(e, c, &mut mark) {
            queue.invalidate(d);
        }
    }

    Ok((
        Committee {
            members,
            q: e.q().clone(),
            fallback: false,
        },
        RuleTrace {
            rule: RuleId::SeqPhragmen,
            steps,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::tests::e1;
    use crate::rational::ratio;

    #[test]
    fn e1_two_seats() {
        let e = e1().with_q(ratio(1, 1), Some(2)).unwrap();
        let (committee, trace) = run_seqphragmen(&e, false).unwrap();
        assert_eq!(committee.members, [0, 2]);
        let StepDetail::Phragmen { score, loads } = &trace.steps[0].detail else {
            panic!("wrong step kind");
        };
        assert_eq!(*score, ratio(1, 2));
        assert_eq!(loads, &[ratio(1, 2), ratio(1, 2), ratio(0, 1), ratio(0, 1)]);
    }

    #[test]
    fn adapted_stop_and_exhaustion() {
        let e = Election::new(2, vec![vec![0], vec![]], ratio(1, 1), Some(2)).unwrap();
        let (committee, _) = run_seqphragmen(&e, true).unwrap();
        assert_eq!(committee.members, [0]);
        assert!(matches!(
            run_seqphragmen(&e, false),
            Err(Error::Exhausted { iteration: 2, target: 2 })
        ));
    }

    #[test]
    fn rejects_zero_target() {
        let e = Election::new(2, vec![vec![0], vec![1]], ratio(1, 4), None).unwrap();
        assert!(matches!(run_seqphragmen(&e, true), Err(Error::Argument(_))));
    }

    /// Every round, every unelected approved candidate's score from the
    /// current loads.
    fn naive(e: &Election) -> Vec<(usize, Rational)> {
        let mut loads = vec![Rational::zero(); e.num_voters()];
        let mut out: Vec<(usize, Rational)> = Vec::new();
        while out.len() < e.t_int() {
            let best = (0..e.num_candidates())
                .filter(|c| out.iter().all(|w| w.0 != *c) && !e.approvers(*c).is_empty())
                .map(|c| {
                    let total: Rational = e.approvers(c).iter().map(|&i| &loads[i]).sum();
                    ((total + rational::one()) / rational::int(e.approvers(c).len()), c)
                })
                .min();
            let Some((s, c)) = best else { break };
            for &i in e.approvers(c) {
                loads[i] = s.clone();
            }
            out.push((c, s));
        }
        out
    }

    #[test]
    fn queued_run_matches_naive() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for round in 0..300 {
            let n = if round % 10 == 0 { 40 } else { rng.gen_range(1..12) };
            let p = [0.1, 0.3, 0.6][rng.gen_range(0..3)];
            let q = [ratio(1, 4), ratio(1, 2), ratio(3, 4), ratio(1, 1)][rng.gen_range(0..4)].clone();
            let e = crate::axioms::random_election(&mut rng, n, p, q);
            if e.t_int() == 0 {
                continue;
            }
            let (_, trace) = run_seqphragmen(&e, true).unwrap();
            let got: Vec<(usize, Rational)> = trace
                .steps
                .iter()
                .map(|s| match &s.detail {
                    StepDetail::Phragmen { score, .. } => (s.candidate, score.clone()),
                    other => panic!("unexpected step {other:?}"),
                })
                .collect();
            assert_eq!(got, naive(&e));
        }
    }
}
