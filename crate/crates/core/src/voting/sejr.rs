use super::{fallback, plausibility_with, touched, Committee, RuleId, RuleTrace, Step, StepDetail};
use crate::election::Election;

/// Simple EJR: repeatedly elect the candidate of maximum plausibility until
/// every remaining candidate has plausibility 0.
pub fn run_sejr(e: &Election) -> (Committee, RuleTrace) {
    greedy(e, None, RuleId::Sejr)
}

/// Simple 2-EJR: as SEJR, but voters with two approved winners no longer
/// support anyone.
pub fn run_s2ejr(e: &Election) -> (Committee, RuleTrace) {
    greedy(e, Some(2), RuleId::S2ejr)
}

fn greedy(e: &Election, cap: Option<usize>, rule: RuleId) -> (Committee, RuleTrace) {
    let m = e.num_candidates();
    let mut sat = vec![0usize; e.num_voters()];
    let mut elected = vec![false; m];
    let mut mark = vec![false; m];
    let mut score: Vec<usize> = (0..m)
        .map(|c| plausibility_with(e.approvers(c), &sat, e, cap))
        .collect();
    let mut members = Vec::new();
    let mut steps = Vec::new();

    loop {
        let mut best: Option<usize> = None;
        for c in (0..m).filter(|&c| !elected[c] && score[c] > 0) {
            if best.map_or(true, |b| score[c] > score[b]) {
                best = Some(c);
            }
        }
        let Some(c) = best else { break };
        elected[c] = true;
        members.push(c);
        steps.push(Step {
            candidate: c,
            detail: StepDetail::Plausibility(score[c]),
        });
        for &i in e.approvers(c) {
            sat[i] += 1;
        }
        for d in touched(e, c, &mut mark) {
            if !elected[d] {
                score[d] = plausibility_with(e.approvers(d), &sat, e, cap);
            }
        }
    }

    if members.is_empty() {
        return fallback(e, rule);
    }
    (
        Committee {
            members,
            q: e.q().clone(),
            fallback: false,
        },
        RuleTrace { rule, steps },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::tests::e1;
    use crate::rational::ratio;
    use crate::voting::plausibility;

    fn pls(trace: &RuleTrace) -> Vec<usize> {
        trace
            .steps
            .iter()
            .map(|s| match s.detail {
                StepDetail::Plausibility(p) => p,
                _ => panic!("unexpected step {s:?}"),
            })
            .collect()
    }

    /// Recomputes every plausibility from scratch at each step.
    fn naive(e: &Election, cap: Option<usize>) -> Vec<usize> {
        let mut w: Vec<usize> = Vec::new();
        loop {
            let best = (0..e.num_candidates())
                .filter(|c| !w.contains(c))
                .map(|c| (plausibility(c, &w, e, cap), c))
                .filter(|&(p, _)| p > 0)
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
            match best {
                Some((_, c)) => w.push(c),
                None => return w,
            }
        }
    }

    #[test]
    fn sejr_e1() {
        let (committee, trace) = run_sejr(&e1());
        assert_eq!(committee.members, [0, 1, 2]);
        assert!(!committee.fallback);
        assert_eq!(pls(&trace), [2, 2, 2]);
    }

    #[test]
    fn s2ejr_e1() {
        assert_eq!(run_s2ejr(&e1()).0.members, [0, 1, 2]);
    }

    #[test]
    fn single_voter() {
        let e = Election::new(1, vec![vec![0]], ratio(1, 1), None).unwrap();
        assert_eq!(run_sejr(&e).0.members, [0]);
    }

    #[test]
    fn empty_ballots_fall_back() {
        let e = Election::new(3, vec![vec![]; 3], ratio(1, 1), None).unwrap();
        for (committee, trace) in [run_sejr(&e), run_s2ejr(&e)] {
            assert_eq!(committee.members, [0]);
            assert!(committee.fallback);
            assert!(trace.is_fallback());
        }
    }

    #[test]
    fn one_voter_three_candidates() {
        let e = Election::new(3, vec![vec![0, 1, 2]], ratio(3, 1), None).unwrap();
        assert_eq!(run_s2ejr(&e).0.len(), 2);
        assert_eq!(run_sejr(&e).0.members, [0, 1, 2]);
    }

    #[test]
    fn incremental_matches_naive() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..10);
            let p = if rng.gen_bool(0.5) { 0.2 } else { 0.5 };
            let ballots = (0..n)
                .map(|_| (0..n).filter(|_| rng.gen_bool(p)).collect())
                .collect();
            let q = [ratio(1, 4), ratio(1, 2), ratio(1, 1), ratio(2, 1)][rng.gen_range(0..4)]
                .clone();
            let e = Election::new(n, ballots, q, None).unwrap();
            let (c1, _) = run_sejr(&e);
            let (c2, _) = run_s2ejr(&e);
            if !c1.fallback {
                assert_eq!(c1.members, naive(&e, None));
            }
            if !c2.fallback {
                assert_eq!(c2.members, naive(&e, Some(2)));
            }
        }
    }
}
