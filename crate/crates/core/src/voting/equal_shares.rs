use num::Zero;

use super::classes::ValueClasses;
use super::{fallback, touched, LazyMin, Committee, RuleId, RuleTrace, Step, StepDetail};
use crate::election::Election;
use crate::rational::{self, Rational};

/// Smallest uniform payment `x` with `sum(min(x, budget)) == price`, or
/// `None` when the budgets cannot cover the price.
pub fn gamma(budgets: &[&Rational], price: &Rational) -> Option<Rational> {
    let groups: Vec<(&Rational, usize)> = budgets.iter().map(|&b| (b, 1)).collect();
    gamma_grouped(groups, price)
}

/// [`gamma`] over `(budget, number of voters holding it)` pairs.
fn gamma_grouped(mut groups: Vec<(&Rational, usize)>, price: &Rational) -> Option<Rational> {
    groups.sort_by(|a, b| a.0.cmp(b.0));
    let total: Rational = groups.iter().map(|&(b, n)| b * rational::int(n)).sum();
    if total < *price || groups.is_empty() {
        return None;
    }
    let mut left: usize = groups.iter().map(|g| g.1).sum();
    let mut paid = Rational::zero();
    // Within a group the test below fails for every member once it fails
    // for the first, so whole groups can be skipped.
    for (b, n) in groups {
        let x = (price - &paid) / rational::int(left);
        if x <= *b {
            return Some(x);
        }
        paid += b * rational::int(n);
        left -= n;
    }
    unreachable!("total budget covers the price")
}

fn candidate_gamma(e: &Election, c: usize, budgets: &mut ValueClasses, price: &Rational) -> Option<Rational> {
    let hist = budgets.histogram(e.approvers(c));
    let groups = hist.iter().map(|&(k, n)| (budgets.class_value(k), n)).collect();
    gamma_grouped(groups, price)
}

/// Method of Equal Shares. Every voter starts with budget 1 and each seat
/// costs `n/t`; the candidate needing the smallest equal payment wins.
pub fn run_equal_shares(e: &Election) -> (Committee, RuleTrace) {
    let m = e.num_candidates();
    let price = e.price();
    let mut budgets = ValueClasses::uniform(e.num_voters(), rational::one());
    let mut elected = vec![false; m];
    let mut mark = vec![false; m];
    let mut queue = LazyMin::new((0..m).map(|c| (c, candidate_gamma(e, c, &mut budgets, &price))));
    let mut members = Vec::new();
    let mut steps = Vec::new();

    // Budgets only shrink, so a candidate's payment only grows and a stale
    // queue entry is a lower bound.
    while let Some((c, g)) = queue.pop(|d| candidate_gamma(e, d, &mut budgets, &price)) {
        // Voters with the same budget pay the same and land in the same
        // new class.
        let mut moved: Vec<(usize, usize)> = Vec::new();
        for &i in e.approvers(c) {
            let old = budgets.class(i);
            let new = match moved.iter().find(|&&(o, _)| o == old) {
                Some(&(_, n)) => n,
                None => {
                    let b = budgets.value(i);
                    let after = if *b <= g { Rational::zero() } else { b - &g };
                    let n = budgets.push(after);
                    moved.push((old, n));
                    n
                }
            };
            budgets.set(i, new);
        }
        elected[c] = true;
        members.push(c);
        steps.push(Step {
            candidate: c,
            detail: StepDetail::EqualShares {
                gamma: g,
                budgets: budgets.snapshot(),
            },
        });
        for d in touched(e, c, &mut mark) {
            if !elected[d] {
                queue.invalidate(d);
            }
        }
    }

    if members.is_empty() {
        return fallback(e, RuleId::EqualShares);
    }
    (
        Committee {
            members,
            q: e.q().clone(),
            fallback: false,
        },
        RuleTrace {
            rule: RuleId::EqualShares,
            steps,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::tests::e1;
    use crate::rational::ratio;

    #[test]
    fn gamma_examples() {
        let one = ratio(1, 1);
        let half = ratio(1, 2);
        assert_eq!(gamma(&[&one, &one], &ratio(1, 1)), Some(ratio(1, 2)));
        // 1/2 + x = 1 with x = 1/2 at the 1/2 budget boundary.
        assert_eq!(gamma(&[&half, &one], &ratio(1, 1)), Some(ratio(1, 2)));
        // 1/4 + 2x = 2 gives x = 7/8.
        let quarter = ratio(1, 4);
        assert_eq!(gamma(&[&one, &quarter, &one], &ratio(2, 1)), Some(ratio(7, 8)));
        assert_eq!(gamma(&[&half, &half], &ratio(2, 1)), None);
        assert_eq!(gamma(&[], &ratio(1, 1)), None);
    }

    #[test]
    fn e1_trace() {
        let (committee, trace) = run_equal_shares(&e1());
        assert_eq!(committee.members, [0, 1, 2]);
        let StepDetail::EqualShares { gamma, budgets } = &trace.steps[0].detail else {
            panic!("wrong step kind");
        };
        assert_eq!(*gamma, ratio(1, 2));
        assert_eq!(budgets, &[ratio(1, 2), ratio(1, 2), ratio(1, 1), ratio(1, 1)]);
        for step in &trace.steps {
            let StepDetail::EqualShares { gamma, .. } = &step.detail else {
                panic!("wrong step kind");
            };
            assert_eq!(*gamma, ratio(1, 2));
        }
    }

    #[test]
    fn unaffordable_falls_back() {
        let e = Election::new(2, vec![vec![0], vec![1]], ratio(1, 2), None).unwrap();
        let (committee, trace) = run_equal_shares(&e);
        assert_eq!(committee.members, [0]);
        assert!(committee.fallback);
        assert!(trace.is_fallback());
    }

    #[test]
    fn first_winner_is_most_approved() {
        let e = Election::new(
            3,
            vec![vec![1], vec![1, 2], vec![1, 2], vec![0]],
            ratio(1, 1),
            None,
        )
        .unwrap();
        let (committee, trace) = run_equal_shares(&e);
        assert_eq!(committee.members[0], 1);
        let StepDetail::EqualShares { gamma, .. } = &trace.steps[0].detail else {
            panic!("wrong step kind");
        };
        // n / (|N_c| t) = 4 / (3 * 4)
        assert_eq!(*gamma, ratio(1, 3));
    }

    /// Straight from the definition: every round, every unelected
    /// candidate's payment from a fresh sort of its approvers' budgets.
    fn naive(e: &Election) -> Vec<(usize, Rational)> {
        let price = e.price();
        let mut budgets = vec![rational::one(); e.num_voters()];
        let mut out: Vec<(usize, Rational)> = Vec::new();
        loop {
            let best = (0..e.num_candidates())
                .filter(|c| out.iter().all(|w| w.0 != *c))
                .filter_map(|c| {
                    let mine: Vec<&Rational> = e.approvers(c).iter().map(|&i| &budgets[i]).collect();
                    gamma(&mine, &price).map(|g| (g, c))
                })
                .min();
            let Some((g, c)) = best else { return out };
            for &i in e.approvers(c) {
                budgets[i] = if budgets[i] <= g { Rational::zero() } else { &budgets[i] - &g };
            }
            out.push((c, g));
        }
    }

    #[test]
    fn queued_run_matches_naive() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for round in 0..300 {
            let n = if round % 10 == 0 { 40 } else { rng.gen_range(1..12) };
            let p = [0.1, 0.3, 0.6][rng.gen_range(0..3)];
            let q = [ratio(1, 4), ratio(1, 2), ratio(1, 1), ratio(2, 1), ratio(3, 2)][rng.gen_range(0..5)].clone();
            let e = crate::axioms::random_election(&mut rng, n, p, q);
            let (committee, trace) = run_equal_shares(&e);
            if committee.fallback {
                assert!(naive(&e).is_empty());
                continue;
            }
            let got: Vec<(usize, Rational)> = trace
                .steps
                .iter()
                .map(|s| match &s.detail {
                    StepDetail::EqualShares { gamma, .. } => (s.candidate, gamma.clone()),
                    other => panic!("unexpected step {other:?}"),
                })
                .collect();
            assert_eq!(got, naive(&e));
        }
    }
}
