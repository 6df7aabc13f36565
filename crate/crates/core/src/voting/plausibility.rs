use crate::election::Election;

/// Plausibility of candidate `c` against the winner set `w`: the largest
/// `ell >= 0` such that at least `ell * n/t` approvers of `c` each have
/// fewer than `min(ell, cap)` winners on their ballot.
///
/// `cap = Some(2)` gives the variant where voters with two approved winners
/// count as satisfied. Returns 0 when `c` is already in `w`.
pub fn plausibility(c: usize, w: &[usize], e: &Election, cap: Option<usize>) -> usize {
    if w.contains(&c) {
        return 0;
    }
    let sat = satisfaction(w, e);
    plausibility_with(e.approvers(c), &sat, e, cap)
}

/// `|A_i ∩ W|` for every voter.
pub fn satisfaction(w: &[usize], e: &Election) -> Vec<usize> {
    let mut sat = vec![0; e.num_voters()];
    for &c in w {
        for &i in e.approvers(c) {
            sat[i] += 1;
        }
    }
    sat
}

/// Plausibility from precomputed per-voter satisfaction counts.
pub(crate) fn plausibility_with(
    approvers: &[usize],
    sat: &[usize],
    e: &Election,
    cap: Option<usize>,
) -> usize {
    let (qn, qd) = e.q_parts();
    // ell can only be feasible when |N_c| * q >= ell.
    let max_ell = (approvers.len() as u128 * qn as u128 / qd as u128) as usize;
    if max_ell == 0 {
        return 0;
    }
    // below[k] = number of approvers with satisfaction < k, for k <= max_ell.
    let mut below = vec![0usize; max_ell + 3];
    for &i in approvers {
        let s = sat[i].min(max_ell + 1);
        below[s + 1] += 1;
    }
    for k in 1..below.len() {
        below[k] += below[k - 1];
    }
    let limit = cap.unwrap_or(usize::MAX);
    (1..=max_ell)
        .rev()
        .find(|&ell| e.large_enough(below[ell.min(limit)], ell))
        .unwrap_or(0)
}
