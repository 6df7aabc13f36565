use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::rational::Rational;

/// Min-queue of candidate scores that only ever grow, keyed by
/// `(score, index)` so that ties go to the lowest index.
///
/// Invalidated entries stay queued as lower bounds and are recomputed only
/// when they reach the front.
pub(crate) struct LazyMin {
    heap: BinaryHeap<Reverse<(Rational, usize)>>,
    stale: Vec<bool>,
}

impl LazyMin {
    /// `None` scores are left out for good.
    pub(crate) fn new(scores: impl ExactSizeIterator<Item = (usize, Option<Rational>)>) -> Self {
        let stale = vec![false; scores.len()];
        let heap = scores
            .filter_map(|(c, s)| s.map(|s| Reverse((s, c))))
            .collect();
        Self { heap, stale }
    }

    pub(crate) fn invalidate(&mut self, c: usize) {
        self.stale[c] = true;
    }

    /// Removes and returns the front entry once its score is current.
    pub(crate) fn pop(&mut self, mut eval: impl FnMut(usize) -> Option<Rational>) -> Option<(usize, Rational)> {
        while let Some(Reverse((score, c))) = self.heap.pop() {
            if !self.stale[c] {
                return Some((c, score));
            }
            self.stale[c] = false;
            if let Some(fresh) = eval(c) {
                debug_assert!(fresh >= score, "queued scores must not decrease");
                self.heap.push(Reverse((fresh, c)));
            }
        }
        None
    }
}
