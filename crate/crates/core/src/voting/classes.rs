use crate::rational::Rational;

/// Per-voter rational values stored as ids into a table of distinct values.
///
/// Equal Shares budgets and seq-Phragmén loads change for whole approver
/// groups at once, so a candidate's approvers hold only a few distinct
/// values and sums over them need a few rational operations instead of one
/// per voter.
#[derive(Debug, Clone)]
pub(crate) struct ValueClasses {
    values: Vec<Rational>,
    of: Vec<usize>,
    counts: Vec<usize>,
}

impl ValueClasses {
    pub(crate) fn uniform(n: usize, value: Rational) -> Self {
        Self {
            values: vec![value],
            of: vec![0; n],
            counts: vec![0],
        }
    }

    pub(crate) fn value(&self, voter: usize) -> &Rational {
        &self.values[self.of[voter]]
    }

    pub(crate) fn class(&self, voter: usize) -> usize {
        self.of[voter]
    }

    pub(crate) fn class_value(&self, class: usize) -> &Rational {
        &self.values[class]
    }

    pub(crate) fn push(&mut self, value: Rational) -> usize {
        self.values.push(value);
        self.counts.push(0);
        self.values.len() - 1
    }

    pub(crate) fn set(&mut self, voter: usize, class: usize) {
        self.of[voter] = class;
    }

    /// `(class, count)` over `voters`, in order of first appearance.
    pub(crate) fn histogram(&mut self, voters: &[usize]) -> Vec<(usize, usize)> {
        let mut seen = Vec::new();
        for &i in voters {
            let k = self.of[i];
            if self.counts[k] == 0 {
                seen.push(k);
            }
            self.counts[k] += 1;
        }
        seen.into_iter()
            .map(|k| (k, std::mem::take(&mut self.counts[k])))
            .collect()
    }

    pub(crate) fn snapshot(&self) -> Vec<Rational> {
        self.of.iter().map(|&k| self.values[k].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn histogram_and_snapshot() {
        let mut v = ValueClasses::uniform(4, ratio(1, 1));
        let half = v.push(ratio(1, 2));
        v.set(1, half);
        v.set(3, half);
        assert_eq!(v.histogram(&[0, 1, 2, 3]), [(0, 2), (half, 2)]);
        assert_eq!(v.histogram(&[3]), [(half, 1)]);
        assert_eq!(v.value(1), &ratio(1, 2));
        assert_eq!(v.snapshot(), [ratio(1, 1), ratio(1, 2), ratio(1, 1), ratio(1, 2)]);
    }
}
