//! Approval elections with an exact target-size ratio `q = t/n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// An approval election. Voters and candidates are both numbered from 0.
/// Elections derived from a training set have as many candidates as voters,
/// but the type allows the two to differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Election {
    num_candidates: usize,
    ballots: Vec<Vec<usize>>,
    approvers: Vec<Vec<usize>>,
    q: Rational,
    q_parts: (u64, u64),
    t_int: Option<usize>,
}

impl Election {
    /// Ballots are sorted and deduplicated. `q` must be positive.
    pub fn new(
        num_candidates: usize,
        ballots: Vec<Vec<usize>>,
        q: Rational,
        t_int: Option<usize>,
    ) -> Result<Self> {
        if ballots.is_empty() {
            return Err(Error::Argument("an election needs at least one voter".into()));
        }
        if num_candidates == 0 {
            return Err(Error::Argument("an election needs at least one candidate".into()));
        }
        let q_parts = rational::small_parts(&q)?;
        if q_parts.0 == 0 {
            return Err(Error::Argument(format!("q must be positive, got {q}")));
        }
        let mut approvers = vec![Vec::new(); num_candidates];
        let mut ballots = ballots;
        for (voter, ballot) in ballots.iter_mut().enumerate() {
            ballot.sort_unstable();
            ballot.dedup();
            if let Some(&c) = ballot.iter().find(|&&c| c >= num_candidates) {
                return Err(Error::Argument(format!(
                    "voter {voter} approves candidate {c}, but there are only {num_candidates}"
                )));
            }
            for &c in ballot.iter() {
                approvers[c].push(voter);
            }
        }
        Ok(Self {
            num_candidates,
            ballots,
            approvers,
            q,
            q_parts,
            t_int,
        })
    }

    pub fn num_voters(&self) -> usize {
        self.ballots.len()
    }

    pub fn num_candidates(&self) -> usize {
        self.num_candidates
    }

    pub fn ballots(&self) -> &[Vec<usize>] {
        &self.ballots
    }

    pub fn ballot(&self, voter: usize) -> &[usize] {
        &self.ballots[voter]
    }

    pub fn approves(&self, voter: usize, candidate: usize) -> bool {
        self.ballots[voter].binary_search(&candidate).is_ok()
    }

    /// Voters approving `candidate`, ascending.
    pub fn approvers(&self, candidate: usize) -> &[usize] {
        &self.approvers[candidate]
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// `q` as `(numerator, denominator)` in lowest terms.
    pub fn q_parts(&self) -> (u64, u64) {
        self.q_parts
    }

    /// The price of one seat, `n/t = 1/q`, in units of one voter's budget.
    pub fn price(&self) -> Rational {
        self.q.recip()
    }

    /// The explicit committee size, or `floor(q * n)` when none was given.
    pub fn t_int(&self) -> usize {
        self.t_int
            .unwrap_or_else(|| rational::floor_times(&self.q, self.num_voters()))
    }

    pub fn explicit_t_int(&self) -> Option<usize> {
        self.t_int
    }

    /// Whether `size` voters meet the `ell`-cohesiveness size bound
    /// `size * q >= ell`.
    #[inline]
    pub fn large_enough(&self, size: usize, ell: usize) -> bool {
        let (qn, qd) = self.q_parts;
        size as u128 * qn as u128 >= ell as u128 * qd as u128
    }

    /// Same election with a different ratio.
    pub fn with_q(&self, q: Rational, t_int: Option<usize>) -> Result<Self> {
        Self::new(self.num_candidates, self.ballots.clone(), q, t_int)
    }
}

/// Text format, one ballot per line:
///
/// ```text
/// n_voters=4
/// n_candidates=4
/// q=1
/// 0: 0 1
/// 1: 0 1
/// 2: 2
/// 3: 2
/// ```
///
/// An optional `t=<int>` header fixes the committee size. Voters without a
/// line approve nothing. `#` starts a comment.
impl fmt::Display for Election {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n_voters={}", self.num_voters())?;
        writeln!(f, "n_candidates={}", self.num_candidates)?;
        writeln!(f, "q={}", self.q)?;
        if let Some(t) = self.t_int {
            writeln!(f, "t={t}")?;
        }
        for (voter, ballot) in self.ballots.iter().enumerate() {
            write!(f, "{voter}:")?;
            for c in ballot {
                write!(f, " {c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Election {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut voters = None;
        let mut candidates = None;
        let mut q = None;
        let mut t = None;
        let mut lines: Vec<(usize, Vec<usize>)> = Vec::new();
        let bad = |line: usize, msg: &str| Error::Format(format!("line {line}: {msg}"));

        for (no, raw) in text.lines().enumerate() {
            let no = no + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some((key, value)) = line.split_once('=') {
                let value = value.trim();
                let count = || value.parse::<usize>().map_err(|_| bad(no, "expected an integer"));
                match key.trim() {
                    "n_voters" => voters = Some(count()?),
                    "n_candidates" => candidates = Some(count()?),
                    "t" => t = Some(count()?),
                    "q" => q = Some(rational::parse_rational(value)?),
                    other => return Err(bad(no, &format!("unknown key {other:?}"))),
                }
            } else if let Some((voter, rest)) = line.split_once(':') {
                let voter = voter
                    .trim()
                    .parse()
                    .map_err(|_| bad(no, "expected a voter index"))?;
                let ballot = rest
                    .split_whitespace()
                    .map(|c| c.parse().map_err(|_| bad(no, "expected candidate indices")))
                    .collect::<Result<Vec<usize>>>()?;
                lines.push((voter, ballot));
            } else {
                return Err(bad(no, "expected `key=value` or `voter: candidates`"));
            }
        }

        let q = q.ok_or_else(|| Error::Format("missing q".into()))?;
        let voters = voters
            .or_else(|| lines.iter().map(|(v, _)| v + 1).max())
            .ok_or_else(|| Error::Format("missing n_voters".into()))?;
        let candidates = candidates.unwrap_or(voters);
        let mut ballots = vec![Vec::new(); voters];
        for (voter, ballot) in lines {
            let slot = ballots.get_mut(voter).ok_or_else(|| {
                Error::Format(format!("voter {voter} out of range for {voters} voters"))
            })?;
            slot.extend(ballot);
        }
        Election::new(candidates, ballots, q, t)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::ratio;

    pub(crate) fn e1() -> Election {
        Election::new(
            4,
            vec![vec![0, 1], vec![1, 0], vec![2], vec![2]],
            ratio(1, 1),
            None,
        )
        .unwrap()
    }

    #[test]
    fn approvers_and_price() {
        let e = e1();
        assert_eq!(e.ballot(1), [0, 1]);
        assert_eq!(e.approvers(0), [0, 1]);
        assert_eq!(e.approvers(2), [2, 3]);
        assert!(e.approvers(3).is_empty());
        assert_eq!(e.price(), ratio(1, 1));
        assert_eq!(e.t_int(), 4);
        assert!(e.large_enough(2, 2));
        assert!(!e.large_enough(1, 2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Election::new(2, vec![vec![2]], ratio(1, 1), None).is_err());
        assert!(Election::new(2, vec![vec![0]], ratio(0, 1), None).is_err());
        assert!(Election::new(2, vec![], ratio(1, 1), None).is_err());
    }

    #[test]
    fn text_round_trip() {
        let e = e1();
        let text = e.to_string();
        assert!(text.contains("0: 0 1\n"));
        assert_eq!(text.parse::<Election>().unwrap(), e);

        let fixture = "# one voter, three candidates\nn_voters=1\nn_candidates=3\nq=3\n0: 0 1 2\n";
        let e: Election = fixture.parse().unwrap();
        assert_eq!(e.num_voters(), 1);
        assert_eq!(e.num_candidates(), 3);
        assert_eq!(e.q(), &ratio(3, 1));
        assert_eq!(e.t_int(), 3);
    }

    #[test]
    fn text_errors() {
        assert!("n_voters=1\n0: 0\n".parse::<Election>().is_err());
        assert!("q=1\nn_voters=1\n3: 0\n".parse::<Election>().is_err());
        assert!("q=1\nbogus\n".parse::<Election>().is_err());
    }
}
