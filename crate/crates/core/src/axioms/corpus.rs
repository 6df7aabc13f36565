use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::election::Election;
use crate::rational::{ratio, Rational};

/// Each of `n` voters approves each of `n` candidates independently with
/// probability `p`.
pub fn random_election<R: Rng>(rng: &mut R, n: usize, p: f64, q: Rational) -> Election {
    let ballots = (0..n)
        .map(|_| (0..n).filter(|_| rng.gen_bool(p)).collect())
        .collect();
    Election::new(n, ballots, q, None).expect("valid random election")
}

#[derive(Debug, Clone)]
pub struct CorpusElection {
    pub election: Election,
    pub p: f64,
}

/// `count` seeded elections with `n` in 1..=10, `p` in {0.2, 0.5} and `q` in
/// {1/4, 1/2, 1, 2}.
pub fn random_corpus(seed: u64, count: usize) -> Vec<CorpusElection> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let qs = [ratio(1, 4), ratio(1, 2), ratio(1, 1), ratio(2, 1)];
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=10);
            let p = if rng.gen_bool(0.5) { 0.2 } else { 0.5 };
            let q = qs[rng.gen_range(0..qs.len())].clone();
            CorpusElection {
                election: random_election(&mut rng, n, p, q),
                p,
            }
        })
        .collect()
}
