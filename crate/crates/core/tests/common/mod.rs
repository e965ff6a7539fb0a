#![allow(dead_code, clippy::needless_range_loop)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rankagg::preference::MajorityTournament;
use rankagg::{Permutation, Profile, ProfileEntry};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    Permutation::from_order(order).unwrap()
}

/// `m` voters, each with an independent uniform ranking.
pub fn random_profile(rng: &mut impl Rng, n: usize, m: u64) -> Profile {
    let entries = (0..m)
        .map(|_| ProfileEntry {
            ranking: random_permutation(rng, n),
            multiplicity: 1,
        })
        .collect();
    Profile::new(entries).unwrap()
}

/// Every pair oriented by a fair coin.
pub fn random_tournament(rng: &mut impl Rng, n: usize) -> MajorityTournament {
    let coins: Vec<bool> = (0..n * n).map(|_| rng.random()).collect();
    MajorityTournament::from_beats_fn(n, |i, j| {
        let (a, b) = (i.min(j), i.max(j));
        coins[a * n + b] == (i == a)
    })
    .unwrap()
}

/// Stationary distribution by repeated multiplication; independent of the LU solver.
pub fn power_iteration(p: &rankagg::markov::TransitionMatrix, iterations: usize) -> Vec<f64> {
    let n = p.n();
    let mut x = vec![1.0 / n as f64; n];
    for _ in 0..iterations {
        let mut next = vec![0.0; n];
        for i in 0..n {
            for j in 0..n {
                next[j] += x[i] * p.get(i, j);
            }
        }
        x = next;
    }
    x
}
