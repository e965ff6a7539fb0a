//! Exact optimal rankings by dynamic programming over subsets, plus a
//! brute-force enumerator used as an independent check.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::preference::{build_graph, build_tournament};
use crate::ranking::{profile_cost, tournament_cost, Permutation, Profile};

/// Largest `n` accepted by [`kemeny_optimal`].
pub const MAX_DP_ELEMENTS: usize = 20;
/// Largest `n` accepted by [`brute_force_optimal`].
pub const MAX_BRUTE_FORCE_ELEMENTS: usize = 8;

/// Objective minimised by the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// `c_R`: total Kendall distance to the profile.
    Kemeny,
    /// `c_T`: back arcs of the majority tournament.
    Tournament,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalResult {
    pub permutation: Permutation,
    pub cost: u64,
}

/// `penalty[a * n + b]`: cost charged when `a` is placed above `b`.
fn pair_penalties(profile: &Profile, objective: Objective) -> Vec<u64> {
    let n = profile.n();
    let g = build_graph(profile);
    let mut penalty = vec![0u64; n * n];
    match objective {
        Objective::Kemeny => {
            for a in 0..n {
                for b in 0..n {
                    penalty[a * n + b] = g.count(b, a);
                }
            }
        }
        Objective::Tournament => {
            let t = build_tournament(&g);
            for a in 0..n {
                for b in 0..n {
                    penalty[a * n + b] = t.beats(b, a) as u64;
                }
            }
        }
    }
    penalty
}

/// Globally optimal ranking for `objective`, `n <= 20`.
///
/// `best[S]` is the cheapest way to order the elements outside `S` given that
/// the elements of `S` already fill the top positions. The optimum is rebuilt
/// from the top by always taking the smallest feasible element, which yields
/// the lexicographically smallest optimal row vector.
pub fn kemeny_optimal(profile: &Profile, objective: Objective) -> Result<OptimalResult> {
    let n = profile.n();
    if n > MAX_DP_ELEMENTS {
        return Err(Error::Budget {
            n,
            limit: MAX_DP_ELEMENTS,
            what: "exact subset DP",
        });
    }
    let penalty = pair_penalties(profile, objective);
    let full: usize = (1usize << n) - 1;
    let mut best = vec![0u64; 1 << n];

    // Cost of putting j directly below `placed`: sum over the rest r of penalty[j][r].
    let step = |placed: usize, j: usize| -> u64 {
        let row = &penalty[j * n..(j + 1) * n];
        let mut rest = full & !placed & !(1 << j);
        let mut sum = 0;
        while rest != 0 {
            sum += row[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        sum
    };

    for placed in (0..full).rev() {
        let mut free = full & !placed;
        let mut value = u64::MAX;
        while free != 0 {
            let j = free.trailing_zeros() as usize;
            free &= free - 1;
            value = value.min(step(placed, j) + best[placed | (1 << j)]);
        }
        best[placed] = value;
    }

    let mut order = Vec::with_capacity(n);
    let mut placed = 0usize;
    while placed != full {
        let j = (0..n)
            .find(|&j| placed & (1 << j) == 0 && step(placed, j) + best[placed | (1 << j)] == best[placed])
            .expect("some element attains the optimum");
        order.push(j);
        placed |= 1 << j;
    }
    Ok(OptimalResult {
        permutation: Permutation::from_order(order)?,
        cost: best[0],
    })
}

/// Scores all `n!` rankings directly with the cost functions, `n <= 8`;
/// same tie rule as [`kemeny_optimal`].
pub fn brute_force_optimal(profile: &Profile, objective: Objective) -> Result<OptimalResult> {
    let n = profile.n();
    if n > MAX_BRUTE_FORCE_ELEMENTS {
        return Err(Error::Budget {
            n,
            limit: MAX_BRUTE_FORCE_ELEMENTS,
            what: "brute-force enumeration",
        });
    }
    let tournament = build_tournament(&build_graph(profile));
    let mut best: Option<(u64, Permutation)> = None;
    // permutations() of a sorted range is lexicographic, so the first minimum wins.
    for order in (0..n).permutations(n) {
        let sigma = Permutation::from_order(order)?;
        let cost = match objective {
            Objective::Kemeny => profile_cost(&sigma, profile)?,
            Objective::Tournament => tournament_cost(&sigma, &tournament)?,
        };
        if best.as_ref().is_none_or(|(c, _)| cost < *c) {
            best = Some((cost, sigma));
        }
    }
    let (cost, permutation) = best.expect("n >= 1 has at least one ranking");
    Ok(OptimalResult { permutation, cost })
}
