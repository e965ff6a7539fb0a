//! Pairwise preference counts, the majority tournament, Copeland and Borda
//! scoring, and the strongly connected component decomposition.

use std::cmp::Ordering;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::error::{Error, Result};
use crate::ranking::{Permutation, Profile, Rational};

/// Complete weighted digraph with `counts[i][j]` voters placing `i` above `j`.
/// The arc weight is `w_ij = counts[i][j] / m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceGraph {
    n: usize,
    m: u64,
    counts: Vec<u64>,
}

impl PreferenceGraph {
    /// Builds a graph from raw counts, row-major `n x n`.
    ///
    /// Only the shape is validated (square, zero diagonal, `m > 0`), so
    /// hand-built graphs violating the probability constraints can be
    /// represented and then audited with [`check_probability_constraints`].
    pub fn from_counts(n: usize, m: u64, counts: Vec<u64>) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidInput("graph needs n >= 1 and m >= 1".into()));
        }
        if counts.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: counts.len(),
            });
        }
        if (0..n).any(|i| counts[i * n + i] != 0) {
            return Err(Error::InvalidInput("diagonal counts must be zero".into()));
        }
        Ok(Self { n, m, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of voters placing `i` above `j`.
    pub fn count(&self, i: usize, j: usize) -> u64 {
        self.counts[i * self.n + j]
    }

    pub fn weight(&self, i: usize, j: usize) -> Rational {
        Rational::new(self.count(i, j) as i64, self.m as i64)
    }

    /// Weighted indegree `sum_j w_ji`, scaled by `m`.
    pub fn indegree_count(&self, i: usize) -> u64 {
        (0..self.n).map(|j| self.count(j, i)).sum()
    }
}

/// Counts, for every ordered pair, the voters ranking the first above the second.
pub fn build_graph(profile: &Profile) -> PreferenceGraph {
    let n = profile.n();
    let mut counts = vec![0u64; n * n];
    for entry in profile.entries() {
        let order = entry.ranking.order();
        for (p, &above) in order.iter().enumerate() {
            for &below in &order[p + 1..] {
                counts[above * n + below] += entry.multiplicity;
            }
        }
    }
    PreferenceGraph {
        n,
        m: profile.m(),
        counts,
    }
}

/// A violated probability constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintViolation {
    /// `w_ij + w_ji != 1`, with `i < j`.
    Pair { i: usize, j: usize },
    /// `w_ij + w_jk < w_ik`.
    Triangle { i: usize, j: usize, k: usize },
}

/// Lists every pair with `w_ij + w_ji != 1` and every ordered triple with
/// `w_ij + w_jk < w_ik`. Comparisons are exact (integer counts over `m`).
pub fn check_probability_constraints(g: &PreferenceGraph) -> Vec<ConstraintViolation> {
    let n = g.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if g.count(i, j) + g.count(j, i) != g.m() {
                out.push(ConstraintViolation::Pair { i, j });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                if g.count(i, j) + g.count(j, k) < g.count(i, k) {
                    out.push(ConstraintViolation::Triangle { i, j, k });
                }
            }
        }
    }
    out
}

/// Majority relation on `n` elements; `beats(i, j)` means `i` is preferred
/// to `j` by a majority, i.e. `j` is in `P_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorityTournament {
    n: usize,
    beats: Vec<bool>,
    tie_pairs: Vec<(usize, usize)>,
}

impl MajorityTournament {
    /// Builds a tournament from a predicate; exactly one of `f(i, j)` and
    /// `f(j, i)` must hold for each pair of distinct elements.
    pub fn from_beats_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("tournament needs n >= 1".into()));
        }
        let mut beats = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    beats[i * n + j] = f(i, j);
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if beats[i * n + j] == beats[j * n + i] {
                    return Err(Error::InvalidInput(format!(
                        "pair ({i}, {j}) must be oriented exactly one way"
                    )));
                }
            }
        }
        Ok(Self {
            n,
            beats,
            tie_pairs: Vec::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True when `i` beats `j` (`j` is in `P_i`).
    pub fn beats(&self, i: usize, j: usize) -> bool {
        self.beats[i * self.n + j]
    }

    /// The set `P_i`, ascending.
    pub fn wins(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.beats(i, j))
    }

    /// `|P_i|`.
    pub fn score(&self, i: usize) -> usize {
        self.wins(i).count()
    }

    /// Pairs `(i, j)`, `i < j`, whose majority was an exact tie and was
    /// oriented by the index rule (`i` beats `j`).
    pub fn tie_pairs(&self) -> &[(usize, usize)] {
        &self.tie_pairs
    }

    pub fn condorcet_winner(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.score(i) == self.n - 1)
    }

    /// Induced sub-tournament on `subset`, relabelling `subset[r]` as `r`.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::InvalidInput("empty subset".into()));
        }
        let mut seen = vec![false; self.n];
        for &e in subset {
            if e >= self.n || std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidInput(format!("bad subset element {e}")));
            }
        }
        let mut t = Self::from_beats_fn(subset.len(), |a, b| self.beats(subset[a], subset[b]))?;
        let mut label = vec![usize::MAX; self.n];
        for (r, &e) in subset.iter().enumerate() {
            label[e] = r;
        }
        t.tie_pairs = self
            .tie_pairs
            .iter()
            .filter(|&&(a, b)| label[a] != usize::MAX && label[b] != usize::MAX)
            .map(|&(a, b)| {
                let (x, y) = (label[a], label[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        Ok(t)
    }
}

/// Orients each pair toward the majority. Exact ties go to the smaller index
/// and are recorded in [`MajorityTournament::tie_pairs`].
pub fn build_tournament(g: &PreferenceGraph) -> MajorityTournament {
    let n = g.n();
    let mut beats = vec![false; n * n];
    let mut tie_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let i_wins = match g.count(i, j).cmp(&g.count(j, i)) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => {
                    tie_pairs.push((i, j));
                    true
                }
            };
            beats[i * n + j] = i_wins;
            beats[j * n + i] = !i_wins;
        }
    }
    MajorityTournament { n, beats, tie_pairs }
}

/// Copeland scores `|P_i|`.
pub fn copeland_scores(t: &MajorityTournament) -> Vec<usize> {
    (0..t.n()).map(|i| t.score(i)).collect()
}

/// Elements by Copeland score, highest first; equal scores by ascending index.
pub fn copeland_ranking(t: &MajorityTournament) -> Permutation {
    let scores = copeland_scores(t);
    let mut order: Vec<usize> = (0..t.n()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(scores[i]));
    Permutation::from_order(order).expect("sorted indices form a permutation")
}

/// Elements by weighted indegree `sum_j w_ji`, smallest first; ties by index.
pub fn borda_ranking(g: &PreferenceGraph) -> Permutation {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&i| g.indegree_count(i));
    Permutation::from_order(order).expect("sorted indices form a permutation")
}

/// Strongly connected components of the beats relation, winners first: every
/// arc between two components goes from the earlier set to the later one.
/// Elements within a set are ascending.
pub fn scc_decomposition(t: &MajorityTournament) -> Vec<Vec<usize>> {
    components_in_topological_order(t.n(), |i, j| t.beats(i, j))
}

/// SCCs of the digraph on `0..n` with arcs `i -> j` where `arc(i, j)`, in
/// topological order of the condensation (sources first).
pub(crate) fn components_in_topological_order(
    n: usize,
    arc: impl Fn(usize, usize) -> bool,
) -> Vec<Vec<usize>> {
    let mut graph = DiGraph::<(), ()>::with_capacity(n, n * n / 2);
    let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && arc(i, j) {
                graph.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    // tarjan_scc yields components in reverse topological order.
    let mut comps: Vec<Vec<usize>> = tarjan_scc(&graph)
        .into_iter()
        .rev()
        .map(|c| {
            let mut v: Vec<usize> = c.into_iter().map(|ix| ix.index()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    comps.shrink_to_fit();
    comps
}
