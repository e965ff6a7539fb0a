//! Permutations, profiles of input rankings, the Kendall distance, and the
//! three cost functions used throughout the crate:
//!
//! * `c_R` ([`profile_cost`]): total Kendall distance to every input ranking.
//! * `c_G` ([`graph_cost`]): total weight of back arcs in the preference graph.
//! * `c_T` ([`tournament_cost`]): number of back arcs in the majority tournament.
//!
//! Rankings are written as row vectors listing elements from the highest
//! ranked to the lowest, so `(2, 0, 1)` places element 2 first.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::preference::{MajorityTournament, PreferenceGraph};

/// Exact rational used for `c_G` and approximation ratios.
pub type Rational = Ratio<i64>;

/// A full ranking of the elements `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    /// `rank[e]` is the position of element `e` (0 is the top).
    rank: Vec<usize>,
    /// `order[p]` is the element at position `p`.
    order: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its row vector (highest-ranked element first).
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty ranking".into()));
        }
        let mut rank = vec![usize::MAX; n];
        for (pos, &e) in order.iter().enumerate() {
            if e >= n {
                return Err(Error::InvalidPermutation(format!(
                    "element {e} out of range for n = {n}"
                )));
            }
            if rank[e] != usize::MAX {
                return Err(Error::InvalidPermutation(format!("element {e} repeated")));
            }
            rank[e] = pos;
        }
        Ok(Self { rank, order })
    }

    /// Builds a permutation from its rank function (`rank[e]` = position of `e`).
    pub fn from_ranks(rank: Vec<usize>) -> Result<Self> {
        let n = rank.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty ranking".into()));
        }
        let mut order = vec![usize::MAX; n];
        for (e, &pos) in rank.iter().enumerate() {
            if pos >= n || order[pos] != usize::MAX {
                return Err(Error::InvalidPermutation(format!(
                    "rank vector is not a bijection at element {e}"
                )));
            }
            order[pos] = e;
        }
        Ok(Self { rank, order })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "a permutation needs at least one element");
        Self {
            rank: (0..n).collect(),
            order: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    /// Always false; a permutation has at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn rank_of(&self, element: usize) -> usize {
        self.rank[element]
    }

    pub fn element_at(&self, position: usize) -> usize {
        self.order[position]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Row vector form: elements from highest to lowest.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// True when `a` is ranked strictly above `b`.
    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        Self::from_order(order).expect("reversal of a permutation is a permutation")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.order.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// One distinct input ranking together with the number of voters casting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    pub ranking: Permutation,
    pub multiplicity: u64,
}

/// A multiset of input rankings over the same `n` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    n: usize,
    m: u64,
    entries: Vec<ProfileEntry>,
}

impl Profile {
    pub fn new(entries: Vec<ProfileEntry>) -> Result<Self> {
        let first = entries
            .first()
            .ok_or_else(|| Error::InvalidProfile("no rankings".into()))?;
        let n = first.ranking.len();
        let mut m = 0u64;
        for entry in &entries {
            if entry.ranking.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: entry.ranking.len(),
                });
            }
            if entry.multiplicity == 0 {
                return Err(Error::InvalidProfile("zero multiplicity".into()));
            }
            m = m
                .checked_add(entry.multiplicity)
                .ok_or_else(|| Error::InvalidProfile("multiplicity overflow".into()))?;
        }
        Ok(Self { n, m, entries })
    }

    /// Convenience constructor from `(multiplicity, row vector)` pairs.
    pub fn from_orders<I, O>(items: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, O)>,
        O: Into<Vec<usize>>,
    {
        let entries = items
            .into_iter()
            .map(|(multiplicity, order)| {
                Ok(ProfileEntry {
                    ranking: Permutation::from_order(order.into())?,
                    multiplicity,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn single(ranking: Permutation) -> Self {
        Self {
            n: ranking.len(),
            m: 1,
            entries: vec![ProfileEntry {
                ranking,
                multiplicity: 1,
            }],
        }
    }

    /// Number of ranked elements.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of voters (total multiplicity).
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn entries(&self) -> &[ProfileEntry] {
        &self.entries
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Number of element pairs ordered differently by `a` and `b`.
///
/// Relabels `b`'s row vector through `a`'s ranks and counts inversions with
/// a merge sort, so the cost is `O(n log n)`.
pub fn kendall_distance(a: &Permutation, b: &Permutation) -> Result<u64> {
    check_dims(a.len(), b.len())?;
    let mut seq: Vec<usize> = b.order().iter().map(|&e| a.rank_of(e)).collect();
    let mut scratch = vec![0usize; seq.len()];
    Ok(count_inversions(&mut seq, &mut scratch))
}

fn count_inversions(seq: &mut [usize], scratch: &mut [usize]) -> u64 {
    let n = seq.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = {
        let (left, right) = seq.split_at_mut(mid);
        let (sl, sr) = scratch.split_at_mut(mid);
        count_inversions(left, sl) + count_inversions(right, sr)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if seq[i] <= seq[j] {
            scratch[k] = seq[i];
            i += 1;
        } else {
            scratch[k] = seq[j];
            count += (mid - i) as u64;
            j += 1;
        }
        k += 1;
    }
    scratch[k..k + mid - i].copy_from_slice(&seq[i..mid]);
    k += mid - i;
    scratch[k..k + n - j].copy_from_slice(&seq[j..n]);
    seq.copy_from_slice(&scratch[..n]);
    count
}

/// `c_R(sigma)`: multiplicity-weighted sum of Kendall distances to the profile.
pub fn profile_cost(sigma: &Permutation, profile: &Profile) -> Result<u64> {
    check_dims(profile.n(), sigma.len())?;
    profile.entries().iter().try_fold(0u64, |acc, entry| {
        Ok(acc + entry.multiplicity * kendall_distance(sigma, &entry.ranking)?)
    })
}

/// `c_G(sigma)`: sum of `w_ji` over all pairs where `sigma` puts `i` above `j`.
pub fn graph_cost(sigma: &Permutation, graph: &PreferenceGraph) -> Result<Rational> {
    check_dims(graph.n(), sigma.len())?;
    Ok(Rational::new(back_arc_count(sigma, graph) as i64, graph.m() as i64))
}

/// Numerator of `c_G` over the common denominator `m`.
pub(crate) fn back_arc_count(sigma: &Permutation, graph: &PreferenceGraph) -> u64 {
    let order = sigma.order();
    let mut total = 0;
    for (p, &above) in order.iter().enumerate() {
        for &below in &order[p + 1..] {
            total += graph.count(below, above);
        }
    }
    total
}

/// `c_T(sigma)`: pairs ranked `i` above `j` although `j` beats `i` in `t`.
pub fn tournament_cost(sigma: &Permutation, t: &MajorityTournament) -> Result<u64> {
    check_dims(t.n(), sigma.len())?;
    let order = sigma.order();
    let mut total = 0;
    for (p, &above) in order.iter().enumerate() {
        for &below in &order[p + 1..] {
            if t.beats(below, above) {
                total += 1;
            }
        }
    }
    Ok(total)
}

/// Restricts every ranking to `subset`, relabelling `subset[r]` as `r`.
///
/// Multiplicities carry over unchanged; the relative order of the kept
/// elements is preserved.
pub fn project_profile(profile: &Profile, subset: &[usize]) -> Result<Profile> {
    if subset.is_empty() {
        return Err(Error::InvalidInput("empty subset".into()));
    }
    let n = profile.n();
    let mut label = vec![usize::MAX; n];
    for (r, &e) in subset.iter().enumerate() {
        if e >= n {
            return Err(Error::InvalidInput(format!(
                "element {e} out of range for n = {n}"
            )));
        }
        if label[e] != usize::MAX {
            return Err(Error::InvalidInput(format!("element {e} repeated in subset")));
        }
        label[e] = r;
    }
    let entries = profile
        .entries()
        .iter()
        .map(|entry| {
            let order: Vec<usize> = entry
                .ranking
                .order()
                .iter()
                .filter_map(|&e| (label[e] != usize::MAX).then_some(label[e]))
                .collect();
            Ok(ProfileEntry {
                ranking: Permutation::from_order(order)?,
                multiplicity: entry.multiplicity,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Profile::new(entries)
}
