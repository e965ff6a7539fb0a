//! Markov-chain aggregators.
//!
//! MC1, MC2 and MC3 are built from the input rankings; MC4 (and its restart
//! variant with probability `delta`) is built from the majority tournament.
//! Every chain walks toward better-ranked elements, and the aggregate ranking
//! sorts elements by stationary probability. Chains that are not strongly
//! connected are ranked by peeling off a closed class, ranking it with a chain
//! rebuilt on that sub-instance, and recursing on the remaining elements.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::preference::{build_graph, build_tournament, components_in_topological_order, MajorityTournament};
use crate::ranking::{project_profile, Permutation, Profile};

/// Row sums must be within this distance of 1.
pub const ROW_SUM_TOLERANCE: f64 = 1e-12;
/// Maximum accepted `||xP - x||_inf` for a solved stationary vector.
pub const STATIONARY_RESIDUAL_TOLERANCE: f64 = 1e-10;
/// Stationary values closer than this are ranked as tied (then by index).
pub const STATIONARY_TIE_TOLERANCE: f64 = 1e-9;

/// Which aggregator chain to build.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChainVariant {
    Mc1,
    Mc2,
    Mc3,
    /// MC4 with restart probability `delta`; `delta = 0` is plain MC4.
    Mc4 { delta: f64 },
}

impl ChainVariant {
    pub fn name(&self) -> &'static str {
        match self {
            ChainVariant::Mc1 => "mc1",
            ChainVariant::Mc2 => "mc2",
            ChainVariant::Mc3 => "mc3",
            ChainVariant::Mc4 { .. } => "mc4",
        }
    }
}

fn check_delta(delta: f64) -> Result<()> {
    if (0.0..1.0).contains(&delta) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("delta must lie in [0, 1), got {delta}")))
    }
}

/// Dense row-stochastic matrix; `get(i, j)` is the probability of moving
/// from state `i` to state `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    n: usize,
    p: Vec<f64>,
}

impl TransitionMatrix {
    pub fn new(n: usize, p: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("empty transition matrix".into()));
        }
        if p.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: p.len(),
            });
        }
        for i in 0..n {
            let row = &p[i * n..(i + 1) * n];
            if let Some(j) = row.iter().position(|v| !(0.0..=1.0).contains(v)) {
                return Err(Error::NotStochastic(format!(
                    "entry ({i}, {j}) = {} outside [0, 1]",
                    row[j]
                )));
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > ROW_SUM_TOLERANCE {
                return Err(Error::NotStochastic(format!("row {i} sums to {sum}")));
            }
        }
        Ok(Self { n, p })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("transition matrix must be square".into()));
        }
        Self::new(n, rows.concat())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.p[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.p[i * self.n..(i + 1) * self.n]
    }

    /// SCCs of the support digraph (arcs where `p_ij > 0`), sources first.
    pub fn support_components(&self) -> Vec<Vec<usize>> {
        components_in_topological_order(self.n, |i, j| self.get(i, j) > 0.0)
    }

    /// `||xP - x||_inf`.
    pub fn residual(&self, x: &[f64]) -> f64 {
        (0..self.n)
            .map(|j| {
                let xp: f64 = (0..self.n).map(|i| x[i] * self.get(i, j)).sum();
                (xp - x[j]).abs()
            })
            .fold(0.0, f64::max)
    }

    fn submatrix(&self, states: &[usize]) -> Result<Self> {
        let k = states.len();
        let mut p = Vec::with_capacity(k * k);
        for &i in states {
            for &j in states {
                p.push(self.get(i, j));
            }
        }
        Self::new(k, p)
    }
}

/// Probability vector `x` with `xP = x`.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryVector {
    x: Vec<f64>,
}

impl StationaryVector {
    pub fn values(&self) -> &[f64] {
        &self.x
    }

    pub fn get(&self, i: usize) -> f64 {
        self.x[i]
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Elements by stationary probability, highest first.
    ///
    /// After a descending sort, runs of values within
    /// [`STATIONARY_TIE_TOLERANCE`] of the run's leading value are treated as
    /// tied and reordered by ascending element index.
    pub fn ranking(&self) -> Permutation {
        Permutation::from_order(order_by_values(&self.x)).expect("indices form a permutation")
    }
}

fn order_by_values(x: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    idx.sort_by(|&a, &b| x[b].total_cmp(&x[a]).then(a.cmp(&b)));
    let mut start = 0;
    while start < idx.len() {
        let head = x[idx[start]];
        let mut end = start + 1;
        while end < idx.len() && head - x[idx[end]] <= STATIONARY_TIE_TOLERANCE {
            end += 1;
        }
        idx[start..end].sort_unstable();
        start = end;
    }
    idx
}

/// Builds the transition matrix of the chosen chain for `profile`.
///
/// Rankings with multiplicity `c` contribute exactly as `c` copies would.
pub fn build_chain(profile: &Profile, variant: ChainVariant) -> Result<TransitionMatrix> {
    let n = profile.n();
    let m = profile.m() as f64;
    let entries = profile.entries();
    let mut p = vec![0.0; n * n];
    match variant {
        ChainVariant::Mc4 { delta } => {
            check_delta(delta)?;
            return build_mc4(&build_tournament(&build_graph(profile)), delta);
        }
        ChainVariant::Mc1 => {
            for i in 0..n {
                // sum_k x_ik, where x_ik = rank_k(i) + 1
                let denom: u64 = entries
                    .iter()
                    .map(|e| e.multiplicity * (e.ranking.rank_of(i) as u64 + 1))
                    .sum();
                for j in 0..n {
                    let y: u64 = entries
                        .iter()
                        .filter(|e| e.ranking.rank_of(j) <= e.ranking.rank_of(i))
                        .map(|e| e.multiplicity)
                        .sum();
                    p[i * n + j] = y as f64 / denom as f64;
                }
            }
        }
        ChainVariant::Mc2 => {
            for e in entries {
                let weight = e.multiplicity as f64 / m;
                for i in 0..n {
                    let ri = e.ranking.rank_of(i);
                    let share = weight / (ri + 1) as f64;
                    for pos in 0..=ri {
                        p[i * n + e.ranking.element_at(pos)] += share;
                    }
                }
            }
            // summed shares of a certain move can round to just above 1
            for v in &mut p {
                *v = v.min(1.0);
            }
        }
        ChainVariant::Mc3 => {
            let mn = m * n as f64;
            for i in 0..n {
                for j in 0..n {
                    let z: u64 = if i == j {
                        entries
                            .iter()
                            .map(|e| e.multiplicity * (n - e.ranking.rank_of(i)) as u64)
                            .sum()
                    } else {
                        entries
                            .iter()
                            .filter(|e| e.ranking.prefers(j, i))
                            .map(|e| e.multiplicity)
                            .sum()
                    };
                    p[i * n + j] = z as f64 / mn;
                }
            }
        }
    }
    TransitionMatrix::new(n, p)
}

/// MC4 with restart probability `delta`: from `i`, pick `j` uniformly; move
/// with probability 1 if `j` beats `i`, with probability `delta` otherwise.
pub fn build_mc4(t: &MajorityTournament, delta: f64) -> Result<TransitionMatrix> {
    check_delta(delta)?;
    let n = t.n();
    let nf = n as f64;
    let mut p = vec![0.0; n * n];
    for i in 0..n {
        let mut off = 0.0;
        for j in 0..n {
            if i != j {
                let v = if t.beats(j, i) { 1.0 / nf } else { delta / nf };
                p[i * n + j] = v;
                off += v;
            }
        }
        p[i * n + i] = (1.0 - off).max(0.0);
    }
    TransitionMatrix::new(n, p)
}

/// Stationary distribution of an irreducible chain.
///
/// Solves `(P^T - I) x = 0` with the last equation replaced by `sum x = 1`
/// using an LU factorisation with partial pivoting.
pub fn stationary_distribution(p: &TransitionMatrix) -> Result<StationaryVector> {
    let comps = p.support_components();
    if comps.len() > 1 {
        return Err(Error::ReducibleChain {
            components: comps.len(),
        });
    }
    solve_irreducible(p)
}

/// Stationary distribution of a chain with exactly one closed class: the
/// closed class is solved on its own and every transient state gets 0.
pub fn stationary_distribution_unichain(p: &TransitionMatrix) -> Result<StationaryVector> {
    let comps = p.support_components();
    let closed = closed_components(p, &comps);
    if closed.len() != 1 {
        return Err(Error::ReducibleChain {
            components: comps.len(),
        });
    }
    let class = &comps[closed[0]];
    let sub = solve_irreducible(&p.submatrix(class)?)?;
    let mut x = vec![0.0; p.n()];
    for (r, &e) in class.iter().enumerate() {
        x[e] = sub.get(r);
    }
    Ok(StationaryVector { x })
}

fn closed_components(p: &TransitionMatrix, comps: &[Vec<usize>]) -> Vec<usize> {
    let mut comp_of = vec![0; p.n()];
    for (c, members) in comps.iter().enumerate() {
        for &e in members {
            comp_of[e] = c;
        }
    }
    (0..comps.len())
        .filter(|&c| {
            comps[c]
                .iter()
                .all(|&i| (0..p.n()).all(|j| p.get(i, j) == 0.0 || comp_of[j] == c))
        })
        .collect()
}

fn solve_irreducible(p: &TransitionMatrix) -> Result<StationaryVector> {
    let n = p.n();
    if n == 1 {
        return Ok(StationaryVector { x: vec![1.0] });
    }
    let mut a = DMatrix::<f64>::from_fn(n, n, |r, c| p.get(c, r) - if r == c { 1.0 } else { 0.0 });
    for c in 0..n {
        a[(n - 1, c)] = 1.0;
    }
    let mut b = DVector::<f64>::zeros(n);
    b[n - 1] = 1.0;
    let sol = a
        .lu()
        .solve(&b)
        .ok_or_else(|| Error::Numerical("singular stationary system".into()))?;
    let mut x: Vec<f64> = sol.iter().map(|v| v.max(0.0)).collect();
    let total: f64 = x.iter().sum();
    if total.is_nan() || total <= 0.0 {
        return Err(Error::Numerical("stationary vector vanished".into()));
    }
    x.iter_mut().for_each(|v| *v /= total);
    let residual = p.residual(&x);
    if residual > STATIONARY_RESIDUAL_TOLERANCE {
        return Err(Error::Numerical(format!(
            "stationary residual {residual:e} exceeds {STATIONARY_RESIDUAL_TOLERANCE:e}"
        )));
    }
    Ok(StationaryVector { x })
}

/// A sub-instance on which a chain can be rebuilt.
trait ChainInstance: Sized {
    fn matrix(&self) -> Result<TransitionMatrix>;
    fn restrict(&self, subset: &[usize]) -> Result<Self>;
}

struct ProfileInstance {
    profile: Profile,
    variant: ChainVariant,
}

impl ChainInstance for ProfileInstance {
    fn matrix(&self) -> Result<TransitionMatrix> {
        build_chain(&self.profile, self.variant)
    }

    fn restrict(&self, subset: &[usize]) -> Result<Self> {
        Ok(Self {
            profile: project_profile(&self.profile, subset)?,
            variant: self.variant,
        })
    }
}

struct TournamentInstance {
    tournament: MajorityTournament,
    delta: f64,
}

impl ChainInstance for TournamentInstance {
    fn matrix(&self) -> Result<TransitionMatrix> {
        build_mc4(&self.tournament, self.delta)
    }

    fn restrict(&self, subset: &[usize]) -> Result<Self> {
        Ok(Self {
            tournament: self.tournament.restrict(subset)?,
            delta: self.delta,
        })
    }
}

fn rank_instance<I: ChainInstance>(instance: &I) -> Result<Vec<usize>> {
    let p = instance.matrix()?;
    let comps = p.support_components();
    if comps.len() == 1 {
        return Ok(order_by_values(solve_irreducible(&p)?.values()));
    }
    // A closed class receives no probability mass from outside and ranks
    // first; with several, the one holding the smallest element wins.
    let closed = closed_components(&p, &comps);
    let top = closed
        .into_iter()
        .map(|c| &comps[c])
        .min_by_key(|c| c[0])
        .ok_or_else(|| Error::Numerical("chain has no closed class".into()))?;
    let mut in_top = vec![false; p.n()];
    top.iter().for_each(|&e| in_top[e] = true);
    let rest: Vec<usize> = (0..p.n()).filter(|&e| !in_top[e]).collect();

    let mut order: Vec<usize> = rank_instance(&instance.restrict(top)?)?
        .into_iter()
        .map(|r| top[r])
        .collect();
    order.extend(
        rank_instance(&instance.restrict(&rest)?)?
            .into_iter()
            .map(|r| rest[r]),
    );
    Ok(order)
}

/// Aggregate ranking produced by the chosen chain, with the component
/// recursion applied whenever the chain is not strongly connected.
pub fn chain_ranking(profile: &Profile, variant: ChainVariant) -> Result<Permutation> {
    let order = match variant {
        ChainVariant::Mc4 { delta } => {
            check_delta(delta)?;
            let tournament = build_tournament(&build_graph(profile));
            rank_instance(&TournamentInstance { tournament, delta })?
        }
        _ => rank_instance(&ProfileInstance {
            profile: profile.clone(),
            variant,
        })?,
    };
    Permutation::from_order(order)
}

/// MC4 ranking computed directly from a tournament.
pub fn mc4_ranking(t: &MajorityTournament, delta: f64) -> Result<Permutation> {
    check_delta(delta)?;
    let order = rank_instance(&TournamentInstance {
        tournament: t.clone(),
        delta,
    })?;
    Permutation::from_order(order)
}

/// Largest violation of the MC4 fixed-point identity
///
/// `x_j (n - (1 - delta)(|P_j| + 1)) = delta + (1 - delta) * sum_{i in P_j} x_i`,
///
/// which at `delta = 0` reads `x_j (n - |P_j| - 1) = sum_{i in P_j} x_i`.
pub fn mc4_fixed_point_residual(
    t: &MajorityTournament,
    x: &StationaryVector,
    delta: f64,
) -> Result<f64> {
    check_delta(delta)?;
    let n = t.n();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    if delta == 0.0 {
        if let Some(w) = t.condorcet_winner() {
            return Err(Error::InvalidInput(format!(
                "element {w} beats every other element; the delta = 0 identity is degenerate"
            )));
        }
    }
    let keep = 1.0 - delta;
    Ok((0..n)
        .map(|j| {
            let wins: Vec<usize> = t.wins(j).collect();
            let lhs = x.get(j) * (n as f64 - keep * (wins.len() + 1) as f64);
            let rhs = delta + keep * wins.iter().map(|&i| x.get(i)).sum::<f64>();
            (lhs - rhs).abs()
        })
        .fold(0.0, f64::max))
}
