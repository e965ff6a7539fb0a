//! Acceptance suite: one line per criterion, non-zero exit if any fails.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod common;

use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::Rng;

use common::{random_permutation, random_profile, random_tournament, rng};
use rankagg::adversarial::{mc123_instance, mc4_instance, triangle_costs, triangle_instance, triangle_rankings};
use rankagg::exact::{brute_force_optimal, kemeny_optimal, Objective};
use rankagg::markov::{
    build_chain, build_mc4, chain_ranking, mc4_fixed_point_residual, stationary_distribution,
    stationary_distribution_unichain, ChainVariant, STATIONARY_RESIDUAL_TOLERANCE,
};
use rankagg::preference::{build_graph, build_tournament, copeland_ranking, copeland_scores, scc_decomposition};
use rankagg::ranking::{graph_cost, profile_cost, tournament_cost};
use rankagg::{Permutation, Profile, Rational};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> std::result::Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:?}, limit {limit:?}"))
    }
}

/// 1. Triangle family: factor 2 is approached and never exceeded.
fn triangle_factor_two() -> Check {
    let start = Instant::now();
    let inst = triangle_instance(100).map_err(err)?;
    let opt = kemeny_optimal(&inst.profile, Objective::Kemeny).map_err(err)?;
    let pi1 = &triangle_rankings()[0];
    let cost_pi1 = profile_cost(pi1, &inst.profile).map_err(err)?;
    ensure!(opt.cost == 202, "OPT = {} != 202", opt.cost);
    ensure!(cost_pi1 == 401, "c_R(pi_1) = {cost_pi1} != 401");

    let costs: Vec<u64> = triangle_rankings()
        .iter()
        .map(|p| profile_cost(p, &inst.profile))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let worst = *costs.iter().max().unwrap();
    ensure!(Rational::new(worst as i64, opt.cost as i64) == Rational::new(401, 202), "worst ratio {worst}/{}", opt.cost);

    for k in 1..=100u64 {
        let inst = triangle_instance(k).map_err(err)?;
        let costs: Vec<u64> = triangle_rankings()
            .iter()
            .map(|p| profile_cost(p, &inst.profile).unwrap())
            .collect();
        ensure!(costs == triangle_costs([0, 1, 0, k, 0, k]), "k = {k}: closed-form costs disagree");
        let best = *costs.iter().min().unwrap();
        let opt = kemeny_optimal(&inst.profile, Objective::Kemeny).map_err(err)?;
        ensure!(best == opt.cost, "k = {k}: min over six {best} != OPT {}", opt.cost);
        for c in &costs {
            ensure!(*c <= 2 * opt.cost, "k = {k}: cost {c} exceeds twice OPT {}", opt.cost);
        }
    }
    within(start.elapsed(), Duration::from_secs(1), "criterion")?;
    Ok(format!("OPT 202, c_R(pi_1) 401, worst ratio 401/202 = {:.6}; <= 2 for k in 1..=100", 401.0 / 202.0))
}

/// 2. MC1/MC2/MC3 rank 2 above 1 on the mc123 family; ratio grows linearly.
fn mc123_unbounded() -> Check {
    let start = Instant::now();
    let mut ratios = Vec::new();
    for k in [2u64, 5, 10, 50] {
        let inst = mc123_instance(k).map_err(err)?;
        let opt = kemeny_optimal(&inst.profile, Objective::Kemeny).map_err(err)?;
        ensure!(opt.cost == 2, "k = {k}: OPT = {}", opt.cost);
        for variant in [ChainVariant::Mc1, ChainVariant::Mc2, ChainVariant::Mc3] {
            let p = build_chain(&inst.profile, variant).map_err(err)?;
            let x = stationary_distribution(&p).map_err(err)?;
            let gap = x.get(2) - x.get(1);
            ensure!(
                gap > STATIONARY_RESIDUAL_TOLERANCE,
                "k = {k}, {}: x_2 - x_1 = {gap:e}",
                variant.name()
            );
            let ranking = chain_ranking(&inst.profile, variant).map_err(err)?;
            ensure!(ranking.prefers(2, 1), "k = {k}, {}: output {ranking} keeps 1 above 2", variant.name());
            let cost = profile_cost(&ranking, &inst.profile).map_err(err)?;
            ensure!(cost >= k - 1, "k = {k}, {}: cost {cost} < k - 1", variant.name());
            ensure!(2 * cost >= k - 1, "ratio below (k-1)/2");
            if variant == ChainVariant::Mc1 {
                ratios.push(format!("k={k}:{:.1}", cost as f64 / 2.0));
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(1), "criterion")?;
    Ok(format!("x_2 > x_1 for MC1-3, OPT = 2; MC1 ratios {}", ratios.join(" ")))
}

/// 3. MC4 element positions on mc4_instance(16, 4) and super-constant ratio growth.
fn mc4_position() -> Check {
    let inst = mc4_instance(16, 4).map_err(err)?;
    let t = build_tournament(&build_graph(&inst.profile));
    ensure!(scc_decomposition(&t).len() == 1, "tournament not strongly connected");
    let x = stationary_distribution(&build_mc4(&t, 0.0).map_err(err)?).map_err(err)?;
    ensure!(x.get(15) > x.get(10), "x_15 {} <= x_10 {}", x.get(15), x.get(10));
    ensure!(x.get(15) > x.get(11), "x_15 {} <= x_11 {}", x.get(15), x.get(11));
    let ranking = chain_ranking(&inst.profile, ChainVariant::Mc4 { delta: 0.0 }).map_err(err)?;
    for e in [12, 13, 14] {
        ensure!(ranking.prefers(e, 15), "{e} not above 15 in {ranking}");
    }
    for e in [10, 11] {
        ensure!(ranking.prefers(15, e), "15 not above {e} in {ranking}");
    }

    let start = Instant::now();
    let opt16 = kemeny_optimal(&inst.profile, Objective::Kemeny).map_err(err)?;
    let dp_time = start.elapsed();
    within(dp_time, Duration::from_secs(10), "exact OPT at n = 16")?;
    let cost16 = profile_cost(&ranking, &inst.profile).map_err(err)?;

    let inst12 = mc4_instance(12, 3).map_err(err)?;
    let r12 = chain_ranking(&inst12.profile, ChainVariant::Mc4 { delta: 0.0 }).map_err(err)?;
    let cost12 = profile_cost(&r12, &inst12.profile).map_err(err)?;
    let opt12 = kemeny_optimal(&inst12.profile, Objective::Kemeny).map_err(err)?;
    let ratio16 = Rational::new(cost16 as i64, opt16.cost as i64);
    let ratio12 = Rational::new(cost12 as i64, opt12.cost as i64);
    ensure!(ratio16 > ratio12, "ratio at 16 ({ratio16}) <= ratio at 12 ({ratio12})");
    Ok(format!(
        "x_15 = {:.4e} > x_10 = {:.4e}, x_11 = {:.4e}; ratio n=12 {cost12}/{} = {:.4} < n=16 {cost16}/{} = {:.4}; DP {:?}",
        x.get(15),
        x.get(10),
        x.get(11),
        opt12.cost,
        cost12 as f64 / opt12.cost as f64,
        opt16.cost,
        cost16 as f64 / opt16.cost as f64,
        dp_time
    ))
}

/// 4. MC4 fixed-point identity (plain and with restarts).
fn fixed_point_identity() -> Check {
    let mut r = rng(4);
    let mut worst: f64 = 0.0;
    let mut zero_checks = 0;
    for _ in 0..500 {
        let n = r.random_range(3..=10);
        let t = random_tournament(&mut r, n);
        for delta in [0.0, 0.2, 0.5, 0.8] {
            if delta == 0.0 && t.condorcet_winner().is_some() {
                continue;
            }
            let p = build_mc4(&t, delta).map_err(err)?;
            let x = stationary_distribution_unichain(&p).map_err(err)?;
            let res = mc4_fixed_point_residual(&t, &x, delta).map_err(err)?;
            ensure!(res <= 1e-9, "n = {n}, delta = {delta}: residual {res:e}");
            worst = worst.max(res);
            zero_checks += (delta == 0.0) as usize;
        }
    }
    Ok(format!("max residual {worst:.2e} over 500 tournaments ({zero_checks} at delta = 0)"))
}

/// 5. Copeland within factor 11 and both pairwise-cost bounds.
fn copeland_eleven() -> Check {
    let mut r = rng(5);
    let mut worst = Rational::from(1);
    let mut bound_checks = 0u64;
    for _ in 0..1000 {
        let n = r.random_range(3..=7);
        let m = [3u64, 5, 7][r.random_range(0..3)];
        let profile = random_profile(&mut r, n, m);
        let g = build_graph(&profile);
        let t = build_tournament(&g);
        let opt = kemeny_optimal(&profile, Objective::Kemeny).map_err(err)?;
        let cop = profile_cost(&copeland_ranking(&t), &profile).map_err(err)?;
        ensure!(cop <= 11 * opt.cost, "Copeland {cop} > 11 x OPT {}", opt.cost);
        if opt.cost > 0 {
            worst = worst.max(Rational::new(cop as i64, opt.cost as i64));
        }
        let cg_opt = graph_cost(&opt.permutation, &g).map_err(err)?;
        for _ in 0..100 {
            let sigma = random_permutation(&mut r, n);
            let ct = Rational::from(tournament_cost(&sigma, &t).map_err(err)? as i64);
            let cg = graph_cost(&sigma, &g).map_err(err)?;
            ensure!(ct <= cg * 2, "c_T {ct} > 2 c_G {cg}");
            ensure!(ct >= cg - cg_opt, "c_T {ct} < c_G {cg} - c_G(OPT) {cg_opt}");
            bound_checks += 1;
        }
    }
    Ok(format!(
        "max Copeland/OPT = {worst} ({:.4}); {bound_checks} cost-bound checks exact",
        *worst.numer() as f64 / *worst.denom() as f64
    ))
}

/// 6. Near-1 restart probability sorts like Copeland.
fn large_delta_copeland() -> Check {
    let mut r = rng(6);
    let mut min_margin = f64::INFINITY;
    for n in 3..=10usize {
        let delta = 1.0 - 1.0 / (2 * n + 2) as f64;
        for _ in 0..100 {
            let m = r.random_range(1..=9);
            let profile = random_profile(&mut r, n, m);
            let t = build_tournament(&build_graph(&profile));
            let scores = copeland_scores(&t);
            let x = stationary_distribution(&build_mc4(&t, delta).map_err(err)?).map_err(err)?;
            for i in 0..n {
                for j in 0..n {
                    if scores[i] > scores[j] {
                        let margin = x.get(i) - x.get(j);
                        ensure!(
                            margin > STATIONARY_RESIDUAL_TOLERANCE,
                            "n = {n}: |P_{i}| > |P_{j}| but x_i - x_j = {margin:e}"
                        );
                        min_margin = min_margin.min(margin);
                    }
                }
            }
            let ranking = chain_ranking(&profile, ChainVariant::Mc4 { delta }).map_err(err)?;
            let seq: Vec<usize> = ranking.order().iter().map(|&e| scores[e]).collect();
            ensure!(seq.windows(2).all(|w| w[0] >= w[1]), "n = {n}: scores along output {seq:?}");
        }
    }
    Ok(format!("800 profiles, min x_i - x_j margin {min_margin:.3e}"))
}

/// 7. Restart-probability dominance and the bounds delta/n <= x_i <= 1/(delta n).
fn delta_squared_dominance() -> Check {
    let mut r = rng(7);
    // delta as an exact fraction so the |P_i| delta^2 > |P_j| test is exact
    let deltas = [(1i64, 5i64), (1, 2), (4, 5)];
    let mut pairs = 0u64;
    for _ in 0..500 {
        let n = r.random_range(3..=10);
        let t = random_tournament(&mut r, n);
        let scores = copeland_scores(&t);
        for &(num, den) in &deltas {
            let delta = num as f64 / den as f64;
            let x = stationary_distribution(&build_mc4(&t, delta).map_err(err)?).map_err(err)?;
            for i in 0..n {
                let lo = delta / n as f64;
                let hi = 1.0 / (delta * n as f64);
                ensure!(x.get(i) >= lo && x.get(i) <= hi, "x_{i} = {} outside [{lo}, {hi}]", x.get(i));
                for j in 0..n {
                    if scores[i] as i64 * num * num > scores[j] as i64 * den * den {
                        ensure!(x.get(i) > x.get(j), "delta = {delta}: |P_{i}| = {}, |P_{j}| = {}", scores[i], scores[j]);
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("500 tournaments x 3 deltas; {pairs} dominated pairs ordered, bounds hold"))
}

/// 8. Strongly connected majority tournament forces cost >= m(n-1)/2.
fn strong_connectivity_bound() -> Check {
    let mut r = rng(8);
    let mut found = 0;
    let mut attempts = 0;
    while found < 200 {
        attempts += 1;
        ensure!(attempts < 1_000_000, "could not sample strongly connected instances");
        let n = r.random_range(3..=7);
        let m = r.random_range(1..=9u64);
        let profile = random_profile(&mut r, n, m);
        let t = build_tournament(&build_graph(&profile));
        if scc_decomposition(&t).len() != 1 {
            continue;
        }
        found += 1;
        let bound = m * (n as u64 - 1);
        for _ in 0..50 {
            let sigma = random_permutation(&mut r, n);
            let c = profile_cost(&sigma, &profile).map_err(err)?;
            ensure!(2 * c >= bound, "c_R = {c} < m(n-1)/2 = {bound}/2");
        }
        let opt = kemeny_optimal(&profile, Objective::Kemeny).map_err(err)?;
        ensure!(2 * opt.cost >= bound, "OPT = {} < m(n-1)/2", opt.cost);
    }
    Ok(format!("200 strongly connected instances ({attempts} sampled), 10000 rankings"))
}

/// 9. Subset DP agrees with brute force.
fn oracle_equivalence() -> Check {
    let mut exhaustive = 0;
    for n in 1..=4usize {
        let perms: Vec<Permutation> = (0..n)
            .permutations(n)
            .map(|o| Permutation::from_order(o).unwrap())
            .collect();
        for m in 1..=3 {
            for combo in perms.iter().combinations_with_replacement(m) {
                let profile = Profile::from_orders(combo.iter().map(|p| (1u64, p.order().to_vec()))).map_err(err)?;
                for objective in [Objective::Kemeny, Objective::Tournament] {
                    let dp = kemeny_optimal(&profile, objective).map_err(err)?;
                    let bf = brute_force_optimal(&profile, objective).map_err(err)?;
                    ensure!(dp == bf, "n = {n}: dp {dp:?} != brute {bf:?}");
                }
                exhaustive += 1;
            }
        }
    }
    let mut r = rng(9);
    for _ in 0..200 {
        let n = r.random_range(1..=7);
        let m = r.random_range(1..=7);
        let profile = random_profile(&mut r, n, m);
        let dp = kemeny_optimal(&profile, Objective::Kemeny).map_err(err)?;
        let bf = brute_force_optimal(&profile, Objective::Kemeny).map_err(err)?;
        ensure!(dp == bf, "random n = {n}: dp {dp:?} != brute {bf:?}");
    }
    Ok(format!("{exhaustive} exhaustive profiles (both objectives) + 200 random"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("triangle factor-2", triangle_factor_two),
        ("MC1/MC2/MC3 unbounded", mc123_unbounded),
        ("MC4 element positions", mc4_position),
        ("MC4 fixed-point identity", fixed_point_identity),
        ("Copeland <= 11", copeland_eleven),
        ("large-delta Copeland consistency", large_delta_copeland),
        ("delta^2 dominance", delta_squared_dominance),
        ("strong-connectivity lower bound", strong_connectivity_bound),
        ("DP = brute force", oracle_equivalence),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  AC{} {name}: {detail} [{elapsed:.2?}]", idx + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL  AC{} {name}: {reason} [{elapsed:.2?}]", idx + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
