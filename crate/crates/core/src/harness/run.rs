use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::adversarial::{Family, FamilyInstance};
use crate::error::{Error, Result};
use crate::exact::{kemeny_optimal, Objective, OptimalResult, MAX_DP_ELEMENTS};
use crate::harness::report::{AlgorithmRecord, InstanceDescriptor, RatioValue, RunReport};
use crate::markov::{chain_ranking, ChainVariant};
use crate::preference::{borda_ranking, build_graph, build_tournament, copeland_ranking};
use crate::ranking::{profile_cost, Permutation, Profile};

/// Aggregation algorithms selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Mc1,
    Mc2,
    Mc3,
    /// MC4 without restarts.
    Mc4,
    /// MC4 with the run's restart probability.
    Mc4Delta,
    Copeland,
    Borda,
    Exact,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Mc1,
        Algorithm::Mc2,
        Algorithm::Mc3,
        Algorithm::Mc4,
        Algorithm::Mc4Delta,
        Algorithm::Copeland,
        Algorithm::Borda,
        Algorithm::Exact,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Mc1 => "mc1",
            Algorithm::Mc2 => "mc2",
            Algorithm::Mc3 => "mc3",
            Algorithm::Mc4 => "mc4",
            Algorithm::Mc4Delta => "mc4delta",
            Algorithm::Copeland => "copeland",
            Algorithm::Borda => "borda",
            Algorithm::Exact => "exact",
        }
    }

    /// Restart probability reported for this algorithm, if it has one.
    fn reported_delta(&self, delta: f64) -> Option<f64> {
        match self {
            Algorithm::Mc4 => Some(0.0),
            Algorithm::Mc4Delta => Some(delta),
            _ => None,
        }
    }

    pub fn run(&self, profile: &Profile, delta: f64) -> Result<Permutation> {
        match self {
            Algorithm::Mc1 => chain_ranking(profile, ChainVariant::Mc1),
            Algorithm::Mc2 => chain_ranking(profile, ChainVariant::Mc2),
            Algorithm::Mc3 => chain_ranking(profile, ChainVariant::Mc3),
            Algorithm::Mc4 => chain_ranking(profile, ChainVariant::Mc4 { delta: 0.0 }),
            Algorithm::Mc4Delta => chain_ranking(profile, ChainVariant::Mc4 { delta }),
            Algorithm::Copeland => Ok(copeland_ranking(&build_tournament(&build_graph(profile)))),
            Algorithm::Borda => Ok(borda_ranking(&build_graph(profile))),
            Algorithm::Exact => Ok(kemeny_optimal(profile, Objective::Kemeny)?.permutation),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// Parses a comma-separated list such as `mc1,mc4,exact`.
pub fn parse_algorithms(list: &str) -> Result<Vec<Algorithm>> {
    let algs = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<_>>>()?;
    if algs.is_empty() {
        return Err(Error::InvalidInput("no algorithms given".into()));
    }
    Ok(algs)
}

/// How the reference cost for ratios is obtained.
enum Reference {
    None,
    Exact,
    /// Exact when `n` fits the DP budget, else the supplied upper bound.
    ExactOrUpperBound(u64),
}

fn compare(
    instance: InstanceDescriptor,
    profile: &Profile,
    algorithms: &[Algorithm],
    delta: f64,
    reference: Reference,
) -> Result<RunReport> {
    let n = profile.n();
    let needs_exact = algorithms.contains(&Algorithm::Exact)
        || matches!(reference, Reference::Exact)
        || matches!(reference, Reference::ExactOrUpperBound(_) if n <= MAX_DP_ELEMENTS);
    let optimum: Option<OptimalResult> = if needs_exact {
        Some(kemeny_optimal(profile, Objective::Kemeny)?)
    } else {
        None
    };
    let (opt_cost, opt_is_upper_bound) = match (reference, &optimum) {
        (Reference::None, _) => (None, false),
        (_, Some(opt)) => (Some(opt.cost), false),
        (Reference::ExactOrUpperBound(bound), None) => (Some(bound), true),
        (Reference::Exact, None) => unreachable!("exact reference always solved"),
    };

    let records = algorithms
        .iter()
        .map(|alg| {
            let permutation = match (alg, &optimum) {
                (Algorithm::Exact, Some(opt)) => opt.permutation.clone(),
                _ => alg.run(profile, delta)?,
            };
            let cost = profile_cost(&permutation, profile)?;
            Ok(AlgorithmRecord {
                algorithm: alg.name().to_string(),
                delta: alg.reported_delta(delta),
                permutation: permutation.order().to_vec(),
                cost,
                ratio: opt_cost.and_then(|opt| RatioValue::of(cost, opt)),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(RunReport {
        instance,
        records,
        opt_cost,
        opt_is_upper_bound,
    })
}

/// Runs each algorithm on `profile`; with `compute_opt`, also solves the
/// instance exactly (`n <= 20`) and reports ratios against the optimum.
pub fn run_compare(
    profile: &Profile,
    algorithms: &[Algorithm],
    delta: f64,
    compute_opt: bool,
) -> Result<RunReport> {
    if compute_opt && profile.n() > MAX_DP_ELEMENTS {
        return Err(Error::Budget {
            n: profile.n(),
            limit: MAX_DP_ELEMENTS,
            what: "exact subset DP",
        });
    }
    let instance = InstanceDescriptor {
        family: "input".into(),
        parameter: None,
        n: profile.n(),
        m: profile.m(),
        predicted: Default::default(),
    };
    let reference = if compute_opt { Reference::Exact } else { Reference::None };
    compare(instance, profile, algorithms, delta, reference)
}

/// Runs `algorithms` on a generated family instance. Ratios are taken
/// against the exact optimum; for mc4 instances beyond the DP budget the
/// cost of the identity ranking stands in as an upper bound.
pub fn run_family(
    instance: &FamilyInstance,
    algorithms: &[Algorithm],
    delta: f64,
) -> Result<RunReport> {
    let descriptor = InstanceDescriptor {
        family: instance.family.name().into(),
        parameter: Some(instance.parameter),
        n: instance.profile.n(),
        m: instance.profile.m(),
        predicted: instance.predicted.clone(),
    };
    let reference = match (instance.family, instance.predicted("cost_pi1")) {
        (Family::Mc4, Some(bound)) => Reference::ExactOrUpperBound(bound),
        _ => Reference::Exact,
    };
    compare(descriptor, &instance.profile, algorithms, delta, reference)
}

/// One report per parameter value, in the order given. Points run in
/// parallel.
pub fn sweep_family(
    family: Family,
    parameters: &[u64],
    algorithms: &[Algorithm],
    delta: f64,
) -> Result<Vec<RunReport>> {
    if parameters.is_empty() {
        return Err(Error::InvalidInput("empty parameter range".into()));
    }
    parameters
        .par_iter()
        .map(|&p| run_family(&family.instance(p)?, algorithms, delta))
        .collect()
}

/// `from, from + step, ..` up to and including `to`.
pub fn parameter_range(from: u64, to: u64, step: u64) -> Result<Vec<u64>> {
    if step == 0 {
        return Err(Error::InvalidInput("step must be positive".into()));
    }
    let values: Vec<u64> = (from..=to).step_by(step as usize).collect();
    if values.is_empty() {
        return Err(Error::InvalidInput(format!("empty parameter range {from}..={to}")));
    }
    Ok(values)
}
