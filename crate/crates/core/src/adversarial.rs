//! Generators for the three lower-bound families.
//!
//! * **triangle**: six rankings of three elements weighted by `alpha`, whose
//!   majority tournament is a directed triangle while two candidate outputs
//!   differ in cost by a factor approaching 2.
//! * **mc123**: `k - 1` copies of `(0,1,2)` and one `(2,0,1)`; MC1, MC2 and MC3
//!   all rank 2 above 1 and pay at least `k - 1` against an optimum of 2.
//! * **mc4**: `n` copies each of the identity and its rotation plus one
//!   rotation by `c`; MC4 lifts element `n - 1` above a linear number of
//!   elements.
//!
//! Every instance carries its closed-form predictions, which
//! [`FamilyInstance::verify`] recomputes from the profile.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::preference::{build_graph, build_tournament, scc_decomposition};
use crate::ranking::{profile_cost, Permutation, Profile, ProfileEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Triangle,
    Mc123,
    Mc4,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Triangle => "triangle",
            Family::Mc123 => "mc123",
            Family::Mc4 => "mc4",
        }
    }

    /// Instance at the family's sweep parameter (`k` for triangle and mc123,
    /// `n` with `c = floor(n / 4)` for mc4).
    pub fn instance(&self, parameter: u64) -> Result<FamilyInstance> {
        match self {
            Family::Triangle => triangle_instance(parameter),
            Family::Mc123 => mc123_instance(parameter),
            Family::Mc4 => mc4_instance_default(parameter as usize),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangle" => Ok(Family::Triangle),
            "mc123" => Ok(Family::Mc123),
            "mc4" => Ok(Family::Mc4),
            other => Err(Error::InvalidInput(format!(
                "unknown family '{other}' (expected triangle, mc123 or mc4)"
            ))),
        }
    }
}

/// A generated profile plus the quantities predicted for it in closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyInstance {
    pub family: Family,
    pub parameter: u64,
    pub profile: Profile,
    pub predicted: BTreeMap<String, u64>,
}

impl FamilyInstance {
    pub fn predicted(&self, key: &str) -> Option<u64> {
        self.predicted.get(key).copied()
    }

    /// Recomputes every prediction from the profile; returns the first mismatch.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let check = |key: &str, actual: u64| -> std::result::Result<(), String> {
            match self.predicted(key) {
                Some(v) if v == actual => Ok(()),
                Some(v) => Err(format!("{key}: predicted {v}, recomputed {actual}")),
                None => Ok(()),
            }
        };
        let profile = &self.profile;
        check("m", profile.m())?;
        check("n", profile.n() as u64)?;
        let g = build_graph(profile);
        let t = build_tournament(&g);
        match self.family {
            Family::Triangle => {
                for (idx, pi) in triangle_rankings().iter().enumerate() {
                    let key = format!("cost_pi{}", idx + 1);
                    check(&key, profile_cost(pi, profile).map_err(|e| e.to_string())?)?;
                }
                let triangle = t.beats(1, 0) && t.beats(2, 1) && t.beats(0, 2);
                let reverse = t.beats(0, 1) && t.beats(1, 2) && t.beats(2, 0);
                check("directed_triangle", (triangle || reverse) as u64)?;
            }
            Family::Mc123 => {
                let pi1 = Permutation::identity(3);
                check("cost_pi1", profile_cost(&pi1, profile).map_err(|e| e.to_string())?)?;
                check("voters_1_over_2", g.count(1, 2))?;
            }
            Family::Mc4 => {
                let pi1 = Permutation::identity(profile.n());
                check("cost_pi1", profile_cost(&pi1, profile).map_err(|e| e.to_string())?)?;
                check("strongly_connected", (scc_decomposition(&t).len() == 1) as u64)?;
            }
        }
        Ok(())
    }
}

/// The six rankings of `{0, 1, 2}` in the order `pi_1 .. pi_6`.
pub fn triangle_rankings() -> [Permutation; 6] {
    [[0, 1, 2], [0, 2, 1], [1, 2, 0], [1, 0, 2], [2, 0, 1], [2, 1, 0]]
        .map(|o| Permutation::from_order(o.to_vec()).expect("valid ranking"))
}

/// Closed-form `c_R(pi_1) .. c_R(pi_6)` when `pi_i` appears `alpha[i-1]` times.
pub fn triangle_costs(alpha: [u64; 6]) -> [u64; 6] {
    let [a1, a2, a3, a4, a5, a6] = alpha;
    [
        a2 + 2 * a3 + a4 + 2 * a5 + 3 * a6,
        a1 + 3 * a3 + 2 * a4 + a5 + 2 * a6,
        2 * a1 + 3 * a2 + a4 + 2 * a5 + a6,
        a1 + 2 * a2 + a3 + 3 * a5 + 2 * a6,
        2 * a1 + a2 + 2 * a3 + 3 * a4 + a6,
        3 * a1 + 2 * a2 + a3 + 2 * a4 + a5,
    ]
}

/// Whether `alpha` yields the directed triangle `1 > 0`, `2 > 1`, `0 > 2`
/// (non-strict form, ties allowed).
pub fn triangle_inequalities_hold(alpha: [u64; 6]) -> bool {
    let [a1, a2, a3, a4, a5, a6] = alpha;
    a3 + a4 + a6 >= a1 + a2 + a5 && a2 + a5 + a6 >= a1 + a3 + a4 && a1 + a2 + a4 >= a3 + a5 + a6
}

/// Profile with `pi_i` repeated `alpha[i-1]` times; zero weights are dropped.
pub fn triangle_family(alpha: [u64; 6]) -> Result<FamilyInstance> {
    let rankings = triangle_rankings();
    let entries: Vec<ProfileEntry> = alpha
        .iter()
        .zip(rankings)
        .filter(|(&a, _)| a > 0)
        .map(|(&multiplicity, ranking)| ProfileEntry { ranking, multiplicity })
        .collect();
    if entries.is_empty() {
        return Err(Error::InvalidInput("alpha must have a positive entry".into()));
    }
    let profile = Profile::new(entries)?;
    let mut predicted = BTreeMap::new();
    predicted.insert("n".to_string(), 3);
    predicted.insert("m".to_string(), alpha.iter().sum());
    for (i, c) in triangle_costs(alpha).into_iter().enumerate() {
        predicted.insert(format!("cost_pi{}", i + 1), c);
    }
    Ok(FamilyInstance {
        family: Family::Triangle,
        parameter: 0,
        profile,
        predicted,
    })
}

/// `alpha = (0, 1, 0, k, 0, k)`: `c_R(pi_1) = 4k + 1`, `c_R(pi_6) = 2k + 2`.
pub fn triangle_instance(k: u64) -> Result<FamilyInstance> {
    if k < 1 {
        return Err(Error::InvalidInput("triangle family needs k >= 1".into()));
    }
    let mut inst = triangle_family([0, 1, 0, k, 0, k])?;
    inst.parameter = k;
    inst.predicted.insert("k".into(), k);
    inst.predicted.insert("directed_triangle".into(), 1);
    Ok(inst)
}

/// `(k - 1) x (0,1,2)` and `1 x (2,0,1)`, `k >= 2`.
pub fn mc123_instance(k: u64) -> Result<FamilyInstance> {
    if k < 2 {
        return Err(Error::InvalidInput("mc123 family needs k >= 2".into()));
    }
    let profile = Profile::from_orders([(k - 1, vec![0, 1, 2]), (1, vec![2, 0, 1])])?;
    let predicted = BTreeMap::from([
        ("n".to_string(), 3),
        ("m".to_string(), k),
        ("k".to_string(), k),
        ("cost_pi1".to_string(), 2),
        // every ranking with 2 above 1 disagrees with these voters
        ("voters_1_over_2".to_string(), k - 1),
    ]);
    Ok(FamilyInstance {
        family: Family::Mc123,
        parameter: k,
        profile,
        predicted,
    })
}

/// `n x (0..n)`, `n x (1, .., n-1, 0)`, `1 x (n-c, .., n-1, 0, .., n-c-1)`.
///
/// Requires `n >= 3` and `1 <= c`, `2c < n`.
pub fn mc4_instance(n: usize, c: usize) -> Result<FamilyInstance> {
    if n < 3 || c < 1 || 2 * c >= n {
        return Err(Error::InvalidInput(format!(
            "mc4 family needs n >= 3 and 1 <= c < n/2, got n = {n}, c = {c}"
        )));
    }
    let pi1: Vec<usize> = (0..n).collect();
    let pi2: Vec<usize> = (1..n).chain([0]).collect();
    let pi3: Vec<usize> = (n - c..n).chain(0..n - c).collect();
    let nn = n as u64;
    let cc = c as u64;
    let profile = Profile::from_orders([(nn, pi1), (nn, pi2), (1, pi3)])?;
    let predicted = BTreeMap::from([
        ("n".to_string(), nn),
        ("c".to_string(), cc),
        ("m".to_string(), 2 * nn + 1),
        ("cost_pi1".to_string(), nn * (nn - 1) + cc * (nn - cc)),
        ("strongly_connected".to_string(), 1),
    ]);
    Ok(FamilyInstance {
        family: Family::Mc4,
        parameter: nn,
        profile,
        predicted,
    })
}

/// [`mc4_instance`] with `c = floor(n / 4)`.
pub fn mc4_instance_default(n: usize) -> Result<FamilyInstance> {
    mc4_instance(n, n / 4)
}
