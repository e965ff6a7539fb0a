//! # rankagg
//!
//! Rank aggregation over full rankings: given `m` input rankings of `n`
//! elements, find a ranking minimising the total Kendall distance to them.
//!
//! The crate provides
//!
//! * [`ranking`]: permutations, profiles, Kendall distance and the costs
//!   `c_R`, `c_G`, `c_T`;
//! * [`preference`]: the pairwise preference graph, majority tournament,
//!   Copeland and Borda rankings, and SCC decomposition;
//! * [`markov`]: the MC1–MC4 aggregators (MC4 optionally with a restart
//!   probability), stationary distributions and the MC4 fixed-point identity;
//! * [`exact`]: an exact subset-DP solver (`n <= 20`) and a brute-force check;
//! * [`adversarial`]: generators for the lower-bound instance families;
//! * [`harness`]: the PROFILE file format, comparison runs, sweeps and
//!   CSV/JSON reports.
//!
//! ```
//! use rankagg::{adversarial, exact, markov, ranking};
//!
//! let inst = adversarial::mc123_instance(10).unwrap();
//! let mc1 = markov::chain_ranking(&inst.profile, markov::ChainVariant::Mc1).unwrap();
//! let opt = exact::kemeny_optimal(&inst.profile, exact::Objective::Kemeny).unwrap();
//! assert_eq!(opt.cost, 2);
//! assert!(ranking::profile_cost(&mc1, &inst.profile).unwrap() >= 9);
//! ```

pub mod adversarial;
pub mod error;
pub mod exact;
pub mod harness;
pub mod markov;
pub mod preference;
pub mod ranking;

pub use error::{Error, Result};
pub use ranking::{Permutation, Profile, ProfileEntry, Rational};
