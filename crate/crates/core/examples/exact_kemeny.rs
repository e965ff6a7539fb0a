//! Exact optimum by dynamic programming over subsets, checked against brute force.

use std::error::Error;
use std::time::Instant;

use rankagg::adversarial::mc4_instance_default;
use rankagg::exact::{brute_force_optimal, kemeny_optimal, Objective};
use rankagg::Profile;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let profile = Profile::from_orders([
        (1, vec![0, 1, 2, 3, 4]),
        (1, vec![4, 3, 0, 1, 2]),
        (1, vec![1, 0, 4, 2, 3]),
    ])?;
    for objective in [Objective::Kemeny, Objective::Tournament] {
        let dp = kemeny_optimal(&profile, objective)?;
        let bf = brute_force_optimal(&profile, objective)?;
        println!("{objective:?}: dp {} cost {}, brute force {} cost {}", dp.permutation, dp.cost, bf.permutation, bf.cost);
        assert_eq!(dp, bf);
    }

    // the DP scales to n = 20 where brute force is hopeless
    let inst = mc4_instance_default(18)?;
    let start = Instant::now();
    let opt = kemeny_optimal(&inst.profile, Objective::Kemeny)?;
    println!("n = 18: OPT = {} in {:.2?}", opt.cost, start.elapsed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
