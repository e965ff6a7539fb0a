//! Kendall distance between rankings, and the three cost measures of a
//! candidate ranking against a small profile.

use std::error::Error;

use rankagg::preference::{build_graph, build_tournament};
use rankagg::ranking::{graph_cost, kendall_distance, profile_cost, tournament_cost};
use rankagg::{Permutation, Profile};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = Permutation::from_order(vec![0, 1, 2, 3])?;
    let b = Permutation::from_order(vec![1, 0, 3, 2])?;
    println!("d({a}, {b}) = {}", kendall_distance(&a, &b)?);
    println!("d({a}, {}) = {}", a.reversed(), kendall_distance(&a, &a.reversed())?);

    let profile = Profile::from_orders([(2, vec![0, 1, 2]), (1, vec![2, 0, 1]), (1, vec![1, 2, 0])])?;
    let g = build_graph(&profile);
    let t = build_tournament(&g);
    println!("\n{:>9} {:>5} {:>6} {:>5}", "sigma", "c_R", "c_G", "c_T");
    for order in [vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]] {
        let sigma = Permutation::from_order(order)?;
        println!(
            "{:>9} {:>5} {:>6} {:>5}",
            sigma.to_string(),
            profile_cost(&sigma, &profile)?,
            graph_cost(&sigma, &g)?.to_string(),
            tournament_cost(&sigma, &t)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
