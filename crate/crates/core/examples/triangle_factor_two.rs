//! Picking the best input ranking is a 2-approximation, and the triangle
//! family shows the factor 2 is tight.

use std::error::Error;

use rankagg::adversarial::{triangle_costs, triangle_inequalities_hold, triangle_instance, triangle_rankings};
use rankagg::exact::{kemeny_optimal, Objective};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let rankings = triangle_rankings();
    let names: Vec<String> = rankings.iter().map(|p| p.to_string()).collect();
    println!("pi_1..pi_6 = {}", names.join(" "));
    println!("\n{:>5} {:>28} {:>6} {:>10}", "k", "costs of pi_1..pi_6", "OPT", "worst/OPT");
    for k in [1u64, 2, 5, 10, 100, 1000] {
        let alpha = [0, 1, 0, k, 0, k];
        assert!(triangle_inequalities_hold(alpha));
        let inst = triangle_instance(k)?;
        let costs = triangle_costs(alpha);
        let opt = kemeny_optimal(&inst.profile, Objective::Kemeny)?;
        let worst = *costs.iter().max().unwrap();
        println!(
            "{k:>5} {:>28} {:>6} {:>10.6}",
            format!("{costs:?}"),
            opt.cost,
            worst as f64 / opt.cost as f64
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
