//! MC4 on the rotation family: element n-1 beats only element 0, yet the
//! walk lifts it above a linear number of elements, and the cost ratio
//! against the exact optimum keeps growing with n.

use std::error::Error;

use rankagg::adversarial::mc4_instance_default;
use rankagg::exact::{kemeny_optimal, Objective};
use rankagg::markov::{build_mc4, chain_ranking, stationary_distribution, ChainVariant};
use rankagg::preference::{build_graph, build_tournament, copeland_scores};
use rankagg::ranking::profile_cost;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let inst = mc4_instance_default(16)?;
    let t = build_tournament(&build_graph(&inst.profile));
    let x = stationary_distribution(&build_mc4(&t, 0.0)?)?;
    let scores = copeland_scores(&t);
    println!("n = 16, c = 4");
    println!("{:>4} {:>8} {:>12}", "elem", "|P_i|", "x_i");
    for (i, (s, xi)) in scores.iter().zip(x.values()).enumerate() {
        println!("{i:>4} {s:>8} {xi:>12.6e}");
    }
    let ranking = x.ranking();
    println!("MC4 ranking: {ranking}");

    println!("\n{:>4} {:>10} {:>10} {:>10}", "n", "mc4 cost", "opt", "ratio");
    for n in [12usize, 14, 16, 18, 20] {
        let inst = mc4_instance_default(n)?;
        let mc4 = chain_ranking(&inst.profile, ChainVariant::Mc4 { delta: 0.0 })?;
        let cost = profile_cost(&mc4, &inst.profile)?;
        let opt = kemeny_optimal(&inst.profile, Objective::Kemeny)?;
        println!(
            "{n:>4} {cost:>10} {:>10} {:>10.4}",
            opt.cost,
            cost as f64 / opt.cost as f64
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
