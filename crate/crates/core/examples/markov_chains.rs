//! The four Markov-chain aggregators on one profile: transition matrices,
//! stationary distributions, and the resulting rankings.

use std::error::Error;

use rankagg::markov::{build_chain, chain_ranking, stationary_distribution, ChainVariant};
use rankagg::ranking::profile_cost;
use rankagg::Profile;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let profile = Profile::from_orders([
        (3, vec![0, 1, 2, 3]),
        (2, vec![1, 2, 3, 0]),
        (2, vec![2, 0, 3, 1]),
    ])?;
    let variants = [
        ChainVariant::Mc1,
        ChainVariant::Mc2,
        ChainVariant::Mc3,
        ChainVariant::Mc4 { delta: 0.0 },
        ChainVariant::Mc4 { delta: 0.25 },
    ];
    for variant in variants {
        let p = build_chain(&profile, variant)?;
        let label = match variant {
            ChainVariant::Mc4 { delta } if delta > 0.0 => format!("mc4 (delta {delta})"),
            _ => variant.name().to_string(),
        };
        println!("{label}");
        for i in 0..p.n() {
            let row: Vec<String> = p.row(i).iter().map(|v| format!("{v:.3}")).collect();
            println!("  [{}]", row.join(" "));
        }
        match stationary_distribution(&p) {
            Ok(x) => println!("  x = {:.4?}", x.values()),
            Err(e) => println!("  {e}"),
        }
        let ranking = chain_ranking(&profile, variant)?;
        println!("  ranking {ranking}, cost {}", profile_cost(&ranking, &profile)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
