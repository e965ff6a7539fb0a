//! Preference graph, majority tournament, Copeland and Borda rankings and
//! the strongly connected components of the tournament.

use std::error::Error;

use rankagg::preference::{
    borda_ranking, build_graph, build_tournament, copeland_ranking, copeland_scores, scc_decomposition,
};
use rankagg::Profile;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // a 3-cycle among 0, 1, 2 that everybody ranks above 3 and 4
    let profile = Profile::from_orders([
        (1, vec![0, 1, 2, 3, 4]),
        (1, vec![1, 2, 0, 4, 3]),
        (1, vec![2, 0, 1, 3, 4]),
    ])?;
    let g = build_graph(&profile);
    for i in 0..profile.n() {
        let row: Vec<String> = (0..profile.n()).map(|j| g.weight(i, j).to_string()).collect();
        println!("w[{i}] = [{}]", row.join(", "));
    }
    let t = build_tournament(&g);
    println!("Copeland scores: {:?}", copeland_scores(&t));
    println!("Copeland ranking: {}", copeland_ranking(&t));
    println!("Borda ranking:    {}", borda_ranking(&g));
    println!("Condorcet winner: {:?}", t.condorcet_winner());
    println!("SCCs, winners first: {:?}", scc_decomposition(&t));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
