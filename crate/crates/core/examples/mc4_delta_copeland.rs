//! As the restart probability approaches 1, MC4 sorts by Copeland score.

use std::error::Error;

use rankagg::markov::{mc4_ranking, stationary_distribution, build_mc4};
use rankagg::preference::{copeland_ranking, copeland_scores, MajorityTournament};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // 0 -> 1 -> 2 -> 3 -> 4 -> 0 cycle plus chords: i beats i+1 and i+2 (mod 5),
    // then flip 0 vs 2 so scores differ
    let n = 5;
    let t = MajorityTournament::from_beats_fn(n, |i, j| {
        if (i, j) == (2, 0) {
            return true;
        }
        if (i, j) == (0, 2) {
            return false;
        }
        let d = (j + n - i) % n;
        d == 1 || d == 2
    })?;
    println!("Copeland scores {:?}, ranking {}", copeland_scores(&t), copeland_ranking(&t));
    let threshold = 1.0 - 1.0 / (2 * n + 2) as f64;
    for delta in [0.0, 0.3, 0.6, threshold] {
        let x = stationary_distribution(&build_mc4(&t, delta)?)?;
        println!("delta {delta:.4}: x = {:.4?}, ranking {}", x.values(), mc4_ranking(&t, delta)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
