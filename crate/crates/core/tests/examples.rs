//! Every crate example must run to completion.

#[path = "../examples/kendall_and_costs.rs"]
mod kendall_and_costs;

#[test]
fn kendall_and_costs_runs() {
    kendall_and_costs::run_example().unwrap();
}

#[path = "../examples/preference_tournament.rs"]
mod preference_tournament;

#[test]
fn preference_tournament_runs() {
    preference_tournament::run_example().unwrap();
}

#[path = "../examples/markov_chains.rs"]
mod markov_chains;

#[test]
fn markov_chains_runs() {
    markov_chains::run_example().unwrap();
}

#[path = "../examples/exact_kemeny.rs"]
mod exact_kemeny;

#[test]
fn exact_kemeny_runs() {
    exact_kemeny::run_example().unwrap();
}

#[path = "../examples/triangle_factor_two.rs"]
mod triangle_factor_two;

#[test]
fn triangle_factor_two_runs() {
    triangle_factor_two::run_example().unwrap();
}

#[path = "../examples/mc4_delta_copeland.rs"]
mod mc4_delta_copeland;

#[test]
fn mc4_delta_copeland_runs() {
    mc4_delta_copeland::run_example().unwrap();
}

#[path = "../examples/mc4_lower_bound.rs"]
mod mc4_lower_bound;

#[test]
fn mc4_lower_bound_runs() {
    mc4_lower_bound::run_example().unwrap();
}

#[path = "../examples/sweep_report.rs"]
mod sweep_report;

#[test]
fn sweep_report_runs() {
    sweep_report::run_example().unwrap();
}
