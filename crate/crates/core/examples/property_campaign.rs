//! Runs the seeded randomized law checks and prints a summary.
//!
//! `cargo run --example property_campaign -- 5000 7` runs 5000 trials with seed 7.

use pauliquat::check::{run, RunConfig, Suite};

fn main() {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);

    let config = RunConfig {
        trials,
        seed,
        ..RunConfig::default()
    };
    let report = run(Suite::All, &config).expect("valid configuration");
    for p in &report.properties {
        let mark = if p.passed { "ok  " } else { "FAIL" };
        println!(
            "{mark} {:<36} {:.3e} <= {:.1e}",
            p.id(),
            p.max_deviation,
            p.tolerance
        );
    }
    println!(
        "{} of {} passed, {} trials, seed {}",
        report.properties.iter().filter(|p| p.passed).count(),
        report.properties.len(),
        trials,
        seed
    );
    if !report.all_passed() {
        std::process::exit(1);
    }
}
