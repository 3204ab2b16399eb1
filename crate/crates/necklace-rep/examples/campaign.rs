//! Runs a seeded randomized cross-check campaign: per tensor case
//! family, random validated parameters are drawn and the closed-form
//! verdict is compared against the commutant and Burnside oracles.
//!
//! Run with: cargo run --release --example campaign

use necklace_rep::campaign::{run_campaign, RunConfig};
use necklace_rep::Mode;

fn main() {
    let config = RunConfig {
        mode: Mode::Approx,
        tol: 1e-9,
        seed: 2026,
        samples: 100,
    };
    let summary = run_campaign(&config).expect("campaign runs");
    println!(
        "{:<28} {:>6} {:>6} {:>9} {:>9}",
        "family", "irr", "red", "abstained", "disagree"
    );
    for f in &summary.families {
        println!(
            "{:<28} {:>6} {:>6} {:>9} {:>9}",
            f.family, f.irreducible, f.reducible, f.closed_form_abstained, f.disagreements
        );
    }
    println!(
        "\nseed {}, {} samples per family, total disagreements: {}",
        summary.seed, summary.samples_per_family, summary.total_disagreements
    );
    assert!(summary.all_agree());

    // a small exact-mode replay of the same cross-check
    let config = RunConfig {
        mode: Mode::Exact,
        tol: 1e-9,
        seed: 2026,
        samples: 4,
    };
    let summary = run_campaign(&config).expect("campaign runs");
    println!(
        "exact-mode spot check ({} samples/family): disagreements = {}",
        summary.samples_per_family, summary.total_disagreements
    );
}
