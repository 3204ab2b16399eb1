//! Builds one dimension-2 representation from every classification row
//! and verifies the full defining relation set (B1), (B2), (N1), (N2)
//! by exact matrix arithmetic.
//!
//! Run with: cargo run --example build_and_verify

use necklace_rep::{Mode, RepParams, Scalar, Sign, Twist, DEFAULT_TOL};

fn main() {
    let exact = |n: i64| Scalar::integer(Mode::Exact, n);
    let rows: Vec<(&str, RepParams)> = vec![
        ("n=2, T=-1, a=2, d=1", RepParams::n2(exact(2), exact(1), 1)),
        (
            "n=3, T=e^{2πi/3}, ω=e^{iπ/3}, c=5, d=2",
            RepParams::n3(Twist::ThirdPlus, Sign::Plus, exact(5), exact(2), 4),
        ),
        (
            "n=4, T=-1, a=3, d=-1",
            RepParams::n4_minus_one(exact(3), exact(-1), 5),
        ),
        (
            "n=4, T=i, d=2",
            RepParams::n4_quarter(Twist::QuarterPlus, exact(2), 7),
        ),
    ];

    for (label, params) in rows {
        let validated = params.validate(DEFAULT_TOL).expect("row conditions hold");
        let rep = validated.build_rep();
        println!("{label}");
        println!("  ρ(σ₁) = {:?}", rep.sigma(1));
        println!("  ρ(τ)  = {:?}", rep.tau());
        let report = rep.verify_relations(DEFAULT_TOL);
        for check in &report.checks {
            println!(
                "  {:<12} {}",
                check.relation.to_string(),
                if check.passed { "ok" } else { "FAILED" }
            );
        }
        assert!(report.all_passed());
        println!();
    }

    // a deliberately broken tuple: c = 5 violates the braid identity
    let broken = RepParams {
        c: exact(5),
        ..RepParams::n2(exact(2), exact(1), 0)
    };
    println!("n=2 with c=5 (braid relation violated on purpose):");
    let rep = broken.build_rep_unchecked().unwrap();
    for check in &rep.verify_relations(DEFAULT_TOL).checks {
        println!(
            "  {:<12} {}",
            check.relation.to_string(),
            if check.passed { "ok" } else { "FAILED" }
        );
    }
}
