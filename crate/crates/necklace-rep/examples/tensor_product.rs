//! Builds the dimension-4 tensor product of two dimension-2
//! representations generator-wise and shows that it satisfies the same
//! defining relations.
//!
//! Run with: cargo run --example tensor_product

use necklace_rep::{Mode, RepParams, Scalar, TensorParams, Twist, DEFAULT_TOL};

fn main() {
    let exact = |n: i64| Scalar::integer(Mode::Exact, n);

    // two members of the n=4, T=±i family
    let p1 = RepParams::n4_quarter(Twist::QuarterPlus, exact(1), 0)
        .validate(DEFAULT_TOL)
        .unwrap();
    let p2 = RepParams::n4_quarter(Twist::QuarterPlus, exact(1), 1)
        .validate(DEFAULT_TOL)
        .unwrap();
    let tensor = TensorParams::new(p1, p2).unwrap();
    let rep = tensor.build_rep();

    println!("tensor of two n=4, T=i representations at d₁ = d₂ = 1:");
    for j in 1..=4 {
        println!("ρ(σ_{j}) = {:?}", rep.sigma(j));
    }
    println!("ρ(τ) = {:?}", rep.tau());

    let report = rep.verify_relations(DEFAULT_TOL);
    println!(
        "all {} relation instances pass: {}",
        report.checks.len(),
        report.all_passed()
    );
    assert!(report.all_passed());

    // mixed twists: the σ images no longer repeat with period 2
    let exact2 = |n: i64| Scalar::integer(Mode::Exact, n);
    let q1 = RepParams::n4_minus_one(exact2(2), exact2(1), 0)
        .validate(DEFAULT_TOL)
        .unwrap();
    let q2 = RepParams::n4_quarter(Twist::QuarterMinus, exact2(3), 2)
        .validate(DEFAULT_TOL)
        .unwrap();
    let mixed = TensorParams::new(q1, q2).unwrap().build_rep();
    println!(
        "\nmixed-twist tensor: σ₁ = σ₃? {}   relations pass: {}",
        mixed.sigma(1) == mixed.sigma(3),
        mixed.verify_relations(DEFAULT_TOL).all_passed()
    );
}
