//! Explicit invariant-subspace witnesses for the reducible tensor
//! families: the closed-form vectors of the quarter-twist cases (every
//! σ image scales them by 2d₁d₂) and the numerically extracted
//! eigenspace witnesses on the product boundaries.
//!
//! Run with: cargo run --example reduction_witnesses

use necklace_rep::analysis::reducibility_witness;
use necklace_rep::{Mode, RepParams, Scalar, TensorParams, Twist, DEFAULT_TOL};

fn main() {
    let exact = |n: i64| Scalar::integer(Mode::Exact, n);

    // T₁ = T₂ = i: the line spanned by d₂e₂ − d₁e₃ is invariant
    let (d1, d2) = (2i64, 3i64);
    let p1 = RepParams::n4_quarter(Twist::QuarterPlus, exact(d1), 0)
        .validate(DEFAULT_TOL)
        .unwrap();
    let p2 = RepParams::n4_quarter(Twist::QuarterPlus, exact(d2), 1)
        .validate(DEFAULT_TOL)
        .unwrap();
    let tp = TensorParams::new(p1, p2).unwrap();
    let rep = tp.build_rep();
    let witness = reducibility_witness(&rep, Some(&tp), DEFAULT_TOL)
        .unwrap()
        .expect("equal quarter twists are always reducible");
    println!("T₁ = T₂ = i, d₁ = {d1}, d₂ = {d2}:");
    println!(
        "  witness vector {:?} (exact, residual {})",
        witness.basis[0], witness.residual
    );
    let image = rep.sigma(1).apply(&witness.basis[0]).unwrap();
    println!(
        "  ρ(σ₁)·v = {image:?}  — the scale is 2d₁d₂ = {}",
        2 * d1 * d2
    );

    // T₁ = −T₂ = i: the line spanned by e₁ + d₁d₂e₄ is invariant
    let p1 = RepParams::n4_quarter(Twist::QuarterPlus, exact(d1), 2)
        .validate(DEFAULT_TOL)
        .unwrap();
    let p2 = RepParams::n4_quarter(Twist::QuarterMinus, exact(d2), 3)
        .validate(DEFAULT_TOL)
        .unwrap();
    let tp = TensorParams::new(p1, p2).unwrap();
    let rep = tp.build_rep();
    let witness = reducibility_witness(&rep, Some(&tp), DEFAULT_TOL)
        .unwrap()
        .expect("opposite quarter twists are always reducible");
    println!("\nT₁ = −T₂ = i, d₁ = {d1}, d₂ = {d2}:");
    println!("  witness vector {:?}", witness.basis[0]);

    // a boundary case without a closed-form vector: the witness is an
    // eigenspace of a commutant element, verified numerically
    let p1 = RepParams::n4_minus_one(exact(1), exact(2), 0)
        .validate(DEFAULT_TOL)
        .unwrap();
    let p2 = RepParams::n4_minus_one(exact(2), exact(1), 1)
        .validate(DEFAULT_TOL)
        .unwrap();
    let tp = TensorParams::new(p1, p2).unwrap();
    let rep = tp.build_rep();
    let witness = reducibility_witness(&rep, Some(&tp), DEFAULT_TOL)
        .unwrap()
        .expect("a₁a₂ = d₁d₂ forces reducibility");
    println!("\nT₁ = T₂ = −1 on the boundary a₁a₂ = d₁d₂:");
    println!(
        "  invariant subspace of dimension {}, invariance residual {:.2e}",
        witness.basis.len(),
        witness.residual
    );
}
