//! Solves the unitarization problem on all three parameter families and
//! shows a representative obstruction: find a hermitian positive-definite
//! M with ρ(g)·M·ρ(g)* = M for every generator, or say exactly why none
//! exists.
//!
//! Run with: cargo run --example unitarize

use necklace_rep::unitarity::{
    check_unitary, family_point_n3, family_point_n4_minus_one, family_point_n4_quarter,
    solve_unitarizing_form,
};
use necklace_rep::{Mode, RepParams, Scalar, Sign, Twist, DEFAULT_TOL};

fn main() {
    // T = −1 family: a = d + e^{iθ}, here at θ = π with δ = 0
    let point = family_point_n4_minus_one(std::f64::consts::PI, 0.0);
    let vp = point.params.clone().validate(DEFAULT_TOL).unwrap();
    let cert = solve_unitarizing_form(&vp, DEFAULT_TOL).unwrap();
    println!("T = −1 family at θ = π, δ = 0  (a = −1/2, d = 1/2):");
    println!("  {}", serde_json::to_string(&cert).unwrap());

    // T = ±i family: |d|² = 1/2 exactly, M ∝ diag(2, 1)
    let point = family_point_n4_quarter(3, Twist::QuarterPlus, Mode::Exact).unwrap();
    let vp = point.params.clone().validate(DEFAULT_TOL).unwrap();
    let cert = solve_unitarizing_form(&vp, DEFAULT_TOL).unwrap();
    println!("\nT = i family at d = (√2/2)·ζ₂₄³ = (1+i)/2:");
    println!(
        "  M = {:?} (family normalization: {:?})",
        cert.form.as_ref().unwrap(),
        point.expected_form
    );

    // n = 3 family: c = ωd(|d|²−1)/d̄ with |d| < 1
    let point = family_point_n3(
        Twist::ThirdPlus,
        Sign::Plus,
        Scalar::ratio(Mode::Exact, 1, 2),
    )
    .unwrap();
    let vp = point.params.clone().validate(DEFAULT_TOL).unwrap();
    let cert = solve_unitarizing_form(&vp, DEFAULT_TOL).unwrap();
    println!("\nn = 3 family at ω = e^{{iπ/3}}, d = 1/2:");
    println!("  M = {:?}", cert.form.as_ref().unwrap());
    let rep = vp.build_rep();
    println!(
        "  every generator preserves M: {}",
        check_unitary(&rep, cert.form.as_ref().unwrap(), DEFAULT_TOL).unwrap()
    );

    // an obstructed tuple: a = 2, d = 1, c = 3
    let exact = |n: i64| Scalar::integer(Mode::Exact, n);
    let vp = RepParams::n2(exact(2), exact(1), 0)
        .validate(DEFAULT_TOL)
        .unwrap();
    let cert = solve_unitarizing_form(&vp, DEFAULT_TOL).unwrap();
    println!("\nnon-family tuple a = 2, d = 1, c = 3:");
    println!("  {}", serde_json::to_string(&cert).unwrap());

    // a family point outside the positivity region is rejected too
    let point = family_point_n4_minus_one(0.0, 3.0);
    let vp = point.params.clone().validate(DEFAULT_TOL).unwrap();
    let cert = solve_unitarizing_form(&vp, DEFAULT_TOL).unwrap();
    println!("\nfamily point with |a| ≥ 1:");
    println!("  {}", serde_json::to_string(&cert).unwrap());
}
