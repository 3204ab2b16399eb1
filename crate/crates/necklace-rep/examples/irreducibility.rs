//! Decides irreducibility of tensor products three independent ways —
//! closed-form criterion, commutant dimension, Burnside span — and shows
//! they agree, including right on the reducibility boundary.
//!
//! Run with: cargo run --example irreducibility

use necklace_rep::analysis::{burnside_dim, closed_form_irreducible, commutant_dim};
use necklace_rep::{certify, Mode, RepParams, Scalar, TensorParams, DEFAULT_TOL};

fn tensor(a1: i64, d1: i64, a2: i64, d2: i64) -> TensorParams {
    let exact = |n: i64| Scalar::integer(Mode::Exact, n);
    let p1 = RepParams::n4_minus_one(exact(a1), exact(d1), 0)
        .validate(DEFAULT_TOL)
        .unwrap();
    let p2 = RepParams::n4_minus_one(exact(a2), exact(d2), 1)
        .validate(DEFAULT_TOL)
        .unwrap();
    TensorParams::new(p1, p2).unwrap()
}

fn main() {
    let cases = [
        ("generic (a₁a₂ ≠ d₁d₂, a₁d₂ ≠ a₂d₁)", tensor(2, 1, 3, 1)),
        ("boundary a₁a₂ = d₁d₂", tensor(1, 2, 2, 1)),
        ("boundary a₁d₂ = a₂d₁", tensor(2, 1, 4, 2)),
    ];

    for (label, tp) in cases {
        let rep = tp.build_rep();
        let closed = closed_form_irreducible(&tp, DEFAULT_TOL).unwrap();
        let commutant = commutant_dim(&rep, DEFAULT_TOL).unwrap();
        let burnside = burnside_dim(&rep, DEFAULT_TOL).unwrap();
        println!("{label}");
        println!("  closed form : {:?} ({})", closed.verdict, closed.rule);
        println!("  commutant   : dim {commutant} (1 ⇔ irreducible)");
        println!("  Burnside    : span {burnside} of 16 (16 ⇔ irreducible)");

        let cert = certify(&rep, Some(&tp), DEFAULT_TOL, 0).unwrap();
        println!("  certificate : {}", serde_json::to_string(&cert).unwrap());
        println!();
    }
}
