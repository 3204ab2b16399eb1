//! A tour of the exact scalar layer: the cyclotomic field Q(ζ₂₄) that
//! hosts every root of unity the necklace-braid representations use.
//!
//! Run with: cargo run --example exact_arithmetic

use necklace_rep::{Cyclotomic, Mode, Scalar};

fn main() {
    // ζ₂₄ is primitive: the 24th power closes the cycle, nothing earlier
    let zeta = Cyclotomic::zeta_pow(1);
    println!("ζ        = {zeta}  ≈ {:.6}", zeta.embed());
    println!("ζ^24     = {}", Cyclotomic::zeta_pow(24));

    // the constants of the subject all live here
    for (label, order, power) in [
        ("-1      ", 2, 1),
        ("i       ", 4, 1),
        ("e^{iπ/3}", 6, 1),
        ("e^{2πi/3}", 3, 1),
    ] {
        let x = Cyclotomic::root_of_unity(order, power).unwrap();
        println!("{label} = {x}  ≈ {:.6}", x.embed());
    }

    // √2 = ζ₈ + ζ₈⁻¹, and squaring it is exact
    let sqrt2 = &Cyclotomic::zeta_pow(3) + &Cyclotomic::zeta_pow(-3);
    println!("√2       = {sqrt2}  ≈ {:.12}", sqrt2.embed().re);
    println!("√2·√2    = {}", &sqrt2 * &sqrt2);

    // inversion by extended Euclid against x⁸ − x⁴ + 1
    let x = &Cyclotomic::one() + &Cyclotomic::zeta_pow(6); // 1 + i
    let inv = x.inv().unwrap();
    println!("(1+i)⁻¹  = {inv}");
    println!("check    = {}", &x * &inv);

    // conjugation is the automorphism ζ ↦ ζ⁻¹
    let omega = Cyclotomic::root_of_unity(6, 1).unwrap();
    println!("ω̄        = {}  ≈ {:.6}", omega.conj(), omega.conj().embed());

    // the same value in both arithmetic modes
    let exact = Scalar::ratio(Mode::Exact, -3, 4);
    println!("exact -3/4 embeds to {:?}", exact.embed());
}
