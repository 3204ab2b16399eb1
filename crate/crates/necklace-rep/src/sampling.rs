//! Seeded random generation of validated parameter tuples, organized by
//! the tensor case families the closed-form criteria split on, plus the
//! constructed boundary cases that force reducibility.
//!
//! Approx mode draws free parameters from complex standard Gaussians;
//! exact mode draws small rationals, optionally twisted by a random
//! 24th root of unity.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::analysis::TensorParams;
use crate::group::{RepParams, Row, Sign, Twist, ValidatedParams};
use crate::scalar::{Cyclotomic, Mode, Scalar};

/// One tensor case family per closed-form branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// n = 2 (both twists −1)
    N2,
    /// n = 3 with conjugate twists
    N3Conjugate,
    /// n = 3 with equal twists
    N3Equal,
    /// n = 4 with T₁ = T₂ = −1
    N4MinusOne,
    /// n = 4 with T₁ = T₂ = ±i
    N4QuarterEqual,
    /// n = 4 with T₁ = −T₂ = ±i
    N4QuarterOpposite,
    /// n = 4 with {T₁, T₂} = {−1, ±i}
    N4Mixed,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::N2,
        Family::N3Conjugate,
        Family::N3Equal,
        Family::N4MinusOne,
        Family::N4QuarterEqual,
        Family::N4QuarterOpposite,
        Family::N4Mixed,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::N2 => "n2",
            Family::N3Conjugate => "n3-conjugate-twists",
            Family::N3Equal => "n3-equal-twists",
            Family::N4MinusOne => "n4-both-minus-one",
            Family::N4QuarterEqual => "n4-equal-quarter-twists",
            Family::N4QuarterOpposite => "n4-opposite-quarter-twists",
            Family::N4Mixed => "n4-mixed-twists",
        }
    }
}

/// A nonzero random scalar: complex standard Gaussian in approx mode, a
/// small rational times an optional root of unity in exact mode.
pub fn random_scalar<R: Rng>(rng: &mut R, mode: Mode) -> Scalar {
    match mode {
        Mode::Approx => {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            let s = Scalar::complex(re, im);
            if s.is_zero() {
                Scalar::one(mode)
            } else {
                s
            }
        }
        Mode::Exact => {
            let num = loop {
                let n = rng.random_range(-9i64..=9);
                if n != 0 {
                    break n;
                }
            };
            let den = rng.random_range(1i64..=9);
            let q = Cyclotomic::from_ratio(num, den);
            if rng.random_bool(0.5) {
                let k = rng.random_range(0i64..24);
                Scalar::Exact(&q * &Cyclotomic::zeta_pow(k))
            } else {
                Scalar::Exact(q)
            }
        }
    }
}

fn random_phase<R: Rng>(rng: &mut R, n: usize) -> usize {
    rng.random_range(0..2 * n)
}

/// A validated tuple from the n = 2 row (or n = 4 with T = −1 when
/// `row` says so): a and d free, c forced.
pub fn sample_minus_one_row<R: Rng>(rng: &mut R, mode: Mode, row: Row) -> ValidatedParams {
    loop {
        let a = random_scalar(rng, mode);
        let d = random_scalar(rng, mode);
        let phase = if row == Row::N2 {
            random_phase(rng, 2)
        } else {
            random_phase(rng, 4)
        };
        let params = if row == Row::N2 {
            RepParams::n2(a, d, phase)
        } else {
            RepParams::n4_minus_one(a, d, phase)
        };
        if let Ok(vp) = params.validate(1e-9) {
            return vp;
        }
    }
}

/// A validated tuple from the n = 3 row with the given twist and ω sign.
pub fn sample_n3_row<R: Rng>(
    rng: &mut R,
    mode: Mode,
    twist: Twist,
    omega_sign: Sign,
) -> ValidatedParams {
    loop {
        let d = random_scalar(rng, mode);
        let c = random_scalar(rng, mode);
        let params = RepParams::n3(twist, omega_sign, c, d, random_phase(rng, 3));
        if let Ok(vp) = params.validate(1e-9) {
            return vp;
        }
    }
}

/// A validated tuple from the n = 4, T = ±i row.
pub fn sample_quarter_row<R: Rng>(rng: &mut R, mode: Mode, twist: Twist) -> ValidatedParams {
    loop {
        let d = random_scalar(rng, mode);
        let params = RepParams::n4_quarter(twist, d, random_phase(rng, 4));
        if let Ok(vp) = params.validate(1e-9) {
            return vp;
        }
    }
}

/// A random validated tensor from the given family. `idx` round-robins
/// the discrete sign choices so a batch covers every combination.
pub fn sample_tensor<R: Rng>(rng: &mut R, mode: Mode, family: Family, idx: usize) -> TensorParams {
    let signs = [Sign::Plus, Sign::Minus];
    let quarters = [Twist::QuarterPlus, Twist::QuarterMinus];
    let thirds = [Twist::ThirdPlus, Twist::ThirdMinus];
    let (p1, p2) = match family {
        Family::N2 => (
            sample_minus_one_row(rng, mode, Row::N2),
            sample_minus_one_row(rng, mode, Row::N2),
        ),
        Family::N3Conjugate => {
            let w1 = signs[idx % 2];
            let w2 = signs[(idx / 2) % 2];
            (
                sample_n3_row(rng, mode, Twist::ThirdPlus, w1),
                sample_n3_row(rng, mode, Twist::ThirdMinus, w2),
            )
        }
        Family::N3Equal => {
            let t = thirds[(idx / 4) % 2];
            let w1 = signs[idx % 2];
            let w2 = signs[(idx / 2) % 2];
            (
                sample_n3_row(rng, mode, t, w1),
                sample_n3_row(rng, mode, t, w2),
            )
        }
        Family::N4MinusOne => (
            sample_minus_one_row(rng, mode, Row::N4MinusOne),
            sample_minus_one_row(rng, mode, Row::N4MinusOne),
        ),
        Family::N4QuarterEqual => {
            let t = quarters[idx % 2];
            (
                sample_quarter_row(rng, mode, t),
                sample_quarter_row(rng, mode, t),
            )
        }
        Family::N4QuarterOpposite => {
            let t = quarters[idx % 2];
            (
                sample_quarter_row(rng, mode, t),
                sample_quarter_row(rng, mode, t.conjugate()),
            )
        }
        Family::N4Mixed => {
            let t = quarters[idx % 2];
            let quarter_first = (idx / 2).is_multiple_of(2);
            let quarter = sample_quarter_row(rng, mode, t);
            let minus_one = sample_minus_one_row(rng, mode, Row::N4MinusOne);
            if quarter_first {
                (quarter, minus_one)
            } else {
                (minus_one, quarter)
            }
        }
    };
    TensorParams::new(p1, p2).expect("factors share n and mode by construction")
}

/// The constructed reducibility boundaries of the closed-form criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// a₁a₂ = d₁d₂ (n = 4, T = −1)
    ProductsEqual,
    /// a₁d₂ = a₂d₁ (n = 4, T = −1)
    CrossProductsEqual,
    /// ω₁ω₂ = 1 together with ω₁d₁²c₂ = ω₂d₂²c₁ (n = 3, conjugate twists)
    N3ConjugateDouble,
    /// ω₁ = ω₂ together with ω₁d₁²c₂ = ω₂d₂²c₁ (n = 3, equal twists)
    N3EqualDouble,
}

impl Boundary {
    pub const ALL: [Boundary; 4] = [
        Boundary::ProductsEqual,
        Boundary::CrossProductsEqual,
        Boundary::N3ConjugateDouble,
        Boundary::N3EqualDouble,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Boundary::ProductsEqual => "a1a2=d1d2",
            Boundary::CrossProductsEqual => "a1d2=a2d1",
            Boundary::N3ConjugateDouble => "w1w2=1 and w1d1^2c2=w2d2^2c1",
            Boundary::N3EqualDouble => "w1=w2 and w1d1^2c2=w2d2^2c1",
        }
    }
}

/// A reducible tensor sitting exactly on the requested boundary.
pub fn sample_boundary<R: Rng>(rng: &mut R, mode: Mode, boundary: Boundary) -> TensorParams {
    loop {
        let candidate = match boundary {
            Boundary::ProductsEqual | Boundary::CrossProductsEqual => {
                let p1 = sample_minus_one_row(rng, mode, Row::N4MinusOne);
                let a2 = random_scalar(rng, mode);
                let (a1, d1) = (&p1.params().a, &p1.params().d);
                let Ok(d2) = (match boundary {
                    // d₂ = a₁a₂/d₁ forces a₁a₂ = d₁d₂
                    Boundary::ProductsEqual => (a1 * &a2).div(d1),
                    // d₂ = a₂d₁/a₁ forces a₁d₂ = a₂d₁
                    _ => (&a2 * d1).div(a1),
                }) else {
                    continue;
                };
                RepParams::n4_minus_one(a2, d2, random_phase(rng, 4))
                    .validate(1e-9)
                    .ok()
                    .and_then(|p2| TensorParams::new(p1, p2).ok())
            }
            Boundary::N3ConjugateDouble | Boundary::N3EqualDouble => {
                let conjugate = boundary == Boundary::N3ConjugateDouble;
                let w1 = if rng.random_bool(0.5) {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                let w2 = if conjugate {
                    match w1 {
                        Sign::Plus => Sign::Minus,
                        Sign::Minus => Sign::Plus,
                    }
                } else {
                    w1
                };
                let t1 = if rng.random_bool(0.5) {
                    Twist::ThirdPlus
                } else {
                    Twist::ThirdMinus
                };
                let t2 = if conjugate { t1.conjugate() } else { t1 };
                let p1 = sample_n3_row(rng, mode, t1, w1);
                let d2 = random_scalar(rng, mode);
                // c₂ = ω₂d₂²c₁ / (ω₁d₁²)
                let (c1, d1) = (&p1.params().c, &p1.params().d);
                let o1 = w1.omega(mode);
                let o2 = w2.omega(mode);
                let numer = &(&o2 * &(&d2 * &d2)) * c1;
                let Ok(c2) = numer.div(&(&o1 * &(d1 * d1))) else {
                    continue;
                };
                RepParams::n3(t2, w2, c2, d2, random_phase(rng, 3))
                    .validate(1e-9)
                    .ok()
                    .and_then(|p2| TensorParams::new(p1, p2).ok())
            }
        };
        if let Some(tp) = candidate {
            return tp;
        }
    }
}
