//! Unitarization of the dimension-2 representations: decide whether a
//! validated tuple is unitary relative to a hermitian positive-definite
//! form M, produce the form, and generate points of the unitarizable
//! parameter families.
//!
//! For any invariant form, τ-invariance forces M diagonal (its two τ
//! eigenvalues differ), and σ-invariance reduces to the 3-equation
//! linear system on the diagonal (x, u):
//!
//! ```text
//! (|a|²−1)·x + u = 0
//! |c|²·x + (|d|²−1)·u = 0
//! a·c̄·x + d̄·u = 0
//! ```
//!
//! The first two admit a nontrivial solution exactly when
//! (|a|²−1)(|d|²−1) = |c|²; the third then either holds or obstructs;
//! positive definiteness of the solution is the final hurdle.

use serde::Serialize;
use thiserror::Error;

use crate::group::{Rep, RepParams, Sign, Twist, ValidatedParams};
use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{Cyclotomic, Mode, Scalar, ScalarError};

#[derive(Debug, Error)]
pub enum UnitarityError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Why no hermitian positive-definite invariant form exists.
#[derive(Debug, Clone, PartialEq)]
pub enum Obstruction {
    /// (|a|²−1)(|d|²−1) ≠ |c|², so the moduli system has only the
    /// trivial solution.
    DeterminantIdentity { lhs: f64, rhs: f64 },
    /// The moduli system is solvable but the phase equation
    /// a·c̄·x + d̄·u = 0 rejects the solution.
    SystemInconsistency,
    /// A solution exists but is not positive definite.
    Positivity,
}

impl std::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Obstruction::DeterminantIdentity { lhs, rhs } => write!(
                f,
                "determinant identity fails: (|a|^2-1)(|d|^2-1) = {lhs} but |c|^2 = {rhs}"
            ),
            Obstruction::SystemInconsistency => {
                write!(f, "moduli system solvable but the phase equation fails")
            }
            Obstruction::Positivity => {
                write!(f, "solution exists but the form is not positive definite")
            }
        }
    }
}

impl Serialize for Obstruction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitarityStatus {
    Unitarizable,
    NotUnitarizable,
}

/// Outcome of the unitarization solve: either the diagonal form M
/// (top-left entry normalized to 1) or the recorded obstruction.
#[derive(Debug, Clone, Serialize)]
pub struct UnitarityCertificate {
    pub status: UnitarityStatus,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    pub form: Option<Matrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
    pub residual: f64,
}

impl UnitarityCertificate {
    pub fn is_unitarizable(&self) -> bool {
        self.status == UnitarityStatus::Unitarizable
    }
}

/// True iff ρ(g)·M·ρ(g)* = M for every generator image and M is
/// hermitian — exactly in exact mode, within `tol` entrywise in approx
/// mode.
pub fn check_unitary(rep: &Rep, form: &Matrix, tol: f64) -> Result<bool, LinalgError> {
    if !form.is_square() || form.rows() != rep.dim() {
        return Err(LinalgError::ShapeMismatch(format!(
            "form must be {0}×{0}",
            rep.dim()
        )));
    }
    if !form.eq_tol(&form.adjoint(), tol) {
        return Ok(false);
    }
    Ok(unitary_residual(rep, form)? <= residual_bound(rep.mode(), tol))
}

fn residual_bound(mode: Mode, tol: f64) -> f64 {
    match mode {
        Mode::Exact => 0.0,
        Mode::Approx => tol,
    }
}

/// Largest entrywise deviation of ρ(g)·M·ρ(g)* from M over all
/// generators.
pub fn unitary_residual(rep: &Rep, form: &Matrix) -> Result<f64, LinalgError> {
    let mut worst = 0.0f64;
    for image in rep.generator_images() {
        let transported = image.mul(form)?.mul(&image.adjoint())?;
        worst = worst.max(transported.max_abs_diff(form));
    }
    Ok(worst)
}

/// Solves for the invariant hermitian positive-definite form of a
/// validated dimension-2 tuple. The form is normalized with top-left
/// entry 1; obstructions are certificate payload, never errors.
pub fn solve_unitarizing_form(
    vp: &ValidatedParams,
    tol: f64,
) -> Result<UnitarityCertificate, UnitarityError> {
    let p = vp.params();
    let mode = vp.mode();
    let one = Scalar::one(mode);
    let abs_a2 = p.a.abs_sq();
    let abs_d2 = p.d.abs_sq();
    let abs_c2 = p.c.abs_sq();

    let not_unitarizable = |o: Obstruction| UnitarityCertificate {
        status: UnitarityStatus::NotUnitarizable,
        form: None,
        obstruction: Some(o),
        residual: f64::INFINITY,
    };

    // solvability of the moduli system: (|a|²−1)(|d|²−1) = |c|².
    // The tolerance scales with the operand size so points with large
    // |a| are judged by relative error.
    let lhs = &(&abs_a2 - &one) * &(&abs_d2 - &one);
    let scale = lhs.embed().norm().max(abs_c2.embed().norm()).max(1.0);
    if !lhs.eq_tol(&abs_c2, tol * scale) {
        return Ok(not_unitarizable(Obstruction::DeterminantIdentity {
            lhs: lhs.embed().re,
            rhs: abs_c2.embed().re,
        }));
    }

    // normalize x = 1, so u = 1 − |a|²
    let u = &one - &abs_a2;

    // phase equation: a·c̄ + d̄·u = 0
    let term1 = &p.a * &p.c.conj();
    let term2 = &p.d.conj() * &u;
    let phase = &term1 + &term2;
    let scale = term1.embed().norm().max(term2.embed().norm()).max(1.0);
    if !phase.is_zero_tol(tol * scale) {
        return Ok(not_unitarizable(Obstruction::SystemInconsistency));
    }

    // positive definiteness: u > 0 (x = 1 already is)
    let positive = match u.cmp_real(&Scalar::zero(mode), tol) {
        Ok(std::cmp::Ordering::Greater) => true,
        Ok(_) => false,
        Err(ScalarError::NotReal) => false,
        Err(e) => return Err(e.into()),
    };
    if !positive {
        return Ok(not_unitarizable(Obstruction::Positivity));
    }

    let form = Matrix::diagonal(&[one, u])?;
    let rep = vp.build_rep();
    let residual = unitary_residual(&rep, &form)?;
    if residual > residual_bound(mode, tol) {
        return Err(UnitarityError::Internal(format!(
            "solved form fails verification with residual {residual:.3e}"
        )));
    }
    Ok(UnitarityCertificate {
        status: UnitarityStatus::Unitarizable,
        form: Some(form),
        obstruction: None,
        residual,
    })
}

/// A point of one of the unitarizable parameter families, together with
/// the form the solver is expected to reproduce (in the normalization
/// matching its source).
#[derive(Debug, Clone)]
pub struct FamilyPoint {
    pub theta: Option<f64>,
    pub delta: Option<f64>,
    pub delta_prime: Option<f64>,
    pub params: RepParams,
    /// The expected invariant form, up to overall positive scale.
    pub expected_form: Matrix,
    /// Whether the point satisfies the positivity requirement (|a| < 1);
    /// points violating it are still returned for negative tests.
    pub positive: bool,
}

/// The T = −1 family for n = 4 (and n = 2): a = d + e^{iθ} with d on
/// the branch determined by θ:
///
/// - θ ≡ π/2 (mod 2π): d = δ′ − i/2,
/// - θ ≡ −π/2 (mod 2π): d = δ′ + i/2,
/// - otherwise: d = −½·secθ − (tanθ)·δ + i·δ,
///
/// where the second argument supplies δ′ or δ. Unitarizable exactly when
/// |a| < 1; the invariant form is diag(1, 1−|a|²).
pub fn family_point_n4_minus_one(theta: f64, delta_or_delta_prime: f64) -> FamilyPoint {
    let p = delta_or_delta_prime;
    let cos = theta.cos();
    let (d, delta, delta_prime) = if cos.abs() < 1e-9 {
        // ±π/2 branch, sign from sin θ
        let half = if theta.sin() > 0.0 { -0.5 } else { 0.5 };
        (Scalar::complex(p, half), None, Some(p))
    } else {
        let re = -0.5 / cos - theta.tan() * p;
        (Scalar::complex(re, p), Some(p), None)
    };
    let a = &d + &Scalar::complex(cos, theta.sin());
    let abs_a2 = a.abs_sq().embed().re;
    let params = RepParams::n4_minus_one(a, d, 0);
    let expected_form = Matrix::diagonal(&[
        Scalar::one(Mode::Approx),
        Scalar::complex(1.0 - abs_a2, 0.0),
    ])
    .expect("same mode");
    FamilyPoint {
        theta: Some(theta),
        delta,
        delta_prime,
        params,
        expected_form,
        positive: abs_a2 < 1.0,
    }
}

/// The T = ±i family for n = 4: d = (√2/2)·ζ₂₄^k, so |d|² = 1/2
/// exactly; a = d and c = −d². The invariant form is diag(2, 1) up to
/// scale.
pub fn family_point_n4_quarter(
    phase_exponent: i64,
    twist: Twist,
    mode: Mode,
) -> Result<FamilyPoint, UnitarityError> {
    if !matches!(twist, Twist::QuarterPlus | Twist::QuarterMinus) {
        return Err(UnitarityError::Domain(format!(
            "twist must be ±i, got {twist:?}"
        )));
    }
    let d = match mode {
        Mode::Exact => {
            // √2/2 = (ζ³ + ζ⁻³)/2
            let sqrt2 = &Cyclotomic::zeta_pow(3) + &Cyclotomic::zeta_pow(-3);
            let half = Cyclotomic::from_ratio(1, 2);
            Scalar::Exact(&(&sqrt2 * &half) * &Cyclotomic::zeta_pow(phase_exponent))
        }
        Mode::Approx => {
            let r = std::f64::consts::SQRT_2 / 2.0;
            let angle = std::f64::consts::PI * phase_exponent as f64 / 12.0;
            Scalar::Approx(num_complex::Complex64::from_polar(r, angle))
        }
    };
    let params = RepParams::n4_quarter(twist, d, 0);
    let expected_form =
        Matrix::diagonal(&[Scalar::integer(mode, 2), Scalar::one(mode)]).expect("same mode");
    Ok(FamilyPoint {
        theta: None,
        delta: None,
        delta_prime: None,
        params,
        expected_form,
        positive: true,
    })
}

/// The n = 3 family: a = ωd and c = ωd(|d|²−1)/d̄ for 0 < |d| < 1. The
/// invariant form is diag(1, 1−|d|²).
pub fn family_point_n3(
    twist: Twist,
    omega_sign: Sign,
    d: Scalar,
) -> Result<FamilyPoint, UnitarityError> {
    if !matches!(twist, Twist::ThirdPlus | Twist::ThirdMinus) {
        return Err(UnitarityError::Domain(format!(
            "twist must be e^{{±2πi/3}}, got {twist:?}"
        )));
    }
    if d.is_zero() {
        return Err(UnitarityError::Domain("d must be nonzero".into()));
    }
    let mode = d.mode();
    let one = Scalar::one(mode);
    let abs_d2 = d.abs_sq();
    match abs_d2.cmp_real(&one, 1e-12) {
        Ok(std::cmp::Ordering::Less) => {}
        Ok(_) => return Err(UnitarityError::Domain("|d| must be below 1".into())),
        Err(e) => return Err(e.into()),
    }
    let omega = omega_sign.omega(mode);
    let c = &(&omega * &d) * &(&(&abs_d2 - &one) * &d.conj().inv()?);
    let params = RepParams::n3(twist, omega_sign, c, d, 0);
    let expected_form = Matrix::diagonal(&[one.clone(), &one - &abs_d2]).expect("same mode");
    Ok(FamilyPoint {
        theta: None,
        delta: None,
        delta_prime: None,
        params,
        expected_form,
        positive: true,
    })
}

/// Checks that a solved form matches an expected one up to positive
/// scale (both diagonal with nonzero top-left entry).
pub fn forms_proportional(solved: &Matrix, expected: &Matrix, tol: f64) -> bool {
    let s = solved.get(0, 0).embed();
    let e = expected.get(0, 0).embed();
    if s.norm() == 0.0 || e.norm() == 0.0 {
        return false;
    }
    let ratio = e / s;
    if ratio.re <= 0.0 || ratio.im.abs() > tol {
        return false;
    }
    let mut worst = 0.0f64;
    for i in 0..solved.rows() {
        for j in 0..solved.cols() {
            let scaled = solved.get(i, j).embed() * ratio;
            worst = worst.max((scaled - expected.get(i, j).embed()).norm());
        }
    }
    worst <= tol
}
