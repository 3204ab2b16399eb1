//! The necklace braid group NB_n (n = 2, 3, 4): its presentation, the
//! validated parameter tuples of its dimension-2 irreducible
//! representations, construction of generator images, and exhaustive
//! relation verification.
//!
//! Generators are σ₁..σ_n and τ; the defining relations are
//!
//! - (B1) σᵢσᵢ₊₁σᵢ = σᵢ₊₁σᵢσᵢ₊₁,
//! - (B2) σᵢσⱼ = σⱼσᵢ for non-adjacent i, j,
//! - (N1) τσᵢτ⁻¹ = σᵢ₊₁,
//! - (N2) τ²ⁿ = 1,
//!
//! with indices mod n, σ_{n+1} = σ₁.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{Mode, Scalar};

#[derive(Debug, Error)]
#[error("invalid representation parameters: {}", violations.join("; "))]
pub struct ParamError {
    pub violations: Vec<String>,
}

/// A generator of NB_n. σ indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    Sigma(usize),
    Tau,
}

/// A word over the generators and their inverses, as (generator, exponent)
/// pairs.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Word(pub Vec<(Gen, i64)>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (g, e) in &self.0 {
            match g {
                Gen::Sigma(i) => write!(f, "σ{i}")?,
                Gen::Tau => write!(f, "τ")?,
            }
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Identifies one instance of a defining relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationId {
    B1 { i: usize },
    B2 { i: usize, j: usize },
    N1 { i: usize },
    N2,
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationId::B1 { i } => write!(f, "B1[i={i}]"),
            RelationId::B2 { i, j } => write!(f, "B2[i={i},j={j}]"),
            RelationId::N1 { i } => write!(f, "N1[i={i}]"),
            RelationId::N2 => write!(f, "N2"),
        }
    }
}

impl Serialize for RelationId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The finite presentation of NB_n as explicit word pairs.
#[derive(Debug, Clone)]
pub struct NecklacePresentation {
    n: usize,
    relations: Vec<(RelationId, Word, Word)>,
}

impl NecklacePresentation {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "necklace braid groups need at least two circles");
        let wrap = |i: usize| if i > n { i - n } else { i };
        let mut relations = Vec::new();
        for i in 1..=n {
            let j = wrap(i + 1);
            relations.push((
                RelationId::B1 { i },
                Word(vec![
                    (Gen::Sigma(i), 1),
                    (Gen::Sigma(j), 1),
                    (Gen::Sigma(i), 1),
                ]),
                Word(vec![
                    (Gen::Sigma(j), 1),
                    (Gen::Sigma(i), 1),
                    (Gen::Sigma(j), 1),
                ]),
            ));
        }
        for i in 1..=n {
            for j in (i + 1)..=n {
                let adjacent = j == i + 1 || (i == 1 && j == n);
                if !adjacent {
                    relations.push((
                        RelationId::B2 { i, j },
                        Word(vec![(Gen::Sigma(i), 1), (Gen::Sigma(j), 1)]),
                        Word(vec![(Gen::Sigma(j), 1), (Gen::Sigma(i), 1)]),
                    ));
                }
            }
        }
        for i in 1..=n {
            relations.push((
                RelationId::N1 { i },
                Word(vec![(Gen::Tau, 1), (Gen::Sigma(i), 1), (Gen::Tau, -1)]),
                Word(vec![(Gen::Sigma(wrap(i + 1)), 1)]),
            ));
        }
        relations.push((
            RelationId::N2,
            Word(vec![(Gen::Tau, 2 * n as i64)]),
            Word::empty(),
        ));
        Self { n, relations }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[(RelationId, Word, Word)] {
        &self.relations
    }
}

/// The admissible values of the twist parameter T of Proposition-style
/// classification: τ's two eigenvalues differ by exactly this factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Twist {
    MinusOne,
    /// i
    QuarterPlus,
    /// −i
    QuarterMinus,
    /// e^{2πi/3}
    ThirdPlus,
    /// e^{−2πi/3}
    ThirdMinus,
}

impl Twist {
    pub fn scalar(self, mode: Mode) -> Scalar {
        let (order, power) = match self {
            Twist::MinusOne => (2, 1),
            Twist::QuarterPlus => (4, 1),
            Twist::QuarterMinus => (4, -1),
            Twist::ThirdPlus => (3, 1),
            Twist::ThirdMinus => (3, -1),
        };
        Scalar::root_of_unity(mode, order, power).expect("orders divide 24")
    }

    pub const ALL: [Twist; 5] = [
        Twist::MinusOne,
        Twist::QuarterPlus,
        Twist::QuarterMinus,
        Twist::ThirdPlus,
        Twist::ThirdMinus,
    ];

    /// Recognizes a scalar as one of the admissible twists.
    pub fn classify(s: &Scalar, tol: f64) -> Option<Twist> {
        Twist::ALL
            .into_iter()
            .find(|t| s.eq_tol(&t.scalar(s.mode()), tol))
    }

    pub fn conjugate(self) -> Twist {
        match self {
            Twist::MinusOne => Twist::MinusOne,
            Twist::QuarterPlus => Twist::QuarterMinus,
            Twist::QuarterMinus => Twist::QuarterPlus,
            Twist::ThirdPlus => Twist::ThirdMinus,
            Twist::ThirdMinus => Twist::ThirdPlus,
        }
    }
}

/// Sign choice for ω = e^{±iπ/3} in the n = 3 family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn omega(self, mode: Mode) -> Scalar {
        let power = match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        Scalar::root_of_unity(mode, 6, power).expect("6 divides 24")
    }

    pub fn classify_omega(s: &Scalar, tol: f64) -> Option<Sign> {
        [Sign::Plus, Sign::Minus]
            .into_iter()
            .find(|sign| s.eq_tol(&sign.omega(s.mode()), tol))
    }
}

/// Which row of the dimension-2 classification a parameter tuple
/// belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Row {
    /// n = 2, T = −1
    N2,
    /// n = 3, T = e^{±2πi/3}
    N3,
    /// n = 4, T = −1
    N4MinusOne,
    /// n = 4, T = ±i
    N4Quarter,
}

/// Raw parameter tuple (n, T, t, a, c, d) for a dimension-2
/// representation; `phase_exp` is the exponent k with t = ζ₂ₙᵏ, so the
/// order relation τ²ⁿ = 1 is structural. ω is required when n = 3.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepParams {
    pub n: usize,
    #[serde(rename = "T")]
    pub tau_ratio: Scalar,
    #[serde(rename = "t_exp")]
    pub phase_exp: usize,
    pub a: Scalar,
    pub c: Scalar,
    pub d: Scalar,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Scalar>,
    pub mode: Mode,
}

impl RepParams {
    /// n = 2 row: T = −1 and c is forced to a² − ad + d².
    pub fn n2(a: Scalar, d: Scalar, phase_exp: usize) -> RepParams {
        let mode = a.mode();
        let c = &(&(&a * &a) - &(&a * &d)) + &(&d * &d);
        RepParams {
            n: 2,
            tau_ratio: Twist::MinusOne.scalar(mode),
            phase_exp,
            a,
            c,
            d,
            omega: None,
            mode,
        }
    }

    /// n = 3 row: a is forced to ω·d; c stays free (nonzero, ≠ ωd²).
    pub fn n3(twist: Twist, omega_sign: Sign, c: Scalar, d: Scalar, phase_exp: usize) -> RepParams {
        let mode = d.mode();
        let omega = omega_sign.omega(mode);
        RepParams {
            n: 3,
            tau_ratio: twist.scalar(mode),
            phase_exp,
            a: &omega * &d,
            c,
            d,
            omega: Some(omega),
            mode,
        }
    }

    /// n = 4, T = −1 row: c is forced to a² − ad + d².
    pub fn n4_minus_one(a: Scalar, d: Scalar, phase_exp: usize) -> RepParams {
        let mode = a.mode();
        let c = &(&(&a * &a) - &(&a * &d)) + &(&d * &d);
        RepParams {
            n: 4,
            tau_ratio: Twist::MinusOne.scalar(mode),
            phase_exp,
            a,
            c,
            d,
            omega: None,
            mode,
        }
    }

    /// n = 4, T = ±i row: a = d and c = −d².
    pub fn n4_quarter(twist: Twist, d: Scalar, phase_exp: usize) -> RepParams {
        let mode = d.mode();
        RepParams {
            n: 4,
            tau_ratio: twist.scalar(mode),
            phase_exp,
            a: d.clone(),
            c: -&(&d * &d),
            d,
            omega: None,
            mode,
        }
    }

    /// Checks the classification-row conditions and the braid-relation
    /// scalar identity (a² − ad + d²)T + c(1 + T + T²) = 0, reporting
    /// each violated condition by name.
    pub fn validate(self, tol: f64) -> Result<ValidatedParams, ParamError> {
        let mut violations = Vec::new();
        let mode = self.mode;
        let mut scalars: Vec<&Scalar> = vec![&self.tau_ratio, &self.a, &self.c, &self.d];
        if let Some(w) = &self.omega {
            scalars.push(w);
        }
        if scalars.iter().any(|s| s.mode() != mode) {
            return Err(ParamError {
                violations: vec![format!(
                    "scalar variants must all match declared mode {mode:?}"
                )],
            });
        }
        if !matches!(self.n, 2..=4) {
            return Err(ParamError {
                violations: vec![format!("n must be 2, 3 or 4, got {}", self.n)],
            });
        }
        let eq = |x: &Scalar, y: &Scalar| x.eq_tol(y, tol);
        let nonzero = |x: &Scalar| !x.is_zero_tol(tol);

        let twist = Twist::classify(&self.tau_ratio, tol);
        let (row, omega_sign) = match (self.n, twist) {
            (2, Some(Twist::MinusOne)) => (Some(Row::N2), None),
            (3, Some(Twist::ThirdPlus | Twist::ThirdMinus)) => {
                let sign = match &self.omega {
                    None => {
                        violations.push("omega is required when n=3".into());
                        None
                    }
                    Some(w) => {
                        let s = Sign::classify_omega(w, tol);
                        if s.is_none() {
                            violations.push("omega must be e^{iπ/3} or e^{-iπ/3}".into());
                        }
                        s
                    }
                };
                (Some(Row::N3), sign)
            }
            (4, Some(Twist::MinusOne)) => (Some(Row::N4MinusOne), None),
            (4, Some(Twist::QuarterPlus | Twist::QuarterMinus)) => (Some(Row::N4Quarter), None),
            _ => {
                violations.push(format!(
                    "T admits no classification row for n={}: need T^n=1, T≠1 with T in \
                     {{-1, ±i, e^{{±2πi/3}}}}",
                    self.n
                ));
                (None, None)
            }
        };

        if let Some(row) = row {
            match row {
                Row::N2 | Row::N4MinusOne => {
                    let poly =
                        &(&(&self.a * &self.a) - &(&self.a * &self.d)) + &(&self.d * &self.d);
                    if !eq(&self.c, &poly) {
                        violations.push("c must equal a²-ad+d²".into());
                    }
                    if !nonzero(&self.c) {
                        violations.push("c must be nonzero".into());
                    }
                    if eq(&self.a, &self.d) {
                        violations.push("a must differ from d".into());
                    }
                }
                Row::N3 => {
                    if let Some(sign) = omega_sign {
                        let w = sign.omega(mode);
                        if !eq(&self.a, &(&w * &self.d)) {
                            violations.push("a must equal ω·d".into());
                        }
                        if !nonzero(&self.c) {
                            violations.push("c must be nonzero".into());
                        }
                        if eq(&self.c, &(&w * &(&self.d * &self.d))) {
                            violations.push("c must differ from ω·d²".into());
                        }
                    }
                }
                Row::N4Quarter => {
                    if !eq(&self.c, &-&(&self.d * &self.d)) {
                        violations.push("c must equal -d²".into());
                    }
                    if !eq(&self.a, &self.d) {
                        violations.push("a must equal d".into());
                    }
                    if !nonzero(&self.d) {
                        violations.push("d must be nonzero".into());
                    }
                }
            }
        }

        // invertibility: det ρ(σᵢ) = ad − c ≠ 0
        if eq(&(&self.a * &self.d), &self.c) {
            violations.push("ad must differ from c (invertibility)".into());
        }

        // braid-relation scalar identity
        let t = &self.tau_ratio;
        let quad = &(&(&self.a * &self.a) - &(&self.a * &self.d)) + &(&self.d * &self.d);
        let unity_sum = &(&Scalar::one(mode) + t) + &(t * t);
        let braid = &(&quad * t) + &(&self.c * &unity_sum);
        if !braid.is_zero_tol(tol) {
            violations.push("(a²-ad+d²)T + c(1+T+T²) must vanish (braid relation)".into());
        }

        if violations.is_empty() {
            Ok(ValidatedParams {
                row: row.expect("row present when no violations"),
                twist: twist.expect("twist present when no violations"),
                omega_sign,
                params: self,
            })
        } else {
            Err(ParamError { violations })
        }
    }

    /// Builds the generator images without any validation. Exists so that
    /// deliberately invalid parameter tuples can be turned into matrices
    /// for negative tests; fails only if T is not invertible.
    pub fn build_rep_unchecked(&self) -> Result<Rep, LinalgError> {
        build_images(self)
    }

    /// Embeds every scalar into approximate mode (no validation).
    pub fn to_approx(&self) -> RepParams {
        RepParams {
            n: self.n,
            tau_ratio: self.tau_ratio.to_approx(),
            phase_exp: self.phase_exp,
            a: self.a.to_approx(),
            c: self.c.to_approx(),
            d: self.d.to_approx(),
            omega: self.omega.as_ref().map(Scalar::to_approx),
            mode: Mode::Approx,
        }
    }
}

/// A parameter tuple that passed every row condition of the
/// classification table.
#[derive(Debug, Clone)]
pub struct ValidatedParams {
    params: RepParams,
    row: Row,
    twist: Twist,
    omega_sign: Option<Sign>,
}

impl ValidatedParams {
    pub fn params(&self) -> &RepParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn mode(&self) -> Mode {
        self.params.mode
    }

    pub fn row(&self) -> Row {
        self.row
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn omega_sign(&self) -> Option<Sign> {
        self.omega_sign
    }

    /// The dimension-2 representation: ρ(τ) = diag(T·t, t) and
    /// ρ(σᵢ) = [[a, T^{i−1}], [c·T^{1−i}, d]].
    pub fn build_rep(&self) -> Rep {
        build_images(&self.params).expect("validated parameters are invertible")
    }

    /// The same tuple with a different phase exponent. No condition of
    /// the classification table involves t, so validity is preserved.
    pub fn with_phase_exp(&self, phase_exp: usize) -> ValidatedParams {
        let mut out = self.clone();
        out.params.phase_exp = phase_exp % (2 * out.params.n);
        out
    }

    /// Re-embeds every scalar, producing the approximate-mode twin of
    /// these parameters. Validation cannot fail: the row conditions hold
    /// exactly, hence within any tolerance after embedding.
    pub fn to_approx(&self, tol: f64) -> ValidatedParams {
        self.params
            .to_approx()
            .validate(tol)
            .expect("embedding a validated tuple keeps it valid")
    }
}

fn build_images(p: &RepParams) -> Result<Rep, LinalgError> {
    let mode = p.mode;
    let two_n = 2 * p.n as u32;
    let t = Scalar::root_of_unity(mode, two_n, p.phase_exp as i64)?;
    let tau_image = Matrix::diagonal(&[&p.tau_ratio * &t, t])?;
    let t_inv = p.tau_ratio.inv()?;
    let mut sigma_images = Vec::with_capacity(p.n);
    let mut t_pow = Scalar::one(mode); // T^{i−1}
    let mut t_pow_inv = Scalar::one(mode); // T^{1−i}
    for _ in 0..p.n {
        sigma_images.push(Matrix::from_rows(vec![
            vec![p.a.clone(), t_pow.clone()],
            vec![&p.c * &t_pow_inv, p.d.clone()],
        ])?);
        t_pow = &t_pow * &p.tau_ratio;
        t_pow_inv = &t_pow_inv * &t_inv;
    }
    Ok(Rep {
        n: p.n,
        dim: 2,
        sigma_images,
        tau_image,
        mode,
    })
}

/// Generator images of a representation of NB_n.
#[derive(Debug, Clone, PartialEq)]
pub struct Rep {
    n: usize,
    dim: usize,
    sigma_images: Vec<Matrix>,
    tau_image: Matrix,
    mode: Mode,
}

impl Rep {
    /// Wraps explicit generator images. Shapes must agree; invertibility
    /// is checked lazily where inverses are taken.
    pub fn from_images(
        n: usize,
        sigma_images: Vec<Matrix>,
        tau_image: Matrix,
    ) -> Result<Self, LinalgError> {
        if sigma_images.len() != n {
            return Err(LinalgError::ShapeMismatch(format!(
                "expected {n} sigma images, got {}",
                sigma_images.len()
            )));
        }
        let dim = tau_image.rows();
        let mode = tau_image.mode();
        for m in sigma_images.iter().chain(std::iter::once(&tau_image)) {
            if !m.is_square() || m.rows() != dim {
                return Err(LinalgError::ShapeMismatch(
                    "generator images must be square of equal size".into(),
                ));
            }
            if m.mode() != mode {
                return Err(LinalgError::MixedModes);
            }
        }
        Ok(Self {
            n,
            dim,
            sigma_images,
            tau_image,
            mode,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// 1-based σ index, wrapping mod n.
    pub fn sigma(&self, i: usize) -> &Matrix {
        &self.sigma_images[(i - 1) % self.n]
    }

    pub fn sigma_images(&self) -> &[Matrix] {
        &self.sigma_images
    }

    pub fn tau(&self) -> &Matrix {
        &self.tau_image
    }

    /// All generator images, σ₁..σ_n then τ.
    pub fn generator_images(&self) -> impl Iterator<Item = &Matrix> {
        self.sigma_images
            .iter()
            .chain(std::iter::once(&self.tau_image))
    }

    pub fn image(&self, g: Gen) -> &Matrix {
        match g {
            Gen::Sigma(i) => self.sigma(i),
            Gen::Tau => self.tau(),
        }
    }

    /// Evaluates a word: the product of generator images in word order,
    /// inverses via matrix inversion.
    pub fn apply_word(&self, word: &Word) -> Result<Matrix, LinalgError> {
        let mut acc = Matrix::identity(self.dim, self.mode);
        for &(g, e) in &word.0 {
            if let Gen::Sigma(i) = g {
                if i == 0 || i > self.n {
                    return Err(LinalgError::ShapeMismatch(format!(
                        "generator index {i} out of range for n={}",
                        self.n
                    )));
                }
            }
            acc = acc.mul(&self.image(g).pow(e)?)?;
        }
        Ok(acc)
    }

    /// Checks every instance of (B1), (B2), (N1), (N2) by matrix
    /// arithmetic. Failures are report entries, never errors.
    pub fn verify_relations(&self, tol: f64) -> RelationReport {
        let presentation = NecklacePresentation::new(self.n);
        let mut checks = Vec::new();
        for (id, lhs, rhs) in presentation.relations() {
            let check = match (self.apply_word(lhs), self.apply_word(rhs)) {
                (Ok(l), Ok(r)) => {
                    let residual = l.max_abs_diff(&r);
                    let passed = match self.mode {
                        Mode::Exact => l == r,
                        Mode::Approx => residual <= tol,
                    };
                    RelationCheck {
                        relation: *id,
                        passed,
                        residual,
                    }
                }
                _ => RelationCheck {
                    relation: *id,
                    passed: false,
                    residual: f64::INFINITY,
                },
            };
            checks.push(check);
        }
        RelationReport { n: self.n, checks }
    }

    /// Embeds all images into approximate mode.
    pub fn to_approx(&self) -> Rep {
        Rep {
            n: self.n,
            dim: self.dim,
            sigma_images: self.sigma_images.iter().map(Matrix::to_approx).collect(),
            tau_image: self.tau_image.to_approx(),
            mode: Mode::Approx,
        }
    }
}

impl Serialize for Rep {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Rep", 4)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("dim", &self.dim)?;
        s.serialize_field("sigma_images", &self.sigma_images)?;
        s.serialize_field("tau_image", &self.tau_image)?;
        s.end()
    }
}

/// Result of one relation-instance check.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: RelationId,
    pub passed: bool,
    pub residual: f64,
}

/// Per-relation verification report; overall pass iff every instance
/// passes.
#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::DEFAULT_TOL;

    fn exact(n: i64) -> Scalar {
        Scalar::integer(Mode::Exact, n)
    }

    pub(crate) fn n2_params(a: i64, d: i64, c: i64) -> RepParams {
        RepParams {
            n: 2,
            tau_ratio: Twist::MinusOne.scalar(Mode::Exact),
            phase_exp: 0,
            a: exact(a),
            c: exact(c),
            d: exact(d),
            omega: None,
            mode: Mode::Exact,
        }
    }

    fn n4_quarter_params(d: i64, phase_exp: usize) -> RepParams {
        RepParams {
            n: 4,
            tau_ratio: Twist::QuarterPlus.scalar(Mode::Exact),
            phase_exp,
            a: exact(d),
            c: exact(-d * d),
            d: exact(d),
            omega: None,
            mode: Mode::Exact,
        }
    }

    #[test]
    fn validation_examples() {
        // c = 4 − 2 + 1 = 3 satisfies the n=2 row
        assert!(n2_params(2, 1, 3).validate(DEFAULT_TOL).is_ok());
        // n=4, T=i, a=d=1, c=−1 satisfies c = −d², a = d ≠ 0
        assert!(n4_quarter_params(1, 0).validate(DEFAULT_TOL).is_ok());
        // c = 5 violates the braid condition
        let err = n2_params(2, 1, 5).validate(DEFAULT_TOL).unwrap_err();
        assert!(err.violations.iter().any(|v| v.contains("a²-ad+d²")));
        assert!(err.violations.iter().any(|v| v.contains("braid")));
        // a = d is rejected
        let err = n2_params(1, 1, 1).validate(DEFAULT_TOL).unwrap_err();
        assert!(err.violations.iter().any(|v| v.contains("differ")));
        // T = 1 is never admissible
        let mut p = n2_params(2, 1, 3);
        p.tau_ratio = exact(1);
        assert!(p.validate(DEFAULT_TOL).is_err());
    }

    #[test]
    fn omega_is_required_for_n3() {
        let w = Sign::Plus.omega(Mode::Exact);
        let d = exact(2);
        let p = RepParams {
            n: 3,
            tau_ratio: Twist::ThirdPlus.scalar(Mode::Exact),
            phase_exp: 1,
            a: &w * &d,
            c: exact(5),
            d,
            omega: Some(w),
            mode: Mode::Exact,
        };
        assert!(p.clone().validate(DEFAULT_TOL).is_ok());
        let mut missing = p.clone();
        missing.omega = None;
        let err = missing.validate(DEFAULT_TOL).unwrap_err();
        assert!(err.violations.iter().any(|v| v.contains("omega")));
        // c = ωd² is the excluded invertibility boundary
        let mut boundary = p;
        boundary.c = &boundary.omega.clone().unwrap() * &(&boundary.d * &boundary.d);
        assert!(boundary.validate(DEFAULT_TOL).is_err());
    }

    #[test]
    fn build_rep_examples() {
        // n=4, T=i, t=1: ρ(σ₂) = [[1, i], [i, 1]] since c·T^{1−2} = −1·(−i) = i
        let rep = n4_quarter_params(1, 0)
            .validate(DEFAULT_TOL)
            .unwrap()
            .build_rep();
        let i = Scalar::root_of_unity(Mode::Exact, 4, 1).unwrap();
        let expected =
            Matrix::from_rows(vec![vec![exact(1), i.clone()], vec![i.clone(), exact(1)]]).unwrap();
        assert_eq!(rep.sigma(2), &expected);

        // n=2, a=2, d=1, c=3, t=1
        let rep = n2_params(2, 1, 3)
            .validate(DEFAULT_TOL)
            .unwrap()
            .build_rep();
        let s1 =
            Matrix::from_rows(vec![vec![exact(2), exact(1)], vec![exact(3), exact(1)]]).unwrap();
        let s2 =
            Matrix::from_rows(vec![vec![exact(2), exact(-1)], vec![exact(-3), exact(1)]]).unwrap();
        assert_eq!(rep.sigma(1), &s1);
        assert_eq!(rep.sigma(2), &s2);

        // t_exponent = 0 always gives ρ(τ) = diag(T, 1)
        let tau = rep.tau();
        assert_eq!(tau, &Matrix::diagonal(&[exact(-1), exact(1)]).unwrap());
    }

    #[test]
    fn relations_hold_for_valid_params() {
        let rep = n4_quarter_params(1, 1)
            .validate(DEFAULT_TOL)
            .unwrap()
            .build_rep();
        let report = rep.verify_relations(DEFAULT_TOL);
        assert!(
            report.all_passed(),
            "failures: {:?}",
            report.failures().collect::<Vec<_>>()
        );
        assert_eq!(report.checks.len(), 4 + 2 + 4 + 1);
    }

    #[test]
    fn identity_assignment_satisfies_everything() {
        let id = Matrix::identity(2, Mode::Exact);
        let rep = Rep::from_images(4, vec![id.clone(); 4], id).unwrap();
        assert!(rep.verify_relations(DEFAULT_TOL).all_passed());
    }

    #[test]
    fn braid_violation_shows_up_in_report() {
        let rep = n2_params(2, 1, 5).build_rep_unchecked().unwrap();
        let report = rep.verify_relations(DEFAULT_TOL);
        assert!(!report.all_passed());
        assert!(report
            .failures()
            .any(|c| matches!(c.relation, RelationId::B1 { .. })));
        // N1 and N2 still hold for this tuple
        assert!(report
            .checks
            .iter()
            .filter(|c| matches!(c.relation, RelationId::N1 { .. } | RelationId::N2))
            .all(|c| c.passed));
    }

    #[test]
    fn word_evaluation() {
        let rep = n2_params(2, 1, 3)
            .validate(DEFAULT_TOL)
            .unwrap()
            .build_rep();
        let id = Matrix::identity(2, Mode::Exact);
        assert_eq!(rep.apply_word(&Word::empty()).unwrap(), id);
        // τ^{2n} = 1
        let tau_power = rep.apply_word(&Word(vec![(Gen::Tau, 4)])).unwrap();
        assert_eq!(tau_power, id);
        // τσ₁τ⁻¹σ₂⁻¹ = 1
        let conjugation = rep
            .apply_word(&Word(vec![
                (Gen::Tau, 1),
                (Gen::Sigma(1), 1),
                (Gen::Tau, -1),
                (Gen::Sigma(2), -1),
            ]))
            .unwrap();
        assert_eq!(conjugation, id);
        // out-of-range generator index
        assert!(rep.apply_word(&Word(vec![(Gen::Sigma(3), 1)])).is_err());
    }

    #[test]
    fn sigma_determinants_match() {
        let vp = n2_params(2, 1, 3).validate(DEFAULT_TOL).unwrap();
        let rep = vp.build_rep();
        let expected = &(&vp.params().a * &vp.params().d) - &vp.params().c;
        for s in rep.sigma_images() {
            assert_eq!(s.det().unwrap(), expected);
        }
        assert!(!expected.is_zero());
    }

    #[test]
    fn conjugation_reproduces_sigma_chain() {
        // ρ(σᵢ₊₁) = ρ(τ)ρ(σᵢ)ρ(τ)⁻¹ for every i, including the wrap
        let rep = n4_quarter_params(2, 3)
            .validate(DEFAULT_TOL)
            .unwrap()
            .build_rep();
        let tau_inv = rep.tau().inverse().unwrap();
        for i in 1..=4 {
            let lhs = rep.tau().mul(rep.sigma(i)).unwrap().mul(&tau_inv).unwrap();
            assert_eq!(&lhs, rep.sigma(i + 1));
        }
    }

    #[test]
    fn presentation_shape() {
        let p = NecklacePresentation::new(3);
        // B2 is vacuous below n=4
        assert!(p
            .relations()
            .iter()
            .all(|(id, _, _)| !matches!(id, RelationId::B2 { .. })));
        let p4 = NecklacePresentation::new(4);
        let b2: Vec<_> = p4
            .relations()
            .iter()
            .filter(|(id, _, _)| matches!(id, RelationId::B2 { .. }))
            .collect();
        assert_eq!(b2.len(), 2);
    }

    #[test]
    fn params_round_trip_json() {
        let p = n4_quarter_params(1, 2);
        let json = serde_json::to_string(&p).unwrap();
        let back: RepParams = serde_json::from_str(&json).unwrap();
        assert_eq!(back.n, 4);
        assert_eq!(back.phase_exp, 2);
        assert!(back.validate(DEFAULT_TOL).is_ok());
    }

    #[test]
    fn twists_are_nontrivial_roots_of_their_order() {
        // T^n = 1 with T ≠ 1 for every admissible (n, T) pairing
        let one = Scalar::one(Mode::Exact);
        for (twist, n) in [
            (Twist::MinusOne, 2),
            (Twist::ThirdPlus, 3),
            (Twist::ThirdMinus, 3),
            (Twist::MinusOne, 4),
            (Twist::QuarterPlus, 4),
            (Twist::QuarterMinus, 4),
        ] {
            let t = twist.scalar(Mode::Exact);
            assert!(!t.eq_tol(&one, 0.0));
            assert!(t.pow(n).unwrap().eq_tol(&one, 0.0));
        }
    }
}
