//! Dimension-4 tensor products and irreducibility analysis.
//!
//! Two independent oracles decide irreducibility for any representation:
//! the commutant dimension (Schur: irreducible ⇔ the only matrices
//! commuting with every generator image are the scalars) and the
//! Burnside span (irreducible ⇔ words in the generator images span the
//! full matrix algebra). On top of those sit the closed-form criteria
//! for the tensor-product families, with explicit invariant-subspace
//! witnesses wherever a representation is reducible.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::group::{Rep, Row, Sign, Twist, ValidatedParams};
use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{Mode, Scalar};

/// Residual bound for verified invariant-subspace witnesses.
pub const WITNESS_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("tensor factors must share n: got {0} and {1}")]
    MismatchedN(usize, usize),
    #[error("tensor factors must share arithmetic mode")]
    MismatchedMode,
    #[error(
        "oracle inconsistency: commutant dim {commutant} vs Burnside dim {burnside} in dimension {dim}"
    )]
    OracleInconsistent {
        commutant: usize,
        burnside: usize,
        dim: usize,
    },
    #[error("closed-form/oracle disagreement: {dump}")]
    ClosedFormDisagreement { dump: String },
    #[error("witness extraction failed: {0}")]
    WitnessExtraction(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A pair of validated dimension-2 parameter tuples over the same group.
#[derive(Debug, Clone)]
pub struct TensorParams {
    p1: ValidatedParams,
    p2: ValidatedParams,
}

impl TensorParams {
    pub fn new(p1: ValidatedParams, p2: ValidatedParams) -> Result<Self, AnalysisError> {
        if p1.n() != p2.n() {
            return Err(AnalysisError::MismatchedN(p1.n(), p2.n()));
        }
        if p1.mode() != p2.mode() {
            return Err(AnalysisError::MismatchedMode);
        }
        Ok(Self { p1, p2 })
    }

    pub fn factors(&self) -> (&ValidatedParams, &ValidatedParams) {
        (&self.p1, &self.p2)
    }

    pub fn n(&self) -> usize {
        self.p1.n()
    }

    pub fn mode(&self) -> Mode {
        self.p1.mode()
    }

    /// The generator-wise Kronecker product of the two dimension-2
    /// representations.
    pub fn build_rep(&self) -> Rep {
        let r1 = self.p1.build_rep();
        let r2 = self.p2.build_rep();
        tensor_rep(&r1, &r2).expect("validated factors share n and mode")
    }

    /// Whether the genericity hypotheses behind the closed-form criteria
    /// hold: a₁a₂d₁d₂ ≠ 0 for n = 2 and 4, d₁d₂ ≠ 0 for n = 3.
    fn generic(&self, tol: f64) -> bool {
        let (q1, q2) = (self.p1.params(), self.p2.params());
        let d_ok = !q1.d.is_zero_tol(tol) && !q2.d.is_zero_tol(tol);
        match self.n() {
            3 => d_ok,
            _ => d_ok && !q1.a.is_zero_tol(tol) && !q2.a.is_zero_tol(tol),
        }
    }
}

/// Kronecker product of two representations of the same group.
pub fn tensor_rep(r1: &Rep, r2: &Rep) -> Result<Rep, AnalysisError> {
    if r1.n() != r2.n() {
        return Err(AnalysisError::MismatchedN(r1.n(), r2.n()));
    }
    let sigma_images = r1
        .sigma_images()
        .iter()
        .zip(r2.sigma_images())
        .map(|(a, b)| a.kron(b))
        .collect::<Result<Vec<_>, _>>()?;
    let tau_image = r1.tau().kron(r2.tau())?;
    Ok(Rep::from_images(r1.n(), sigma_images, tau_image)?)
}

/// Stacks the commutation constraints ρ(g)X = Xρ(g) over all generators
/// into one (n+1)·dim² × dim² system on vec(X).
fn commutant_system(rep: &Rep) -> Matrix {
    let d = rep.dim();
    let mode = rep.mode();
    let generators: Vec<&Matrix> = rep.generator_images().collect();
    let mut sys = Matrix::zeros(generators.len() * d * d, d * d, mode);
    for (g_idx, a) in generators.iter().enumerate() {
        for i in 0..d {
            for j in 0..d {
                let row = g_idx * d * d + i * d + j;
                // coefficient of X_{kl} in (AX − XA)_{ij}
                for k in 0..d {
                    let v = sys.get(row, k * d + j) + a.get(i, k);
                    *sys.get_mut(row, k * d + j) = v;
                }
                for l in 0..d {
                    let v = sys.get(row, i * d + l) - a.get(l, j);
                    *sys.get_mut(row, i * d + l) = v;
                }
            }
        }
    }
    sys
}

/// Basis of the commutant algebra {X : Xρ(g) = ρ(g)X for all generators}.
///
/// Approx mode solves the stacked system in one SVD. Exact mode
/// computes the same kernel by intersecting the per-generator kernels,
/// τ first: its diagonal constraint collapses most of the dim² unknowns
/// immediately and keeps the elimination small.
pub fn commutant_basis(rep: &Rep, tol: f64) -> Result<Vec<Matrix>, LinalgError> {
    let d = rep.dim();
    match rep.mode() {
        Mode::Approx => {
            let kernel = commutant_system(rep).kernel(tol)?;
            kernel.into_iter().map(|v| Matrix::new(d, d, v)).collect()
        }
        Mode::Exact => {
            let mut basis: Vec<Matrix> = (0..d * d)
                .map(|k| {
                    let mut e = Matrix::zeros(d, d, Mode::Exact);
                    *e.get_mut(k / d, k % d) = Scalar::one(Mode::Exact);
                    e
                })
                .collect();
            let generators: Vec<&Matrix> = std::iter::once(rep.tau())
                .chain(rep.sigma_images())
                .collect();
            for a in generators {
                if basis.is_empty() {
                    break;
                }
                // columns: vec(A·K_j − K_j·A) for the current basis K
                let mut constrained = Matrix::zeros(d * d, basis.len(), Mode::Exact);
                for (j, k) in basis.iter().enumerate() {
                    let bracket = a.mul(k)?.sub(&k.mul(a)?)?;
                    for (i, entry) in bracket.entries().iter().enumerate() {
                        *constrained.get_mut(i, j) = entry.clone();
                    }
                }
                let coefficient_kernel = constrained.kernel(tol)?;
                basis = coefficient_kernel
                    .into_iter()
                    .map(|coefs| {
                        let mut acc = Matrix::zeros(d, d, Mode::Exact);
                        for (coef, k) in coefs.iter().zip(&basis) {
                            if !coef.is_zero() {
                                acc = acc.add(&k.scale(coef)?)?;
                            }
                        }
                        Ok(acc)
                    })
                    .collect::<Result<Vec<_>, LinalgError>>()?;
            }
            Ok(basis)
        }
    }
}

/// Dimension of the commutant; 1 exactly when the representation is
/// irreducible.
pub fn commutant_dim(rep: &Rep, tol: f64) -> Result<usize, LinalgError> {
    Ok(commutant_basis(rep, tol)?.len())
}

/// Incremental span tracker for vectorized matrices, exact or
/// numerically toleranced.
enum SpanBuilder {
    Exact(Vec<(usize, Vec<Scalar>)>),
    Approx {
        basis: Vec<Vec<Complex64>>,
        tol: f64,
    },
}

impl SpanBuilder {
    fn new(mode: Mode, tol: f64) -> Self {
        match mode {
            Mode::Exact => SpanBuilder::Exact(Vec::new()),
            Mode::Approx => SpanBuilder::Approx {
                basis: Vec::new(),
                tol,
            },
        }
    }

    fn len(&self) -> usize {
        match self {
            SpanBuilder::Exact(rows) => rows.len(),
            SpanBuilder::Approx { basis, .. } => basis.len(),
        }
    }

    /// Inserts the vector if it enlarges the span, returning the stored
    /// reduced representative (a sparser element with the same span
    /// contribution) when it does.
    fn try_insert(&mut self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        match self {
            SpanBuilder::Exact(rows) => {
                let mut v: Vec<Scalar> = v.to_vec();
                for (pivot, row) in rows.iter() {
                    let f = v[*pivot].clone();
                    if !f.is_zero() {
                        for (x, r) in v.iter_mut().zip(row) {
                            if !r.is_zero() {
                                *x = &*x - &(&f * r);
                            }
                        }
                    }
                }
                let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
                    return Ok(None);
                };
                let inv = v[pivot].inv()?;
                for x in v.iter_mut() {
                    *x = &*x * &inv;
                }
                rows.push((pivot, v.clone()));
                Ok(Some(v))
            }
            SpanBuilder::Approx { basis, tol } => {
                let mut v: Vec<Complex64> = v.iter().map(Scalar::embed).collect();
                let norm_orig = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm_orig == 0.0 {
                    return Ok(None);
                }
                // two rounds of modified Gram–Schmidt
                for _ in 0..2 {
                    for q in basis.iter() {
                        let dot: Complex64 = q.iter().zip(&v).map(|(qi, vi)| qi.conj() * vi).sum();
                        for (vi, qi) in v.iter_mut().zip(q) {
                            *vi -= dot * qi;
                        }
                    }
                }
                let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm <= *tol * norm_orig {
                    return Ok(None);
                }
                for vi in v.iter_mut() {
                    *vi /= norm;
                }
                basis.push(v.clone());
                Ok(Some(v.into_iter().map(Scalar::Approx).collect()))
            }
        }
    }
}

/// Dimension of the algebra spanned by all words in the generator
/// images, grown breadth-first until the rank stagnates. Equals dim²
/// exactly when the representation is irreducible.
pub fn burnside_dim(rep: &Rep, tol: f64) -> Result<usize, LinalgError> {
    let d = rep.dim();
    let mut span = SpanBuilder::new(rep.mode(), tol);
    let identity = Matrix::identity(d, rep.mode());
    span.try_insert(identity.entries())?;
    // frontier carries reduced span representatives: right-multiplication
    // is linear, so closing the span over them closes it over all words
    let mut frontier = vec![identity];
    while let Some(element) = frontier.pop() {
        if span.len() == d * d {
            break;
        }
        for image in rep.generator_images() {
            let next = element.mul(image)?;
            if let Some(reduced) = span.try_insert(next.entries())? {
                frontier.push(Matrix::new(d, d, reduced)?);
            }
        }
    }
    Ok(span.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Irreducible,
    Reducible,
}

/// Verdict of a closed-form criterion together with the rule that
/// produced it.
#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormVerdict {
    pub verdict: Verdict,
    pub rule: String,
}

#[derive(Debug, Error)]
#[error("outside closed-form hypothesis: {0}")]
pub struct ClosedFormUnavailable(pub String);

/// The closed-form irreducibility criteria for the tensor-product
/// families, case-split on (T₁, T₂):
///
/// - n = 2 or 4 with T₁ = T₂ = −1: irreducible ⇔ a₁a₂ ≠ d₁d₂ and
///   a₁d₂ ≠ a₂d₁;
/// - n = 4 with T₁ = T₂ = ±i or T₁ = −T₂ = ±i: always reducible;
/// - n = 4 with {T₁, T₂} = {−1, ±i}: always irreducible;
/// - n = 3 with T₂ = conj(T₁): irreducible ⇔ ω₁ω₂ ≠ 1 or
///   ω₁d₁²c₂ ≠ ω₂d₂²c₁;
/// - n = 3 with T₁ = T₂: irreducible ⇔ ω₁ ≠ ω₂ or ω₁d₁²c₂ ≠ ω₂d₂²c₁.
///
/// Outside the genericity hypotheses the criterion abstains and callers
/// fall back to the oracles.
pub fn closed_form_irreducible(
    tp: &TensorParams,
    tol: f64,
) -> Result<ClosedFormVerdict, ClosedFormUnavailable> {
    let (v1, v2) = tp.factors();
    let (q1, q2) = (v1.params(), v2.params());
    let verdict = |cond: bool| {
        if cond {
            Verdict::Irreducible
        } else {
            Verdict::Reducible
        }
    };
    let product_criterion = || {
        let lhs_ne = !(&q1.a * &q2.a).eq_tol(&(&q1.d * &q2.d), tol);
        let cross_ne = !(&q1.a * &q2.d).eq_tol(&(&q2.a * &q1.d), tol);
        verdict(lhs_ne && cross_ne)
    };
    match (v1.row(), v2.row()) {
        (Row::N2, Row::N2) => {
            if !tp.generic(tol) {
                return Err(ClosedFormUnavailable("a1·a2·d1·d2 = 0".into()));
            }
            Ok(ClosedFormVerdict {
                verdict: product_criterion(),
                rule: "n2: T1=T2=-1, irreducible iff a1a2≠d1d2 and a1d2≠a2d1".into(),
            })
        }
        (Row::N3, Row::N3) => {
            if !tp.generic(tol) {
                return Err(ClosedFormUnavailable("d1·d2 = 0".into()));
            }
            let w1 = v1.omega_sign().expect("validated n=3 has omega");
            let w2 = v2.omega_sign().expect("validated n=3 has omega");
            let mode = tp.mode();
            let (o1, o2) = (w1.omega(mode), w2.omega(mode));
            // ω₁d₁²c₂ vs ω₂d₂²c₁
            let lhs = &(&o1 * &(&q1.d * &q1.d)) * &q2.c;
            let rhs = &(&o2 * &(&q2.d * &q2.d)) * &q1.c;
            let scale_ne = !lhs.eq_tol(&rhs, tol);
            if v1.twist() == v2.twist() {
                Ok(ClosedFormVerdict {
                    verdict: verdict(w1 != w2 || scale_ne),
                    rule: "n3: T1=T2, irreducible iff ω1≠ω2 or ω1d1²c2≠ω2d2²c1".into(),
                })
            } else {
                // the two twists are conjugate cube roots, so ω₁ω₂ ≠ 1
                // exactly when the signs agree
                let product_ne = w1 == w2;
                Ok(ClosedFormVerdict {
                    verdict: verdict(product_ne || scale_ne),
                    rule: "n3: T1=conj(T2), irreducible iff ω1ω2≠1 or ω1d1²c2≠ω2d2²c1".into(),
                })
            }
        }
        (Row::N4MinusOne, Row::N4MinusOne) => {
            if !tp.generic(tol) {
                return Err(ClosedFormUnavailable("a1·a2·d1·d2 = 0".into()));
            }
            Ok(ClosedFormVerdict {
                verdict: product_criterion(),
                rule: "n4: T1=T2=-1, irreducible iff a1a2≠d1d2 and a1d2≠a2d1".into(),
            })
        }
        (Row::N4Quarter, Row::N4Quarter) => {
            let rule = if v1.twist() == v2.twist() {
                "n4: T1=T2=±i, always reducible"
            } else {
                "n4: T1=-T2=±i, always reducible"
            };
            Ok(ClosedFormVerdict {
                verdict: Verdict::Reducible,
                rule: rule.into(),
            })
        }
        (Row::N4MinusOne, Row::N4Quarter) | (Row::N4Quarter, Row::N4MinusOne) => {
            if !tp.generic(tol) {
                return Err(ClosedFormUnavailable("a1·a2·d1·d2 = 0".into()));
            }
            Ok(ClosedFormVerdict {
                verdict: Verdict::Irreducible,
                rule: "n4: {T1,T2}={-1,±i}, always irreducible".into(),
            })
        }
        (r1, r2) => Err(ClosedFormUnavailable(format!(
            "no criterion covers the row pair {r1:?}, {r2:?}"
        ))),
    }
}

/// An explicit invariant subspace certifying reducibility.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub basis: Vec<Vec<Scalar>>,
    pub residual: f64,
}

/// Checks ρ(g)W ⊆ W for every generator; returns the largest relative
/// residual (0 in exact mode).
pub fn verify_invariant_subspace(
    rep: &Rep,
    basis: &[Vec<Scalar>],
    tol: f64,
) -> Result<f64, AnalysisError> {
    if basis.is_empty() || basis.len() >= rep.dim() {
        return Err(AnalysisError::WitnessExtraction(format!(
            "witness must span a proper nonzero subspace, got dimension {}",
            basis.len()
        )));
    }
    match rep.mode() {
        Mode::Exact => {
            // rank([W | gW]) must equal rank(W) for every generator
            let d = rep.dim();
            let cols_w: Vec<Vec<Scalar>> = basis.to_vec();
            let rank_w = column_rank(&cols_w, d)?;
            if rank_w != basis.len() {
                return Err(AnalysisError::WitnessExtraction(
                    "witness basis is linearly dependent".into(),
                ));
            }
            for image in rep.generator_images() {
                let mut cols = cols_w.clone();
                for v in basis {
                    cols.push(image.apply(v)?);
                }
                if column_rank(&cols, d)? != rank_w {
                    return Err(AnalysisError::WitnessExtraction(
                        "subspace is not invariant".into(),
                    ));
                }
            }
            Ok(0.0)
        }
        Mode::Approx => {
            // orthonormalize, then measure projection residuals
            let mut q: Vec<Vec<Complex64>> = Vec::new();
            for v in basis {
                let mut v: Vec<Complex64> = v.iter().map(Scalar::embed).collect();
                for _ in 0..2 {
                    for b in &q {
                        let dot: Complex64 = b.iter().zip(&v).map(|(bi, vi)| bi.conj() * vi).sum();
                        for (vi, bi) in v.iter_mut().zip(b) {
                            *vi -= dot * bi;
                        }
                    }
                }
                let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm < 1e-12 {
                    return Err(AnalysisError::WitnessExtraction(
                        "witness basis is numerically dependent".into(),
                    ));
                }
                for vi in v.iter_mut() {
                    *vi /= norm;
                }
                q.push(v);
            }
            let mut worst = 0.0f64;
            for image in rep.generator_images() {
                for b in &q {
                    let gb =
                        image.apply(&b.iter().copied().map(Scalar::Approx).collect::<Vec<_>>())?;
                    let gb: Vec<Complex64> = gb.iter().map(Scalar::embed).collect();
                    let mut rem = gb.clone();
                    for qv in &q {
                        let dot: Complex64 =
                            qv.iter().zip(&rem).map(|(qi, vi)| qi.conj() * vi).sum();
                        for (ri, qi) in rem.iter_mut().zip(qv) {
                            *ri -= dot * qi;
                        }
                    }
                    let res = rem.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                    let scale = gb.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1.0);
                    worst = worst.max(res / scale);
                }
            }
            if worst > tol {
                return Err(AnalysisError::WitnessExtraction(format!(
                    "subspace invariance residual {worst:.3e} exceeds {tol:.1e}"
                )));
            }
            Ok(worst)
        }
    }
}

fn column_rank(cols: &[Vec<Scalar>], dim: usize) -> Result<usize, LinalgError> {
    let mode = cols[0][0].mode();
    let mut m = Matrix::zeros(dim, cols.len(), mode);
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            *m.get_mut(i, j) = v.clone();
        }
    }
    m.rank(WITNESS_TOL)
}

/// Builds the unit vector basis e_k (0-based) scaled variants used by the
/// closed-form witnesses.
fn witness_vector(dim: usize, terms: &[(usize, Scalar)], mode: Mode) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(mode); dim];
    for (idx, s) in terms {
        v[*idx] = s.clone();
    }
    v
}

/// Produces a verified invariant-subspace witness, or `None` exactly
/// when the commutant is trivial.
///
/// For the two quarter-twist tensor cases the closed-form witness is
/// emitted exactly: v = d₂e₂ − d₁e₃ when T₁ = T₂ = ±i (every σ image
/// scales it by 2d₁d₂) and v = e₁ + d₁d₂e₄ when T₁ = −T₂ = ±i. All
/// other reducible cases extract an eigenspace of a non-scalar
/// commutant element numerically and verify invariance afterwards.
pub fn reducibility_witness(
    rep: &Rep,
    tensor: Option<&TensorParams>,
    tol: f64,
) -> Result<Option<Witness>, AnalysisError> {
    if let Some(tp) = tensor {
        let (v1, v2) = tp.factors();
        if v1.row() == Row::N4Quarter && v2.row() == Row::N4Quarter {
            let (q1, q2) = (v1.params(), v2.params());
            let mode = tp.mode();
            let terms = if v1.twist() == v2.twist() {
                vec![(1, q2.d.clone()), (2, -&q1.d)]
            } else {
                vec![(0, Scalar::one(mode)), (3, &q1.d * &q2.d)]
            };
            let v = witness_vector(4, &terms, mode);
            let residual = verify_invariant_subspace(rep, std::slice::from_ref(&v), WITNESS_TOL)?;
            return Ok(Some(Witness {
                basis: vec![v],
                residual,
            }));
        }
    }
    let basis = commutant_basis(rep, tol)?;
    if basis.len() <= 1 {
        return Ok(None);
    }
    extract_witness_from_commutant(rep, &basis)
}

fn extract_witness_from_commutant(
    rep: &Rep,
    commutant: &[Matrix],
) -> Result<Option<Witness>, AnalysisError> {
    let d = rep.dim();
    let rep_approx = match rep.mode() {
        Mode::Exact => rep.to_approx(),
        Mode::Approx => rep.clone(),
    };
    let mut attempts = Vec::new();
    for x in commutant {
        // remove the scalar component so a genuine eigenspace split remains
        let x = x.to_approx();
        let trace = x.trace();
        let shift = Matrix::identity(d, Mode::Approx)
            .scale(&(&trace * &Scalar::complex(1.0 / d as f64, 0.0)))
            .expect("same mode");
        let x0 = x.sub(&shift)?;
        let norm = x0.to_cmat().max_abs();
        if norm < 1e-9 {
            continue;
        }
        let x0c = x0.to_cmat();
        let clusters = crate::linalg::numeric::eigenvalue_clusters(&x0c)?;
        for (lambda, _mult) in clusters {
            // root-finding accuracy degrades at multiple eigenvalues, so
            // try the raw eigenvalue and a Rayleigh-refined one; every
            // candidate subspace is gated by invariance verification
            let mut lambdas = vec![lambda];
            if let Some(refined) = rayleigh_refine(&x0c, lambda) {
                lambdas.push(refined);
            }
            for lam in lambdas {
                let mut shifted = x0.clone();
                for i in 0..d {
                    *shifted.get_mut(i, i) = shifted.get(i, i) - &Scalar::Approx(lam);
                }
                let mut candidates = vec![shifted.kernel(1e-7)?];
                if let Ok((_, v)) = crate::linalg::numeric::jacobi_svd(&shifted.to_cmat()) {
                    let trailing: Vec<Scalar> =
                        v.col(d - 1).into_iter().map(Scalar::Approx).collect();
                    candidates.push(vec![trailing]);
                }
                for space in candidates {
                    if space.is_empty() || space.len() >= d {
                        continue;
                    }
                    match verify_invariant_subspace(&rep_approx, &space, WITNESS_TOL) {
                        Ok(residual) => {
                            return Ok(Some(Witness {
                                basis: space,
                                residual,
                            }))
                        }
                        Err(e) => attempts.push(e.to_string()),
                    }
                }
            }
        }
    }
    Err(AnalysisError::WitnessExtraction(format!(
        "no eigenspace of any commutant element verified: {attempts:?}"
    )))
}

/// One Rayleigh-quotient refinement of an eigenvalue estimate, using the
/// trailing singular vector of X − λI.
fn rayleigh_refine(x: &crate::linalg::CMat, lambda: Complex64) -> Option<Complex64> {
    let d = x.rows;
    let mut shifted = x.clone();
    for i in 0..d {
        shifted[(i, i)] -= lambda;
    }
    let (_, v) = crate::linalg::numeric::jacobi_svd(&shifted).ok()?;
    let vec = v.col(d - 1);
    let mut xv = vec![Complex64::new(0.0, 0.0); d];
    for i in 0..d {
        for j in 0..d {
            xv[i] += x[(i, j)] * vec[j];
        }
    }
    let num: Complex64 = vec.iter().zip(&xv).map(|(a, b)| a.conj() * b).sum();
    let den: f64 = vec.iter().map(|a| a.norm_sqr()).sum();
    (den > 0.0).then(|| num / den)
}

/// A full irreducibility certificate; the internal consistency rules
/// (commutant dim 1 ⇔ Burnside dim = dim², closed form agrees with the
/// oracle, witness present exactly when reducible) are enforced at
/// construction.
#[derive(Debug, Clone, Serialize)]
pub struct IrreducibilityCertificate {
    pub verdict: Verdict,
    pub commutant_dim: usize,
    pub burnside_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub seed: u64,
}

/// Runs both oracles (plus the closed form when tensor parameters are
/// supplied), cross-checks them, and extracts a witness when reducible.
/// Any disagreement is a hard error: it would falsify either the theory
/// or this implementation.
pub fn certify(
    rep: &Rep,
    tensor: Option<&TensorParams>,
    tol: f64,
    seed: u64,
) -> Result<IrreducibilityCertificate, AnalysisError> {
    let dim = rep.dim();
    let commutant = commutant_dim(rep, tol)?;
    let burnside = burnside_dim(rep, tol)?;
    if (commutant == 1) != (burnside == dim * dim) {
        return Err(AnalysisError::OracleInconsistent {
            commutant,
            burnside,
            dim,
        });
    }
    let verdict = if commutant == 1 {
        Verdict::Irreducible
    } else {
        Verdict::Reducible
    };
    let rule = match tensor.map(|tp| closed_form_irreducible(tp, tol)) {
        Some(Ok(cf)) => {
            if cf.verdict != verdict {
                return Err(AnalysisError::ClosedFormDisagreement {
                    dump: format!(
                        "closed form says {:?} by rule {:?}, oracle says {verdict:?} \
                         (commutant {commutant}, burnside {burnside}); parameters: {:?}",
                        cf.verdict,
                        cf.rule,
                        tensor.map(TensorParams::factors),
                    ),
                });
            }
            Some(cf.rule)
        }
        _ => None,
    };
    let witness = match verdict {
        Verdict::Reducible => {
            let w = reducibility_witness(rep, tensor, tol)?;
            if w.is_none() {
                return Err(AnalysisError::WitnessExtraction(
                    "commutant is nontrivial but no witness was produced".into(),
                ));
            }
            w
        }
        Verdict::Irreducible => None,
    };
    Ok(IrreducibilityCertificate {
        verdict,
        commutant_dim: commutant,
        burnside_dim: burnside,
        rule,
        witness,
        seed,
    })
}

/// Convenience accessor mirroring the certificate's verdict.
pub fn is_irreducible(rep: &Rep, tol: f64) -> Result<bool, LinalgError> {
    Ok(commutant_dim(rep, tol)? == 1)
}

/// The ω sign pair of an n = 3 tensor, useful when enumerating case
/// families.
pub fn omega_signs(tp: &TensorParams) -> Option<(Sign, Sign)> {
    let (v1, v2) = tp.factors();
    Some((v1.omega_sign()?, v2.omega_sign()?))
}

/// The twist pair of a tensor.
pub fn twists(tp: &TensorParams) -> (Twist, Twist) {
    (tp.p1.twist(), tp.p2.twist())
}
