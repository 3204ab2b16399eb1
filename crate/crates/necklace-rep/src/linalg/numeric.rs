//! Double-precision kernels behind approximate-mode linear algebra:
//! a one-sided Jacobi SVD for rank/null-space questions and a small
//! dense eigensolver (characteristic polynomial + Durand–Kerner roots,
//! eigenvectors from the SVD null space of the shifted matrix).

use num_complex::Complex64;

use super::LinalgError;

/// Row-major complex matrix, internal to the numeric layer.
#[derive(Clone)]
pub struct CMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn matmul(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = CMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// One-sided Jacobi SVD: returns singular values (descending) and the
/// matching right singular vectors as columns of a unitary `cols × cols`
/// matrix. Only Σ and V are produced; that is all rank and null-space
/// extraction need, since A·vⱼ has norm σⱼ.
pub fn jacobi_svd(a: &CMat) -> Result<(Vec<f64>, CMat), LinalgError> {
    let n = a.cols;
    let mut b = a.clone();
    let mut v = CMat::identity(n);
    let eps = 1e-30;
    let mut converged = false;
    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut alpha = 0.0f64;
                let mut beta = 0.0f64;
                let mut gamma = Complex64::new(0.0, 0.0);
                for i in 0..b.rows {
                    let bp = b[(i, p)];
                    let bq = b[(i, q)];
                    alpha += bp.norm_sqr();
                    beta += bq.norm_sqr();
                    gamma += bp.conj() * bq;
                }
                let g = gamma.norm();
                if g <= eps || g * g <= 1e-32 * alpha * beta {
                    continue;
                }
                off = off.max(g / (alpha * beta).sqrt().max(1e-300));
                let phase = gamma / g;
                let tau = (beta - alpha) / (2.0 * g);
                // stable root of g·t² − (β−α)·t − g = 0
                let t = -tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                // (b_p, b_q) ← (c·b_p + s·φ̄·b_q, −s·φ·b_p + c·b_q)
                for i in 0..b.rows {
                    let bp = b[(i, p)];
                    let bq = b[(i, q)];
                    b[(i, p)] = c * bp + s * phase.conj() * bq;
                    b[(i, q)] = -s * phase * bp + c * bq;
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = c * vp + s * phase.conj() * vq;
                    v[(i, q)] = -s * phase * vp + c * vq;
                }
            }
        }
        if off < 1e-14 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(LinalgError::ConvergenceFailure("jacobi svd"));
    }
    let mut order: Vec<usize> = (0..n).collect();
    let sigmas: Vec<f64> = (0..n)
        .map(|j| {
            (0..b.rows)
                .map(|i| b[(i, j)].norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    order.sort_by(|&x, &y| sigmas[y].partial_cmp(&sigmas[x]).unwrap());
    let mut v_sorted = CMat::zeros(n, n);
    let mut s_sorted = Vec::with_capacity(n);
    for (new_j, &old_j) in order.iter().enumerate() {
        s_sorted.push(sigmas[old_j]);
        for i in 0..n {
            v_sorted[(i, new_j)] = v[(i, old_j)];
        }
    }
    Ok((s_sorted, v_sorted))
}

/// Null-space basis by trailing singular vectors: columns v with
/// σ ≤ tol·max(σ).
pub fn kernel(a: &CMat, tol: f64) -> Result<Vec<Vec<Complex64>>, LinalgError> {
    let (sigmas, v) = jacobi_svd(a)?;
    let smax = sigmas.first().copied().unwrap_or(0.0);
    let threshold = tol * smax;
    Ok((0..a.cols)
        .filter(|&j| sigmas[j] <= threshold)
        .map(|j| v.col(j))
        .collect())
}

pub fn rank(a: &CMat, tol: f64) -> Result<usize, LinalgError> {
    let (sigmas, _) = jacobi_svd(a)?;
    let smax = sigmas.first().copied().unwrap_or(0.0);
    Ok(sigmas.iter().filter(|&&s| s > tol * smax).count())
}

/// Characteristic polynomial coefficients by the Faddeev–LeVerrier
/// recurrence; returned monic, constant term first.
fn char_poly(a: &CMat) -> Vec<Complex64> {
    let n = a.rows;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut m = CMat::identity(n);
    for k in 1..=n {
        m = a.matmul(&m);
        let trace: Complex64 = (0..n).map(|i| m[(i, i)]).sum();
        let c = -trace / k as f64;
        coeffs[n - k] = c;
        for i in 0..n {
            m[(i, i)] += c;
        }
    }
    coeffs
}

/// Durand–Kerner simultaneous root iteration on a monic polynomial.
fn poly_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, LinalgError> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(vec![]);
    }
    let radius = 1.0 + coeffs[..n].iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| radius * seed.powu(k as u32 + 1)).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    // convergence is judged by residual |p(z)|, not step size: the
    // iteration slows to linear at multiple roots while the residual
    // there is already far below the threshold
    let coeff_scale = coeffs.iter().map(|c| c.norm()).fold(1.0f64, f64::max);
    for _ in 0..500 {
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() < 1e-290 {
                // perturb a collided pair and keep iterating
                roots[i] += Complex64::new(1e-8 * radius, 1e-8 * radius);
                continue;
            }
            let delta = eval(roots[i]) / denom;
            roots[i] -= delta;
        }
        let max_residual = roots.iter().map(|&z| eval(z).norm()).fold(0.0f64, f64::max);
        if max_residual <= 1e-12 * coeff_scale {
            return Ok(roots);
        }
    }
    Err(LinalgError::ConvergenceFailure("polynomial roots"))
}

/// Eigenvalues of a small dense complex matrix.
pub fn eigenvalues(a: &CMat) -> Result<Vec<Complex64>, LinalgError> {
    poly_roots(&char_poly(a))
}

/// Groups numerically coincident eigenvalues and returns one
/// representative per cluster together with its multiplicity. Each
/// representative is polished by multiplicity-aware Newton iteration,
/// which stays quadratically convergent at multiple roots.
pub fn eigenvalue_clusters(a: &CMat) -> Result<Vec<(Complex64, usize)>, LinalgError> {
    let coeffs = char_poly(a);
    let mut roots = poly_roots(&coeffs)?;
    let scale = a.max_abs().max(1.0);
    // root-finder errors at an m-fold root scale like residual^(1/m), so
    // the merge radius must be coarse; Newton polishing repairs the loss
    let merge_tol = 1e-4 * scale;
    roots.sort_by(|x, y| {
        (x.re, x.im)
            .partial_cmp(&(y.re, y.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for r in roots {
        match clusters.last_mut() {
            Some((rep, count)) if (*rep - r).norm() <= merge_tol => {
                *rep = (*rep * *count as f64 + r) / (*count as f64 + 1.0);
                *count += 1;
            }
            _ => clusters.push((r, 1)),
        }
    }
    for (rep, mult) in clusters.iter_mut() {
        for _ in 0..60 {
            let (p, dp) = eval_with_derivative(&coeffs, *rep);
            if dp.norm() < 1e-280 {
                break;
            }
            let step = *mult as f64 * p / dp;
            *rep -= step;
            if step.norm() <= 1e-15 * scale {
                break;
            }
        }
    }
    Ok(clusters)
}

fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Eigenpairs of a small dense complex matrix: for every eigenvalue
/// cluster, the eigenspace is the SVD null space of A − λI. Residuals
/// ‖Av − λv‖ are checked against `residual_tol · max|A|`.
pub fn eigenpairs(
    a: &CMat,
    residual_tol: f64,
) -> Result<Vec<(Complex64, Vec<Complex64>)>, LinalgError> {
    let n = a.rows;
    let scale = a.max_abs().max(1.0);
    let mut out = Vec::new();
    for (lambda, _mult) in eigenvalue_clusters(a)? {
        let mut shifted = a.clone();
        for i in 0..n {
            shifted[(i, i)] -= lambda;
        }
        let (sigmas, v) = jacobi_svd(&shifted)?;
        let smax = sigmas.first().copied().unwrap_or(0.0);
        let mut vectors: Vec<Vec<Complex64>> = (0..n)
            .filter(|&j| sigmas[j] <= 1e-7 * smax.max(scale))
            .map(|j| v.col(j))
            .collect();
        if vectors.is_empty() {
            // fall back to the least-singular direction
            vectors.push(v.col(n - 1));
        }
        for vec in vectors {
            let mut residual = 0.0f64;
            for i in 0..n {
                let mut av = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    av += a[(i, j)] * vec[j];
                }
                residual += (av - lambda * vec[i]).norm_sqr();
            }
            if residual.sqrt() > residual_tol * scale {
                return Err(LinalgError::ConvergenceFailure("eigenpair residual"));
            }
            out.push((lambda, vec));
        }
    }
    Ok(out)
}
