//! Small dense matrices over [`Scalar`]: products, Kronecker products,
//! adjoints, inverses, kernels and (approximate mode only) eigenpairs.
//! Everything here is sized for the representation theory at hand —
//! 2×2 and 4×4 matrices, with 16×16 systems appearing only when 4×4
//! commutant constraints are vectorized.

pub mod numeric;

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{Mode, Scalar, ScalarError};

pub use numeric::CMat;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("mixed exact/approx matrices")]
    MixedModes,
    #[error("{0} did not converge")]
    ConvergenceFailure(&'static str),
    #[error("operation requires approx mode")]
    RequiresApprox,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Row-major matrix with variant-homogeneous entries.
#[derive(Clone, PartialEq, Serialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
    #[serde(skip)]
    mode: Mode,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols || rows == 0 || cols == 0 {
            return Err(LinalgError::ShapeMismatch(format!(
                "{rows}×{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let mode = entries[0].mode();
        if entries.iter().any(|e| e.mode() != mode) {
            return Err(LinalgError::MixedModes);
        }
        Ok(Self {
            rows,
            cols,
            entries,
            mode,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::ShapeMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize, mode: Mode) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Scalar::zero(mode); rows * cols],
            mode,
        }
    }

    pub fn identity(n: usize, mode: Mode) -> Self {
        let mut m = Self::zeros(n, n, mode);
        for i in 0..n {
            *m.get_mut(i, i) = Scalar::one(mode);
        }
        m
    }

    pub fn diagonal(diag: &[Scalar]) -> Result<Self, LinalgError> {
        if diag.is_empty() {
            return Err(LinalgError::ShapeMismatch("empty diagonal".into()));
        }
        let mode = diag[0].mode();
        let mut m = Self::zeros(diag.len(), diag.len(), mode);
        for (i, d) in diag.iter().enumerate() {
            if d.mode() != mode {
                return Err(LinalgError::MixedModes);
            }
            *m.get_mut(i, i) = d.clone();
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    fn check_same_mode(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.mode != other.mode {
            Err(LinalgError::MixedModes)
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_mode(rhs)?;
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}×{} · {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols, self.mode);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let t = a * b;
                        *out.get_mut(i, j) = out.get(i, j) + &t;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_mode(rhs)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::ShapeMismatch("add".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Matrix::new(self.rows, self.cols, entries)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_mode(rhs)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::ShapeMismatch("sub".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Matrix::new(self.rows, self.cols, entries)
    }

    pub fn scale(&self, s: &Scalar) -> Result<Matrix, LinalgError> {
        if s.mode() != self.mode {
            return Err(LinalgError::MixedModes);
        }
        let entries = self.entries.iter().map(|a| a * s).collect();
        Matrix::new(self.rows, self.cols, entries)
    }

    /// Kronecker product with the block ordering e₁ = v₁⊗w₁,
    /// e₂ = v₁⊗w₂, e₃ = v₂⊗w₁, e₄ = v₂⊗w₂: entry ((i,k),(j,l)) is
    /// A_{ij}·B_{kl}.
    pub fn kron(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_mode(rhs)?;
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols, self.mode);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            *out.get_mut(i * rhs.rows + k, j * rhs.cols + l) = a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.mode);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(j, i) = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.mode);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero(self.mode);
        for i in 0..self.rows.min(self.cols) {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::ShapeMismatch("matrix·vector".into()));
        }
        let mut out = vec![Scalar::zero(self.mode); self.rows];
        for (i, acc) in out.iter_mut().enumerate() {
            for (j, x) in v.iter().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() && !x.is_zero() {
                    *acc = &*acc + &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// Determinant by Gaussian elimination (exact division in exact
    /// mode, partial pivoting in approx mode).
    pub fn det(&self) -> Result<Scalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::ShapeMismatch("det of non-square".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one(self.mode);
        for col in 0..n {
            let pivot = match self.mode {
                Mode::Exact => (col..n).find(|&r| !m.get(r, col).is_zero()),
                Mode::Approx => (col..n)
                    .filter(|&r| !m.get(r, col).is_zero())
                    .max_by(|&x, &y| {
                        m.get(x, col)
                            .embed()
                            .norm()
                            .total_cmp(&m.get(y, col).embed().norm())
                    }),
            };
            let Some(p) = pivot else {
                return Ok(Scalar::zero(self.mode));
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pv = m.get(col, col).clone();
            det = &det * &pv;
            let pv_inv = pv.inv()?;
            for r in (col + 1)..n {
                let f = m.get(r, col) * &pv_inv;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c) - &(&f * m.get(col, c));
                    *m.get_mut(r, c) = v;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::ShapeMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(n, self.mode);
        for col in 0..n {
            let pivot = match self.mode {
                Mode::Exact => (col..n).find(|&r| !m.get(r, col).is_zero()),
                Mode::Approx => (col..n)
                    .filter(|&r| m.get(r, col).embed().norm() > 1e-300)
                    .max_by(|&x, &y| {
                        m.get(x, col)
                            .embed()
                            .norm()
                            .total_cmp(&m.get(y, col).embed().norm())
                    }),
            };
            let p = pivot.ok_or(LinalgError::Singular)?;
            if p != col {
                m.swap_rows(p, col);
                inv.swap_rows(p, col);
            }
            let pv_inv = m.get(col, col).inv().map_err(|_| LinalgError::Singular)?;
            for c in 0..n {
                *m.get_mut(col, c) = m.get(col, c) * &pv_inv;
                *inv.get_mut(col, c) = inv.get(col, c) * &pv_inv;
            }
            for r in 0..n {
                if r == col || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in 0..n {
                    let mv = m.get(r, c) - &(&f * m.get(col, c));
                    *m.get_mut(r, c) = mv;
                    let iv = inv.get(r, c) - &(&f * inv.get(col, c));
                    *inv.get_mut(r, c) = iv;
                }
            }
        }
        Ok(inv)
    }

    pub fn pow(&self, e: i64) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::ShapeMismatch("pow of non-square".into()));
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Matrix::identity(self.rows, self.mode);
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Kernel basis. Exact mode: Gaussian elimination over the field,
    /// exact basis. Approx mode: SVD with relative singular-value
    /// threshold `tol`, kernel from the trailing singular vectors.
    pub fn kernel(&self, tol: f64) -> Result<Vec<Vec<Scalar>>, LinalgError> {
        match self.mode {
            Mode::Exact => self.kernel_exact(),
            Mode::Approx => {
                let ker = numeric::kernel(&self.to_cmat(), tol)?;
                Ok(ker
                    .into_iter()
                    .map(|v| v.into_iter().map(Scalar::Approx).collect())
                    .collect())
            }
        }
    }

    pub fn rank(&self, tol: f64) -> Result<usize, LinalgError> {
        match self.mode {
            Mode::Exact => Ok(self.cols - self.kernel_exact()?.len()),
            Mode::Approx => numeric::rank(&self.to_cmat(), tol),
        }
    }

    fn kernel_exact(&self) -> Result<Vec<Vec<Scalar>>, LinalgError> {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(p) = (row..rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(p, row);
            let pv_inv = m.get(row, col).inv()?;
            for c in col..cols {
                *m.get_mut(row, c) = m.get(row, c) * &pv_inv;
            }
            for r in 0..rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in col..cols {
                    let v = m.get(r, c) - &(&f * m.get(row, c));
                    *m.get_mut(r, c) = v;
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == rows {
                break;
            }
        }
        let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![Scalar::zero(self.mode); cols];
            v[fc] = Scalar::one(self.mode);
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m.get(r, fc);
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Embeds every entry, producing the approximate twin of this matrix.
    pub fn to_approx(&self) -> Matrix {
        let entries = self.entries.iter().map(|s| s.to_approx()).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
            mode: Mode::Approx,
        }
    }

    pub fn to_cmat(&self) -> CMat {
        CMat {
            rows: self.rows,
            cols: self.cols,
            data: self.entries.iter().map(Scalar::embed).collect(),
        }
    }

    pub fn from_cmat(m: &CMat) -> Matrix {
        Matrix {
            rows: m.rows,
            cols: m.cols,
            entries: m.data.iter().copied().map(Scalar::Approx).collect(),
            mode: Mode::Approx,
        }
    }

    /// Entrywise equality, exact or within `tol` under the embedding.
    pub fn eq_tol(&self, other: &Matrix, tol: f64) -> bool {
        if self.rows != other.rows || self.cols != other.cols || self.mode != other.mode {
            return false;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.eq_tol(b, tol))
    }

    /// Largest entrywise deviation from `other` under the numeric
    /// embedding; usable across modes.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a.embed() - b.embed()).norm())
            .fold(0.0, f64::max)
    }

    /// Eigenpairs in approximate mode with residual bound
    /// ‖Av − λv‖ ≤ tol·‖A‖.
    pub fn eigenpairs_approx(
        &self,
        residual_tol: f64,
    ) -> Result<Vec<(Complex64, Vec<Complex64>)>, LinalgError> {
        if self.mode != Mode::Approx {
            return Err(LinalgError::RequiresApprox);
        }
        if !self.is_square() {
            return Err(LinalgError::ShapeMismatch("eigen of non-square".into()));
        }
        numeric::eigenpairs(&self.to_cmat(), residual_tol)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rows: usize,
            cols: usize,
            entries: Vec<Scalar>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Matrix::new(raw.rows, raw.cols, raw.entries).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclotomic;
    use proptest::prelude::*;

    fn exact(n: i64) -> Scalar {
        Scalar::integer(Mode::Exact, n)
    }

    fn mat2(entries: [i64; 4]) -> Matrix {
        Matrix::new(2, 2, entries.iter().map(|&n| exact(n)).collect()).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = mat2([2, 1, 3, 1]);
        let id = Matrix::identity(2, Mode::Exact);
        assert_eq!(id.mul(&a).unwrap(), a);
        assert_eq!(a.mul(&id).unwrap(), a);
    }

    #[test]
    fn product_of_sigma_images() {
        // ρ(σ₁)·ρ(σ₂) for the n=2 representation with a=2, d=1, c=3
        let s1 = mat2([2, 1, 3, 1]);
        let s2 = mat2([2, -1, -3, 1]);
        assert_eq!(s1.mul(&s2).unwrap(), mat2([1, -1, 3, -2]));
    }

    #[test]
    fn inverse_of_sigma_image() {
        let s1 = mat2([2, 1, 3, 1]);
        // det = 2·1 − 1·3 = −1, so the inverse is [[−1, 1], [3, −2]]
        assert_eq!(s1.det().unwrap(), exact(-1));
        let inv = s1.inverse().unwrap();
        assert_eq!(inv, mat2([-1, 1, 3, -2]));
        assert_eq!(s1.mul(&inv).unwrap(), Matrix::identity(2, Mode::Exact));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = mat2([1, 0, 0, 1]);
        let v = Matrix::new(1, 2, vec![exact(1), exact(2)]).unwrap();
        assert!(matches!(a.mul(&v), Err(LinalgError::ShapeMismatch(_))));
        assert!(matches!(
            a.mul(&Matrix::identity(2, Mode::Approx)),
            Err(LinalgError::MixedModes)
        ));
    }

    #[test]
    fn kron_identity() {
        let id2 = Matrix::identity(2, Mode::Exact);
        assert_eq!(id2.kron(&id2).unwrap(), Matrix::identity(4, Mode::Exact));
    }

    #[test]
    fn kron_reproduces_block_pattern() {
        // [[a₁,1],[c₁,d₁]] ⊗ [[a₂,1],[c₂,d₂]] row by row
        let (a1, c1, d1) = (2i64, 3, 5);
        let (a2, c2, d2) = (7i64, 11, 13);
        let m1 = mat2([a1, 1, c1, d1]);
        let m2 = mat2([a2, 1, c2, d2]);
        let expected = Matrix::new(
            4,
            4,
            [
                a1 * a2,
                a1,
                a2,
                1,
                a1 * c2,
                a1 * d2,
                c2,
                d2,
                c1 * a2,
                c1,
                d1 * a2,
                d1,
                c1 * c2,
                c1 * d2,
                d1 * c2,
                d1 * d2,
            ]
            .iter()
            .map(|&n| exact(n))
            .collect(),
        )
        .unwrap();
        assert_eq!(m1.kron(&m2).unwrap(), expected);
    }

    #[test]
    fn kron_of_diagonals() {
        // diag(T₁t₁, t₁) ⊗ diag(T₂t₂, t₂) = t₁t₂·diag(T₁T₂, T₁, T₂, 1)
        let t_big1 = Scalar::root_of_unity(Mode::Exact, 4, 1).unwrap();
        let t_big2 = Scalar::root_of_unity(Mode::Exact, 3, 1).unwrap();
        let t1 = Scalar::root_of_unity(Mode::Exact, 8, 1).unwrap();
        let t2 = Scalar::root_of_unity(Mode::Exact, 8, 3).unwrap();
        let d1 = Matrix::diagonal(&[&t_big1 * &t1, t1.clone()]).unwrap();
        let d2 = Matrix::diagonal(&[&t_big2 * &t2, t2.clone()]).unwrap();
        let t1t2 = &t1 * &t2;
        let expected = Matrix::diagonal(&[
            &t1t2 * &(&t_big1 * &t_big2),
            &t1t2 * &t_big1,
            &t1t2 * &t_big2,
            t1t2.clone(),
        ])
        .unwrap();
        assert_eq!(d1.kron(&d2).unwrap(), expected);
    }

    #[test]
    fn adjoint_examples() {
        let id = Matrix::identity(3, Mode::Exact);
        assert_eq!(id.adjoint(), id);
        let i = Scalar::root_of_unity(Mode::Exact, 4, 1).unwrap();
        let m = Matrix::new(1, 1, vec![i.clone()]).unwrap();
        assert_eq!(m.adjoint(), Matrix::new(1, 1, vec![-&i]).unwrap());

        let omega = Scalar::root_of_unity(Mode::Exact, 6, 1).unwrap();
        let half = Scalar::ratio(Mode::Exact, 1, 2);
        let m = Matrix::from_rows(vec![
            vec![&omega * &half, exact(1)],
            vec![&Scalar::ratio(Mode::Exact, -3, 4) * &omega, half.clone()],
        ])
        .unwrap();
        let wbar = omega.conj();
        let expected = Matrix::from_rows(vec![
            vec![&wbar * &half, &Scalar::ratio(Mode::Exact, -3, 4) * &wbar],
            vec![exact(1), half],
        ])
        .unwrap();
        assert_eq!(m.adjoint(), expected);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(4, Mode::Exact)
            .kernel(1e-9)
            .unwrap()
            .is_empty());
        assert_eq!(
            Matrix::zeros(2, 2, Mode::Exact).kernel(1e-9).unwrap().len(),
            2
        );
        let ones = mat2([1, 1, 1, 1]);
        let ker = ones.kernel(1e-9).unwrap();
        assert_eq!(ker.len(), 1);
        // spanned by (1, −1)
        let v = &ker[0];
        assert!((&v[0] + &v[1]).is_zero());
        // same question in approx mode
        let ker = ones.to_approx().kernel(1e-9).unwrap();
        assert_eq!(ker.len(), 1);
        let r = v[0].embed() / v[1].embed();
        assert!((r + num_complex::Complex64::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn eigen_examples() {
        let d = Matrix::diagonal(&[Scalar::complex(1.0, 0.0), Scalar::complex(2.0, 0.0)]).unwrap();
        let pairs = d.eigenpairs_approx(1e-8).unwrap();
        let mut ev: Vec<f64> = pairs.iter().map(|(l, _)| l.re).collect();
        ev.sort_by(f64::total_cmp);
        assert!((ev[0] - 1.0).abs() < 1e-10 && (ev[1] - 2.0).abs() < 1e-10);

        // ρ(σ₁) for n=2, a=2, d=1, c=3: characteristic roots (3±√13)/2
        let s1 = mat2([2, 1, 3, 1]).to_approx();
        let pairs = s1.eigenpairs_approx(1e-8).unwrap();
        let mut ev: Vec<f64> = pairs.iter().map(|(l, _)| l.re).collect();
        ev.sort_by(f64::total_cmp);
        let root = 13f64.sqrt();
        assert!((ev[0] - (3.0 - root) / 2.0).abs() < 1e-9);
        assert!((ev[1] - (3.0 + root) / 2.0).abs() < 1e-9);
        assert!(mat2([2, 1, 3, 1]).eigenpairs_approx(1e-8).is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (proptest::collection::vec((-6i64..=6, 1i64..=4), 8)).prop_map(|v| {
            let coeffs = std::array::from_fn(|i| {
                num_rational::BigRational::new(v[i].0.into(), v[i].1.into())
            });
            Scalar::Exact(Cyclotomic::from_coeffs(coeffs))
        })
    }

    fn arb_mat2() -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(arb_scalar(), 4)
            .prop_map(|entries| Matrix::new(2, 2, entries).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mixed_product_law(a in arb_mat2(), b in arb_mat2(), c in arb_mat2(), d in arb_mat2()) {
            let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
            let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn adjoint_antihomomorphism(a in arb_mat2(), b in arb_mat2()) {
            let lhs = a.mul(&b).unwrap().adjoint();
            let rhs = b.adjoint().mul(&a.adjoint()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn embedding_commutes_with_ops(a in arb_mat2(), b in arb_mat2()) {
            let scale = 1f64.max(a.to_cmat().max_abs()) * 1f64.max(b.to_cmat().max_abs());
            prop_assert!(a.mul(&b).unwrap().to_approx().max_abs_diff(&a.to_approx().mul(&b.to_approx()).unwrap()) <= 1e-9 * scale);
            prop_assert!(a.kron(&b).unwrap().to_approx().max_abs_diff(&a.to_approx().kron(&b.to_approx()).unwrap()) <= 1e-9 * scale);
            prop_assert!(a.adjoint().to_approx().max_abs_diff(&a.to_approx().adjoint()) <= 1e-12 * scale);
        }

        #[test]
        fn kernel_vectors_annihilate(a in arb_mat2()) {
            for v in a.kernel(1e-9).unwrap() {
                let image = a.apply(&v).unwrap();
                prop_assert!(image.iter().all(Scalar::is_zero));
            }
        }
    }
}
