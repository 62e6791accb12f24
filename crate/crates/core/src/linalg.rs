//! Dense real matrices, a one-sided Jacobi SVD, Gram-matrix spectra and the
//! singular-value perturbation gap.
//!
//! Everything here is a pure function of its inputs. Matrices are small
//! (desk scale), stored row-major, and always hold finite entries.

use crate::error::{input, Error, Result};

/// Round-trip tolerance for `U Σ V'` against the input, relative to `max(1, ‖X‖_F)`.
pub const ROUND_TRIP_TOL: f64 = 1e-10;

/// Relative tolerance for comparing spectra computed by different routes.
pub const SPECTRUM_REL_TOL: f64 = 1e-9;

/// Computed eigenvalues of a PSD matrix in `[-CLAMP_EPS, 0)` are snapped to 0.
pub const CLAMP_EPS: f64 = 1e-12;

/// A dense `rows × cols` real matrix. Row `j` is the sample vector `x_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DataMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DataMatrix {
    /// Builds a matrix from row-major entries. Rejects empty shapes, a wrong
    /// entry count and non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return input(format!("matrix shape {rows}x{cols} has an empty dimension"));
        }
        if data.len() != rows * cols {
            return input(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            ));
        }
        if let Some(pos) = data.iter().position(|v| !v.is_finite()) {
            return input(format!(
                "non-finite entry at ({}, {})",
                pos / cols,
                pos % cols
            ));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return input("matrix has no rows");
        };
        let cols = first.as_ref().len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (j, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return input(format!("row {j} has {} entries, expected {cols}", r.len()));
            }
            data.extend_from_slice(r);
        }
        Self::new(rows.len(), cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix shape");
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Square diagonal matrix.
    pub fn from_diag(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        let mut data = vec![0.0; n * n];
        for (i, &d) in diag.iter().enumerate() {
            data[i * n + i] = d;
        }
        Self::new(n, n, data)
    }

    /// Matrix with the given columns.
    pub fn from_columns(columns: &[Vec<f64>]) -> Result<Self> {
        let Some(first) = columns.first() else {
            return input("matrix has no columns");
        };
        let rows = first.len();
        let cols = columns.len();
        let mut data = vec![0.0; rows * cols];
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return input(format!(
                    "column {j} has {} entries, expected {rows}",
                    c.len()
                ));
            }
            for (i, &v) in c.iter().enumerate() {
                data[i * cols + j] = v;
            }
        }
        Self::new(rows, cols, data)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.cols)
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.row_iter().map(<[f64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                let src = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.cols {
            return input(format!(
                "vector of length {} does not match {} columns",
                v.len(),
                self.cols
            ));
        }
        Ok(self.row_iter().map(|r| dot(r, v)).collect())
    }

    /// `self' · v`.
    pub fn tr_mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.rows {
            return input(format!(
                "vector of length {} does not match {} rows",
                v.len(),
                self.rows
            ));
        }
        let mut out = vec![0.0; self.cols];
        for (r, &w) in self.row_iter().zip(v) {
            axpy(w, r, &mut out);
        }
        Ok(out)
    }

    /// `a·self + b·other`, entrywise.
    pub fn lin_comb(a: f64, x: &Self, b: f64, y: &Self) -> Result<Self> {
        if x.shape() != y.shape() {
            return input(format!(
                "shape mismatch: {}x{} vs {}x{}",
                x.rows, x.cols, y.rows, y.cols
            ));
        }
        let data = x
            .data
            .iter()
            .zip(&y.data)
            .map(|(&u, &v)| a * u + b * v)
            .collect();
        Self::new(x.rows, x.cols, data)
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        norm(&self.data)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..i).all(|j| (self.get(i, j) - self.get(j, i)).abs() <= tol))
    }

    /// `self · self'`, the Gram matrix of the rows.
    pub fn gram(&self) -> Self {
        let m = self.rows;
        let mut g = Self::zeros(m, m);
        for i in 0..m {
            for j in 0..=i {
                let v = dot(self.row(i), self.row(j));
                g.data[i * m + j] = v;
                g.data[j * m + i] = v;
            }
        }
        g
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// `y += a·x`.
pub fn axpy(a: f64, x: &[f64], y: &mut [f64]) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

/// Tuning knobs for the Jacobi SVD.
#[derive(Debug, Clone, Copy)]
pub struct SvdOptions {
    /// A column pair counts as orthogonal once `|w_p·w_q| ≤ tol·‖w_p‖‖w_q‖`.
    pub orthogonality_tol: f64,
    pub max_sweeps: usize,
    /// Columns with `σ ≤ rank_tol·σ₁` get their left singular vector from
    /// orthogonal completion instead of normalisation.
    pub rank_tol: f64,
}

impl Default for SvdOptions {
    fn default() -> Self {
        Self {
            orthogonality_tol: 4.0 * f64::EPSILON,
            max_sweeps: 80,
            rank_tol: 1e-13,
        }
    }
}

/// Full SVD `X = U Σ V'`: `U` is `m×m`, `V` is `n×n`, `sigma` holds the
/// `min(m, n)` singular values in non-increasing order.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    pub u: DataMatrix,
    pub sigma: Vec<f64>,
    pub v: DataMatrix,
}

impl SvdFactors {
    /// `U · Σ · V'` with the rectangular `Σ`.
    pub fn reconstruct(&self) -> DataMatrix {
        let m = self.u.rows();
        let n = self.v.rows();
        let mut x = DataMatrix::zeros(m, n);
        for (k, &s) in self.sigma.iter().enumerate() {
            if s == 0.0 {
                continue;
            }
            for i in 0..m {
                let uik = self.u.get(i, k) * s;
                for j in 0..n {
                    x.data[i * n + j] += uik * self.v.get(j, k);
                }
            }
        }
        x
    }
}

/// Singular value decomposition with default options.
pub fn svd(x: &DataMatrix) -> Result<SvdFactors> {
    svd_with(x, &SvdOptions::default())
}

/// One-sided (Hestenes) Jacobi SVD.
///
/// Works on the orientation with fewer columns, orthogonalises the columns by
/// plane rotations accumulated into `V`, reads singular values off the column
/// norms and completes `U` to a full orthonormal basis.
pub fn svd_with(x: &DataMatrix, opts: &SvdOptions) -> Result<SvdFactors> {
    let transposed = x.rows < x.cols;
    let a = if transposed { x.transpose() } else { x.clone() };
    let (rows, cols) = a.shape();

    // Column-major working copy: w[j] is column j.
    let mut w: Vec<Vec<f64>> = (0..cols).map(|j| a.column(j)).collect();
    let mut v: Vec<Vec<f64>> = (0..cols)
        .map(|j| {
            let mut e = vec![0.0; cols];
            e[j] = 1.0;
            e
        })
        .collect();

    // Columns below this squared norm are round-off and are left alone.
    let negligible = (f64::EPSILON * a.frobenius_norm()).powi(2);
    let mut converged = cols == 1;
    let mut sweeps = 0;
    while !converged {
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence {
                routine: "jacobi svd",
                iterations: sweeps,
            });
        }
        sweeps += 1;
        let mut rotated = false;
        for p in 0..cols - 1 {
            for q in p + 1..cols {
                let alpha = dot(&w[p], &w[p]);
                let beta = dot(&w[q], &w[q]);
                let gamma = dot(&w[p], &w[q]);
                if alpha <= negligible
                    || beta <= negligible
                    || gamma.abs() <= opts.orthogonality_tol * (alpha * beta).sqrt()
                {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate_pair(&mut w, p, q, c, s);
                rotate_pair(&mut v, p, q, c, s);
            }
        }
        converged = !rotated;
    }

    let norms: Vec<f64> = w.iter().map(|c| norm(c)).collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));
    let sigma: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let cutoff = opts.rank_tol * sigma[0];

    let mut left: Vec<Vec<f64>> = Vec::with_capacity(rows);
    for (&j, &s) in order.iter().zip(&sigma) {
        if s > 0.0 && s > cutoff {
            left.push(w[j].iter().map(|val| val / s).collect());
        } else {
            break;
        }
    }
    complete_basis(&mut left, rows);
    let right: Vec<Vec<f64>> = order.iter().map(|&j| v[j].clone()).collect();

    let u_mat = DataMatrix::from_columns(&left)?;
    let v_mat = DataMatrix::from_columns(&right)?;
    Ok(if transposed {
        SvdFactors {
            u: v_mat,
            sigma,
            v: u_mat,
        }
    } else {
        SvdFactors {
            u: u_mat,
            sigma,
            v: v_mat,
        }
    })
}

fn rotate_pair(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let (head, tail) = cols.split_at_mut(q);
    let (cp, cq) = (&mut head[p], &mut tail[0]);
    for (xp, xq) in cp.iter_mut().zip(cq.iter_mut()) {
        let (a, b) = (*xp, *xq);
        *xp = c * a - s * b;
        *xq = s * a + c * b;
    }
}

/// Extends an orthonormal set of `dim`-vectors to an orthonormal basis of
/// `R^dim`, trying coordinate vectors in order of largest residual.
pub(crate) fn complete_basis(basis: &mut Vec<Vec<f64>>, dim: usize) {
    while basis.len() < dim {
        let mut best: Option<(f64, Vec<f64>)> = None;
        for k in 0..dim {
            let mut e = vec![0.0; dim];
            e[k] = 1.0;
            // Two Gram-Schmidt passes.
            for _ in 0..2 {
                for b in basis.iter() {
                    let c = dot(b, &e);
                    axpy(-c, b, &mut e);
                }
            }
            let r = norm(&e);
            if best.as_ref().is_none_or(|(br, _)| r > *br) {
                best = Some((r, e));
            }
        }
        let (r, mut e) = best.expect("dim > 0");
        e.iter_mut().for_each(|x| *x /= r);
        basis.push(e);
    }
}

/// The `min(m, n)` singular values, non-increasing.
pub fn singular_values(x: &DataMatrix) -> Result<Vec<f64>> {
    Ok(svd(x)?.sigma)
}

/// Largest singular value (spectral norm).
pub fn spectral_norm(x: &DataMatrix) -> Result<f64> {
    Ok(singular_values(x)?[0])
}

/// Eigenvalues of the `m×m` Gram matrix `XX'`, non-increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct GramSpectrum {
    pub eigenvalues: Vec<f64>,
}

impl GramSpectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Largest `|λᵢ(self) − λᵢ(other)|` pairing eigenvalues by sorted index.
    pub fn max_abs_diff(&self, other: &GramSpectrum) -> f64 {
        self.eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// `λᵢ(XX') = σᵢ(X)²` for `i ≤ min(m, n)`, then `m − n` exact zeros when `m > n`.
pub fn gram_spectrum(x: &DataMatrix) -> Result<GramSpectrum> {
    let sigma = singular_values(x)?;
    let mut eigenvalues: Vec<f64> = sigma.iter().map(|s| s * s).collect();
    eigenvalues.resize(x.rows(), 0.0);
    Ok(GramSpectrum { eigenvalues })
}

/// `maxᵢ |σᵢ(A) − σᵢ(A + B)|`. Weyl's inequality for singular values bounds
/// this by `σ₁(B)`.
pub fn sv_perturbation_gap(a: &DataMatrix, b: &DataMatrix) -> Result<f64> {
    if a.shape() != b.shape() {
        return input(format!(
            "shape mismatch: {}x{} vs {}x{}",
            a.rows, a.cols, b.rows, b.cols
        ));
    }
    let sum = DataMatrix::lin_comb(1.0, a, 1.0, b)?;
    let sa = singular_values(a)?;
    let sb = singular_values(&sum)?;
    Ok(sa
        .iter()
        .zip(&sb)
        .fold(0.0, |m, (x, y)| m.max((x - y).abs())))
}

/// Lower Cholesky factor `L` with `A = L L'`. Fails unless `A` is symmetric
/// positive definite.
pub fn cholesky(a: &DataMatrix) -> Result<DataMatrix> {
    let n = a.rows();
    if !a.is_symmetric(1e-12 * a.max_abs().max(1.0)) {
        return input("matrix is not symmetric");
    }
    let mut l = DataMatrix::zeros(n, n);
    for j in 0..n {
        let mut d = a.get(j, j);
        for k in 0..j {
            d -= l.get(j, k) * l.get(j, k);
        }
        if d <= 0.0 || !d.is_finite() {
            return input(format!("matrix is not positive definite (pivot {j})"));
        }
        let d = d.sqrt();
        l.set(j, j, d);
        for i in j + 1..n {
            let mut s = a.get(i, j);
            for k in 0..j {
                s -= l.get(i, k) * l.get(j, k);
            }
            l.set(i, j, s / d);
        }
    }
    Ok(l)
}

/// Solves `A x = b` given the Cholesky factor of `A`.
pub fn cholesky_solve(l: &DataMatrix, b: &[f64]) -> Vec<f64> {
    let n = l.rows();
    let mut y = b.to_vec();
    for i in 0..n {
        for k in 0..i {
            y[i] -= l.get(i, k) * y[k];
        }
        y[i] /= l.get(i, i);
    }
    for i in (0..n).rev() {
        for k in i + 1..n {
            y[i] -= l.get(k, i) * y[k];
        }
        y[i] /= l.get(i, i);
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> DataMatrix {
        DataMatrix::from_rows(rows).unwrap()
    }

    fn orthogonality_residual(q: &DataMatrix) -> f64 {
        let qtq = q.transpose().matmul(q).unwrap();
        let n = qtq.rows();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((qtq.get(i, j) - target).abs());
            }
        }
        worst
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(DataMatrix::new(0, 2, vec![]).is_err());
        assert!(DataMatrix::new(2, 2, vec![1.0; 3]).is_err());
        assert!(DataMatrix::new(1, 2, vec![1.0, f64::NAN]).is_err());
        assert!(DataMatrix::new(1, 1, vec![f64::INFINITY]).is_err());
        assert!(DataMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0]]).is_err());
    }

    #[test]
    fn svd_identity() {
        let f = svd(&DataMatrix::identity(2)).unwrap();
        assert_eq!(f.sigma, vec![1.0, 1.0]);
    }

    #[test]
    fn svd_diagonal_sorted() {
        let f = svd(&DataMatrix::from_diag(&[3.0, 4.0]).unwrap()).unwrap();
        assert!((f.sigma[0] - 4.0).abs() < 1e-14);
        assert!((f.sigma[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn svd_rank_one() {
        // X'X = [[2,2],[2,2]] has eigenvalues 4 and 0, so σ = (2, 0).
        let x = m(&[&[1.0, 1.0], &[1.0, 1.0]]);
        let f = svd(&x).unwrap();
        assert!((f.sigma[0] - 2.0).abs() < 1e-14);
        assert!(f.sigma[1].abs() < 1e-14);
        assert!(orthogonality_residual(&f.u) < 1e-12);
        assert!(orthogonality_residual(&f.v) < 1e-12);
    }

    #[test]
    fn svd_wide_and_tall_round_trip() {
        let tall = m(&[&[1.0, 2.0], &[3.0, 4.0], &[5.0, 6.5]]);
        for x in [tall.clone(), tall.transpose()] {
            let f = svd(&x).unwrap();
            assert_eq!(f.u.shape(), (x.rows(), x.rows()));
            assert_eq!(f.v.shape(), (x.cols(), x.cols()));
            assert_eq!(f.sigma.len(), 2);
            let r = DataMatrix::lin_comb(1.0, &f.reconstruct(), -1.0, &x).unwrap();
            assert!(r.frobenius_norm() <= ROUND_TRIP_TOL * x.frobenius_norm().max(1.0));
            assert!(orthogonality_residual(&f.u) < 1e-10);
            assert!(orthogonality_residual(&f.v) < 1e-10);
        }
    }

    #[test]
    fn svd_zero_matrix_has_orthogonal_factors() {
        let f = svd(&DataMatrix::zeros(3, 2)).unwrap();
        assert_eq!(f.sigma, vec![0.0, 0.0]);
        assert!(orthogonality_residual(&f.u) < 1e-14);
    }

    #[test]
    fn svd_reports_sweep_budget_exhaustion() {
        let x = m(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let opts = SvdOptions {
            max_sweeps: 0,
            ..SvdOptions::default()
        };
        match svd_with(&x, &opts) {
            Err(Error::NoConvergence { iterations, .. }) => assert_eq!(iterations, 0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn singular_values_examples() {
        assert_eq!(
            singular_values(&DataMatrix::zeros(3, 2)).unwrap(),
            vec![0.0, 0.0]
        );
        let col = m(&[&[2.0], &[0.0], &[0.0]]);
        assert_eq!(singular_values(&col).unwrap(), vec![2.0]);
        let unit = m(&[&[1.0, 0.0], &[0.0, 0.0], &[0.0, 0.0]]);
        assert_eq!(singular_values(&unit).unwrap(), vec![1.0, 0.0]);
    }

    #[test]
    fn gram_spectrum_examples() {
        let g = gram_spectrum(&DataMatrix::from_diag(&[2.0, 3.0]).unwrap()).unwrap();
        assert!((g.eigenvalues[0] - 9.0).abs() < 1e-13);
        assert!((g.eigenvalues[1] - 4.0).abs() < 1e-13);

        let padded = gram_spectrum(&m(&[&[1.0, 0.0], &[0.0, 1.0], &[0.0, 0.0]])).unwrap();
        assert_eq!(padded.eigenvalues, vec![1.0, 1.0, 0.0]);

        // XX' = [[2,2],[2,2]] → {4, 0}
        let ones = gram_spectrum(&m(&[&[1.0, 1.0], &[1.0, 1.0]])).unwrap();
        assert!((ones.eigenvalues[0] - 4.0).abs() < 1e-13);
        assert!(ones.eigenvalues[1].abs() < 1e-13);
    }

    #[test]
    fn perturbation_gap_examples() {
        let a = m(&[&[1.0, 2.0], &[0.5, -1.0]]);
        assert_eq!(
            sv_perturbation_gap(&a, &DataMatrix::zeros(2, 2)).unwrap(),
            0.0
        );

        let a = DataMatrix::from_diag(&[1.0, 0.0]).unwrap();
        let b = DataMatrix::from_diag(&[0.0, 1.0]).unwrap();
        assert!((sv_perturbation_gap(&a, &b).unwrap() - 1.0).abs() < 1e-14);
        assert_eq!(spectral_norm(&b).unwrap(), 1.0);

        assert!(sv_perturbation_gap(&a, &DataMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn cholesky_solves_and_rejects_indefinite() {
        let a = m(&[&[4.0, 2.0], &[2.0, 3.0]]);
        let l = cholesky(&a).unwrap();
        let x = cholesky_solve(&l, &[2.0, 1.0]);
        let back = a.mul_vec(&x).unwrap();
        assert!((back[0] - 2.0).abs() < 1e-14 && (back[1] - 1.0).abs() < 1e-14);

        assert!(cholesky(&m(&[&[1.0, 2.0], &[2.0, 1.0]])).is_err());
        assert!(cholesky(&m(&[&[1.0, 2.0], &[0.0, 1.0]])).is_err());
    }
}
