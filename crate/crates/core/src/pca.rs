//! Centered principal component analysis computed from the SVD of the
//! de-meaned data matrix.
//!
//! Variances use the `1/m` convention: the eigenvalues of `C = X'X / m` are
//! `σᵢ(X⁽ᶜ⁾)² / m`, i.e. the Gram eigenvalues of the centered data divided by
//! the sample count.

use crate::error::{input, Error, Result};
use crate::linalg::{dot, svd, DataMatrix};

/// Relative threshold below which the centered data counts as constant.
pub const DEGENERATE_REL_TOL: f64 = 1e-12;

/// A fitted PCA model.
#[derive(Debug, Clone)]
pub struct PcaModel {
    /// Column averages of the training data.
    pub mean: Vec<f64>,
    /// `n × d` matrix whose orthonormal columns are the leading principal directions.
    pub directions: DataMatrix,
    /// All `n` eigenvalues of the covariance, non-increasing, zero past `min(m, n)`.
    pub c_eigenvalues: Vec<f64>,
    pub d: usize,
    /// Number of samples the model was fitted on.
    pub samples: usize,
    /// The centered data had (numerically) zero variance.
    pub degenerate: bool,
}

impl PcaModel {
    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn direction(&self, i: usize) -> Vec<f64> {
        self.directions.column(i)
    }

    pub fn total_variance(&self) -> f64 {
        self.c_eigenvalues.iter().sum()
    }

    /// Variance carried by the discarded directions `d+1..n`.
    pub fn discarded_variance(&self) -> f64 {
        self.c_eigenvalues[self.d..].iter().fold(0.0, |s, v| s + v)
    }
}

/// Subtracts the column means from every row. Returns the centered matrix and the means.
pub fn center(x: &DataMatrix) -> (DataMatrix, Vec<f64>) {
    let (m, n) = x.shape();
    let mut mean = vec![0.0; n];
    for row in x.row_iter() {
        for (acc, v) in mean.iter_mut().zip(row) {
            *acc += v;
        }
    }
    mean.iter_mut().for_each(|v| *v /= m as f64);
    let data: Vec<f64> = x
        .row_iter()
        .flat_map(|row| row.iter().zip(&mean).map(|(v, mu)| v - mu))
        .collect();
    let centered = DataMatrix::new(m, n, data).expect("centering preserves shape and finiteness");
    (centered, mean)
}

/// Fits a `d`-component PCA. The data is centered internally.
pub fn fit(x: &DataMatrix, d: usize) -> Result<PcaModel> {
    let (m, n) = x.shape();
    let q = m.min(n);
    if d == 0 || d > q {
        return input(format!("d = {d} must lie in 1..={q}"));
    }
    let (centered, mean) = center(x);
    let f = svd(&centered)?;

    let scale = x.frobenius_norm();
    let degenerate = f.sigma[0] <= DEGENERATE_REL_TOL * scale;

    let mut c_eigenvalues = vec![0.0; n];
    if !degenerate {
        for (c, s) in c_eigenvalues.iter_mut().zip(&f.sigma) {
            *c = s * s / m as f64;
        }
    }

    let columns: Vec<Vec<f64>> = (0..d)
        .map(|i| {
            let mut v = f.v.column(i);
            canonical_sign(&mut v);
            v
        })
        .collect();
    Ok(PcaModel {
        mean,
        directions: DataMatrix::from_columns(&columns)?,
        c_eigenvalues,
        d,
        samples: m,
        degenerate,
    })
}

/// Flips `v` so its largest-magnitude entry (lowest index on ties) is positive.
fn canonical_sign(v: &mut [f64]) {
    let mut pivot = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[pivot].abs() {
            pivot = i;
        }
    }
    if v[pivot] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// Coordinates of `x` in the principal subspace: `directions' (x − mean)`.
pub fn project(model: &PcaModel, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != model.dim() {
        return input(format!(
            "vector of length {} does not match model dimension {}",
            x.len(),
            model.dim()
        ));
    }
    let shifted: Vec<f64> = x.iter().zip(&model.mean).map(|(a, b)| a - b).collect();
    model.directions.tr_mul_vec(&shifted)
}

/// Maps subspace coordinates back to the data space.
pub fn reconstruct(model: &PcaModel, coords: &[f64]) -> Result<Vec<f64>> {
    let mut x = model.directions.mul_vec(coords)?;
    for (v, mu) in x.iter_mut().zip(&model.mean) {
        *v += mu;
    }
    Ok(x)
}

/// Mean squared residual `(1/m) Σⱼ ‖xⱼ⁽ᶜ⁾ − P xⱼ⁽ᶜ⁾‖²` when only the first `d`
/// directions are kept, computed from the residuals themselves.
pub fn reconstruction_mse(x: &DataMatrix, d: usize) -> Result<f64> {
    let model = fit(x, d)?;
    let (centered, _) = center(x);
    let mut total = 0.0;
    for row in centered.row_iter() {
        let coords = model.directions.tr_mul_vec(row)?;
        let approx = model.directions.mul_vec(&coords)?;
        total += row
            .iter()
            .zip(&approx)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>();
    }
    Ok(total / x.rows() as f64)
}

/// Fraction of the total variance carried by each retained direction.
pub fn explained_variance(model: &PcaModel) -> Result<Vec<f64>> {
    let total = model.total_variance();
    if model.degenerate || total <= 0.0 {
        return Err(Error::Degenerate("total variance is zero".into()));
    }
    Ok(model.c_eigenvalues[..model.d]
        .iter()
        .map(|c| c / total)
        .collect())
}

/// Largest entry of `|D'D − I|` for the fitted directions.
pub fn orthonormality_residual(model: &PcaModel) -> f64 {
    let d = model.d;
    let cols: Vec<Vec<f64>> = (0..d).map(|i| model.direction(i)).collect();
    let mut worst: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot(&cols[i], &cols[j]) - target).abs());
        }
    }
    worst
}
