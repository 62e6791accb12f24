#![allow(dead_code)]

use combospec::DataMatrix;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, m: usize, n: usize, lo: f64, hi: f64) -> DataMatrix {
    let data = (0..m * n).map(|_| rng.gen_range(lo..hi)).collect();
    DataMatrix::new(m, n, data).unwrap()
}

pub fn random_vec(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(lo..hi)).collect()
}

/// Eigenvalues of the explicitly formed `XX'` from nalgebra's symmetric
/// eigensolver, sorted descending, tiny negatives clamped to zero.
pub fn brute_force_gram_eigenvalues(x: &DataMatrix) -> Vec<f64> {
    let (m, n) = x.shape();
    let xm = DMatrix::from_row_slice(m, n, x.as_slice());
    let g = &xm * xm.transpose();
    let gmax = g.amax();
    let mut ev: Vec<f64> = g.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    for v in ev.iter_mut() {
        if *v < 0.0 && *v >= -1e-12 * (1.0 + gmax) {
            *v = 0.0;
        }
    }
    ev
}

/// Singular values from nalgebra, sorted descending.
pub fn reference_singular_values(x: &DataMatrix) -> Vec<f64> {
    let (m, n) = x.shape();
    let xm = DMatrix::from_row_slice(m, n, x.as_slice());
    let mut sv: Vec<f64> = xm.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

pub fn orthogonality_residual(q: &DataMatrix) -> f64 {
    let qtq = q.transpose().matmul(q).unwrap();
    let n = qtq.rows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let t = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((qtq.get(i, j) - t).abs());
        }
    }
    worst
}
