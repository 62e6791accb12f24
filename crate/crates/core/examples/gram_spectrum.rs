// SVD, Gram spectra and the singular-value perturbation gap.

use combospec::linalg::{gram_spectrum, spectral_norm, sv_perturbation_gap, svd};
use combospec::DataMatrix;

pub fn run() -> combospec::Result<()> {
    // Four samples in R^2; the Gram matrix XX' is 4x4 with rank 2.
    let x = DataMatrix::from_rows(&[[3.0, 0.0], [0.0, 2.0], [1.0, 1.0], [-1.0, 0.5]])?;
    let f = svd(&x)?;
    println!("singular values: {:?}", f.sigma);

    let g = gram_spectrum(&x)?;
    println!("eigenvalues of XX': {:?}", g.as_slice());

    let residual = DataMatrix::lin_comb(1.0, &f.reconstruct(), -1.0, &x)?.frobenius_norm();
    println!("|U S V' - X|_F = {residual:.2e}");

    let b = DataMatrix::from_rows(&[[0.1, 0.0], [0.0, -0.2], [0.05, 0.0], [0.0, 0.0]])?;
    let gap = sv_perturbation_gap(&x, &b)?;
    let s1 = spectral_norm(&b)?;
    println!("max_i |s_i(X) - s_i(X + B)| = {gap:.4} <= s_1(B) = {s1:.4}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> combospec::Result<()> {
    run()
}
