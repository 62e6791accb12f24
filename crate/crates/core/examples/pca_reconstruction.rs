// Centered PCA: directions, explained variance and the reconstruction error
// identity.

use combospec::pca::{explained_variance, fit, project, reconstruct, reconstruction_mse};
use combospec::DataMatrix;

pub fn run() -> combospec::Result<()> {
    let x = DataMatrix::from_rows(&[
        [2.0, 1.9, 0.1],
        [1.0, 1.1, -0.2],
        [-1.0, -0.9, 0.1],
        [-2.0, -2.1, 0.0],
        [0.0, 0.1, 0.3],
    ])?;
    let full = fit(&x, 3)?;
    println!("mean: {:?}", full.mean);
    println!("covariance eigenvalues: {:?}", full.c_eigenvalues);
    println!("explained variance: {:?}", explained_variance(&full)?);

    for d in 1..=3 {
        let model = fit(&x, d)?;
        let mse = reconstruction_mse(&x, d)?;
        println!(
            "d = {d}: reconstruction mse {mse:.6}, discarded variance {:.6}",
            model.discarded_variance()
        );
    }

    let model = fit(&x, 1)?;
    let coords = project(&model, x.row(0))?;
    let back = reconstruct(&model, &coords)?;
    println!("x_0 = {:?} -> {coords:?} -> {back:?}", x.row(0));
    Ok(())
}

#[allow(dead_code)]
fn main() -> combospec::Result<()> {
    run()
}
