// Predict the spread of the centered gradient field at a new weight from
// spectra tabulated on a grid of weights.

use combospec::bench::by_name;
use combospec::combo::AnchorMode;
use combospec::multiobj::{centered_gram_spectrum, sample_points, variance_forecast};
use combospec::rng::SampleBox;

pub fn run() -> combospec::Result<()> {
    let problem = by_name("aniso-quad", 5, 0)?;
    let points = sample_points(&SampleBox::cube(5, -2.0, 2.0)?, 20, 9, 0);
    let m = points.len() as f64;
    // The Gram matrix is 20x20 but has rank at most 5.
    let shown = 5;

    for alpha in [0.37, 0.5, 0.81] {
        let truth = centered_gram_spectrum(&problem.pair, &points, alpha)?;
        let iv = variance_forecast(&problem.pair, &points, 10, alpha, AnchorMode::Nearest)?;
        println!(
            "alpha = {alpha} (anchor k = {}, radius {:.3})",
            iv.anchor_k, iv.radius
        );
        for (i, (&(lo, hi), &v)) in iv
            .variance_intervals()
            .iter()
            .zip(truth.as_slice())
            .enumerate()
            .take(shown)
        {
            println!("  variance {i}: {:.4} in [{lo:.4}, {hi:.4}]", v / m);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> combospec::Result<()> {
    run()
}
