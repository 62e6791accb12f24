// Tabulate Gram spectra of aX1 + (1-a)X2 on a coarse grid and bracket the
// spectrum at weights in between.

use combospec::combo::{build_table, combine, predict_intervals, AnchorMode, ComboPair};
use combospec::linalg::gram_spectrum;
use combospec::DataMatrix;

pub fn run() -> combospec::Result<()> {
    let x1 = DataMatrix::from_rows(&[[1.0, 0.5, 0.0], [0.0, 1.0, -0.5], [0.3, 0.0, 1.0]])?;
    let x2 = DataMatrix::from_rows(&[[-0.5, 0.0, 1.0], [1.0, 0.2, 0.0], [0.0, -1.0, 0.4]])?;
    let pair = ComboPair::new(x1, x2)?;
    let table = build_table(&pair, 10)?;
    println!(
        "s1(X1) = {:.4}, s1(X2) = {:.4}, uniform radius B = {:.4}",
        table.sigma1_x1, table.sigma1_x2, table.bound
    );

    for alpha in [0.13, 0.5, 0.87] {
        let truth = gram_spectrum(&combine(&pair, alpha)?)?;
        println!("alpha = {alpha}: exact {:.4?}", truth.as_slice());
        for mode in [AnchorMode::Proposition, AnchorMode::Nearest] {
            let iv = predict_intervals(&table, &pair, alpha, mode)?;
            let shown: Vec<String> = iv
                .intervals
                .iter()
                .map(|(lo, hi)| format!("[{lo:.3}, {hi:.3}]"))
                .collect();
            println!(
                "  {mode:<11} k = {:>2} radius {:.4}: {}",
                iv.anchor_k,
                iv.radius,
                shown.join(" ")
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> combospec::Result<()> {
    run()
}
