// Descent along the projection of the gradient onto a PCA basis of sampled
// gradients. On a problem whose gradients live in a rank-r subspace the
// projection loses nothing.

use combospec::bench::by_name;
use combospec::multiobj::{
    descend, minimize, sampled_basis, start_points, OptimizerConfig, ReducedGradientConfig,
};
use combospec::rng::SampleBox;

pub fn run() -> combospec::Result<()> {
    let (n, r) = (8, 2);
    let problem = by_name("lowrank", n, r)?;
    let cfg = OptimizerConfig::new(n);
    let reduction = ReducedGradientConfig::new(SampleBox::cube(n, -5.0, 5.0)?, 4 * n, r);
    let alpha = 0.4;

    let basis = sampled_basis(&problem.pair, alpha, &reduction, cfg.seed, 0)?;
    println!(
        "basis rank {} in R^{n} ({} principal directions, mean kept: {})",
        basis.rank(),
        basis.directions,
        basis.includes_mean
    );

    let start = &start_points(&cfg)[0];
    let exact = descend(&problem.pair, alpha, start, &cfg, None, true)?;
    let reduced = descend(&problem.pair, alpha, start, &cfg, Some(&basis), true)?;
    let drift = exact
        .trace
        .iter()
        .zip(&reduced.trace)
        .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
        .fold(0.0_f64, f64::max);
    println!(
        "exact: {} iters, reduced: {} iters, largest iterate difference {drift:.2e}",
        exact.iters, reduced.iters
    );

    let pe = minimize(&problem.pair, alpha, &cfg, None)?;
    let pr = minimize(&problem.pair, alpha, &cfg, Some(&reduction))?;
    println!("J1, J2 exact   = {:.8}, {:.8}", pe.j1, pe.j2);
    println!("J1, J2 reduced = {:.8}, {:.8}", pr.j1, pr.j2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> combospec::Result<()> {
    run()
}
