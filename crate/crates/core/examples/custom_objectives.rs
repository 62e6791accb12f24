// Plugging in your own pair of objectives: validate the gradients, then run
// a short sweep.

use combospec::multiobj::{
    alpha_grid, pareto_sweep, sample_points, validate_gradients, FnPair, OptimizerConfig,
};
use combospec::rng::SampleBox;

pub fn run() -> combospec::Result<()> {
    // J1 = sum (p_i - 1)^4 / 4 + |p|^2 / 2,  J2 = sum log(cosh(p_i + 1))
    let pair = FnPair::new(
        "quartic-vs-logcosh",
        3,
        |p| {
            p.iter()
                .map(|x| (x - 1.0).powi(4) / 4.0 + x * x / 2.0)
                .sum()
        },
        |p| p.iter().map(|x| (x - 1.0).powi(3) + x).collect(),
        |p| p.iter().map(|x| (x + 1.0).cosh().ln()).sum(),
        |p| p.iter().map(|x| (x + 1.0).tanh()).collect(),
    );

    let pts = sample_points(&SampleBox::cube(3, -2.0, 2.0)?, 100, 5, 0);
    let check = validate_gradients(&pair, &pts)?;
    println!(
        "finite-difference check: max relative error {:.2e}",
        check.max_rel_error
    );

    let mut cfg = OptimizerConfig::new(3);
    cfg.step_size = 0.2;
    cfg.grad_tol = 1e-9;
    let sweep = pareto_sweep(&pair, &alpha_grid(6)?, &cfg, None)?;
    for pt in sweep.points() {
        println!(
            "alpha {:.1}: J1 = {:.5}, J2 = {:.5}, p1 = {:.5}, converged {}",
            pt.alpha, pt.j1, pt.j2, pt.p_star[0], pt.converged
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> combospec::Result<()> {
    run()
}
