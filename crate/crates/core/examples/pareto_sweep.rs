// Weighted-sum Pareto sweep on a built-in problem, checked against the
// closed-form minimizer.

use combospec::bench::by_name;
use combospec::multiobj::{alpha_grid, pareto_sweep, OptimizerConfig};

pub fn run() -> combospec::Result<()> {
    let problem = by_name("aniso-quad", 4, 0)?;
    println!("{}", problem.description);

    let cfg = OptimizerConfig::new(4);
    let sweep = pareto_sweep(&problem.pair, &alpha_grid(11)?, &cfg, None)?;

    println!(
        "{:>5} {:>10} {:>10} {:>6} {:>10}",
        "alpha", "j1", "j2", "iters", "oracle gap"
    );
    for pt in sweep.points() {
        let oracle = problem
            .oracle_minimizer(pt.alpha)
            .expect("quadratic has an oracle");
        let gap = pt
            .p_star
            .iter()
            .zip(&oracle)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        println!(
            "{:>5.2} {:>10.5} {:>10.5} {:>6} {:>10.2e}",
            pt.alpha, pt.j1, pt.j2, pt.iters, gap
        );
    }
    println!("all converged: {}", sweep.all_converged());
    Ok(())
}

#[allow(dead_code)]
fn main() -> combospec::Result<()> {
    run()
}
