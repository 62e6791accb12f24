// Check the uniform cell bound against a dense sweep of weights for a few
// grid resolutions.

use combospec::combo::{verify_bound, ComboPair};
use combospec::DataMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn run() -> combospec::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (m, n) = (6, 4);
    let mut random = || {
        let data = (0..m * n).map(|_| rng.gen_range(-5.0..5.0)).collect();
        DataMatrix::new(m, n, data)
    };
    let pair = ComboPair::new(random()?, random()?)?;

    println!(
        "{:>4} {:>12} {:>14} {:>10}",
        "K", "radius", "max deviation", "violations"
    );
    for k in [1, 2, 5, 10, 50] {
        let report = verify_bound(&pair, k, 1001)?;
        println!(
            "{k:>4} {:>12.4} {:>14.4} {:>10}",
            report.samples[0].radius, report.max_deviation, report.violations
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> combospec::Result<()> {
    run()
}
