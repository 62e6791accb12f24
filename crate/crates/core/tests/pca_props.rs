mod common;

use combospec::linalg::gram_spectrum;
use combospec::pca::{center, fit, orthonormality_residual, project, reconstruction_mse};
use combospec::DataMatrix;
use proptest::prelude::*;

use common::*;

fn data_strategy() -> impl Strategy<Value = DataMatrix> {
    (2usize..=10, 1usize..=10).prop_flat_map(|(m, n)| {
        prop::collection::vec(-5.0f64..5.0, m * n)
            .prop_map(move |d| DataMatrix::new(m, n, d).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn directions_are_orthonormal(x in data_strategy()) {
        let q = x.rows().min(x.cols());
        let model = fit(&x, q).unwrap();
        prop_assert!(orthonormality_residual(&model) <= 1e-10);
    }

    #[test]
    fn error_identity_holds_for_every_d(x in data_strategy()) {
        let q = x.rows().min(x.cols());
        for d in 1..=q {
            let model = fit(&x, d).unwrap();
            let mse = reconstruction_mse(&x, d).unwrap();
            let discarded = model.discarded_variance();
            let scale = model.total_variance().max(1e-300);
            prop_assert!((mse - discarded).abs() <= 1e-9 * scale,
                "d={} mse={} discarded={}", d, mse, discarded);
        }
    }

    #[test]
    fn projected_variance_equals_eigenvalue(x in data_strategy()) {
        let q = x.rows().min(x.cols());
        let model = fit(&x, q).unwrap();
        let m = x.rows() as f64;
        let coords: Vec<Vec<f64>> = x.row_iter().map(|r| project(&model, r).unwrap()).collect();
        let scale = model.total_variance().max(1e-300);
        for i in 0..q {
            let var = coords.iter().map(|c| c[i] * c[i]).sum::<f64>() / m;
            prop_assert!((var - model.c_eigenvalues[i]).abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn c_eigenvalues_are_centered_gram_over_m(x in data_strategy()) {
        let model = fit(&x, 1).unwrap();
        let (c, _) = center(&x);
        let g = gram_spectrum(&c).unwrap();
        let m = x.rows() as f64;
        let scale = g.eigenvalues[0].max(1e-300);
        prop_assert_eq!(model.c_eigenvalues.len(), x.cols());
        for (i, &lam) in g.eigenvalues.iter().enumerate().take(x.cols()) {
            if model.degenerate {
                prop_assert_eq!(model.c_eigenvalues[i], 0.0);
            } else {
                prop_assert!((model.c_eigenvalues[i] * m - lam).abs() <= 1e-9 * scale);
            }
        }
        prop_assert!(model.c_eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn centered_columns_sum_to_zero(x in data_strategy()) {
        let (c, mean) = center(&x);
        for (j, &mu) in mean.iter().enumerate() {
            let col_scale = x.column(j).iter().fold(1.0f64, |s, v| s.max(v.abs()));
            let sum: f64 = c.column(j).iter().sum();
            prop_assert!(sum.abs() <= 1e-12 * x.rows() as f64 * col_scale);
            let avg = x.column(j).iter().sum::<f64>() / x.rows() as f64;
            prop_assert!((mu - avg).abs() <= 1e-15 * col_scale);
        }
    }
}

#[test]
fn centering_commutes_with_convex_combination() {
    let mut r = rng(11);
    for _ in 0..100 {
        let m = r_dim(&mut r);
        let n = r_dim(&mut r);
        let x1 = random_matrix(&mut r, m, n, -5.0, 5.0);
        let x2 = random_matrix(&mut r, m, n, -5.0, 5.0);
        let alpha: f64 = rand::Rng::gen_range(&mut r, 0.0..=1.0);
        let (lhs, _) = center(&DataMatrix::lin_comb(alpha, &x1, 1.0 - alpha, &x2).unwrap());
        let (c1, _) = center(&x1);
        let (c2, _) = center(&x2);
        let rhs = DataMatrix::lin_comb(alpha, &c1, 1.0 - alpha, &c2).unwrap();
        let scale = x1.max_abs().max(x2.max_abs()).max(1.0);
        assert!(max_abs_diff(lhs.as_slice(), rhs.as_slice()) <= 1e-12 * scale);
    }
}

fn r_dim(r: &mut impl rand::Rng) -> usize {
    r.gen_range(1..=10)
}
