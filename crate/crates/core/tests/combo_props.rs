mod common;

use combospec::combo::{
    build_table, combine, dense_spectra, lipschitz_bound, predict_intervals, verify_bound,
    AnchorMode, ComboPair, BOUND_REL_SLACK,
};
use combospec::linalg::{gram_spectrum, singular_values, spectral_norm};
use combospec::DataMatrix;
use proptest::prelude::*;
use rand::Rng;

use common::*;

fn pair_strategy(lo: usize, hi: usize) -> impl Strategy<Value = ComboPair> {
    (lo..=hi, lo..=hi).prop_flat_map(|(m, n)| {
        (
            prop::collection::vec(-5.0f64..5.0, m * n),
            prop::collection::vec(-5.0f64..5.0, m * n),
        )
            .prop_map(move |(a, b)| {
                ComboPair::new(
                    DataMatrix::new(m, n, a).unwrap(),
                    DataMatrix::new(m, n, b).unwrap(),
                )
                .unwrap()
            })
    })
}

fn seeded_pair(r: &mut impl Rng, m: usize, n: usize) -> ComboPair {
    ComboPair::new(
        random_matrix(r, m, n, -5.0, 5.0),
        random_matrix(r, m, n, -5.0, 5.0),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cached_sigma_matches_singular_values(pair in pair_strategy(1, 8)) {
        let s1 = singular_values(pair.x1()).unwrap()[0];
        let s2 = singular_values(pair.x2()).unwrap()[0];
        prop_assert!((pair.sigma1_x1() - s1).abs() <= 1e-12 * s1.max(1.0));
        prop_assert!((pair.sigma1_x2() - s2).abs() <= 1e-12 * s2.max(1.0));
    }

    #[test]
    fn endpoint_identities(pair in pair_strategy(1, 8), k in 1usize..=12) {
        let t = build_table(&pair, k).unwrap();
        let g2 = gram_spectrum(pair.x2()).unwrap();
        let g1 = gram_spectrum(pair.x1()).unwrap();
        prop_assert!(t.spectra[0].max_abs_diff(&g2) <= 1e-12);
        prop_assert!(t.spectra[k].max_abs_diff(&g1) <= 1e-12);
        for s in &t.spectra {
            prop_assert!(s.as_slice().windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(s.as_slice().iter().all(|&v| v >= 0.0));
        }
    }

    #[test]
    fn lipschitz_refinement(pair in pair_strategy(2, 10), a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
        let ga = gram_spectrum(&combine(&pair, a).unwrap()).unwrap();
        let gb = gram_spectrum(&combine(&pair, b).unwrap()).unwrap();
        let bound = lipschitz_bound(&pair, b - a);
        let slack = BOUND_REL_SLACK * pair.scale().max(bound);
        prop_assert!(ga.max_abs_diff(&gb) <= bound + slack);
    }

    #[test]
    fn triangle_bounds(pair in pair_strategy(1, 10), alpha in 0.0f64..=1.0) {
        let sum = pair.sigma1_x1() + pair.sigma1_x2();
        let diff = DataMatrix::lin_comb(1.0, pair.x1(), -1.0, pair.x2()).unwrap();
        prop_assert!(spectral_norm(&diff).unwrap() <= sum * (1.0 + 1e-12));
        let sv = singular_values(&combine(&pair, alpha).unwrap()).unwrap();
        prop_assert!(sv.iter().all(|&s| s <= sum * (1.0 + 1e-12)));
    }

    #[test]
    fn intervals_contain_truth(pair in pair_strategy(2, 8), k in 1usize..=10, alpha in 0.0f64..=1.0) {
        let t = build_table(&pair, k).unwrap();
        let truth = gram_spectrum(&combine(&pair, alpha).unwrap()).unwrap();
        for mode in [AnchorMode::Proposition, AnchorMode::Nearest] {
            let iv = predict_intervals(&t, &pair, alpha, mode).unwrap();
            let slack = BOUND_REL_SLACK * pair.scale().max(iv.radius);
            prop_assert!(iv.contains(&truth, slack), "mode {} alpha {}", mode, alpha);
            for (&(lo, hi), &c) in iv.intervals.iter().zip(t.spectra[iv.anchor_k].as_slice()) {
                prop_assert!(lo <= hi);
                prop_assert_eq!(lo, (c - iv.radius).max(0.0));
                prop_assert_eq!(hi, c + iv.radius);
            }
        }
    }

    #[test]
    fn proposition_radius_is_uniform_on_cell(pair in pair_strategy(1, 6), k in 1usize..=10, u in 0.0f64..1.0) {
        let t = build_table(&pair, k).unwrap();
        let iv = predict_intervals(&t, &pair, u, AnchorMode::Proposition).unwrap();
        prop_assert_eq!(iv.radius, t.bound);
    }
}

#[test]
fn seeded_table_is_self_consistent() {
    let mut r = rng(7);
    let pair = seeded_pair(&mut r, 4, 3);
    let t = build_table(&pair, 10).unwrap();
    assert_eq!(t.spectra.len(), 11);
    for (k, s) in t.spectra.iter().enumerate() {
        let direct = gram_spectrum(&combine(&pair, k as f64 / 10.0).unwrap()).unwrap();
        assert_eq!(s, &direct);
    }
}

#[test]
fn seeded_six_by_four_has_no_violations() {
    let mut r = rng(2024);
    let pair = seeded_pair(&mut r, 6, 4);
    let report = verify_bound(&pair, 5, 501).unwrap();
    assert_eq!(report.samples.len(), 501);
    assert_eq!(report.violations, 0);
    assert!(report.max_slack >= 0.0);
}

#[test]
fn theorem_check_over_seeded_pairs() {
    let mut r = rng(99);
    for _ in 0..20 {
        let m = r.gen_range(2..=12);
        let n = r.gen_range(2..=12);
        let pair = seeded_pair(&mut r, m, n);
        let dense = dense_spectra(&pair, 501).unwrap();
        for k in [1, 2, 5, 10, 50] {
            let t = build_table(&pair, k).unwrap();
            let rep = combospec::combo::verify_against(&t, &pair, &dense);
            assert_eq!(rep.violations, 0, "{m}x{n}, K={k}");
        }
    }
}

#[test]
fn identical_inputs_have_zero_deviation() {
    let mut r = rng(5);
    let x = random_matrix(&mut r, 5, 3, -5.0, 5.0);
    let pair = ComboPair::new(x.clone(), x).unwrap();
    let report = verify_bound(&pair, 3, 101).unwrap();
    assert_eq!(report.max_deviation, 0.0);
    assert_eq!(report.violations, 0);
}
