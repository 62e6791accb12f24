//! Spectra of `G(α) = X(α)X(α)'` for the convex combination
//! `X(α) = αX₁ + (1−α)X₂`, tabulated on the grid `α_k = k/K`.
//!
//! The eigenvalues of `G(α)` are Lipschitz in `α`:
//!
//! ```text
//! |λᵢ(G(α+Δα)) − λᵢ(G(α))| ≤ 2|Δα| (σ₁(X₁) + σ₁(X₂))²
//! ```
//!
//! so a table of exact spectra on a coarse grid locates every eigenvalue at
//! any other `α` to within `(2/K)(σ₁(X₁) + σ₁(X₂))²` (anchoring at the left
//! end of the enclosing cell) or within the Lipschitz radius for the actual
//! distance to the nearest grid point.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::linalg::{gram_spectrum, spectral_norm, DataMatrix, GramSpectrum};

/// Relative slack applied when checking the bound in floating point.
pub const BOUND_REL_SLACK: f64 = 1e-9;

/// Default number of uniformly spaced `α` samples for [`verify_bound`].
pub const DEFAULT_DENSE_SAMPLES: usize = 1001;

/// Two same-shape data matrices with cached spectral norms.
#[derive(Debug, Clone)]
pub struct ComboPair {
    x1: DataMatrix,
    x2: DataMatrix,
    sigma1_x1: f64,
    sigma1_x2: f64,
    identical: bool,
}

impl ComboPair {
    pub fn new(x1: DataMatrix, x2: DataMatrix) -> Result<Self> {
        if x1.shape() != x2.shape() {
            return input(format!(
                "shape mismatch: {}x{} vs {}x{}",
                x1.rows(),
                x1.cols(),
                x2.rows(),
                x2.cols()
            ));
        }
        let sigma1_x1 = spectral_norm(&x1)?;
        let sigma1_x2 = spectral_norm(&x2)?;
        let identical = x1 == x2;
        Ok(Self {
            x1,
            x2,
            sigma1_x1,
            sigma1_x2,
            identical,
        })
    }

    pub fn x1(&self) -> &DataMatrix {
        &self.x1
    }

    pub fn x2(&self) -> &DataMatrix {
        &self.x2
    }

    pub fn sigma1_x1(&self) -> f64 {
        self.sigma1_x1
    }

    pub fn sigma1_x2(&self) -> f64 {
        self.sigma1_x2
    }

    pub fn shape(&self) -> (usize, usize) {
        self.x1.shape()
    }

    /// `(σ₁(X₁) + σ₁(X₂))²`, the scale of every radius.
    pub fn scale(&self) -> f64 {
        let s = self.sigma1_x1 + self.sigma1_x2;
        s * s
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return input(format!("alpha = {alpha} lies outside [0, 1]"));
    }
    Ok(())
}

/// `αX₁ + (1−α)X₂`. The endpoints, and any α when `X₁ = X₂`, return the
/// inputs exactly.
pub fn combine(pair: &ComboPair, alpha: f64) -> Result<DataMatrix> {
    check_alpha(alpha)?;
    if alpha == 1.0 || pair.identical {
        return Ok(pair.x1.clone());
    }
    if alpha == 0.0 {
        return Ok(pair.x2.clone());
    }
    DataMatrix::lin_comb(alpha, &pair.x1, 1.0 - alpha, &pair.x2)
}

/// `(2/K)(σ₁(X₁) + σ₁(X₂))²`.
pub fn proposition_bound(pair: &ComboPair, k: usize) -> Result<f64> {
    if k == 0 {
        return input("K must be >= 1");
    }
    Ok(2.0 / k as f64 * pair.scale())
}

/// `2|Δα|(σ₁(X₁) + σ₁(X₂))²`.
pub fn lipschitz_bound(pair: &ComboPair, delta_alpha: f64) -> f64 {
    2.0 * delta_alpha.abs() * pair.scale()
}

/// Exact Gram spectra on the grid `α_k = k/K`, `k = 0..=K`.
#[derive(Debug, Clone)]
pub struct SpectrumTable {
    pub k: usize,
    pub alphas: Vec<f64>,
    pub spectra: Vec<GramSpectrum>,
    pub sigma1_x1: f64,
    pub sigma1_x2: f64,
    /// Uniform cell radius `(2/K)(σ₁(X₁) + σ₁(X₂))²`.
    pub bound: f64,
}

pub fn grid_alpha(k: usize, big_k: usize) -> f64 {
    k as f64 / big_k as f64
}

/// Tabulates `gram_spectrum(X(α_k))` for every grid point. Grid points are
/// evaluated in parallel and assembled in grid order.
pub fn build_table(pair: &ComboPair, k: usize) -> Result<SpectrumTable> {
    let bound = proposition_bound(pair, k)?;
    let alphas: Vec<f64> = (0..=k).map(|i| grid_alpha(i, k)).collect();
    let spectra = alphas
        .par_iter()
        .map(|&a| gram_spectrum(&combine(pair, a)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumTable {
        k,
        alphas,
        spectra,
        sigma1_x1: pair.sigma1_x1,
        sigma1_x2: pair.sigma1_x2,
        bound,
    })
}

/// How a query `α` is tied to the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AnchorMode {
    /// Left end of the enclosing cell, uniform radius `(2/K)(σ₁+σ₂)²`.
    Proposition,
    /// Nearest grid point (ties to the lower index), radius `2|α − α_k|(σ₁+σ₂)²`.
    Nearest,
}

impl fmt::Display for AnchorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AnchorMode::Proposition => "proposition",
            AnchorMode::Nearest => "nearest",
        })
    }
}

impl FromStr for AnchorMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "proposition" => Ok(AnchorMode::Proposition),
            "nearest" => Ok(AnchorMode::Nearest),
            other => Err(format!(
                "unknown mode {other:?} (expected proposition|nearest)"
            )),
        }
    }
}

/// Index of the cell `[α_k, α_{k+1}]` holding `alpha`; `α = 1` maps to `K−1`.
pub fn left_anchor(alpha: f64, big_k: usize) -> usize {
    ((alpha * big_k as f64).floor() as usize).min(big_k - 1)
}

/// Nearest grid index, ties broken toward the lower index.
pub fn nearest_anchor(alpha: f64, big_k: usize) -> usize {
    let scaled = alpha * big_k as f64;
    let lo = (scaled.floor() as usize).min(big_k);
    if lo < big_k && scaled - lo as f64 > 0.5 {
        lo + 1
    } else {
        lo
    }
}

/// Predicted enclosures `[loᵢ, hiᵢ]` for the eigenvalues of `G(α)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenIntervals {
    pub alpha: f64,
    pub anchor_k: usize,
    pub mode: AnchorMode,
    pub radius: f64,
    /// `(lo, hi)` per eigenvalue index, `lo` clamped at zero.
    pub intervals: Vec<(f64, f64)>,
}

impl EigenIntervals {
    /// Whether each value of `spectrum` lies in its interval, allowing
    /// `slack` on both sides.
    pub fn contains(&self, spectrum: &GramSpectrum, slack: f64) -> bool {
        self.intervals
            .iter()
            .zip(spectrum.as_slice())
            .all(|(&(lo, hi), &v)| v >= lo - slack && v <= hi + slack)
    }

    /// The same intervals divided by `m`, i.e. enclosures for the covariance
    /// eigenvalues of the corresponding (centered) data.
    pub fn variance_intervals(&self) -> Vec<(f64, f64)> {
        let m = self.intervals.len() as f64;
        self.intervals
            .iter()
            .map(|&(lo, hi)| (lo / m, hi / m))
            .collect()
    }
}

pub fn predict_intervals(
    table: &SpectrumTable,
    pair: &ComboPair,
    alpha: f64,
    mode: AnchorMode,
) -> Result<EigenIntervals> {
    check_alpha(alpha)?;
    let (anchor_k, radius) = match mode {
        AnchorMode::Proposition => (left_anchor(alpha, table.k), table.bound),
        AnchorMode::Nearest => {
            let k = nearest_anchor(alpha, table.k);
            (k, lipschitz_bound(pair, alpha - table.alphas[k]))
        }
    };
    let intervals = table.spectra[anchor_k]
        .as_slice()
        .iter()
        .map(|&l| ((l - radius).max(0.0), l + radius))
        .collect();
    Ok(EigenIntervals {
        alpha,
        anchor_k,
        mode,
        radius,
        intervals,
    })
}

/// One dense sample of [`verify_bound`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifySample {
    pub alpha: f64,
    pub anchor_k: usize,
    /// `maxᵢ |λᵢ(G(α)) − λᵢ(G(α_k))|`
    pub max_deviation: f64,
    pub radius: f64,
}

/// Outcome of checking the uniform cell bound on a dense grid.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub samples: Vec<VerifySample>,
    pub violations: usize,
    pub max_deviation: f64,
    /// Smallest `radius − deviation` over all samples; small values show the
    /// bound is close to tight, negative values are violations.
    pub max_slack: f64,
}

/// Exact spectra on `dense_samples` uniform points of `[0, 1]`.
pub fn dense_spectra(pair: &ComboPair, dense_samples: usize) -> Result<Vec<(f64, GramSpectrum)>> {
    if dense_samples < 2 {
        return input("dense_samples must be >= 2");
    }
    let last = (dense_samples - 1) as f64;
    (0..dense_samples)
        .into_par_iter()
        .map(|i| {
            let a = i as f64 / last;
            Ok((a, gram_spectrum(&combine(pair, a)?)?))
        })
        .collect()
}

/// Checks every dense sample against the table entry at the left end of its
/// cell. A sample violates the bound when its deviation exceeds the radius
/// by more than `BOUND_REL_SLACK · (σ₁(X₁)+σ₁(X₂))²`.
pub fn verify_against(
    table: &SpectrumTable,
    pair: &ComboPair,
    dense: &[(f64, GramSpectrum)],
) -> VerifyReport {
    let slack = BOUND_REL_SLACK * pair.scale().max(table.bound);
    let samples: Vec<VerifySample> = dense
        .iter()
        .map(|(alpha, spectrum)| {
            let k = left_anchor(*alpha, table.k);
            VerifySample {
                alpha: *alpha,
                anchor_k: k,
                max_deviation: spectrum.max_abs_diff(&table.spectra[k]),
                radius: table.bound,
            }
        })
        .collect();
    let violations = samples
        .iter()
        .filter(|s| s.max_deviation > s.radius + slack)
        .count();
    let max_deviation = samples.iter().fold(0.0_f64, |m, s| m.max(s.max_deviation));
    let max_slack = samples
        .iter()
        .map(|s| s.radius - s.max_deviation)
        .fold(f64::INFINITY, f64::min);
    VerifyReport {
        samples,
        violations,
        max_deviation,
        max_slack,
    }
}

/// Builds a `K`-grid table and checks the uniform bound on a dense sweep.
pub fn verify_bound(pair: &ComboPair, k: usize, dense_samples: usize) -> Result<VerifyReport> {
    let table = build_table(pair, k)?;
    let dense = dense_spectra(pair, dense_samples)?;
    Ok(verify_against(&table, pair, &dense))
}
