//! Weighted-sum scalarization of two objectives, fixed-step gradient descent
//! with multi-start, and the PCA-reduced gradient.
//!
//! The reduced gradient replaces `∇J_α(p)` with its orthogonal projection onto
//! the span of the mean sampled gradient and the leading principal directions
//! of the centered sampled gradient field. Because `∇J_α = α∇J₁ + (1−α)∇J₂`,
//! the sampled field at fixed points is the convex combination of the two
//! single-objective fields, which is what ties this module to
//! [`crate::combo`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combo::{build_table, predict_intervals, AnchorMode, ComboPair, EigenIntervals};
use crate::error::{input, Error, Result};
use crate::linalg::{axpy, dot, gram_spectrum, norm, DataMatrix, GramSpectrum};
use crate::pca::{self, center};
use crate::rng::{stream, SampleBox};

/// Principal directions with `σᵢ ≤ DIRECTION_REL_TOL · ‖field‖_F` carry no variance and are dropped.
pub const DIRECTION_REL_TOL: f64 = 1e-10;

/// The mean gradient is dropped when its residual against the retained
/// directions is below this fraction of its norm.
pub const MEAN_RESIDUAL_TOL: f64 = 1e-12;

/// Halvings tried before accepting a step that increases `J_α`.
const MAX_HALVINGS: usize = 60;

/// Changes of `J_α` below this fraction of `max(|J_α|, |J_α(start)|)` are too
/// close to evaluation noise to decide a backtracking step. Near a minimizer
/// the noise scales with the size of the terms of `J_α`, not with `J_α`
/// itself. Inside this band the change is estimated from gradients instead.
pub const RISE_REL_TOL: f64 = 1e-10;

/// Final values of different starts closer than this fraction of the largest
/// starting `|J_α|` count as tied; ties go to the lowest start index.
pub const START_TIE_REL_TOL: f64 = 1e-12;

/// Two differentiable objectives on `R^n`.
///
/// Evaluators may be called concurrently unless [`concurrent_safe`] returns
/// `false`, in which case the runners evaluate serially.
///
/// [`concurrent_safe`]: ObjectivePair::concurrent_safe
pub trait ObjectivePair: Send + Sync {
    fn name(&self) -> &str;
    fn dim(&self) -> usize;
    fn j1(&self, p: &[f64]) -> f64;
    fn j2(&self, p: &[f64]) -> f64;
    fn grad1(&self, p: &[f64]) -> Vec<f64>;
    fn grad2(&self, p: &[f64]) -> Vec<f64>;

    fn concurrent_safe(&self) -> bool {
        true
    }
}

type ScalarFn = Box<dyn Fn(&[f64]) -> f64 + Send + Sync>;
type VectorFn = Box<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;
type ScalarRef<'a> = &'a dyn Fn(&[f64]) -> f64;

/// An [`ObjectivePair`] assembled from closures.
pub struct FnPair {
    name: String,
    dim: usize,
    j1: ScalarFn,
    j2: ScalarFn,
    grad1: VectorFn,
    grad2: VectorFn,
    serial: bool,
}

impl FnPair {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        j1: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
        grad1: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
        j2: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
        grad2: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            dim,
            j1: Box::new(j1),
            j2: Box::new(j2),
            grad1: Box::new(grad1),
            grad2: Box::new(grad2),
            serial: false,
        }
    }

    /// Marks the evaluators as unsafe for concurrent use.
    pub fn serial(mut self) -> Self {
        self.serial = true;
        self
    }
}

impl ObjectivePair for FnPair {
    fn name(&self) -> &str {
        &self.name
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn j1(&self, p: &[f64]) -> f64 {
        (self.j1)(p)
    }
    fn j2(&self, p: &[f64]) -> f64 {
        (self.j2)(p)
    }
    fn grad1(&self, p: &[f64]) -> Vec<f64> {
        (self.grad1)(p)
    }
    fn grad2(&self, p: &[f64]) -> Vec<f64> {
        (self.grad2)(p)
    }
    fn concurrent_safe(&self) -> bool {
        !self.serial
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return input(format!("alpha = {alpha} lies outside [0, 1]"));
    }
    Ok(())
}

fn check_point(pair: &dyn ObjectivePair, p: &[f64]) -> Result<()> {
    if p.len() != pair.dim() {
        return input(format!(
            "point of length {} for a problem of dimension {}",
            p.len(),
            pair.dim()
        ));
    }
    Ok(())
}

fn finite_scalar(v: f64, what: &'static str, p: &[f64]) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Evaluation {
            what,
            point: p.to_vec(),
        })
    }
}

fn finite_vector(v: Vec<f64>, what: &'static str, p: &[f64]) -> Result<Vec<f64>> {
    if v.len() == p.len() && v.iter().all(|x| x.is_finite()) {
        Ok(v)
    } else {
        Err(Error::Evaluation {
            what,
            point: p.to_vec(),
        })
    }
}

/// `J_α(p) = αJ₁(p) + (1−α)J₂(p)`.
pub fn weighted_value(pair: &dyn ObjectivePair, alpha: f64, p: &[f64]) -> Result<f64> {
    check_alpha(alpha)?;
    check_point(pair, p)?;
    let j1 = finite_scalar(pair.j1(p), "J1", p)?;
    let j2 = finite_scalar(pair.j2(p), "J2", p)?;
    Ok(alpha * j1 + (1.0 - alpha) * j2)
}

/// `∇J_α(p) = α∇J₁(p) + (1−α)∇J₂(p)`.
pub fn weighted_gradient(pair: &dyn ObjectivePair, alpha: f64, p: &[f64]) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    check_point(pair, p)?;
    let g1 = finite_vector(pair.grad1(p), "grad1", p)?;
    let g2 = finite_vector(pair.grad2(p), "grad2", p)?;
    Ok(g1
        .iter()
        .zip(&g2)
        .map(|(a, b)| alpha * a + (1.0 - alpha) * b)
        .collect())
}

/// Data matrix whose row `j` is `∇J_α(p_j)`.
pub fn sample_gradient_field(
    pair: &dyn ObjectivePair,
    alpha: f64,
    points: &[Vec<f64>],
) -> Result<DataMatrix> {
    check_alpha(alpha)?;
    if points.is_empty() {
        return input("no sample points");
    }
    let mut data = Vec::with_capacity(points.len() * pair.dim());
    for (index, p) in points.iter().enumerate() {
        let g = weighted_gradient(pair, alpha, p).map_err(|e| Error::AtSample {
            index,
            source: Box::new(e),
        })?;
        data.extend(g);
    }
    DataMatrix::new(points.len(), pair.dim(), data)
}

/// Outcome of a finite-difference gradient check.
#[derive(Debug, Clone)]
pub struct GradientCheck {
    /// Largest `‖fd − ∇J‖∞ / max(1, ‖∇J‖∞)` over points and both objectives.
    pub max_rel_error: f64,
    pub worst_point: Vec<f64>,
}

impl GradientCheck {
    pub fn passes(&self, rel_tol: f64) -> bool {
        self.max_rel_error <= rel_tol
    }
}

/// Compares both gradients with central differences using the step
/// `h = 1e-6 · max(1, |pᵢ|)` per coordinate.
pub fn validate_gradients(pair: &dyn ObjectivePair, points: &[Vec<f64>]) -> Result<GradientCheck> {
    let mut worst = GradientCheck {
        max_rel_error: 0.0,
        worst_point: Vec::new(),
    };
    for p in points {
        check_point(pair, p)?;
        for which in [1, 2] {
            let (f, g): (ScalarRef, Vec<f64>) = if which == 1 {
                (&|x| pair.j1(x), pair.grad1(p))
            } else {
                (&|x| pair.j2(x), pair.grad2(p))
            };
            let g = finite_vector(g, "gradient", p)?;
            let mut err: f64 = 0.0;
            let mut x = p.clone();
            for i in 0..p.len() {
                let h = 1e-6 * p[i].abs().max(1.0);
                x[i] = p[i] + h;
                let up = f(&x);
                x[i] = p[i] - h;
                let down = f(&x);
                x[i] = p[i];
                let fd = (up - down) / (2.0 * h);
                err = err.max((fd - g[i]).abs());
            }
            let scale = g.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
            let rel = err / scale;
            if rel.is_nan() || rel > worst.max_rel_error {
                worst = GradientCheck {
                    max_rel_error: rel,
                    worst_point: p.clone(),
                };
            }
        }
    }
    Ok(worst)
}

/// Settings for the fixed-step gradient method.
#[derive(Debug, Clone)]
pub struct OptimizerConfig {
    pub step_size: f64,
    pub max_iters: usize,
    /// Stop once the norm of the step-driving vector is at most this.
    pub grad_tol: f64,
    pub n_starts: usize,
    pub seed: u64,
    pub start_box: SampleBox,
    /// Halve the step while `J_α` would increase.
    pub backtracking: bool,
}

impl OptimizerConfig {
    pub fn new(dim: usize) -> Self {
        Self {
            step_size: 0.1,
            max_iters: 10_000,
            grad_tol: 1e-10,
            n_starts: 4,
            seed: 0,
            start_box: SampleBox::cube(dim, -5.0, 5.0).expect("valid cube"),
            backtracking: true,
        }
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        if !(self.step_size > 0.0 && self.step_size.is_finite()) {
            return input("step_size must be positive");
        }
        if self.grad_tol.is_nan() || self.grad_tol <= 0.0 {
            return input("grad_tol must be positive");
        }
        if self.n_starts == 0 {
            return input("n_starts must be >= 1");
        }
        if self.start_box.dim() != dim {
            return input(format!(
                "start_box has {} coordinates, problem has {dim}",
                self.start_box.dim()
            ));
        }
        Ok(())
    }
}

/// Settings for the PCA-reduced gradient.
#[derive(Debug, Clone)]
pub struct ReducedGradientConfig {
    pub m_samples: usize,
    pub d: usize,
    pub sample_box: SampleBox,
    pub include_mean: bool,
    /// Rebuild the basis from a fresh sample every this many iterations.
    /// `None` keeps one basis for the whole run.
    pub refresh_every: Option<usize>,
}

impl ReducedGradientConfig {
    pub fn new(sample_box: SampleBox, m_samples: usize, d: usize) -> Self {
        Self {
            m_samples,
            d,
            sample_box,
            include_mean: true,
            refresh_every: None,
        }
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        if self.m_samples < 2 {
            return input("m_samples must be >= 2");
        }
        let q = self.m_samples.min(dim);
        if self.d == 0 || self.d > q {
            return input(format!("d = {} must lie in 1..={q}", self.d));
        }
        if self.sample_box.dim() != dim {
            return input(format!(
                "sample_box has {} coordinates, problem has {dim}",
                self.sample_box.dim()
            ));
        }
        if self.refresh_every == Some(0) {
            return input("refresh_every must be >= 1");
        }
        Ok(())
    }
}

/// Orthonormal basis of the reduced-gradient subspace.
#[derive(Debug, Clone)]
pub struct ReducedBasis {
    columns: Vec<Vec<f64>>,
    /// Number of leading columns that are principal directions.
    pub directions: usize,
    /// Whether the last column came from the mean gradient.
    pub includes_mean: bool,
}

impl ReducedBasis {
    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn dim(&self) -> usize {
        self.columns[0].len()
    }

    pub fn column(&self, i: usize) -> &[f64] {
        &self.columns[i]
    }

    pub fn to_matrix(&self) -> DataMatrix {
        DataMatrix::from_columns(&self.columns).expect("basis has finite columns")
    }

    /// Orthogonal projection `B B' g`.
    pub fn project(&self, g: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; g.len()];
        for b in &self.columns {
            axpy(dot(b, g), b, &mut out);
        }
        out
    }
}

/// Builds the reduced basis from a sampled gradient field: the retained
/// principal directions of the centered field first, then the mean gradient
/// orthogonalised against them when it adds a new direction.
pub fn reduced_basis(gradients: &DataMatrix, cfg: &ReducedGradientConfig) -> Result<ReducedBasis> {
    let (m, n) = gradients.shape();
    if m < 2 {
        return input("reduced basis needs at least two sampled gradients");
    }
    if cfg.d == 0 || cfg.d > m.min(n) {
        return input(format!("d = {} must lie in 1..={}", cfg.d, m.min(n)));
    }
    let scale = gradients.frobenius_norm();
    if scale == 0.0 {
        return Err(Error::Degenerate(
            "sampled gradient field is identically zero".into(),
        ));
    }

    let model = pca::fit(gradients, cfg.d)?;
    let cutoff = (DIRECTION_REL_TOL * scale).powi(2) / m as f64;
    let mut columns: Vec<Vec<f64>> = (0..cfg.d)
        .filter(|&i| !model.degenerate && model.c_eigenvalues[i] > cutoff)
        .map(|i| model.direction(i))
        .collect();
    let directions = columns.len();

    let mut includes_mean = false;
    let mean_norm = norm(&model.mean);
    if cfg.include_mean && mean_norm > 0.0 {
        let mut r = model.mean.clone();
        for _ in 0..2 {
            for b in &columns {
                let c = dot(b, &r);
                axpy(-c, b, &mut r);
            }
        }
        let rn = norm(&r);
        if rn > MEAN_RESIDUAL_TOL * mean_norm {
            r.iter_mut().for_each(|x| *x /= rn);
            columns.push(r);
            includes_mean = true;
        }
    }
    if columns.is_empty() {
        return Err(Error::Degenerate(
            "sampled gradient field has no variance and the mean direction is excluded".into(),
        ));
    }
    Ok(ReducedBasis {
        columns,
        directions,
        includes_mean,
    })
}

/// Samples `m_samples` points from the box (stream `gradient-samples`,
/// index `refresh`) and builds the reduced basis of `∇J_α` there.
pub fn sampled_basis(
    pair: &dyn ObjectivePair,
    alpha: f64,
    cfg: &ReducedGradientConfig,
    seed: u64,
    refresh: u64,
) -> Result<ReducedBasis> {
    let points = sample_points(&cfg.sample_box, cfg.m_samples, seed, refresh);
    reduced_basis(&sample_gradient_field(pair, alpha, &points)?, cfg)
}

/// The sample points shared by every `α` of a sweep.
pub fn sample_points(
    sample_box: &SampleBox,
    count: usize,
    seed: u64,
    refresh: u64,
) -> Vec<Vec<f64>> {
    sample_box.sample_many(count, &mut stream(seed, "gradient-samples", refresh))
}

/// Starting points for multi-start descent.
pub fn start_points(cfg: &OptimizerConfig) -> Vec<Vec<f64>> {
    (0..cfg.n_starts)
        .map(|s| {
            cfg.start_box
                .sample(&mut stream(cfg.seed, "starts", s as u64))
        })
        .collect()
}

/// Result of one gradient-descent run.
#[derive(Debug, Clone)]
pub struct Descent {
    pub p: Vec<f64>,
    pub value: f64,
    pub iters: usize,
    pub converged: bool,
    /// `J_α` at the starting point.
    pub start_value: f64,
    /// Iterates `p₀, p₁, ...` when recording was requested.
    pub trace: Vec<Vec<f64>>,
}

/// Fixed-step gradient descent from `start`. With a basis, each step uses the
/// projection of the exact gradient onto it.
pub fn descend(
    pair: &dyn ObjectivePair,
    alpha: f64,
    start: &[f64],
    cfg: &OptimizerConfig,
    basis: Option<&ReducedBasis>,
    record_trace: bool,
) -> Result<Descent> {
    run_descent(
        pair,
        alpha,
        start,
        cfg,
        basis.cloned(),
        record_trace,
        |_| Ok(None),
    )
}

fn run_descent(
    pair: &dyn ObjectivePair,
    alpha: f64,
    start: &[f64],
    cfg: &OptimizerConfig,
    mut basis: Option<ReducedBasis>,
    record_trace: bool,
    mut refresh: impl FnMut(usize) -> Result<Option<ReducedBasis>>,
) -> Result<Descent> {
    let mut p = start.to_vec();
    let mut value = weighted_value(pair, alpha, &p)?;
    let start_scale = value.abs();
    let mut trace = Vec::new();
    if record_trace {
        trace.push(p.clone());
    }
    let mut converged = false;
    let mut iters = 0;
    while iters < cfg.max_iters {
        if let Some(b) = refresh(iters)? {
            basis = Some(b);
        }
        let g = weighted_gradient(pair, alpha, &p)?;
        let dir = match &basis {
            Some(b) => b.project(&g),
            None => g.clone(),
        };
        if norm(&dir) <= cfg.grad_tol {
            converged = true;
            break;
        }
        let mut step = cfg.step_size;
        let mut halvings = 0;
        let (next, next_value) = loop {
            let mut cand = p.clone();
            axpy(-step, &dir, &mut cand);
            let v = weighted_value(pair, alpha, &cand)?;
            if !cfg.backtracking || halvings == MAX_HALVINGS {
                break (cand, v);
            }
            let delta = v - value;
            let rises = if delta.abs() > RISE_REL_TOL * value.abs().max(start_scale) {
                delta > 0.0
            } else {
                // Trapezoid rule along the step: ΔJ ≈ −(t/2)(g + g_new)·dir.
                let g_new = weighted_gradient(pair, alpha, &cand)?;
                dot(&g, &dir) + dot(&g_new, &dir) < 0.0
            };
            if !rises {
                break (cand, v);
            }
            step *= 0.5;
            halvings += 1;
        };
        p = next;
        value = next_value;
        iters += 1;
        if record_trace {
            trace.push(p.clone());
        }
    }
    Ok(Descent {
        p,
        value,
        iters,
        converged,
        start_value: start_scale,
        trace,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GradientMode {
    Exact,
    Reduced,
}

/// Approximate Pareto point found for one weight.
#[derive(Debug, Clone)]
pub struct ParetoPoint {
    pub alpha: f64,
    pub p_star: Vec<f64>,
    pub j1: f64,
    pub j2: f64,
    pub iters: usize,
    pub converged: bool,
    pub mode: GradientMode,
    /// Which start produced `p_star`.
    pub start_index: usize,
    /// Rank of the reduced basis, when one was used.
    pub basis_rank: Option<usize>,
    pub diagnostics: Vec<String>,
}

/// Multi-start descent on `J_α`; returns the final point with the lowest
/// `J_α` (lowest start index on ties). Fails only when every start fails.
pub fn minimize(
    pair: &dyn ObjectivePair,
    alpha: f64,
    cfg: &OptimizerConfig,
    reduction: Option<&ReducedGradientConfig>,
) -> Result<ParetoPoint> {
    check_alpha(alpha)?;
    cfg.validate(pair.dim())?;
    let basis = match reduction {
        Some(r) => {
            r.validate(pair.dim())?;
            Some(sampled_basis(pair, alpha, r, cfg.seed, 0)?)
        }
        None => None,
    };
    let starts = start_points(cfg);
    let run = |start: &Vec<f64>| {
        let refresh_every = reduction.and_then(|r| r.refresh_every);
        run_descent(pair, alpha, start, cfg, basis.clone(), false, |it| {
            match (reduction, refresh_every) {
                (Some(r), Some(every)) if it > 0 && it % every == 0 => {
                    sampled_basis(pair, alpha, r, cfg.seed, (it / every) as u64).map(Some)
                }
                _ => Ok(None),
            }
        })
    };
    let runs: Vec<Result<Descent>> = if pair.concurrent_safe() {
        starts.par_iter().map(run).collect()
    } else {
        starts.iter().map(run).collect()
    };

    let tie = START_TIE_REL_TOL
        * runs
            .iter()
            .flatten()
            .fold(0.0_f64, |m, d| m.max(d.start_value));
    let mut diagnostics = Vec::new();
    let mut best: Option<(usize, Descent)> = None;
    let mut first_err = None;
    for (i, r) in runs.into_iter().enumerate() {
        match r {
            Ok(d) => {
                if best.as_ref().is_none_or(|(_, b)| d.value < b.value - tie) {
                    best = Some((i, d));
                }
            }
            Err(e) => {
                diagnostics.push(format!("start {i} aborted: {e}"));
                first_err.get_or_insert(e);
            }
        }
    }
    let Some((start_index, d)) = best else {
        return Err(first_err.expect("at least one start"));
    };
    let j1 = finite_scalar(pair.j1(&d.p), "J1", &d.p)?;
    let j2 = finite_scalar(pair.j2(&d.p), "J2", &d.p)?;
    Ok(ParetoPoint {
        alpha,
        p_star: d.p,
        j1,
        j2,
        iters: d.iters,
        converged: d.converged,
        mode: if reduction.is_some() {
            GradientMode::Reduced
        } else {
            GradientMode::Exact
        },
        start_index,
        basis_rank: basis.as_ref().map(ReducedBasis::rank),
        diagnostics,
    })
}

/// `count` uniformly spaced weights from 0 to 1 inclusive.
pub fn alpha_grid(count: usize) -> Result<Vec<f64>> {
    match count {
        0 => input("alpha_count must be >= 1"),
        1 => Ok(vec![0.5]),
        _ => Ok((0..count).map(|i| i as f64 / (count - 1) as f64).collect()),
    }
}

/// One weight of a sweep and what came of it.
#[derive(Debug, Clone)]
pub struct SweepEntry {
    pub alpha: f64,
    pub outcome: std::result::Result<ParetoPoint, String>,
}

#[derive(Debug, Clone)]
pub struct Sweep {
    pub entries: Vec<SweepEntry>,
}

impl Sweep {
    pub fn points(&self) -> impl Iterator<Item = &ParetoPoint> {
        self.entries.iter().filter_map(|e| e.outcome.as_ref().ok())
    }

    pub fn failures(&self) -> impl Iterator<Item = (f64, &str)> {
        self.entries
            .iter()
            .filter_map(|e| e.outcome.as_ref().err().map(|m| (e.alpha, m.as_str())))
    }

    pub fn all_converged(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.outcome.as_ref().is_ok_and(|p| p.converged))
    }
}

/// Independent [`minimize`] runs, one per weight, in input order.
pub fn pareto_sweep(
    pair: &dyn ObjectivePair,
    alphas: &[f64],
    cfg: &OptimizerConfig,
    reduction: Option<&ReducedGradientConfig>,
) -> Result<Sweep> {
    if alphas.is_empty() {
        return input("no alpha values to sweep");
    }
    cfg.validate(pair.dim())?;
    if let Some(r) = reduction {
        r.validate(pair.dim())?;
    }
    let run = |&alpha: &f64| SweepEntry {
        alpha,
        outcome: minimize(pair, alpha, cfg, reduction).map_err(|e| e.to_string()),
    };
    let entries = if pair.concurrent_safe() {
        alphas.par_iter().map(run).collect()
    } else {
        alphas.iter().map(run).collect()
    };
    Ok(Sweep { entries })
}

/// The two centered single-objective gradient fields at `points`.
pub fn centered_fields(pair: &dyn ObjectivePair, points: &[Vec<f64>]) -> Result<ComboPair> {
    let (x1, _) = center(&sample_gradient_field(pair, 1.0, points)?);
    let (x2, _) = center(&sample_gradient_field(pair, 0.0, points)?);
    ComboPair::new(x1, x2)
}

/// Predicted enclosures for the eigenvalues of the centered Gram matrix of
/// the `∇J_α` field at `points`, from a `K`-grid table over the weight.
/// Divide by `points.len()` (see [`EigenIntervals::variance_intervals`]) for
/// the covariance eigenvalues.
pub fn variance_forecast(
    pair: &dyn ObjectivePair,
    points: &[Vec<f64>],
    k: usize,
    alpha: f64,
    mode: AnchorMode,
) -> Result<EigenIntervals> {
    let fields = centered_fields(pair, points)?;
    let table = build_table(&fields, k)?;
    predict_intervals(&table, &fields, alpha, mode)
}

/// Direct computation of what [`variance_forecast`] predicts.
pub fn centered_gram_spectrum(
    pair: &dyn ObjectivePair,
    points: &[Vec<f64>],
    alpha: f64,
) -> Result<GramSpectrum> {
    let (x, _) = center(&sample_gradient_field(pair, alpha, points)?);
    gram_spectrum(&x)
}
