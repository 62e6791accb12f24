//! Command-line front end. `main.rs` only forwards to [`run`].
//!
//! Exit codes: 0 when every check passes, 1 when a check fails (bound
//! violation, non-convergence), 2 for usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::bench::{self, BenchProblem, DEFAULT_DIM, DEFAULT_RANK};
use crate::combo::{
    build_table, dense_spectra, predict_intervals, verify_against, AnchorMode, ComboPair,
};
use crate::error::{Error, Result};
use crate::io::{fmt_f64, read_matrix_csv, write_csv, write_json, write_matrix_csv};
use crate::linalg::{norm, DataMatrix};
use crate::multiobj::{
    alpha_grid, pareto_sweep, ObjectivePair, OptimizerConfig, ReducedGradientConfig,
};
use crate::pca;
use crate::rng::SampleBox;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "combospec",
    version,
    about = "Gram spectra of convex combinations, PCA, and weighted-sum Pareto sweeps"
)]
pub struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "COMBOSPEC_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate Gram spectra of αX1 + (1−α)X2, check the bound, predict intervals.
    Spectrum(SpectrumArgs),
    /// Fit a centered PCA and report variances and reconstruction error.
    Pca(PcaArgs),
    /// Run a weighted-sum Pareto sweep described by a JSON config.
    Pareto(ParetoArgs),
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    pub x1: PathBuf,
    pub x2: PathBuf,
    /// Grid resolution K (grid α_k = k/K).
    #[arg(long = "k", default_value_t = 10)]
    pub k: usize,
    /// Number of dense α samples for the bound check.
    #[arg(long, default_value_t = crate::combo::DEFAULT_DENSE_SAMPLES)]
    pub dense: usize,
    #[arg(long, default_value = "proposition")]
    pub mode: AnchorMode,
    /// Query weights for intervals.csv, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub alpha: Vec<f64>,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct PcaArgs {
    pub x: PathBuf,
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ParetoArgs {
    pub config: PathBuf,
    /// Overrides the config seed.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let threads = cli.threads;
    let exec = move || match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(exec),
            Err(e) => {
                eprintln!("error: cannot start {n} threads: {e}");
                EXIT_USAGE
            }
        },
        None => exec(),
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Pca(a) => cmd_pca(a),
        Command::Pareto(a) => cmd_pareto(a, cli.threads),
    }
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.display().to_string(),
        source,
    })
}

pub fn cmd_spectrum(args: &SpectrumArgs) -> Result<i32> {
    if args.k == 0 {
        return Err(Error::Input("K must be >= 1".into()));
    }
    if args.dense < 2 {
        return Err(Error::Input("--dense must be >= 2".into()));
    }
    if let Some(a) = args.alpha.iter().find(|a| !(0.0..=1.0).contains(*a)) {
        return Err(Error::Input(format!("alpha = {a} lies outside [0, 1]")));
    }
    let pair = ComboPair::new(read_matrix_csv(&args.x1)?, read_matrix_csv(&args.x2)?)?;
    let (m, n) = pair.shape();
    let table = build_table(&pair, args.k)?;
    let dense = dense_spectra(&pair, args.dense)?;
    let report = verify_against(&table, &pair, &dense);
    ensure_dir(&args.out)?;

    let mut header = vec!["alpha".to_string()];
    header.extend((1..=m).map(|i| format!("lambda_{i}")));
    let rows: Vec<Vec<String>> = table
        .alphas
        .iter()
        .zip(&table.spectra)
        .map(|(a, s)| {
            std::iter::once(fmt_f64(*a))
                .chain(s.as_slice().iter().map(|&v| fmt_f64(v)))
                .collect()
        })
        .collect();
    write_csv(&args.out.join("table.csv"), Some(&header), &rows)?;

    let rows: Vec<Vec<String>> = report
        .samples
        .iter()
        .map(|s| {
            vec![
                fmt_f64(s.alpha),
                s.anchor_k.to_string(),
                fmt_f64(s.max_deviation),
                fmt_f64(s.radius),
            ]
        })
        .collect();
    let header: Vec<String> = ["alpha", "anchor_k", "max_deviation", "radius"]
        .map(String::from)
        .to_vec();
    write_csv(&args.out.join("verify.csv"), Some(&header), &rows)?;

    let mut rows = Vec::new();
    for &alpha in &args.alpha {
        let iv = predict_intervals(&table, &pair, alpha, args.mode)?;
        for (i, (lo, hi)) in iv.intervals.iter().enumerate() {
            rows.push(vec![
                fmt_f64(alpha),
                (i + 1).to_string(),
                fmt_f64(*lo),
                fmt_f64(*hi),
                iv.anchor_k.to_string(),
                iv.mode.to_string(),
            ]);
        }
    }
    let header: Vec<String> = ["alpha", "i", "lo", "hi", "anchor_k", "mode"]
        .map(String::from)
        .to_vec();
    write_csv(&args.out.join("intervals.csv"), Some(&header), &rows)?;

    write_json(
        &args.out.join("bound.json"),
        &json!({
            "m": m,
            "n": n,
            "k": args.k,
            "sigma1_x1": table.sigma1_x1,
            "sigma1_x2": table.sigma1_x2,
            "bound": table.bound,
            "dense_samples": args.dense,
            "violations": report.violations,
            "max_deviation": report.max_deviation,
            "max_slack": report.max_slack,
        }),
    )?;

    println!(
        "K = {}, bound = {}, max deviation = {}, violations = {}",
        args.k, table.bound, report.max_deviation, report.violations
    );
    Ok(if report.violations == 0 {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

pub fn cmd_pca(args: &PcaArgs) -> Result<i32> {
    let x = read_matrix_csv(&args.x)?;
    let model = pca::fit(&x, args.d)?;
    let mse = pca::reconstruction_mse(&x, args.d)?;
    let discarded = model.discarded_variance();
    ensure_dir(&args.out)?;

    write_matrix_csv(
        &args.out.join("mean.csv"),
        &DataMatrix::from_rows(&[&model.mean])?,
    )?;
    write_matrix_csv(&args.out.join("directions.csv"), &model.directions)?;
    let eig: Vec<Vec<String>> = model
        .c_eigenvalues
        .iter()
        .map(|&v| vec![fmt_f64(v)])
        .collect();
    write_csv(&args.out.join("eigenvalues.csv"), None, &eig)?;

    let explained = pca::explained_variance(&model).ok();
    write_json(
        &args.out.join("report.json"),
        &json!({
            "m": x.rows(),
            "n": x.cols(),
            "d": args.d,
            "degenerate": model.degenerate,
            "explained_variance": explained,
            "cumulative_explained_variance": explained.as_ref().map(|e| e.iter().sum::<f64>()),
            "reconstruction_mse": mse,
            "discarded_variance": discarded,
            "identity_residual": (mse - discarded).abs(),
            "orthonormality_residual": pca::orthonormality_residual(&model),
        }),
    )?;
    println!(
        "d = {}, reconstruction mse = {mse}, discarded variance = {discarded}",
        args.d
    );
    Ok(EXIT_OK)
}

/// Box bounds as either one `[lo, hi]` for every coordinate or one pair per coordinate.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoxSpec {
    Uniform([f64; 2]),
    PerCoordinate(Vec<[f64; 2]>),
}

impl Default for BoxSpec {
    fn default() -> Self {
        BoxSpec::Uniform([-5.0, 5.0])
    }
}

impl BoxSpec {
    fn resolve(&self, dim: usize) -> Result<SampleBox> {
        match self {
            BoxSpec::Uniform([lo, hi]) => SampleBox::cube(dim, *lo, *hi),
            BoxSpec::PerCoordinate(b) => {
                if b.len() != dim {
                    return Err(Error::Input(format!(
                        "box lists {} coordinates, problem has {dim}",
                        b.len()
                    )));
                }
                SampleBox::new(b.iter().map(|&[lo, hi]| (lo, hi)).collect())
            }
        }
    }

    fn materialize(b: &SampleBox) -> Self {
        BoxSpec::PerCoordinate(b.bounds.iter().map(|&(lo, hi)| [lo, hi]).collect())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OptimizerSection {
    pub step_size: f64,
    pub max_iters: usize,
    pub grad_tol: f64,
    pub n_starts: usize,
    pub start_box: BoxSpec,
    pub backtracking: bool,
}

impl Default for OptimizerSection {
    fn default() -> Self {
        let d = OptimizerConfig::new(1);
        Self {
            step_size: d.step_size,
            max_iters: d.max_iters,
            grad_tol: d.grad_tol,
            n_starts: d.n_starts,
            start_box: BoxSpec::default(),
            backtracking: d.backtracking,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReductionSection {
    pub d: usize,
    #[serde(default)]
    pub m_samples: Option<usize>,
    #[serde(default)]
    pub sample_box: BoxSpec,
    #[serde(default = "yes")]
    pub include_mean: bool,
    #[serde(default)]
    pub refresh_every: Option<usize>,
}

fn yes() -> bool {
    true
}

/// Sweep config document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParetoConfig {
    pub problem: String,
    #[serde(default)]
    pub dim: Option<usize>,
    #[serde(default)]
    pub rank: Option<usize>,
    #[serde(default)]
    pub alphas: Option<Vec<f64>>,
    #[serde(default)]
    pub alpha_count: Option<usize>,
    #[serde(default)]
    pub optimizer: OptimizerSection,
    #[serde(default)]
    pub reduction: Option<ReductionSection>,
    #[serde(default)]
    pub seed: u64,
}

/// A config with every default filled in.
#[derive(Debug)]
pub struct ResolvedSweep {
    pub problem: BenchProblem,
    pub alphas: Vec<f64>,
    pub optimizer: OptimizerConfig,
    pub reduction: Option<ReducedGradientConfig>,
    pub document: ParetoConfig,
}

pub fn resolve_config(cfg: &ParetoConfig, seed_override: Option<u64>) -> Result<ResolvedSweep> {
    let dim = cfg.dim.unwrap_or(DEFAULT_DIM);
    let rank = cfg
        .rank
        .unwrap_or(DEFAULT_RANK.min(dim.saturating_sub(1)).max(1));
    let problem = bench::by_name(&cfg.problem, dim, rank)?;
    let alphas = match (&cfg.alphas, cfg.alpha_count) {
        (Some(_), Some(_)) => {
            return Err(Error::Input(
                "give either alphas or alpha_count, not both".into(),
            ))
        }
        (Some(a), None) => a.clone(),
        (None, Some(c)) => alpha_grid(c)?,
        (None, None) => alpha_grid(11)?,
    };
    if alphas.is_empty() {
        return Err(Error::Input("alphas is empty".into()));
    }
    if let Some(a) = alphas.iter().find(|a| !(0.0..=1.0).contains(*a)) {
        return Err(Error::Input(format!("alpha = {a} lies outside [0, 1]")));
    }
    let seed = seed_override.unwrap_or(cfg.seed);
    let o = &cfg.optimizer;
    let optimizer = OptimizerConfig {
        step_size: o.step_size,
        max_iters: o.max_iters,
        grad_tol: o.grad_tol,
        n_starts: o.n_starts,
        seed,
        start_box: o.start_box.resolve(dim)?,
        backtracking: o.backtracking,
    };
    optimizer.validate(dim)?;
    let reduction = match &cfg.reduction {
        Some(r) => {
            let rc = ReducedGradientConfig {
                m_samples: r.m_samples.unwrap_or(4 * dim),
                d: r.d,
                sample_box: r.sample_box.resolve(dim)?,
                include_mean: r.include_mean,
                refresh_every: r.refresh_every,
            };
            rc.validate(dim)?;
            Some(rc)
        }
        None => None,
    };
    let document = ParetoConfig {
        problem: cfg.problem.clone(),
        dim: Some(dim),
        rank: (cfg.problem == "lowrank").then_some(rank),
        alphas: Some(alphas.clone()),
        alpha_count: None,
        optimizer: OptimizerSection {
            start_box: BoxSpec::materialize(&optimizer.start_box),
            ..o.clone()
        },
        reduction: reduction.as_ref().map(|rc| ReductionSection {
            d: rc.d,
            m_samples: Some(rc.m_samples),
            sample_box: BoxSpec::materialize(&rc.sample_box),
            include_mean: rc.include_mean,
            refresh_every: rc.refresh_every,
        }),
        seed,
    };
    Ok(ResolvedSweep {
        problem,
        alphas,
        optimizer,
        reduction,
        document,
    })
}

pub fn cmd_pareto(args: &ParetoArgs, threads: Option<usize>) -> Result<i32> {
    let started = Instant::now();
    let raw = fs::read(&args.config).map_err(|source| Error::Io {
        path: args.config.display().to_string(),
        source,
    })?;
    let cfg: ParetoConfig = serde_json::from_slice(&raw)
        .map_err(|e| Error::Parse(format!("{}: {e}", args.config.display())))?;
    let resolved = resolve_config(&cfg, args.seed)?;
    let problem = &resolved.problem;
    let sweep = pareto_sweep(
        &problem.pair,
        &resolved.alphas,
        &resolved.optimizer,
        resolved.reduction.as_ref(),
    )?;
    ensure_dir(&args.out)?;

    let n = problem.pair.dim();
    let mut header: Vec<String> = ["alpha", "converged", "iters", "j1", "j2"]
        .map(String::from)
        .to_vec();
    header.extend((1..=n).map(|i| format!("p_{i}")));
    let rows: Vec<Vec<String>> = sweep
        .points()
        .map(|p| {
            let mut r = vec![
                fmt_f64(p.alpha),
                p.converged.to_string(),
                p.iters.to_string(),
                fmt_f64(p.j1),
                fmt_f64(p.j2),
            ];
            r.extend(p.p_star.iter().map(|&v| fmt_f64(v)));
            r
        })
        .collect();
    write_csv(&args.out.join("pareto.csv"), Some(&header), &rows)?;

    let mut max_gap: Option<f64> = None;
    if problem.has_oracle() {
        let rows: Vec<Vec<String>> = sweep
            .points()
            .filter_map(|p| {
                let oracle = problem.oracle_minimizer(p.alpha)?;
                let diff: Vec<f64> = p.p_star.iter().zip(&oracle).map(|(a, b)| a - b).collect();
                let gap = norm(&diff);
                max_gap = Some(max_gap.map_or(gap, |g| g.max(gap)));
                Some(vec![fmt_f64(p.alpha), fmt_f64(gap)])
            })
            .collect();
        let header: Vec<String> = vec!["alpha".into(), "gap".into()];
        write_csv(&args.out.join("oracle_gap.csv"), Some(&header), &rows)?;
    }

    let failures: Vec<_> = sweep
        .failures()
        .map(|(a, m)| json!({ "alpha": a, "error": m }))
        .collect();
    let all_converged = sweep.all_converged();
    write_json(
        &args.out.join("manifest.json"),
        &json!({
            "command": "pareto",
            "tool_version": env!("CARGO_PKG_VERSION"),
            "config": resolved.document,
            "input_digests": { args.config.display().to_string(): sha256_hex(&raw) },
            "seed": resolved.optimizer.seed,
            "threads": threads,
            "wall_clock_seconds": started.elapsed().as_secs_f64(),
            "all_converged": all_converged,
            "max_oracle_gap": max_gap,
            "failures": failures,
        }),
    )?;
    println!(
        "{}: {} weights, all converged = {all_converged}{}",
        problem.name(),
        resolved.alphas.len(),
        max_gap
            .map(|g| format!(", max oracle gap = {g:e}"))
            .unwrap_or_default()
    );
    Ok(if all_converged {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
