//! Analytic two-objective test problems with closed-form weighted minimizers.

use rand::Rng;

use crate::error::{input, Error, Result};
use crate::linalg::{cholesky, cholesky_solve, dot, DataMatrix};
use crate::multiobj::ObjectivePair;
use crate::rng::stream;

/// Seed used to build the fixed problem catalog.
const CATALOG_SEED: u64 = 0x5eed_f00d;

pub const DEFAULT_DIM: usize = 4;
pub const DEFAULT_RANK: usize = 2;

/// `Jᵢ(p) = ½ (p − cᵢ)' Aᵢ (p − cᵢ)` for `i = 1, 2`.
#[derive(Debug, Clone)]
pub struct QuadraticPair {
    name: String,
    a1: DataMatrix,
    c1: Vec<f64>,
    a2: DataMatrix,
    c2: Vec<f64>,
}

impl QuadraticPair {
    fn eval(a: &DataMatrix, c: &[f64], p: &[f64]) -> f64 {
        let r: Vec<f64> = p.iter().zip(c).map(|(x, y)| x - y).collect();
        0.5 * dot(&r, &a.mul_vec(&r).expect("dimension checked"))
    }

    fn grad(a: &DataMatrix, c: &[f64], p: &[f64]) -> Vec<f64> {
        let r: Vec<f64> = p.iter().zip(c).map(|(x, y)| x - y).collect();
        a.mul_vec(&r).expect("dimension checked")
    }

    pub fn hessians(&self) -> (&DataMatrix, &DataMatrix) {
        (&self.a1, &self.a2)
    }

    pub fn centers(&self) -> (&[f64], &[f64]) {
        (&self.c1, &self.c2)
    }

    /// `αA₁ + (1−α)A₂`, the Hessian of `J_α`.
    pub fn weighted_hessian(&self, alpha: f64) -> DataMatrix {
        DataMatrix::lin_comb(alpha, &self.a1, 1.0 - alpha, &self.a2).expect("same shape")
    }
}

impl ObjectivePair for QuadraticPair {
    fn name(&self) -> &str {
        &self.name
    }
    fn dim(&self) -> usize {
        self.c1.len()
    }
    fn j1(&self, p: &[f64]) -> f64 {
        Self::eval(&self.a1, &self.c1, p)
    }
    fn j2(&self, p: &[f64]) -> f64 {
        Self::eval(&self.a2, &self.c2, p)
    }
    fn grad1(&self, p: &[f64]) -> Vec<f64> {
        Self::grad(&self.a1, &self.c1, p)
    }
    fn grad2(&self, p: &[f64]) -> Vec<f64> {
        Self::grad(&self.a2, &self.c2, p)
    }
}

/// A catalog problem and what is known about it in closed form.
#[derive(Debug, Clone)]
pub struct BenchProblem {
    pub pair: QuadraticPair,
    pub description: String,
    has_oracle: bool,
    /// Rank of every sampled gradient field, when the construction fixes it.
    pub field_rank: Option<usize>,
}

impl BenchProblem {
    pub fn name(&self) -> &str {
        &self.pair.name
    }

    /// Unique minimizer of `J_α`: the solution of
    /// `(αA₁ + (1−α)A₂) p = αA₁c₁ + (1−α)A₂c₂`. `None` when the problem has
    /// no unique minimizer.
    pub fn oracle_minimizer(&self, alpha: f64) -> Option<Vec<f64>> {
        if !self.has_oracle || !(0.0..=1.0).contains(&alpha) {
            return None;
        }
        let h = self.pair.weighted_hessian(alpha);
        let l = cholesky(&h).ok()?;
        let r1 = self.pair.a1.mul_vec(&self.pair.c1).ok()?;
        let r2 = self.pair.a2.mul_vec(&self.pair.c2).ok()?;
        let rhs: Vec<f64> = r1
            .iter()
            .zip(&r2)
            .map(|(x, y)| alpha * x + (1.0 - alpha) * y)
            .collect();
        Some(cholesky_solve(&l, &rhs))
    }

    pub fn has_oracle(&self) -> bool {
        self.has_oracle
    }
}

/// `J₁ = ½‖p − a‖²`, `J₂ = ½‖p − b‖²`. The Pareto set is the segment `[a, b]`.
pub fn isotropic_quadratics(a: &[f64], b: &[f64]) -> Result<BenchProblem> {
    if a.len() != b.len() || a.is_empty() {
        return input("a and b must be non-empty and of equal length");
    }
    if a == b {
        return Err(Error::Degenerate(
            "a = b gives a single-point Pareto set".into(),
        ));
    }
    let n = a.len();
    Ok(BenchProblem {
        pair: QuadraticPair {
            name: "iso-quad".into(),
            a1: DataMatrix::identity(n),
            c1: a.to_vec(),
            a2: DataMatrix::identity(n),
            c2: b.to_vec(),
        },
        description: format!("isotropic quadratics in R^{n}"),
        has_oracle: true,
        field_rank: None,
    })
}

/// `Jᵢ = ½ (p − cᵢ)' Aᵢ (p − cᵢ)` with symmetric positive definite `Aᵢ`.
pub fn anisotropic_quadratics(
    a1: &DataMatrix,
    a: &[f64],
    a2: &DataMatrix,
    b: &[f64],
) -> Result<BenchProblem> {
    let n = a.len();
    if n == 0 || b.len() != n || a1.shape() != (n, n) || a2.shape() != (n, n) {
        return input("Hessians must be n x n and centers of length n");
    }
    cholesky(a1).map_err(|e| Error::Input(format!("A1: {e}")))?;
    cholesky(a2).map_err(|e| Error::Input(format!("A2: {e}")))?;
    Ok(BenchProblem {
        pair: QuadraticPair {
            name: "aniso-quad".into(),
            a1: a1.clone(),
            c1: a.to_vec(),
            a2: a2.clone(),
            c2: b.to_vec(),
        },
        description: format!("anisotropic quadratics in R^{n}"),
        has_oracle: true,
        field_rank: None,
    })
}

/// Quadratics whose Hessians `Aᵢ = W' Dᵢ W` share the `rank`-dimensional row
/// space of `W`, so every gradient lies in that space. The minimizers form an
/// affine family, so no oracle minimizer is provided.
pub fn lowrank_gradient_field(n: usize, rank: usize) -> Result<BenchProblem> {
    if rank == 0 || rank >= n {
        return input(format!(
            "rank must satisfy 1 <= rank < n (got rank {rank}, n {n})"
        ));
    }
    let mut rng = stream(CATALOG_SEED, "lowrank", (n * 1000 + rank) as u64);

    // Orthonormal rows of W via Gram-Schmidt on random vectors.
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(rank);
    while rows.len() < rank {
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        for _ in 0..2 {
            for r in &rows {
                let c = dot(r, &v);
                v.iter_mut().zip(r).for_each(|(x, y)| *x -= c * y);
            }
        }
        let nv = dot(&v, &v).sqrt();
        if nv > 1e-3 {
            v.iter_mut().for_each(|x| *x /= nv);
            rows.push(v);
        }
    }
    let w = DataMatrix::from_rows(&rows)?;
    let d1: Vec<f64> = (0..rank).map(|_| rng.gen_range(1.0..3.0)).collect();
    let d2: Vec<f64> = (0..rank).map(|_| rng.gen_range(1.0..3.0)).collect();
    let hess = |d: &[f64]| -> Result<DataMatrix> {
        let dw = DataMatrix::from_diag(d)?.matmul(&w)?;
        w.transpose().matmul(&dw)
    };
    let a: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
    let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
    Ok(BenchProblem {
        pair: QuadraticPair {
            name: "lowrank".into(),
            a1: hess(&d1)?,
            c1: a,
            a2: hess(&d2)?,
            c2: b,
        },
        description: format!("rank-{rank} Hessians in R^{n}"),
        has_oracle: false,
        field_rank: Some(rank),
    })
}

/// Seeded SPD matrix `M M'/n + I/2`.
fn seeded_spd(n: usize, rng: &mut impl Rng) -> DataMatrix {
    let data: Vec<f64> = (0..n * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let m = DataMatrix::new(n, n, data).expect("finite");
    let mmt = m.matmul(&m.transpose()).expect("square");
    let half_i = DataMatrix::identity(n).scaled(0.5);
    DataMatrix::lin_comb(1.0 / n as f64, &mmt, 1.0, &half_i).expect("same shape")
}

pub const CATALOG: [&str; 3] = ["iso-quad", "aniso-quad", "lowrank"];

/// Catalog problem by name. `rank` only matters for `lowrank`.
pub fn by_name(name: &str, dim: usize, rank: usize) -> Result<BenchProblem> {
    if dim == 0 {
        return input("dim must be >= 1");
    }
    match name {
        "iso-quad" => {
            let a: Vec<f64> = vec![1.0; dim];
            let b: Vec<f64> = (0..dim)
                .map(|i| if i % 2 == 0 { -1.0 } else { 0.5 })
                .collect();
            isotropic_quadratics(&a, &b)
        }
        "aniso-quad" => {
            let mut rng = stream(CATALOG_SEED, "aniso-quad", dim as u64);
            let a1 = seeded_spd(dim, &mut rng);
            let a2 = seeded_spd(dim, &mut rng);
            let a: Vec<f64> = (0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let b: Vec<f64> = (0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect();
            anisotropic_quadratics(&a1, &a, &a2, &b)
        }
        "lowrank" => lowrank_gradient_field(dim, rank),
        other => input(format!(
            "unknown problem {other:?} (expected one of {})",
            CATALOG.join(", ")
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiobj::weighted_gradient;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn isotropic_oracle() {
        let p = isotropic_quadratics(&[1.0, 0.0], &[-1.0, 0.0]).unwrap();
        assert!(close(&p.oracle_minimizer(0.5).unwrap(), &[0.0, 0.0], 1e-15));
        assert!(close(&p.oracle_minimizer(1.0).unwrap(), &[1.0, 0.0], 1e-15));
        let p = isotropic_quadratics(&[1.0, 2.0, 3.0], &[0.0, 0.0, 0.0]).unwrap();
        assert!(close(
            &p.oracle_minimizer(0.2).unwrap(),
            &[0.2, 0.4, 0.6],
            1e-15
        ));
        assert!(isotropic_quadratics(&[1.0], &[1.0]).is_err());
    }

    #[test]
    fn anisotropic_oracle() {
        let i2 = DataMatrix::identity(2);
        let p = anisotropic_quadratics(&i2, &[1.0, 2.0], &i2, &[3.0, -1.0]).unwrap();
        let iso = isotropic_quadratics(&[1.0, 2.0], &[3.0, -1.0]).unwrap();
        assert!(close(
            &p.oracle_minimizer(0.3).unwrap(),
            &iso.oracle_minimizer(0.3).unwrap(),
            1e-14
        ));

        // diag(1.5, 1.5) p = (1, 1)
        let a1 = DataMatrix::from_diag(&[2.0, 1.0]).unwrap();
        let a2 = DataMatrix::from_diag(&[1.0, 2.0]).unwrap();
        let p = anisotropic_quadratics(&a1, &[1.0, 0.0], &a2, &[0.0, 1.0]).unwrap();
        assert!(close(
            &p.oracle_minimizer(0.5).unwrap(),
            &[2.0 / 3.0, 2.0 / 3.0],
            1e-15
        ));
        assert!(close(&p.oracle_minimizer(0.0).unwrap(), &[0.0, 1.0], 1e-15));

        let indefinite = DataMatrix::from_diag(&[1.0, -1.0]).unwrap();
        assert!(anisotropic_quadratics(&indefinite, &[0.0, 0.0], &a2, &[1.0, 1.0]).is_err());
    }

    #[test]
    fn lowrank_validation_and_oracle() {
        assert!(lowrank_gradient_field(3, 3).is_err());
        assert!(lowrank_gradient_field(3, 0).is_err());
        let p = lowrank_gradient_field(5, 1).unwrap();
        assert!(p.oracle_minimizer(0.5).is_none());
        assert_eq!(p.field_rank, Some(1));
    }

    #[test]
    fn catalog_oracles_are_stationary() {
        for name in ["iso-quad", "aniso-quad"] {
            let p = by_name(name, 6, DEFAULT_RANK).unwrap();
            for i in 0..=100 {
                let alpha = i as f64 / 100.0;
                let x = p.oracle_minimizer(alpha).unwrap();
                let g = weighted_gradient(&p.pair, alpha, &x).unwrap();
                assert!(dot(&g, &g).sqrt() <= 1e-8, "{name} at {alpha}");
            }
        }
        assert!(by_name("rosenbrock", 2, 1).is_err());
    }

    #[test]
    fn catalog_is_deterministic() {
        let a = by_name("aniso-quad", 3, 1).unwrap();
        let b = by_name("aniso-quad", 3, 1).unwrap();
        assert_eq!(a.pair.hessians().0, b.pair.hessians().0);
    }
}
