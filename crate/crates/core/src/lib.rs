//! Eigenvalue tracking for Gram matrices of convex combinations of two data
//! matrices, centered PCA, and weighted-sum Pareto sweeps driven by a
//! PCA-reduced gradient.
//!
//! * [`linalg`]: dense matrices, Jacobi SVD, Gram spectra.
//! * [`pca`]: centering, fitting, projection, reconstruction error.
//! * [`combo`]: grid tables of `λᵢ(G(α))`, the perturbation bound and
//!   interval prediction.
//! * [`multiobj`]: weighted-sum scalarization, multi-start descent, reduced
//!   gradients, sweeps and variance forecasts.
//! * [`bench`]: analytic test problems with closed-form minimizers.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod bench;
pub mod cli;
pub mod combo;
pub mod error;
pub mod io;
pub mod linalg;
pub mod multiobj;
pub mod pca;
pub mod rng;

pub use error::{Error, Result};
pub use linalg::DataMatrix;
