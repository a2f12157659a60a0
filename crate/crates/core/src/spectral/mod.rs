//! Hermitian adjacency spectra and energy.
//!
//! Tolerance ladder used across the crate:
//!
//! | layer                         | tolerance |
//! |-------------------------------|-----------|
//! | construction (unit, Hermitian)| 1e-12     |
//! | balance / equality logic      | 1e-9      |
//! | eigenpair residuals           | 1e-8·‖A‖  |
//! | Kronecker multiset matching   | 1e-7      |

mod charpoly;
mod jacobi;
mod kron;
mod matrix;
mod sanity;

pub use charpoly::{char_poly, CHAR_POLY_MAX_N};
pub use kron::{kronecker_spectrum_check, KroneckerReport, KRONECKER_MAX_N, KRONECKER_TOLERANCE};
pub use matrix::{HermitianMatrix, HERMITIAN_TOLERANCE};
pub use sanity::{reset_sanity_stats, sanity_stats, SanityStats};

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::gain::{GainGraph, UnitComplex};

/// Relative residual bound `‖Av - λv‖ ≤ RESIDUAL_TOLERANCE·‖A‖_F` per pair.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("matrix is not Hermitian at ({row}, {col})")]
    NotHermitian { row: usize, col: usize },
    #[error("expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("eigensolver did not converge on a {0}x{0} matrix")]
    NoConvergence(usize),
    #[error("eigenpair residual {residual:e} exceeds {bound:e}")]
    Residual { residual: f64, bound: f64 },
    #[error("spectral sanity check failed: {0}")]
    Sanity(String),
    #[error("dimension {n} exceeds the limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("characteristic polynomial coefficient {index} has imaginary part {imag:e}")]
    ComplexCoefficient { index: usize, imag: f64 },
}

/// Eigenvalues sorted descending, with their absolute sum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
    /// Worst `‖Av - λv‖` observed when the spectrum was computed.
    pub max_residual: f64,
}

impl Spectrum {
    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l * l).sum()
    }
}

/// Eigenvalues of a Hermitian matrix.
///
/// Every call checks each eigenpair's residual against
/// [`RESIDUAL_TOLERANCE`]`·‖A‖_F`, and compares `Σλ` with the trace and
/// `Σλ²` with `‖A‖_F²` (bounds `1e-8·n` and `1e-7·n`). The outcome of the
/// trace and Frobenius checks is also tallied in [`sanity_stats`].
pub fn eigenvalues(a: &HermitianMatrix) -> Result<Spectrum, SpectralError> {
    let n = a.n();
    let eig = jacobi::eigh(a).ok_or(SpectralError::NoConvergence(n))?;
    let norm = a.frobenius_sq().sqrt();
    let bound = RESIDUAL_TOLERANCE * norm;
    let mut max_residual = 0.0f64;
    for (k, &lambda) in eig.values.iter().enumerate() {
        let x = &eig.vectors[k * n..(k + 1) * n];
        let ax = a.apply(x);
        let r: f64 = ax
            .iter()
            .zip(x)
            .map(|(y, xi)| (y - xi * Complex64::new(lambda, 0.0)).norm_sqr())
            .sum::<f64>()
            .sqrt();
        max_residual = max_residual.max(r);
    }
    if max_residual > bound {
        return Err(SpectralError::Residual {
            residual: max_residual,
            bound,
        });
    }
    let spectrum = Spectrum {
        energy: eig.values.iter().map(|l| l.abs()).sum(),
        eigenvalues: eig.values,
        max_residual,
    };
    sanity::check(a, &spectrum)?;
    Ok(spectrum)
}

pub fn spectrum(phi: &GainGraph) -> Result<Spectrum, SpectralError> {
    eigenvalues(&HermitianMatrix::adjacency(phi))
}

/// `E(Φ) = Σ|λᵢ|`.
pub fn energy(phi: &GainGraph) -> Result<f64, SpectralError> {
    spectrum(phi).map(|s| s.energy)
}

/// The 4-cycle `x1 y1 x0 y0` on vertices `0 1 2 3` with
/// `φ(x1,y1) = 1`, `φ(y1,x0) = a`, `φ(x0,y0) = 1`, `φ(y0,x1) = b`.
pub fn four_cycle(a: UnitComplex, b: UnitComplex) -> GainGraph {
    GainGraph::from_gains(
        4,
        &[
            (0, 1, UnitComplex::ONE),
            (1, 2, a),
            (2, 3, UnitComplex::ONE),
            (3, 0, b),
        ],
    )
    .expect("fixed 4-cycle")
}

/// Closed-form energy of [`four_cycle`]:
/// `2√(2+√(2+2x)) + 2√(2-√(2+2x))` with `x = Re(ab)`.
///
/// Evaluated through `θ = arg(ab) ∈ (-π, π]` as `4(cos(θ/4) + |sin(θ/4)|)`.
/// The two agree exactly, but the form in `x` loses half the digits near
/// `x = 1`, where a rounding error of `1e-16` in `x` moves it by `1.5e-8`.
pub fn four_cycle_energy(a: UnitComplex, b: UnitComplex) -> f64 {
    let quarter = (a * b).angle() / 4.0;
    4.0 * (quarter.cos() + quarter.sin().abs())
}
