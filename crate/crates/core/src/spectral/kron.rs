use serde::Serialize;

use super::{eigenvalues, HermitianMatrix, SpectralError};
use crate::gain::GainGraph;
use crate::graph::Graph;

pub const KRONECKER_MAX_N: usize = 64;
pub const KRONECKER_TOLERANCE: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KroneckerReport {
    /// `A(Φ ⊗ H) == A(Φ) ⊗ A(H)` entry for entry.
    pub adjacency_identity: bool,
    /// Sorted products `η_s λ_t`.
    pub predicted: Vec<f64>,
    /// Eigenvalues of `A(Φ ⊗ H)`.
    pub observed: Vec<f64>,
    pub max_deviation: f64,
    pub energy: f64,
    pub product_energy: f64,
    /// `|E(Φ⊗K₂) - 2E(Φ)|` when `H` is `K₂`.
    pub doubling_deviation: Option<f64>,
    pub passed: bool,
}

/// Compares the spectrum of `Φ ⊗ H` against the products of the factor spectra.
pub fn kronecker_spectrum_check(
    phi: &GainGraph,
    h: &Graph,
) -> Result<KroneckerReport, SpectralError> {
    let n = phi.n() * h.n();
    if n > KRONECKER_MAX_N {
        return Err(SpectralError::TooLarge {
            n,
            limit: KRONECKER_MAX_N,
        });
    }
    let a_phi = HermitianMatrix::adjacency(phi);
    let a_h = HermitianMatrix::adjacency(&GainGraph::all_ones(h.clone()));
    let a_prod = HermitianMatrix::adjacency(&phi.kronecker(h));
    let adjacency_identity = a_prod == a_phi.kronecker(&a_h);

    let s_phi = eigenvalues(&a_phi)?;
    let s_h = eigenvalues(&a_h)?;
    let s_prod = eigenvalues(&a_prod)?;
    let mut predicted: Vec<f64> = s_phi
        .eigenvalues
        .iter()
        .flat_map(|&eta| s_h.eigenvalues.iter().map(move |&lambda| eta * lambda))
        .collect();
    predicted.sort_by(|a, b| b.total_cmp(a));
    let max_deviation = predicted
        .iter()
        .zip(&s_prod.eigenvalues)
        .map(|(p, o)| (p - o).abs())
        .fold(0.0, f64::max);

    let is_k2 = h.n() == 2 && h.m() == 1;
    let doubling_deviation = is_k2.then(|| (s_prod.energy - 2.0 * s_phi.energy).abs());
    let passed = adjacency_identity
        && max_deviation <= KRONECKER_TOLERANCE
        && doubling_deviation.is_none_or(|d| d <= KRONECKER_TOLERANCE);
    Ok(KroneckerReport {
        adjacency_identity,
        predicted,
        observed: s_prod.eigenvalues,
        max_deviation,
        energy: s_phi.energy,
        product_energy: s_prod.energy,
        doubling_deviation,
        passed,
    })
}
