use num_complex::Complex64;

use super::SpectralError;
use crate::gain::GainGraph;

/// Entries off by more than this from Hermitian symmetry are rejected.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// Dense row-major Hermitian matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self, SpectralError> {
        if entries.len() != n * n {
            return Err(SpectralError::Shape {
                expected: n * n,
                got: entries.len(),
            });
        }
        for i in 0..n {
            for j in i..n {
                let (a, b) = (entries[i * n + j], entries[j * n + i]);
                if (a - b.conj()).norm() > HERMITIAN_TOLERANCE {
                    return Err(SpectralError::NotHermitian { row: i, col: j });
                }
            }
        }
        Ok(HermitianMatrix { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        HermitianMatrix {
            n,
            entries: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    /// `A(Φ)`: `a_ij = φ(e_ij)` on edges, zero elsewhere.
    pub fn adjacency(phi: &GainGraph) -> Self {
        let n = phi.n();
        let mut a = HermitianMatrix::zeros(n);
        for (u, v, z) in phi.gained_edges() {
            a.entries[u * n + v] = z.to_complex();
            a.entries[v * n + u] = z.conj().to_complex();
        }
        a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.entry(i, i).re).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `self ⊗ other = (a_st · other)`.
    pub fn kronecker(&self, other: &HermitianMatrix) -> HermitianMatrix {
        let (p, q) = (self.n, other.n);
        let n = p * q;
        let mut out = HermitianMatrix::zeros(n);
        for s in 0..p {
            for t in 0..p {
                let a = self.entry(s, t);
                for i in 0..q {
                    for j in 0..q {
                        out.entries[(s * q + i) * n + (t * q + j)] = a * other.entry(i, j);
                    }
                }
            }
        }
        out
    }

    /// `y = A x`.
    pub(crate) fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| {
                self.entries[i * self.n..(i + 1) * self.n]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}
