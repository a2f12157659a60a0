use num_complex::Complex64;

use super::{HermitianMatrix, SpectralError};

pub const CHAR_POLY_MAX_N: usize = 12;

const REAL_TOLERANCE: f64 = 1e-8;

/// Coefficients of `det(λI - A)` from the leading `1` down to the constant
/// term, by the Faddeev–LeVerrier recurrence
/// `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`.
pub fn char_poly(a: &HermitianMatrix) -> Result<Vec<f64>, SpectralError> {
    let n = a.n();
    if n > CHAR_POLY_MAX_N {
        return Err(SpectralError::TooLarge {
            n,
            limit: CHAR_POLY_MAX_N,
        });
    }
    let zero = Complex64::new(0.0, 0.0);
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    let mut m = vec![zero; n * n];
    for k in 1..=n {
        // M <- A M + c I, where c is the last coefficient found
        let c = *coeffs.last().expect("nonempty");
        let mut next = vec![zero; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = zero;
                for l in 0..n {
                    s += a.entry(i, l) * m[l * n + j];
                }
                next[i * n + j] = s;
            }
            next[i * n + i] += c;
        }
        m = next;
        let mut tr = zero;
        for i in 0..n {
            for l in 0..n {
                tr += a.entry(i, l) * m[l * n + i];
            }
        }
        coeffs.push(-tr / k as f64);
    }
    coeffs
        .into_iter()
        .enumerate()
        .map(|(index, z)| {
            if z.im.abs() > REAL_TOLERANCE * z.re.abs().max(1.0) {
                Err(SpectralError::ComplexCoefficient { index, imag: z.im })
            } else {
                Ok(z.re)
            }
        })
        .collect()
}
