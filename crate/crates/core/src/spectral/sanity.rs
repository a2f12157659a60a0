use std::sync::Mutex;

use serde::Serialize;

use super::{HermitianMatrix, SpectralError, Spectrum};

const TRACE_TOLERANCE: f64 = 1e-8;
const FROBENIUS_TOLERANCE: f64 = 1e-7;

/// Process-wide tally of the trace and Frobenius checks run by every eigensolve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct SanityStats {
    pub checks: u64,
    pub violations: u64,
    /// Worst `|Σλ - tr A| / max(n, 1)`.
    pub worst_trace: f64,
    /// Worst `|Σλ² - ‖A‖_F²| / max(n, 1)`.
    pub worst_frobenius: f64,
}

static STATS: Mutex<SanityStats> = Mutex::new(SanityStats {
    checks: 0,
    violations: 0,
    worst_trace: 0.0,
    worst_frobenius: 0.0,
});

pub fn sanity_stats() -> SanityStats {
    *STATS.lock().unwrap_or_else(|e| e.into_inner())
}

pub fn reset_sanity_stats() {
    *STATS.lock().unwrap_or_else(|e| e.into_inner()) = SanityStats::default();
}

pub(super) fn check(a: &HermitianMatrix, s: &Spectrum) -> Result<(), SpectralError> {
    let scale = a.n().max(1) as f64;
    let trace = (s.trace() - a.trace()).abs() / scale;
    let frob = (s.sum_of_squares() - a.frobenius_sq()).abs() / scale;
    let ok = trace <= TRACE_TOLERANCE && frob <= FROBENIUS_TOLERANCE;
    {
        let mut st = STATS.lock().unwrap_or_else(|e| e.into_inner());
        st.checks += 1;
        st.violations += u64::from(!ok);
        st.worst_trace = st.worst_trace.max(trace);
        st.worst_frobenius = st.worst_frobenius.max(frob);
    }
    if ok {
        Ok(())
    } else {
        Err(SpectralError::Sanity(format!(
            "trace deviation {trace:e}/vertex, Frobenius deviation {frob:e}/vertex"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::GainGraph;
    use crate::graph::NamedGraph;
    use crate::spectral::spectrum;

    #[test]
    fn every_eigensolve_is_tallied() {
        // other tests run concurrently, so only monotonicity is checked
        let before = sanity_stats().checks;
        spectrum(&GainGraph::all_ones(NamedGraph::Petersen.build().unwrap())).unwrap();
        assert!(sanity_stats().checks > before);
    }

    #[test]
    fn wrong_spectrum_is_rejected() {
        let a = HermitianMatrix::adjacency(&GainGraph::all_ones(
            NamedGraph::Complete(3).build().unwrap(),
        ));
        let s = Spectrum {
            eigenvalues: vec![2.0, -1.0, -0.5],
            energy: 3.5,
            max_residual: 0.0,
        };
        assert!(matches!(check(&a, &s), Err(SpectralError::Sanity(_))));
    }
}
