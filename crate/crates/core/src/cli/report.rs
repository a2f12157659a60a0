use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::gain::{BalanceCertificate, GainGraph};
use crate::spectral::{self, KroneckerReport, SanityStats, SpectralError};
use crate::theorem::{bound_report, LemmaId, LemmaReport, SuiteConfig};

/// Everything `analyze` reports about one gain graph. Field names are part
/// of the output contract.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub components: Vec<Vec<usize>>,
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
    pub mu: usize,
    pub gap: f64,
    pub numerically_tight: bool,
    pub balanced: bool,
    pub balance_witness: BalanceWitness,
    pub structurally_extremal: bool,
    pub consistent: bool,
    pub max_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BalanceWitness {
    /// Angles of `ζ`; switching by it makes every gain 1.
    Switching { angles: Vec<f64> },
    /// Closed walk (first vertex repeated) with non-neutral gain.
    UnbalancedCycle { cycle: Vec<usize>, gain_angle: f64 },
}

impl From<BalanceCertificate> for BalanceWitness {
    fn from(c: BalanceCertificate) -> Self {
        match c {
            BalanceCertificate::Balanced { switching } => BalanceWitness::Switching {
                angles: switching.values().iter().map(|z| z.angle()).collect(),
            },
            BalanceCertificate::Unbalanced { cycle, gain } => BalanceWitness::UnbalancedCycle {
                cycle,
                gain_angle: gain.angle(),
            },
        }
    }
}

impl AnalysisReport {
    pub fn new(phi: &GainGraph) -> Result<Self, SpectralError> {
        let spectrum = spectral::spectrum(phi)?;
        let bound = bound_report(phi)?;
        let certificate = phi.balance();
        Ok(AnalysisReport {
            n: phi.n(),
            m: phi.m(),
            components: phi.graph().components(),
            eigenvalues: spectrum.eigenvalues,
            energy: bound.energy,
            mu: bound.mu,
            gap: bound.gap,
            numerically_tight: bound.numerically_tight,
            balanced: certificate.is_balanced(),
            balance_witness: certificate.into(),
            structurally_extremal: bound.structurally_extremal,
            consistent: bound.consistent,
            max_residual: spectrum.max_residual,
        })
    }
}

fn floats(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{x:.10}")).collect();
    parts.join(" ")
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "m: {}", self.m)?;
        writeln!(f, "components: {:?}", self.components)?;
        writeln!(f, "eigenvalues: {}", floats(&self.eigenvalues))?;
        writeln!(f, "energy: {:.12}", self.energy)?;
        writeln!(f, "mu: {}", self.mu)?;
        writeln!(f, "gap: {:.3e}", self.gap)?;
        writeln!(f, "numerically_tight: {}", self.numerically_tight)?;
        writeln!(f, "balanced: {}", self.balanced)?;
        match &self.balance_witness {
            BalanceWitness::Switching { angles } => writeln!(f, "switching: {}", floats(angles))?,
            BalanceWitness::UnbalancedCycle { cycle, gain_angle } => writeln!(
                f,
                "unbalanced_cycle: {cycle:?} (gain angle {gain_angle:.10})"
            )?,
        }
        writeln!(f, "structurally_extremal: {}", self.structurally_extremal)?;
        writeln!(f, "consistent: {}", self.consistent)?;
        write!(f, "max_residual: {:.3e}", self.max_residual)
    }
}

/// One lemma's outcome with skip notes grouped by reason.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaLine {
    pub lemma: LemmaId,
    pub passed: bool,
    pub instances: usize,
    pub vacuous: usize,
    pub skipped: usize,
    pub skip_reasons: BTreeMap<String, usize>,
    pub worst_margin: Option<f64>,
    pub violations: Vec<String>,
}

impl From<LemmaReport> for LemmaLine {
    fn from(r: LemmaReport) -> Self {
        let mut skip_reasons = BTreeMap::new();
        for note in &r.skip_notes {
            *skip_reasons.entry(note.clone()).or_insert(0) += 1;
        }
        LemmaLine {
            lemma: r.lemma,
            passed: r.passed(),
            instances: r.instances,
            vacuous: r.vacuous,
            skipped: r.skipped,
            skip_reasons,
            worst_margin: r.worst_margin,
            violations: r.violations,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaSummary {
    pub config: SuiteConfig,
    pub lemmas: Vec<LemmaLine>,
    pub violations: usize,
    /// Trace and Frobenius checks over every eigensolve of the sweep.
    pub sanity: SanityStats,
    pub passed: bool,
}

impl LemmaSummary {
    pub fn new(config: SuiteConfig, reports: Vec<LemmaReport>, sanity: SanityStats) -> Self {
        let lemmas: Vec<LemmaLine> = reports.into_iter().map(LemmaLine::from).collect();
        let violations = lemmas.iter().map(|l| l.violations.len()).sum();
        LemmaSummary {
            config,
            lemmas,
            violations,
            sanity,
            passed: violations == 0 && sanity.violations == 0,
        }
    }

    /// One line per lemma and skip reason, for standard error.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        for l in &self.lemmas {
            for (reason, count) in &l.skip_reasons {
                out.push(format!("warning: {}: {reason} (x{count})", l.lemma));
            }
        }
        out
    }
}

impl fmt::Display for LemmaSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "seed {} trials {} nmax {}",
            self.config.seed, self.config.trials, self.config.nmax
        )?;
        for l in &self.lemmas {
            let margin = l
                .worst_margin
                .map_or("-".to_string(), |m| format!("{m:.3e}"));
            writeln!(
                f,
                "{} {:<26} instances {:>4}  vacuous {:>4}  skipped {:>4}  worst margin {margin}",
                if l.passed { "PASS" } else { "FAIL" },
                l.lemma.name(),
                l.instances,
                l.vacuous,
                l.skipped,
            )?;
            for v in &l.violations {
                writeln!(f, "    violation: {v}")?;
            }
        }
        writeln!(
            f,
            "sanity: {} checks, {} violations, worst trace {:.3e}, worst frobenius {:.3e}",
            self.sanity.checks,
            self.sanity.violations,
            self.sanity.worst_trace,
            self.sanity.worst_frobenius
        )?;
        write!(f, "violations: {}", self.violations)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DoubleReport {
    pub n: usize,
    pub double_n: usize,
    pub double_m: usize,
    pub energy: f64,
    pub double_energy: f64,
    pub deviation: f64,
    pub kronecker: KroneckerReport,
    pub passed: bool,
}

impl fmt::Display for DoubleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {} -> {}", self.n, self.double_n)?;
        writeln!(f, "double_m: {}", self.double_m)?;
        writeln!(f, "energy: {:.12}", self.energy)?;
        writeln!(f, "double_energy: {:.12}", self.double_energy)?;
        writeln!(f, "deviation: {:.3e}", self.deviation)?;
        writeln!(
            f,
            "spectrum_deviation: {:.3e}",
            self.kronecker.max_deviation
        )?;
        write!(f, "passed: {}", self.passed)
    }
}
