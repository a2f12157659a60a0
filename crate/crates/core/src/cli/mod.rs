//! The `gainspec` command line.
//!
//! Exit codes: 0 when the command's check holds, 1 when it ran but the check
//! failed (inconsistent analysis, lemma violations, energy not doubled), 2 on
//! usage, input or numerical errors.

pub mod format;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::gain::{GainGraph, SwitchingFunction};
use crate::graph::{self, extremal_union, Graph, NamedGraph};
use crate::spectral::{
    kronecker_spectrum_check, reset_sanity_stats, sanity_stats, KRONECKER_MAX_N,
    KRONECKER_TOLERANCE,
};
use crate::theorem::{run_lemma_suite, SuiteConfig};
use report::{AnalysisReport, DoubleReport, LemmaSummary};

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(
    name = "gainspec",
    version,
    about = "Energy, matching number and balance of complex unit gain graphs"
)]
pub struct Cli {
    /// Report format on standard output.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum, energy, matching number, balance and the bound verdicts of a
    /// gain graph file. Exits 0 iff tightness and extremal structure agree.
    Analyze { file: PathBuf },
    /// Seeded sweeps of the structural checks. Exits 0 iff no violations.
    Lemmas {
        #[arg(long, env = "GAINSPEC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
    /// Write a gain graph file.
    ///
    /// knn <t> | cycle <n> | path <n> | c6tilde | gnp <n> <p> | extremal-union <t1,t2,...>
    Generate {
        kind: Kind,
        params: Vec<String>,
        #[arg(long, env = "GAINSPEC_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Apply a random switching function.
        #[arg(long)]
        switched: bool,
        /// Replace the all-ones gains by uniform random gains.
        #[arg(long)]
        random_gains: bool,
    },
    /// Write the bipartite double `Φ ⊗ K₂` and check that its energy is `2E(Φ)`.
    /// Without `--out` the file goes to standard output and the report to
    /// standard error.
    Double {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Knn,
    Cycle,
    Path,
    C6tilde,
    Gnp,
    ExtremalUnion,
}

#[derive(Debug, Serialize)]
struct GenerateSummary<'a> {
    out: &'a Path,
    seed: u64,
    n: usize,
    m: usize,
}

/// Runs one command. `Ok(true)` maps to exit code 0, `Ok(false)` to 1.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<bool> {
    let format = cli.format;
    match cli.command {
        Command::Analyze { file } => {
            let phi = format::read_file(&file)?;
            let report = AnalysisReport::new(&phi).context("eigensolve failed")?;
            emit(out, format, &report)?;
            Ok(report.consistent)
        }
        Command::Lemmas { seed, trials, nmax } => {
            let config = SuiteConfig { seed, trials, nmax };
            // the sweep is the only eigensolve work in this process
            reset_sanity_stats();
            let reports = run_lemma_suite(config);
            let summary = LemmaSummary::new(config, reports, sanity_stats());
            for w in summary.warnings() {
                writeln!(err, "{w}")?;
            }
            emit(out, format, &summary)?;
            Ok(summary.passed)
        }
        Command::Generate {
            kind,
            params,
            seed,
            out: path,
            switched,
            random_gains,
        } => {
            let phi = generate(kind, &params, seed, switched, random_gains)?;
            let text = format::serialize(&phi);
            match path {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .with_context(|| format!("cannot write {}", path.display()))?;
                    let summary = GenerateSummary {
                        out: &path,
                        seed,
                        n: phi.n(),
                        m: phi.m(),
                    };
                    match format {
                        Format::Json => {
                            writeln!(out, "{}", serde_json::to_string_pretty(&summary)?)?
                        }
                        Format::Text => writeln!(
                            out,
                            "wrote {} (n {}, m {})",
                            path.display(),
                            phi.n(),
                            phi.m()
                        )?,
                    }
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(true)
        }
        Command::Double { file, out: path } => {
            let phi = format::read_file(&file)?;
            ensure!(
                2 * phi.n() <= KRONECKER_MAX_N,
                "bipartite double would have {} vertices, limit is {KRONECKER_MAX_N}",
                2 * phi.n()
            );
            let double = phi.bipartite_double();
            let k2 = NamedGraph::Complete(2).build()?;
            let kronecker = kronecker_spectrum_check(&phi, &k2).context("eigensolve failed")?;
            let deviation = kronecker.doubling_deviation.expect("K2 factor");
            let report = DoubleReport {
                n: phi.n(),
                double_n: double.n(),
                double_m: double.m(),
                energy: kronecker.energy,
                double_energy: kronecker.product_energy,
                deviation,
                passed: kronecker.passed && deviation <= KRONECKER_TOLERANCE,
                kronecker,
            };
            let text = format::serialize(&double);
            match path {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .with_context(|| format!("cannot write {}", path.display()))?;
                    emit(out, format, &report)?;
                }
                None => {
                    out.write_all(text.as_bytes())?;
                    emit(err, format, &report)?;
                }
            }
            Ok(report.passed)
        }
    }
}

fn emit<T: Serialize + std::fmt::Display>(
    w: &mut dyn Write,
    format: Format,
    value: &T,
) -> anyhow::Result<()> {
    match format {
        Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(value)?)?,
        Format::Text => writeln!(w, "{value}")?,
    }
    Ok(())
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> anyhow::Result<T> {
    let raw = params
        .get(i)
        .with_context(|| format!("missing parameter <{what}>"))?;
    raw.parse()
        .map_err(|_| anyhow::anyhow!("invalid <{what}>: `{raw}`"))
}

fn arity(kind: Kind, params: &[String], expected: usize) -> anyhow::Result<()> {
    ensure!(
        params.len() == expected,
        "{} takes {expected} parameter(s), got {}",
        kind.to_possible_value()
            .expect("no skipped variants")
            .get_name(),
        params.len()
    );
    Ok(())
}

/// Builds the requested graph. All randomness comes from one ChaCha stream
/// seeded with `seed`, drawn in the order graph, gains, switching.
pub fn generate(
    kind: Kind,
    params: &[String],
    seed: u64,
    switched: bool,
    random_gains: bool,
) -> anyhow::Result<GainGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g: Graph = match kind {
        Kind::Knn => {
            arity(kind, params, 1)?;
            let t: usize = param(params, 0, "t")?;
            NamedGraph::CompleteBipartite(t, t).build()?
        }
        Kind::Cycle => {
            arity(kind, params, 1)?;
            NamedGraph::Cycle(param(params, 0, "n")?).build()?
        }
        Kind::Path => {
            arity(kind, params, 1)?;
            NamedGraph::Path(param(params, 0, "n")?).build()?
        }
        Kind::C6tilde => {
            arity(kind, params, 0)?;
            NamedGraph::C6Tilde.build()?
        }
        Kind::Gnp => {
            arity(kind, params, 2)?;
            let n: usize = param(params, 0, "n")?;
            let p: f64 = param(params, 1, "p")?;
            if !(0.0..=1.0).contains(&p) {
                bail!("edge probability {p} outside [0, 1]");
            }
            graph::gnp(n, p, &mut rng)
        }
        Kind::ExtremalUnion => {
            arity(kind, params, 1)?;
            let sizes = params[0]
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| anyhow::anyhow!("invalid block sizes `{}`", params[0]))?;
            ensure!(
                sizes.iter().all(|&t| t >= 1),
                "block sizes must be at least 1"
            );
            extremal_union(&sizes, 0)
        }
    };
    let mut phi = if random_gains {
        GainGraph::random_gains(g, &mut rng)
    } else {
        GainGraph::all_ones(g)
    };
    if switched {
        let zeta = SwitchingFunction::random(phi.n(), &mut rng);
        phi = phi.switch(&zeta)?;
    }
    Ok(phi)
}
