//! Empirical checkers for the structural facts behind the equality case.
//!
//! Each checker returns a [`LemmaReport`]. An input whose precondition does
//! not hold is counted as *skipped* and leaves a note; it never counts as a
//! pass. Inputs that satisfy the precondition but make an implication
//! vacuous (the graph is not tight) are counted as instances and also
//! tallied under `vacuous`.

use std::fmt;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::corpus::{self, EDGE_PROBABILITIES};
use super::{
    bound_report, is_c6_tilde, is_extremal_structure, is_p4, STRICT_MARGIN, TIGHT_TOLERANCE,
};
use crate::gain::GainGraph;
use crate::graph::{self, NamedGraph};
use crate::matching::{has_perfect_matching, matching_number, maximum_matching};
use crate::spectral::energy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// Deleting an edge cut never raises the energy; a star cut lowers it.
    EdgeCutMonotonicity,
    /// Tightness passes to induced subgraphs that split `μ` additively,
    /// which are then never `P₄` or `C̃₆`.
    TightSubgraph,
    /// Connected with a pendant vertex and `n ≥ 3` implies `E > 2μ`.
    PendantStrictness,
    /// Every gain assignment on `C̃₆` has energy above 6.
    C6TildeEnergy,
    /// Tight without isolated vertices implies a perfect matching.
    PerfectMatching,
    /// Tight, connected and bipartite implies balanced `K_{t,t}`.
    BipartiteExtremal,
    /// Connected and non-bipartite implies `E > 2μ`.
    NonBipartiteStrictness,
}

impl LemmaId {
    pub const ALL: [LemmaId; 7] = [
        LemmaId::EdgeCutMonotonicity,
        LemmaId::TightSubgraph,
        LemmaId::PendantStrictness,
        LemmaId::C6TildeEnergy,
        LemmaId::PerfectMatching,
        LemmaId::BipartiteExtremal,
        LemmaId::NonBipartiteStrictness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::EdgeCutMonotonicity => "edge-cut-monotonicity",
            LemmaId::TightSubgraph => "tight-subgraph",
            LemmaId::PendantStrictness => "pendant-strictness",
            LemmaId::C6TildeEnergy => "c6tilde-energy",
            LemmaId::PerfectMatching => "perfect-matching",
            LemmaId::BipartiteExtremal => "bipartite-extremal",
            LemmaId::NonBipartiteStrictness => "non-bipartite-strictness",
        }
    }

    /// Whether the checked statement is an implication from tightness, so
    /// non-tight inputs pass vacuously.
    pub fn is_implication(self) -> bool {
        matches!(
            self,
            LemmaId::TightSubgraph | LemmaId::PerfectMatching | LemmaId::BipartiteExtremal
        )
    }
}

impl Serialize for LemmaId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub instances: usize,
    pub vacuous: usize,
    pub skipped: usize,
    pub skip_notes: Vec<String>,
    pub violations: Vec<String>,
    /// Smallest slack of the asserted inequality over all instances.
    pub worst_margin: Option<f64>,
}

impl LemmaReport {
    pub fn new(lemma: LemmaId) -> Self {
        LemmaReport {
            lemma,
            instances: 0,
            vacuous: 0,
            skipped: 0,
            skip_notes: Vec::new(),
            violations: Vec::new(),
            worst_margin: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Instances that actually exercised the statement.
    pub fn effective(&self) -> usize {
        self.instances - self.vacuous
    }

    pub fn merge(&mut self, other: LemmaReport) {
        debug_assert_eq!(self.lemma, other.lemma);
        self.instances += other.instances;
        self.vacuous += other.vacuous;
        self.skipped += other.skipped;
        self.skip_notes.extend(other.skip_notes);
        self.violations.extend(other.violations);
        if let Some(m) = other.worst_margin {
            self.margin(m);
        }
    }

    fn skip(&mut self, note: impl Into<String>) {
        self.skipped += 1;
        self.skip_notes.push(note.into());
    }

    fn margin(&mut self, m: f64) {
        self.worst_margin = Some(self.worst_margin.map_or(m, |w| w.min(m)));
    }

    fn single(lemma: LemmaId, f: impl FnOnce(&mut LemmaReport)) -> Self {
        let mut r = LemmaReport::new(lemma);
        f(&mut r);
        r
    }
}

/// Deleting the edge cut between `vs` and its complement: `E(Φ - S) ≤ E(Φ)`,
/// strictly (by more than [`STRICT_MARGIN`]) when the cut edges form a star.
/// The recorded margin is the energy drop.
pub fn check_edge_cut_lemma(phi: &GainGraph, vs: &[usize]) -> LemmaReport {
    LemmaReport::single(LemmaId::EdgeCutMonotonicity, |r| {
        let cut = match phi.graph().edge_cut(vs) {
            Ok(cut) => cut,
            Err(e) => return r.skip(format!("invalid vertex set: {e}")),
        };
        if cut.is_empty() {
            return r.skip(format!("empty edge cut for {vs:?} on n={}", phi.n()));
        }
        let cut_phi = phi
            .delete_edges(&cut)
            .expect("cut edges belong to the graph");
        let (full, reduced) = match (energy(phi), energy(&cut_phi)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                return r.violations.push(format!("eigensolve failed: {e}"))
            }
        };
        r.instances += 1;
        let drop = full - reduced;
        r.margin(drop);
        let star = is_star(&cut);
        if drop < -STRICT_MARGIN {
            r.violations.push(format!(
                "energy rose by {:e} after deleting cut {cut:?}",
                -drop
            ));
        } else if star && drop <= STRICT_MARGIN {
            r.violations
                .push(format!("star cut {cut:?} lowered energy only by {drop:e}"));
        }
    })
}

/// Whether the edges share a common vertex (a star `K_{1,t}`, `t ≥ 1`).
fn is_star(edges: &[(usize, usize)]) -> bool {
    let Some(&(a, b)) = edges.first() else {
        return false;
    };
    [a, b]
        .iter()
        .any(|&c| edges.iter().all(|&(u, v)| u == c || v == c))
}

fn strict_gap(r: &mut LemmaReport, phi: &GainGraph, what: &str) {
    match bound_report(phi) {
        Ok(b) => {
            r.instances += 1;
            r.margin(b.gap);
            if b.gap <= STRICT_MARGIN {
                r.violations.push(format!(
                    "{what}: gap {:e} (energy {}, mu {}) on {:?}",
                    b.gap, b.energy, b.mu, phi
                ));
            }
        }
        Err(e) => r.violations.push(format!("eigensolve failed: {e}")),
    }
}

/// Connected, `n ≥ 3`, with a pendant vertex: `E(Φ) - 2μ > 1e-8`.
pub fn check_pendant_lemma(phi: &GainGraph) -> LemmaReport {
    LemmaReport::single(LemmaId::PendantStrictness, |r| {
        let g = phi.graph();
        if g.n() < 3 {
            r.skip(format!("n={} < 3", g.n()));
        } else if !g.is_connected() {
            r.skip("disconnected graph");
        } else if g.pendant_vertices().is_empty() {
            r.skip("no pendant vertex");
        } else {
            strict_gap(r, phi, "pendant");
        }
    })
}

/// `trials` uniform random gain assignments on `C̃₆`, each with energy above
/// `6 + 1e-8`. Also cross-checks `μ(C̃₆) = 3` against the bound report.
pub fn check_c6tilde_lemma(seed: u64, trials: usize) -> LemmaReport {
    let g = NamedGraph::C6Tilde.build().expect("C6~");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = LemmaReport::new(LemmaId::C6TildeEnergy);
    for _ in 0..trials {
        let phi = GainGraph::random_gains(g.clone(), &mut rng);
        match bound_report(&phi) {
            Ok(b) => {
                r.instances += 1;
                let margin = b.energy - 6.0;
                r.margin(margin);
                if margin <= STRICT_MARGIN {
                    r.violations
                        .push(format!("energy {} on {:?}", b.energy, phi));
                }
                if b.mu != 3 || (b.gap - margin).abs() > 1e-12 || b.numerically_tight {
                    r.violations.push(format!("bound report disagrees: {b:?}"));
                }
            }
            Err(e) => r.violations.push(format!("eigensolve failed: {e}")),
        }
    }
    r
}

/// Tight members without isolated vertices have a perfect matching.
pub fn check_perfect_matching_lemma(corpus: &[GainGraph]) -> LemmaReport {
    let mut r = LemmaReport::new(LemmaId::PerfectMatching);
    for phi in corpus {
        let isolated = phi.graph().isolated_vertices();
        if !isolated.is_empty() {
            r.skip(format!("{} isolated vertices", isolated.len()));
            continue;
        }
        match bound_report(phi) {
            Ok(b) => {
                r.instances += 1;
                if !b.numerically_tight {
                    r.vacuous += 1;
                } else if !has_perfect_matching(phi.graph()) {
                    r.violations.push(format!(
                        "tight (gap {:e}) without a perfect matching: {phi:?}",
                        b.gap
                    ));
                }
            }
            Err(e) => r.violations.push(format!("eigensolve failed: {e}")),
        }
    }
    r
}

/// Connected non-bipartite members satisfy `E(Φ) - 2μ > 1e-8`.
pub fn check_nonbipartite_lemma(corpus: &[GainGraph]) -> LemmaReport {
    let mut r = LemmaReport::new(LemmaId::NonBipartiteStrictness);
    for phi in corpus {
        let g = phi.graph();
        if !g.is_connected() || g.n() == 0 {
            r.skip("disconnected graph");
        } else if g.is_bipartite() {
            r.skip("bipartite graph");
        } else {
            strict_gap(&mut r, phi, "non-bipartite");
        }
    }
    r
}

/// For `vs` with `μ(G) = μ(G[vs]) + μ(G - vs)`: if `Φ` is tight then so is
/// `Φ[vs]`, and `G[vs]` is neither `P₄` nor `C̃₆`. The recorded margin is
/// `1e-6` minus the restricted gap.
pub fn check_subgraph_lemma(phi: &GainGraph, vs: &[usize]) -> LemmaReport {
    LemmaReport::single(LemmaId::TightSubgraph, |r| {
        let (sub, _) = match phi.induced(vs) {
            Ok(s) => s,
            Err(e) => return r.skip(format!("invalid vertex set: {e}")),
        };
        let rest = phi
            .graph()
            .remove_vertices(vs)
            .expect("validated above")
            .graph;
        let (mu, mu_sub, mu_rest) = (
            matching_number(phi.graph()),
            matching_number(sub.graph()),
            matching_number(&rest),
        );
        if mu != mu_sub + mu_rest {
            return r.skip(format!(
                "matching number not additive: {mu} != {mu_sub} + {mu_rest}"
            ));
        }
        let whole = match bound_report(phi) {
            Ok(b) => b,
            Err(e) => return r.violations.push(format!("eigensolve failed: {e}")),
        };
        r.instances += 1;
        if !whole.numerically_tight {
            r.vacuous += 1;
            return;
        }
        let part = match bound_report(&sub) {
            Ok(b) => b,
            Err(e) => return r.violations.push(format!("eigensolve failed: {e}")),
        };
        r.margin(TIGHT_TOLERANCE - part.gap);
        if !part.numerically_tight {
            r.violations.push(format!(
                "tight graph, induced subgraph on {vs:?} has gap {:e}",
                part.gap
            ));
        }
        if is_p4(sub.graph()) || is_c6_tilde(sub.graph()) {
            r.violations.push(format!(
                "tight graph contains a forbidden induced subgraph on {vs:?}"
            ));
        }
    })
}

/// Tight connected bipartite members (`n ≥ 2`) are balanced `K_{t,t}`.
pub fn check_balance_lemma(corpus: &[GainGraph]) -> LemmaReport {
    let mut r = LemmaReport::new(LemmaId::BipartiteExtremal);
    for phi in corpus {
        let g = phi.graph();
        if g.n() < 2 {
            r.skip(format!("n={} < 2", g.n()));
            continue;
        }
        if !g.is_connected() {
            r.skip("disconnected graph");
            continue;
        }
        if !g.is_bipartite() {
            r.skip("non-bipartite graph");
            continue;
        }
        match bound_report(phi) {
            Ok(b) => {
                r.instances += 1;
                if !b.numerically_tight {
                    r.vacuous += 1;
                } else if !is_extremal_structure(phi) {
                    r.violations.push(format!(
                        "tight (gap {:e}) but balanced={} and not a balanced K_{{t,t}}: {phi:?}",
                        b.gap,
                        phi.is_balanced()
                    ));
                }
            }
            Err(e) => r.violations.push(format!("eigensolve failed: {e}")),
        }
    }
    r
}

/// Parameters of [`run_lemma_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Instances per sweep. The `C̃₆` sweep runs `max(trials, 500)` when
    /// `trials > 0`.
    pub trials: usize,
    /// Largest vertex count in generated instances.
    pub nmax: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            trials: 200,
            nmax: 10,
        }
    }
}

pub const C6TILDE_MIN_TRIALS: usize = 500;

/// Runs every checker on seeded instances. Each sweep draws from its own
/// ChaCha stream, so changing one sweep never shifts another.
pub fn run_lemma_suite(cfg: SuiteConfig) -> Vec<LemmaReport> {
    LemmaId::ALL
        .iter()
        .enumerate()
        .map(|(i, &lemma)| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(i as u64 + 1);
            let mut report = match lemma {
                LemmaId::EdgeCutMonotonicity => sweep_edge_cut(&mut rng, cfg),
                LemmaId::TightSubgraph => sweep_subgraph(&mut rng, cfg),
                LemmaId::PendantStrictness => sweep_pendant(&mut rng, cfg),
                LemmaId::C6TildeEnergy => {
                    let trials = if cfg.trials == 0 {
                        0
                    } else {
                        cfg.trials.max(C6TILDE_MIN_TRIALS)
                    };
                    check_c6tilde_lemma(rng.random(), trials)
                }
                LemmaId::PerfectMatching => sweep_perfect_matching(&mut rng, cfg),
                LemmaId::BipartiteExtremal => sweep_bipartite(&mut rng, cfg),
                LemmaId::NonBipartiteStrictness => sweep_nonbipartite(&mut rng, cfg),
            };
            if report.instances == 0 {
                report.skip_notes.push("no instances generated".into());
            }
            report
        })
        .collect()
}

/// A random instance with at least one edge, or `None` if `nmax < 2`.
fn instance_with_edges(rng: &mut ChaCha8Rng, nmax: usize) -> Option<GainGraph> {
    if nmax < 2 {
        return None;
    }
    loop {
        let phi = corpus::random_instance(rng, nmax);
        if phi.m() > 0 {
            return Some(phi);
        }
    }
}

fn sweep_edge_cut(rng: &mut ChaCha8Rng, cfg: SuiteConfig) -> LemmaReport {
    let mut r = LemmaReport::new(LemmaId::EdgeCutMonotonicity);
    for i in 0..cfg.trials {
        let phi = if i % 4 == 3 && cfg.nmax >= 2 {
            corpus::random_extremal(rng, cfg.nmax, true)
        } else {
            match instance_with_edges(rng, cfg.nmax) {
                Some(phi) => phi,
                None => {
                    r.skip(format!("nmax={} admits no edges", cfg.nmax));
                    continue;
                }
            }
        };
        let g = phi.graph();
        let vs: Vec<usize> = if i % 2 == 0 {
            // a single vertex: its cut is a star
            let touched: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
            touched.choose(rng).map(|&v| vec![v]).unwrap_or_default()
        } else {
            let mut vs = Vec::new();
            for _ in 0..16 {
                vs = (0..g.n()).filter(|_| rng.random_bool(0.5)).collect();
                if !g.edge_cut(&vs).expect("in range").is_empty() {
                    break;
                }
            }
            vs
        };
        r.merge(check_edge_cut_lemma(&phi, &vs));
    }
    r
}

fn sweep_pendant(rng: &mut ChaCha8Rng, cfg: SuiteConfig) -> LemmaReport {
    let mut r = LemmaReport::new(LemmaId::PendantStrictness);
    for i in 0..cfg.trials {
        if cfg.nmax < 3 {
            r.skip(format!("nmax={} < 3", cfg.nmax));
            continue;
        }
        let n = rng.random_range(3..=cfg.nmax);
        let g = if i % 2 == 0 {
            graph::random_tree(n, rng)
        } else {
            let p = *EDGE_PROBABILITIES.choose(rng).expect("nonempty");
            corpus::attach_pendant(&graph::random_connected_gnp(n - 1, p, rng), rng)
        };
        let phi = if i % 5 == 0 {
            GainGraph::all_ones(g)
        } else {
            GainGraph::random_gains(g, rng)
        };
        r.merge(check_pendant_lemma(&phi));
    }
    r
}

fn sweep_perfect_matching(rng: &mut ChaCha8Rng, cfg: SuiteConfig) -> LemmaReport {
    let mut members = Vec::with_capacity(cfg.trials);
    let perturbed = corpus::structured_perturbations(rng.random(), cfg.trials);
    for (i, near_miss) in perturbed.into_iter().enumerate() {
        if cfg.nmax < 2 {
            members.push(GainGraph::all_ones(graph::Graph::empty(cfg.nmax)));
            continue;
        }
        let phi = match i % 4 {
            0 | 1 => {
                let phi = corpus::random_instance(rng, cfg.nmax);
                let touched: Vec<usize> = (0..phi.n())
                    .filter(|&v| phi.graph().degree(v) > 0)
                    .collect();
                if touched.is_empty() {
                    corpus::random_extremal(rng, cfg.nmax, false)
                } else {
                    phi.induced(&touched).expect("in range").0
                }
            }
            2 => corpus::random_extremal(rng, cfg.nmax, false),
            _ if near_miss.n() <= cfg.nmax => near_miss,
            _ => corpus::random_extremal(rng, cfg.nmax, false),
        };
        members.push(phi);
    }
    check_perfect_matching_lemma(&members)
}

fn sweep_nonbipartite(rng: &mut ChaCha8Rng, cfg: SuiteConfig) -> LemmaReport {
    let mut r = LemmaReport::new(LemmaId::NonBipartiteStrictness);
    let mut members = Vec::with_capacity(cfg.trials);
    for i in 0..cfg.trials {
        if cfg.nmax < 3 {
            r.skip(format!("nmax={} < 3", cfg.nmax));
            continue;
        }
        let g = if i % 5 == 4 {
            let k = rng.random_range(1..=(cfg.nmax - 1) / 2);
            NamedGraph::Cycle(2 * k + 1).build().expect("odd cycle")
        } else {
            let n = rng.random_range(3..=cfg.nmax);
            let p = *EDGE_PROBABILITIES.choose(rng).expect("nonempty");
            corpus::random_connected_nonbipartite(n, p, rng)
        };
        members.push(if i % 7 == 0 {
            GainGraph::all_ones(g)
        } else {
            GainGraph::random_gains(g, rng)
        });
    }
    r.merge(check_nonbipartite_lemma(&members));
    r
}

fn sweep_subgraph(rng: &mut ChaCha8Rng, cfg: SuiteConfig) -> LemmaReport {
    let mut r = LemmaReport::new(LemmaId::TightSubgraph);
    for i in 0..cfg.trials {
        if cfg.nmax < 2 {
            r.skip(format!("nmax={} < 2", cfg.nmax));
            continue;
        }
        let phi = if i % 3 == 2 {
            corpus::random_instance(rng, cfg.nmax)
        } else {
            corpus::random_extremal(rng, cfg.nmax, i % 2 == 0)
        };
        // whole matched pairs plus some unsaturated vertices keep μ additive
        let m = maximum_matching(phi.graph());
        let mut pairs = m.matched_edges.clone();
        pairs.shuffle(rng);
        let keep = if pairs.is_empty() {
            0
        } else {
            rng.random_range(1..=pairs.len())
        };
        let mut vs: Vec<usize> = pairs[..keep].iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.extend((0..phi.n()).filter(|v| !m.saturated.contains(v) && rng.random_bool(0.5)));
        r.merge(check_subgraph_lemma(&phi, &vs));
    }
    r
}

fn sweep_bipartite(rng: &mut ChaCha8Rng, cfg: SuiteConfig) -> LemmaReport {
    let mut r = LemmaReport::new(LemmaId::BipartiteExtremal);
    let mut members = Vec::with_capacity(cfg.trials);
    for i in 0..cfg.trials {
        if cfg.nmax < 2 {
            r.skip(format!("nmax={} < 2", cfg.nmax));
            continue;
        }
        let phi = match i % 3 {
            0 => {
                let t = rng.random_range(1..=cfg.nmax / 2);
                corpus::switched_extremal(&[t], 0, rng)
            }
            1 => {
                let t = rng.random_range(1..=cfg.nmax / 2);
                corpus::rotated_knn(t, std::f64::consts::FRAC_PI_4)
            }
            _ => {
                let s = rng.random_range(1..=cfg.nmax / 2);
                let t = rng.random_range(1..=cfg.nmax - s);
                let p = *EDGE_PROBABILITIES.choose(rng).expect("nonempty");
                let g = corpus::random_connected_bipartite(s, t, p, rng);
                if rng.random_bool(0.5) {
                    GainGraph::all_ones(g)
                } else {
                    GainGraph::random_gains(g, rng)
                }
            }
        };
        members.push(phi);
    }
    r.merge(check_balance_lemma(&members));
    r
}
