//! Seeded instance generators for the lemma sweeps and the acceptance suite.

use std::f64::consts::FRAC_PI_4;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gain::{GainGraph, SwitchingFunction, UnitComplex};
use crate::graph::{self, extremal_union, Graph, NamedGraph};

pub const EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.8];

/// `G(n, p)` with `n` uniform in `2..=nmax` and `p` drawn from
/// [`EDGE_PROBABILITIES`], carrying uniform random gains.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, nmax: usize) -> GainGraph {
    let n = if nmax < 2 {
        nmax
    } else {
        rng.random_range(2..=nmax)
    };
    let p = *EDGE_PROBABILITIES.choose(rng).expect("nonempty");
    let g = graph::gnp(n, p, rng);
    GainGraph::random_gains(g, rng)
}

pub fn random_corpus(seed: u64, count: usize, nmax: usize) -> Vec<GainGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_instance(&mut rng, nmax))
        .collect()
}

/// All-ones union of `K_{t,t}` blocks plus isolated vertices, switched by a
/// random switching function.
pub fn switched_extremal<R: Rng + ?Sized>(
    sizes: &[usize],
    isolated: usize,
    rng: &mut R,
) -> GainGraph {
    let phi = GainGraph::all_ones(extremal_union(sizes, isolated));
    let zeta = SwitchingFunction::random(phi.n(), rng);
    phi.switch(&zeta)
        .expect("switching has one value per vertex")
}

/// Random block sizes with `Σ 2t ≤ max_vertices` (at least one block when
/// `max_vertices ≥ 2`), then up to three isolated vertices if allowed and
/// room remains.
pub fn random_extremal<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
    allow_isolated: bool,
) -> GainGraph {
    let mut remaining = max_vertices;
    let mut sizes = Vec::new();
    while remaining >= 2 && (sizes.is_empty() || rng.random_bool(0.5)) {
        let t = rng.random_range(1..=remaining / 2);
        sizes.push(t);
        remaining -= 2 * t;
    }
    let isolated = if allow_isolated {
        rng.random_range(0..=remaining.min(3))
    } else {
        0
    };
    switched_extremal(&sizes, isolated, rng)
}

/// `K_{t,t}` with all gains one except `φ(0, t) = e^{i angle}`.
pub fn rotated_knn(t: usize, angle: f64) -> GainGraph {
    let g = NamedGraph::CompleteBipartite(t, t)
        .build()
        .expect("K_{t,t}");
    GainGraph::all_ones(g)
        .with_gain(0, t, UnitComplex::from_angle(angle))
        .expect("0-t is an edge")
}

/// Near-miss instances for the equality case, cycling through: `K_{t,t}`
/// (`t = 2..=5`) with one gain rotated by `e^{iπ/4}`, `C₆`, `C̃₆`, `P₄`, and
/// odd cycles `C₃..C₉`. Gains alternate between all-ones and random, and
/// every instance is randomly switched.
pub fn structured_perturbations(seed: u64, count: usize) -> Vec<GainGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let base = match i % 8 {
                0 => rotated_knn(2 + (i / 8) % 4, FRAC_PI_4),
                1 => GainGraph::all_ones(NamedGraph::Cycle(6).build().expect("C6")),
                2 => GainGraph::all_ones(NamedGraph::C6Tilde.build().expect("C6~")),
                3 => GainGraph::all_ones(NamedGraph::Path(4).build().expect("P4")),
                k => GainGraph::all_ones(
                    NamedGraph::Cycle(2 * (k - 4) + 3)
                        .build()
                        .expect("odd cycle"),
                ),
            };
            let base = if (i / 8) % 2 == 1 && i % 8 != 0 {
                GainGraph::random_gains(base.graph().clone(), &mut rng)
            } else {
                base
            };
            let zeta = SwitchingFunction::random(base.n(), &mut rng);
            base.switch(&zeta)
                .expect("switching has one value per vertex")
        })
        .collect()
}

/// Connected graph on `n ≥ 3` vertices containing an odd cycle.
pub fn random_connected_nonbipartite<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    for _ in 0..64 {
        let g = graph::random_connected_gnp(n, p, rng);
        if !g.is_bipartite() {
            return g;
        }
    }
    let mut g = graph::random_connected_gnp(n, p, rng);
    for (u, v) in [(0, 1), (1, 2), (0, 2)] {
        if !g.has_edge(u, v) {
            g.add_edge(u, v).expect("fresh pair");
        }
    }
    g
}

/// Connected bipartite graph with sides of sizes `s, t ≥ 1`.
pub fn random_connected_bipartite<R: Rng + ?Sized>(
    s: usize,
    t: usize,
    p: f64,
    rng: &mut R,
) -> Graph {
    for _ in 0..64 {
        let g = graph::random_bipartite(s, t, p, rng);
        if g.is_connected() {
            return g;
        }
    }
    // connect every vertex to the first vertex of the other side
    let mut g = graph::random_bipartite(s, t, p, rng);
    for v in s + 1..s + t {
        if !g.has_edge(0, v) {
            g.add_edge(0, v).expect("fresh pair");
        }
    }
    if !g.has_edge(0, s) {
        g.add_edge(0, s).expect("fresh pair");
    }
    for u in 1..s {
        if !g.has_edge(u, s) {
            g.add_edge(u, s).expect("fresh pair");
        }
    }
    g
}

/// `g` plus one new vertex joined to a uniform vertex of `g`.
pub fn attach_pendant<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut out = g.disjoint_union(&Graph::empty(1));
    let anchor = rng.random_range(0..g.n());
    out.add_edge(anchor, g.n()).expect("fresh pair");
    out
}
