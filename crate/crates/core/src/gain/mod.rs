//! Complex unit gain graphs: gain assignments, switching, cycle gains,
//! balance and Kronecker products with plain graphs.

mod balance;
mod unit;

pub use balance::{BalanceCertificate, BALANCE_TOLERANCE};
pub use unit::{UnitComplex, UNIT_INPUT_TOLERANCE};

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, NamedGraph};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GainError {
    #[error("{re}{im:+}i is not a unit complex number")]
    NotUnit { re: f64, im: f64 },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("switching function has {got} values for a graph on {n} vertices")]
    SwitchingLength { got: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph whose ordered edges carry unit gains with `gain(v,u) = gain(u,v)⁻¹`.
///
/// Only the orientation `u < v` is stored; the reverse orientation is read
/// back as the conjugate, so the inverse relation holds exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct GainGraph {
    graph: Graph,
    gains: BTreeMap<Edge, UnitComplex>,
}

impl GainGraph {
    /// `(G, T, 1)`.
    pub fn all_ones(graph: Graph) -> Self {
        let gains = graph.edges().map(|e| (e, UnitComplex::ONE)).collect();
        GainGraph { graph, gains }
    }

    /// Builds a gain graph from `(u, v, gain(u,v))` triples.
    pub fn from_gains(n: usize, edges: &[(usize, usize, UnitComplex)]) -> Result<Self, GainError> {
        let mut graph = Graph::empty(n);
        for &(u, v, _) in edges {
            graph.add_edge(u, v)?;
        }
        let mut gg = GainGraph::all_ones(graph);
        for &(u, v, z) in edges {
            gg.set_gain(u, v, z)?;
        }
        Ok(gg)
    }

    /// Uniform random angle in `[0, 2pi)` per edge, edges in lexicographic order.
    pub fn random_gains<R: Rng + ?Sized>(graph: Graph, rng: &mut R) -> Self {
        let gains = graph
            .edges()
            .map(|e| (e, UnitComplex::from_angle(rng.random_range(0.0..TAU))))
            .collect();
        GainGraph { graph, gains }
    }

    pub fn random_gain_graph(graph: Graph, seed: u64) -> Self {
        GainGraph::random_gains(graph, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// `gain(u, v)`, or `None` when `uv` is not an edge.
    pub fn gain(&self, u: usize, v: usize) -> Option<UnitComplex> {
        if u < v {
            self.gains.get(&(u, v)).copied()
        } else {
            self.gains.get(&(v, u)).map(|z| z.conj())
        }
    }

    /// Edges `(u, v, gain(u,v))` with `u < v`.
    pub fn gained_edges(&self) -> impl Iterator<Item = (usize, usize, UnitComplex)> + '_ {
        self.gains.iter().map(|(&(u, v), &z)| (u, v, z))
    }

    /// Sets `gain(u,v) = z`, and with it `gain(v,u) = z̄`.
    pub fn set_gain(&mut self, u: usize, v: usize, z: UnitComplex) -> Result<(), GainError> {
        if !self.graph.has_edge(u, v) {
            return Err(GainError::NotAnEdge(u, v));
        }
        if u < v {
            self.gains.insert((u, v), z);
        } else {
            self.gains.insert((v, u), z.conj());
        }
        Ok(())
    }

    pub fn with_gain(mut self, u: usize, v: usize, z: UnitComplex) -> Result<Self, GainError> {
        self.set_gain(u, v, z)?;
        Ok(self)
    }

    /// Gain of the closed walk `v1 v2 ... vk v1`. The closing vertex may be
    /// repeated at the end or left implicit.
    pub fn cycle_gain(&self, cycle: &[usize]) -> Result<UnitComplex, GainError> {
        let body = match cycle {
            [first, .., last] if cycle.len() > 3 && first == last => &cycle[..cycle.len() - 1],
            _ => cycle,
        };
        if body.len() < 3 {
            return Err(GainError::NotACycle(format!(
                "{} distinct vertices, need at least 3",
                body.len()
            )));
        }
        let distinct: BTreeSet<_> = body.iter().collect();
        if distinct.len() != body.len() {
            return Err(GainError::NotACycle("repeated vertex".into()));
        }
        let k = body.len();
        (0..k)
            .map(|i| {
                let (u, v) = (body[i], body[(i + 1) % k]);
                self.gain(u, v)
                    .ok_or_else(|| GainError::NotACycle(format!("{u}-{v} is not an edge")))
            })
            .product()
    }

    /// `Φ^ζ` with `φ^ζ(u,v) = ζ(u)⁻¹ φ(u,v) ζ(v)`.
    pub fn switch(&self, zeta: &SwitchingFunction) -> Result<GainGraph, GainError> {
        if zeta.len() != self.n() {
            return Err(GainError::SwitchingLength {
                got: zeta.len(),
                n: self.n(),
            });
        }
        let gains = self
            .gains
            .iter()
            .map(|(&(u, v), &z)| ((u, v), zeta[u].inv() * z * zeta[v]))
            .collect();
        Ok(GainGraph {
            graph: self.graph.clone(),
            gains,
        })
    }

    /// The gain subgraph induced by `vs`, relabelled as in
    /// [`Graph::induced_subgraph`]. Returns the parent index of each vertex.
    pub fn induced(&self, vs: &[usize]) -> Result<(GainGraph, Vec<usize>), GainError> {
        let sub = self.graph.induced_subgraph(vs)?;
        let gains = sub
            .graph
            .edges()
            .map(|(i, j)| {
                let z = self
                    .gain(sub.vertices[i], sub.vertices[j])
                    .expect("induced edge");
                ((i, j), z)
            })
            .collect();
        Ok((
            GainGraph {
                graph: sub.graph,
                gains,
            },
            sub.vertices,
        ))
    }

    /// Same gains on the spanning subgraph without the edges in `cut`.
    pub fn delete_edges(&self, cut: &[Edge]) -> Result<GainGraph, GainError> {
        let graph = self.graph.delete_edges(cut)?;
        let gains = graph.edges().map(|e| (e, self.gains[&e])).collect();
        Ok(GainGraph { graph, gains })
    }

    pub fn disjoint_union(&self, other: &GainGraph) -> GainGraph {
        let offset = self.n();
        let graph = self.graph.disjoint_union(&other.graph);
        let mut gains = self.gains.clone();
        gains.extend(
            other
                .gains
                .iter()
                .map(|(&(u, v), &z)| ((u + offset, v + offset), z)),
        );
        GainGraph { graph, gains }
    }

    /// `Φ ⊗ H`: the Kronecker product graph, each edge carrying the gain of
    /// the first factor's edge in the same direction.
    pub fn kronecker(&self, h: &Graph) -> GainGraph {
        let graph = self.graph.kronecker(h);
        let hn = h.n();
        let mut gains = BTreeMap::new();
        for (&(v, v2), &z) in &self.gains {
            for (u, u2) in h.edges() {
                // v < v2, so the (v, .) endpoint always has the smaller index
                gains.insert((v * hn + u, v2 * hn + u2), z);
                gains.insert((v * hn + u2, v2 * hn + u), z);
            }
        }
        GainGraph { graph, gains }
    }

    /// `Φ ⊗ K₂`.
    pub fn bipartite_double(&self) -> GainGraph {
        self.kronecker(&NamedGraph::Complete(2).build().expect("K2"))
    }

    /// Largest `|gain(u,v) - 1|` over all edges; zero for edgeless graphs.
    pub fn max_deviation_from_one(&self) -> f64 {
        self.gains
            .values()
            .map(|z| z.distance(UnitComplex::ONE))
            .fold(0.0, f64::max)
    }
}

/// A unit value per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct SwitchingFunction(Vec<UnitComplex>);

impl SwitchingFunction {
    pub fn new(values: Vec<UnitComplex>) -> Self {
        SwitchingFunction(values)
    }

    pub fn identity(n: usize) -> Self {
        SwitchingFunction(vec![UnitComplex::ONE; n])
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        SwitchingFunction(
            (0..n)
                .map(|_| UnitComplex::from_angle(rng.random_range(0.0..TAU)))
                .collect(),
        )
    }

    pub fn values(&self) -> &[UnitComplex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for SwitchingFunction {
    type Output = UnitComplex;

    fn index(&self, v: usize) -> &UnitComplex {
        &self.0[v]
    }
}
