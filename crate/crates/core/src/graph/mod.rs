//! Undirected simple graphs on dense vertex indices `0..n`.
//!
//! Graphs carry sorted adjacency lists, so every traversal below visits
//! vertices and neighbors in increasing index order. That makes components,
//! bipartitions and edge lists reproducible across runs.

mod named;
mod random;

pub use named::{extremal_union, NamedGraph};
pub use random::{gnp, random_bipartite, random_connected_gnp, random_tree};

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("invalid size: {0}")]
    InvalidSize(String),
}

/// An unordered edge, stored with `u < v`.
pub type Edge = (usize, usize);

fn ordered(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let pos = match self.adj[u].binary_search(&v) {
            Ok(_) => {
                let (a, b) = ordered(u, v);
                return Err(GraphError::DuplicateEdge(a, b));
            }
            Err(pos) => pos,
        };
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.m += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vs`. Vertex `i` of the result is `vertices[i]`
    /// of `self`, with `vertices` sorted ascending and deduplicated.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<InducedSubgraph, GraphError> {
        for &v in vs {
            self.check_vertex(v)?;
        }
        let vertices: Vec<usize> = vs
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut graph = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && j > i {
                    graph.add_edge(i, j).expect("induced edges are simple");
                }
            }
        }
        Ok(InducedSubgraph { graph, vertices })
    }

    /// `self - vs`: the subgraph induced by the complement of `vs`.
    pub fn remove_vertices(&self, vs: &[usize]) -> Result<InducedSubgraph, GraphError> {
        for &v in vs {
            self.check_vertex(v)?;
        }
        let drop: BTreeSet<usize> = vs.iter().copied().collect();
        let keep: Vec<usize> = (0..self.n()).filter(|v| !drop.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for root in 0..self.n() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS two-coloring of every component.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.n();
        let mut side = vec![Side::X; n];
        let mut component = vec![usize::MAX; n];
        let mut bipartite = Vec::new();
        for root in 0..n {
            if component[root] != usize::MAX {
                continue;
            }
            let c = bipartite.len();
            let mut ok = true;
            component[root] = c;
            side[root] = Side::X;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if component[w] == usize::MAX {
                        component[w] = c;
                        side[w] = side[u].other();
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        ok = false;
                    }
                }
            }
            bipartite.push(ok);
        }
        Bipartition {
            side,
            component,
            bipartite,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_bipartite()
    }

    /// All edges with exactly one endpoint in `vs`.
    pub fn edge_cut(&self, vs: &[usize]) -> Result<Vec<Edge>, GraphError> {
        let mut inside = vec![false; self.n()];
        for &v in vs {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        Ok(self
            .edges()
            .filter(|&(u, v)| inside[u] != inside[v])
            .collect())
    }

    /// Spanning subgraph with the edges of `cut` removed.
    pub fn delete_edges(&self, cut: &[Edge]) -> Result<Graph, GraphError> {
        let mut drop = BTreeSet::new();
        for &(u, v) in cut {
            if !self.has_edge(u, v) {
                return Err(GraphError::NotAnEdge(u, v));
            }
            drop.insert(ordered(u, v));
        }
        let kept: Vec<Edge> = self.edges().filter(|e| !drop.contains(e)).collect();
        Graph::from_edges(self.n(), &kept)
    }

    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&w| w + offset).collect()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    /// Kronecker (tensor) product. Vertex `(v, u)` is numbered `v * h.n() + u`.
    pub fn kronecker(&self, h: &Graph) -> Graph {
        let hn = h.n();
        let mut g = Graph::empty(self.n() * hn);
        for (v, v2) in self.edges() {
            for (u, u2) in h.edges() {
                // vv' and uu' give the two product edges (v,u)(v',u') and (v,u')(v',u)
                g.add_edge(v * hn + u, v2 * hn + u2)
                    .expect("product edges are simple");
                g.add_edge(v * hn + u2, v2 * hn + u)
                    .expect("product edges are simple");
            }
        }
        g
    }
}

/// A subgraph together with the map back to the parent's vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Per-vertex BFS coloring plus a per-component bipartite flag.
///
/// The root of each component (its smallest vertex) is always on side X.
/// Sides of a vertex in a non-bipartite component carry no meaning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<Side>,
    /// Component index of each vertex, matching [`Graph::components`] order.
    pub component: Vec<usize>,
    pub bipartite: Vec<bool>,
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        self.bipartite.iter().all(|&b| b)
    }

    /// Sides X and Y of component `c`, if that component is bipartite.
    pub fn sides_of(&self, c: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        if !*self.bipartite.get(c)? {
            return None;
        }
        let (mut x, mut y) = (Vec::new(), Vec::new());
        for (v, &cv) in self.component.iter().enumerate() {
            if cv == c {
                match self.side[v] {
                    Side::X => x.push(v),
                    Side::Y => y.push(v),
                }
            }
        }
        Some((x, y))
    }
}
