use super::{Graph, GraphError};

/// Named constructions with a fixed vertex numbering.
///
/// * `Path(n)`: `0 - 1 - ... - (n-1)`.
/// * `Cycle(n)`: the path closed by `(n-1) - 0`; needs `n >= 3`.
/// * `Complete(n)`: every pair.
/// * `CompleteBipartite(s, t)`: side X is `0..s`, side Y is `s..s+t`.
/// * `Star(t)`: `K_{1,t}` with center `0` and leaves `1..=t`.
/// * `C6Tilde`: the 6-cycle `v1..v6` on `0..6` plus the chord `v2 v5` = `1 - 4`.
/// * `Petersen`: outer cycle `0..5`, spokes `i - (i+5)`, inner pentagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    C6Tilde,
    Petersen,
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph, GraphError> {
        match self {
            NamedGraph::Path(n) => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)
            }
            NamedGraph::Cycle(n) => {
                if n < 3 {
                    return Err(GraphError::InvalidSize(format!(
                        "cycle needs n >= 3, got {n}"
                    )));
                }
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                edges.push((n - 1, 0));
                Graph::from_edges(n, &edges)
            }
            NamedGraph::Complete(n) => {
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                Graph::from_edges(n, &edges)
            }
            NamedGraph::CompleteBipartite(s, t) => {
                let edges: Vec<_> = (0..s)
                    .flat_map(|u| (s..s + t).map(move |v| (u, v)))
                    .collect();
                Graph::from_edges(s + t, &edges)
            }
            NamedGraph::Star(t) => NamedGraph::CompleteBipartite(1, t).build(),
            NamedGraph::C6Tilde => {
                let mut g = NamedGraph::Cycle(6).build()?;
                g.add_edge(1, 4)?;
                Ok(g)
            }
            NamedGraph::Petersen => {
                let mut edges = Vec::with_capacity(15);
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                Graph::from_edges(10, &edges)
            }
        }
    }
}

/// Disjoint union of `K_{t,t}` for each `t` in `sizes`, followed by
/// `isolated` single vertices.
pub fn extremal_union(sizes: &[usize], isolated: usize) -> Graph {
    let mut g = Graph::empty(0);
    for &t in sizes {
        let k = NamedGraph::CompleteBipartite(t, t)
            .build()
            .expect("complete bipartite graphs have no invalid sizes");
        g = g.disjoint_union(&k);
    }
    g.disjoint_union(&Graph::empty(isolated))
}
