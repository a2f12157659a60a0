//! Exact recognizers for the few fixed graphs the equality case talks about.

use crate::graph::{Bipartition, Graph};

/// Whether component `c` (vertex list `comp`) of `g` is `K_{t,t}` for some
/// `t ≥ 1`: bipartite with equal sides and `t²` edges.
pub fn is_regular_complete_bipartite(
    g: &Graph,
    bp: &Bipartition,
    c: usize,
    comp: &[usize],
) -> bool {
    let Some((x, y)) = bp.sides_of(c) else {
        return false;
    };
    let t = x.len();
    if t == 0 || y.len() != t {
        return false;
    }
    let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    edges == t * t
}

/// `P₄`: connected, four vertices, three edges, degrees `{1, 1, 2, 2}`.
pub fn is_p4(g: &Graph) -> bool {
    if g.n() != 4 || g.m() != 3 || !g.is_connected() {
        return false;
    }
    let mut deg: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
    deg.sort_unstable();
    deg == [1, 1, 2, 2]
}

/// `C̃₆`: six vertices, seven edges, bipartite, degrees `{2,2,2,2,3,3}`, the
/// two degree-3 vertices adjacent, and removing that chord leaves a 6-cycle.
pub fn is_c6_tilde(g: &Graph) -> bool {
    if g.n() != 6 || g.m() != 7 || !g.is_bipartite() {
        return false;
    }
    let mut deg: Vec<usize> = (0..6).map(|v| g.degree(v)).collect();
    let hubs: Vec<usize> = (0..6).filter(|&v| g.degree(v) == 3).collect();
    deg.sort_unstable();
    if deg != [2, 2, 2, 2, 3, 3] || !g.has_edge(hubs[0], hubs[1]) {
        return false;
    }
    let cycle = g
        .delete_edges(&[(hubs[0], hubs[1])])
        .expect("hubs are adjacent");
    cycle.is_connected() && (0..6).all(|v| cycle.degree(v) == 2)
}
