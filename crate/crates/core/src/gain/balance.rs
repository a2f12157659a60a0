use std::collections::VecDeque;

use super::{GainGraph, SwitchingFunction, UnitComplex};

/// Largest `|gain - 1|` still treated as neutral.
pub const BALANCE_TOLERANCE: f64 = 1e-9;

/// Verdict of [`GainGraph::balance`] together with a checkable witness.
#[derive(Clone, Debug, PartialEq)]
pub enum BalanceCertificate {
    /// Switching by `switching` turns every gain into 1.
    Balanced { switching: SwitchingFunction },
    /// `cycle` (closing vertex repeated) has gain `gain != 1`.
    Unbalanced {
        cycle: Vec<usize>,
        gain: UnitComplex,
    },
}

impl BalanceCertificate {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceCertificate::Balanced { .. })
    }

    /// Re-checks the witness against `phi`.
    pub fn verify(&self, phi: &GainGraph) -> bool {
        match self {
            BalanceCertificate::Balanced { switching } => phi
                .switch(switching)
                .map(|s| s.max_deviation_from_one() <= BALANCE_TOLERANCE)
                .unwrap_or(false),
            BalanceCertificate::Unbalanced { cycle, gain } => match phi.cycle_gain(cycle) {
                Ok(g) => {
                    g.distance(*gain) <= BALANCE_TOLERANCE
                        && g.distance(UnitComplex::ONE) > BALANCE_TOLERANCE
                }
                Err(_) => false,
            },
        }
    }
}

impl GainGraph {
    /// Decides balance by switching along BFS trees.
    ///
    /// Each component is rooted at its smallest vertex with `ζ = 1`; a tree
    /// edge `u -> w` sets `ζ(w) = ζ(u)·φ(w,u)`, which makes `φ^ζ(u,w) = 1`.
    /// The graph is balanced iff every non-tree edge then also has switched
    /// gain within [`BALANCE_TOLERANCE`] of 1. Otherwise the first failing
    /// edge (lexicographic order) plus the tree path between its ends is
    /// returned as the unbalanced cycle.
    pub fn balance(&self) -> BalanceCertificate {
        let g = self.graph();
        let n = g.n();
        let mut zeta = vec![UnitComplex::ONE; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        zeta[w] = zeta[u] * self.gain(w, u).expect("tree edge");
                        queue.push_back(w);
                    }
                }
            }
        }

        for (u, v, phi) in self.gained_edges() {
            if parent[v] == u || parent[u] == v {
                continue;
            }
            let switched = zeta[u].inv() * phi * zeta[v];
            if switched.distance(UnitComplex::ONE) > BALANCE_TOLERANCE {
                let cycle = tree_cycle(&parent, &depth, u, v);
                let gain = self
                    .cycle_gain(&cycle)
                    .expect("tree path plus edge is a cycle");
                return BalanceCertificate::Unbalanced { cycle, gain };
            }
        }
        BalanceCertificate::Balanced {
            switching: SwitchingFunction::new(zeta),
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.balance().is_balanced()
    }
}

/// `u -> ... -> v -> u` through the lowest common ancestor of `u` and `v`.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut up = vec![a];
    let mut down = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        down.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up.push(a);
        down.push(b);
    }
    down.pop();
    up.extend(down.into_iter().rev());
    up.push(u);
    up
}
