//! Maximum matchings in general graphs.
//!
//! [`maximum_matching`] is Edmonds' blossom algorithm in the BFS form with
//! explicit blossom bases (O(V³)). [`matching_oracle`] enumerates matchings
//! exhaustively and exists to cross-check it on small graphs.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};

pub const ORACLE_MAX_N: usize = 12;

const NONE: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("exhaustive matching oracle limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingResult {
    /// Matched edges `(u, v)`, `u < v`, sorted.
    pub matched_edges: Vec<Edge>,
    pub mu: usize,
    /// Saturated vertices, sorted.
    pub saturated: Vec<usize>,
}

impl MatchingResult {
    fn from_mates(mate: &[usize]) -> Self {
        let matched_edges: Vec<Edge> = mate
            .iter()
            .enumerate()
            .filter(|&(u, &v)| v != NONE && u < v)
            .map(|(u, &v)| (u, v))
            .collect();
        let saturated = (0..mate.len()).filter(|&u| mate[u] != NONE).collect();
        MatchingResult {
            mu: matched_edges.len(),
            matched_edges,
            saturated,
        }
    }
}

/// Maximum matching. Unmatched roots are tried in increasing index order and
/// neighbors are scanned in increasing order, so the edge set is deterministic.
pub fn maximum_matching(g: &Graph) -> MatchingResult {
    let mut search = Blossom::new(g);
    for root in 0..g.n() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    MatchingResult::from_mates(&search.mate)
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).mu
}

/// `μ(G) = n/2` with `n` even. The empty graph has a (vacuous) perfect matching.
pub fn has_perfect_matching(g: &Graph) -> bool {
    g.n().is_multiple_of(2) && matching_number(g) == g.n() / 2
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    /// Lowest common ancestor of the blossom bases of `a` and `b` in the
    /// alternating forest.
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom onto its base
                    let b = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, b, to);
                    self.mark_path(to, b, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = b;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Exact `μ(G)` by include/exclude recursion over the edge list.
pub fn matching_oracle(g: &Graph) -> Result<usize, MatchingError> {
    if g.n() > ORACLE_MAX_N {
        return Err(MatchingError::TooLarge {
            n: g.n(),
            limit: ORACLE_MAX_N,
        });
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut best = 0;
    include_exclude(&edges, 0, 0u32, 0, g.n() / 2, &mut best);
    Ok(best)
}

fn include_exclude(edges: &[Edge], i: usize, used: u32, size: usize, cap: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if i == edges.len() || *best == cap || size + (edges.len() - i) <= *best {
        return;
    }
    let (u, v) = edges[i];
    let mask = (1u32 << u) | (1u32 << v);
    if used & mask == 0 {
        include_exclude(edges, i + 1, used | mask, size + 1, cap, best);
    }
    include_exclude(edges, i + 1, used, size, cap, best);
}
