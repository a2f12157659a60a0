//! Oracles shared by the integration tests and the acceptance suite. None of
//! them call the library routine they are used to check.
#![allow(dead_code)]

use gainspec::gain::{GainGraph, UnitComplex};
use gainspec::graph::Graph;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Eigenvalues of `A(Φ)` via nalgebra on the real symmetric embedding
/// `[[Re A, -Im A], [Im A, Re A]]`, whose spectrum is that of `A` doubled.
/// Sorted descending.
pub fn embedded_eigenvalues(phi: &GainGraph) -> Vec<f64> {
    let n = phi.n();
    let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for (u, v, z) in phi.gained_edges() {
        for (i, j, w) in [(u, v, z), (v, u, z.conj())] {
            m[(i, j)] = w.re();
            m[(i + n, j + n)] = w.re();
            m[(i, j + n)] = -w.im();
            m[(i + n, j)] = w.im();
        }
    }
    let mut all: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    all.sort_by(|a, b| b.total_cmp(a));
    all.into_iter().step_by(2).collect()
}

pub fn embedded_energy(phi: &GainGraph) -> f64 {
    embedded_eigenvalues(phi).iter().map(|x| x.abs()).sum()
}

/// `μ(G)` by memoized recursion over vertex subsets: the lowest remaining
/// vertex is either left unmatched or matched to a remaining neighbor.
pub fn subset_matching_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "subset oracle limited to 16 vertices");
    let mut memo = vec![usize::MAX; 1 << n];
    fn go(g: &Graph, mask: usize, memo: &mut [usize]) -> usize {
        if mask == 0 {
            return 0;
        }
        if memo[mask] != usize::MAX {
            return memo[mask];
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(g, rest, memo);
        for &u in g.neighbors(v) {
            if rest & (1 << u) != 0 {
                best = best.max(1 + go(g, rest & !(1 << u), memo));
            }
        }
        memo[mask] = best;
        best
    }
    go(g, (1 << n) - 1, &mut memo)
}

/// Every simple cycle (length ≥ 3) once per direction, as vertex lists
/// starting at their smallest vertex.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("nonempty");
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                out.push(path.clone());
            } else if w > start && !on[w] {
                on[w] = true;
                path.push(w);
                extend(g, start, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        on[s] = true;
        extend(g, s, &mut vec![s], &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Product of gains around `cycle`, computed in `Complex64`.
pub fn walk_gain(phi: &GainGraph, cycle: &[usize]) -> Complex64 {
    let mut z = Complex64::new(1.0, 0.0);
    for (i, &u) in cycle.iter().enumerate() {
        let v = cycle[(i + 1) % cycle.len()];
        z *= phi.gain(u, v).expect("cycle edge").to_complex();
    }
    z
}

/// Balanced iff every simple cycle has gain within `tol` of 1.
pub fn all_cycles_balanced(phi: &GainGraph, tol: f64) -> bool {
    simple_cycles(phi.graph())
        .iter()
        .all(|c| (walk_gain(phi, c) - 1.0).norm() <= tol)
}

/// Roots of the monic polynomial with descending real coefficients
/// `coeffs[0] = 1`, by Durand–Kerner iteration.
pub fn polynomial_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let eval = |z: Complex64| {
        coeffs
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    };
    let bound = 1.0 + coeffs[1..].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32) * bound).collect();
    for _ in 0..2000 {
        let mut change = 0.0f64;
        for i in 0..d {
            let denom = (0..d)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| {
                    acc * (roots[i] - roots[j])
                });
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            change = change.max(step.norm());
        }
        if change < 1e-15 {
            break;
        }
    }
    roots
}

/// Coefficients (descending, monic) of `Π (x - λ)`.
pub fn poly_from_roots(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, &ci) in c.iter().enumerate() {
            next[i] += ci;
            next[i + 1] -= r * ci;
        }
        c = next;
    }
    c
}

/// Multiset distance between two real spectra of equal length.
pub fn spectrum_distance(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn unit(theta: f64) -> UnitComplex {
    UnitComplex::from_angle(theta)
}

/// Gain graphs on `1..=nmax` vertices: each pair is an edge with probability
/// one half and carries an arbitrary angle.
pub fn arb_gain_graph(nmax: usize) -> impl proptest::strategy::Strategy<Value = GainGraph> {
    use proptest::prelude::*;
    (1..=nmax).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            proptest::collection::vec(any::<bool>(), pairs),
            proptest::collection::vec(-10.0f64..10.0, pairs),
        )
            .prop_map(|(n, present, angles)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if present[k] {
                            edges.push((u, v, UnitComplex::from_angle(angles[k])));
                        }
                        k += 1;
                    }
                }
                GainGraph::from_gains(n, &edges).expect("valid edges")
            })
    })
}
