use rand::Rng;

use super::Graph;

/// Erdős–Rényi `G(n, p)`: each pair independently, in lexicographic order.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// `G(n, p)` resampled until connected. A spanning path is added after
/// 64 failed draws, so the loop always ends.
pub fn random_connected_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    for _ in 0..64 {
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
    let mut g = gnp(n, p, rng);
    for v in 1..n {
        if !g.has_edge(v - 1, v) {
            g.add_edge(v - 1, v).expect("fresh pair");
        }
    }
    g
}

/// Uniform random attachment tree: vertex `v` joins a uniform earlier vertex.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let parent = rng.random_range(0..v);
        g.add_edge(parent, v).expect("fresh pair");
    }
    g
}

/// Random bipartite graph with sides `0..s` and `s..s+t`, each cross pair
/// present with probability `p`.
pub fn random_bipartite<R: Rng + ?Sized>(s: usize, t: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(s + t);
    for u in 0..s {
        for v in s..s + t {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_gnp_is_reproducible() {
        let a = gnp(8, 0.5, &mut ChaCha8Rng::seed_from_u64(1));
        let b = gnp(8, 0.5, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(a, b);
        assert_eq!(gnp(6, 1.0, &mut ChaCha8Rng::seed_from_u64(3)).m(), 15);
        assert_eq!(gnp(6, 0.0, &mut ChaCha8Rng::seed_from_u64(3)).m(), 0);
    }

    #[test]
    fn trees_and_connected_draws() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..12 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.m(), n - 1);
            assert!(t.is_connected());
            assert!(random_connected_gnp(n, 0.1, &mut rng).is_connected());
        }
        let b = random_bipartite(3, 4, 0.7, &mut rng);
        assert!(b.is_bipartite());
    }
}
