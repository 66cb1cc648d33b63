use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::Graph;

/// Connected Erdős–Rényi graph G(n, p), resampled until connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).expect("generated edges are in range");
        if g.is_connected() {
            return g;
        }
    }
}
