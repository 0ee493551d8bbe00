//! Seeded random graphs. All randomness flows from [`rng_for`], so a
//! `(seed, stream)` pair fixes every draw on every platform.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg32;

use crate::graph::Graph;

/// PCG32 (XSH-RR, 64-bit state) seeded through `seed_from_u64` with the seed
/// and stream mixed by a golden-ratio multiply.
pub fn rng_for(seed: u64, stream: u64) -> Pcg32 {
    Pcg32::seed_from_u64(seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Index `i` of the lexicographic pair list `(0,1), (0,2), …, (n−2,n−1)`.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Uniform random labelled recursive tree, relabelled by a random permutation.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = Graph::empty(n);
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        g.add_edge(labels[v], labels[parent]);
    }
    g
}

/// Random tree plus every other pair independently with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = random_tree(rng, n);
    for (u, v) in all_pairs(n) {
        if !g.has_edge(u, v) && rng.gen_bool(p) {
            g.add_edge(u, v);
        }
    }
    g
}

/// Random tree plus `m − (n−1)` extra edges chosen uniformly among the rest.
/// `m` is clamped to `[n−1, n(n−1)/2]`.
pub fn random_connected_graph_with_edges<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut g = random_tree(rng, n);
    let free = g.non_edges();
    let extra = m.saturating_sub(n.saturating_sub(1)).min(free.len());
    for i in sample(rng, free.len(), extra) {
        let (u, v) = free[i];
        g.add_edge(u, v);
    }
    g
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for (u, v) in all_pairs(n) {
        if rng.gen_bool(p) {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_n` minus `k` pairs chosen uniformly.
pub fn complete_minus<R: Rng>(rng: &mut R, n: usize, k: usize) -> Graph {
    let pairs = all_pairs(n);
    let mut g = crate::graph::complete(n);
    for i in sample(rng, pairs.len(), k.min(pairs.len())) {
        let (u, v) = pairs[i];
        g.remove_edge(u, v);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = random_connected_graph(&mut rng_for(5, 1), 12, 0.3);
        let b = random_connected_graph(&mut rng_for(5, 1), 12, 0.3);
        let c = random_connected_graph(&mut rng_for(5, 2), 12, 0.3);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn shapes() {
        let mut rng = rng_for(1, 0);
        for n in 1..15 {
            let t = random_tree(&mut rng, n);
            assert!(t.is_connected());
            assert_eq!(t.edge_count(), n.saturating_sub(1));
            let g = random_connected_graph_with_edges(&mut rng, n, 2 * n);
            assert!(g.is_connected());
            assert_eq!(
                g.edge_count(),
                (2 * n)
                    .max(n.saturating_sub(1))
                    .min(n * n.saturating_sub(1) / 2)
            );
        }
        let g = complete_minus(&mut rng, 8, 5);
        assert_eq!(g.edge_count(), 23);
        assert_eq!(
            all_pairs(4),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        );
    }
}
