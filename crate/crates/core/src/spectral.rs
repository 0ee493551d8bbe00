//! Spectral radius of adjacency matrices by power iteration, and quotient
//! matrices of vertex partitions.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("spectral radius of the graph on zero vertices is undefined")]
    EmptyGraph,
    #[error("power iteration did not converge in {iterations} iterations (estimate {estimate}, residual {residual:e})")]
    NoConvergence {
        estimate: f64,
        residual: f64,
        iterations: usize,
    },
    #[error("invalid quotient blocks: {0}")]
    InvalidBlocks(String),
    #[error("no real root at or above {lower_bound}")]
    NoRootAbove { lower_bound: f64, largest: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    pub iterations: usize,
    /// `‖Ax − ρx‖∞` for the final iterate scaled to `‖x‖∞ = 1`.
    pub residual: f64,
}

pub fn spectral_radius_default(g: &Graph) -> Result<SpectralResult, SpectralError> {
    spectral_radius(g, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

/// Largest adjacency eigenvalue of `g`: the maximum over connected components
/// of the Perron root, each found by power iteration on `A + I` from the
/// all-ones vector (the shift keeps bipartite components from oscillating).
pub fn spectral_radius(
    g: &Graph,
    tol: f64,
    max_iter: usize,
) -> Result<SpectralResult, SpectralError> {
    if g.n() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let mut best = SpectralResult {
        rho: 0.0,
        iterations: 0,
        residual: 0.0,
    };
    let mut total_iter = 0;
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        let r = perron_root(&g.induced(&comp), tol, max_iter)?;
        total_iter += r.iterations;
        if r.rho > best.rho {
            best = r;
        }
        best.residual = best.residual.max(r.residual);
    }
    best.iterations = total_iter;
    Ok(best)
}

fn perron_root(g: &Graph, tol: f64, max_iter: usize) -> Result<SpectralResult, SpectralError> {
    let n = g.n();
    let mut x = vec![1.0f64; n];
    let mut y = vec![0.0f64; n];
    let mut estimate = 0.0;
    let mut residual = f64::INFINITY;
    for it in 1..=max_iter {
        // y = (A + I) x
        for v in 0..n {
            y[v] = x[v] + g.neighbors(v).map(|w| x[w]).sum::<f64>();
        }
        let xy: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let xx: f64 = x.iter().map(|a| a * a).sum();
        estimate = xy / xx - 1.0;
        residual = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - xi - estimate * xi).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok(SpectralResult {
                rho: estimate,
                iterations: it,
                residual,
            });
        }
        let scale = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / scale;
        }
    }
    Err(SpectralError::NoConvergence {
        estimate,
        residual,
        iterations: max_iter,
    })
}

/// Quotient matrix `(m_ij)` of `g` for the given blocks, or `None` when the
/// partition is not equitable (some vertex of block `i` has a neighbour count
/// into block `j` different from the rest of block `i`). Blocks must partition
/// the vertex set.
pub fn equitable_quotient(g: &Graph, blocks: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let mut block_of = vec![usize::MAX; g.n()];
    for (b, verts) in blocks.iter().enumerate() {
        for &v in verts {
            if v >= g.n() || block_of[v] != usize::MAX {
                return None;
            }
            block_of[v] = b;
        }
    }
    if block_of.contains(&usize::MAX) || blocks.iter().any(Vec::is_empty) {
        return None;
    }
    let k = blocks.len();
    let mut out = Vec::with_capacity(k);
    for verts in blocks {
        let mut row: Option<Vec<usize>> = None;
        for &v in verts {
            let mut counts = vec![0usize; k];
            for w in g.neighbors(v) {
                counts[block_of[w]] += 1;
            }
            match &row {
                None => row = Some(counts),
                Some(r) if *r != counts => return None,
                Some(_) => {}
            }
        }
        out.push(row.expect("non-empty block"));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, disjoint_union, extremal};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn regular_graphs() {
        let r = spectral_radius_default(&complete(5)).unwrap();
        assert!((r.rho - 4.0).abs() <= 1e-10);
        let r = spectral_radius_default(&cycle(6)).unwrap();
        assert!((r.rho - 2.0).abs() <= 1e-10);
        assert!(r.residual <= DEFAULT_TOL);
    }

    #[test]
    fn extremal_8_2_matches_cubic_root() {
        // largest root of x^3 - 5x^2 - 8x + 8, located by bisection on [6.09, 6.10]
        let p = |x: f64| x * x * x - 5.0 * x * x - 8.0 * x + 8.0;
        assert!(p(6.09) < 0.0 && p(6.10) > 0.0);
        let (mut lo, mut hi) = (6.09f64, 6.10f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if p(mid) < 0.0 {
                lo = mid
            } else {
                hi = mid
            }
        }
        let r = spectral_radius_default(&extremal(8, 2).unwrap()).unwrap();
        assert!((r.rho - lo).abs() <= 1e-8, "{} vs {}", r.rho, lo);
        assert!((r.rho - 6.096924).abs() < 1e-6);
    }

    #[test]
    fn bipartite_and_disconnected() {
        // K_{3,3}: rho = 3, spectrum symmetric, needs the shift
        let g = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let r = spectral_radius_default(&g).unwrap();
        assert!((r.rho - 3.0).abs() <= 1e-9);
        let g = disjoint_union(&[cycle(5), complete(4), Graph::empty(2)]);
        let r = spectral_radius_default(&g).unwrap();
        assert!((r.rho - 3.0).abs() <= 1e-9);
        assert_eq!(spectral_radius_default(&Graph::empty(3)).unwrap().rho, 0.0);
        assert_eq!(
            spectral_radius_default(&Graph::empty(0)),
            Err(SpectralError::EmptyGraph)
        );
    }

    #[test]
    fn reports_non_convergence() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        match spectral_radius(&g, 1e-14, 3) {
            Err(SpectralError::NoConvergence {
                iterations: 3,
                estimate,
                residual,
            }) => {
                assert!(estimate > 1.0 && residual > 1e-14);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn quotient_of_equitable_partition() {
        let g = extremal(8, 2).unwrap();
        let blocks = vec![vec![0, 1], (2..7).collect(), vec![7]];
        let q = equitable_quotient(&g, &blocks).unwrap();
        assert_eq!(q, vec![vec![1, 5, 1], vec![2, 4, 0], vec![2, 0, 0]]);
        // moving one vertex breaks equitability
        let bad = vec![vec![0, 1, 2], (3..7).collect(), vec![7]];
        assert!(equitable_quotient(&g, &bad).is_none());
        assert!(equitable_quotient(&g, &[vec![0, 1]]).is_none());
    }
}
