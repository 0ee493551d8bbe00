use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;

use super::random::{random_connected_graph, rng_for};
use super::{elapsed_ms, in_pool, HarnessError, SweepOptions, SweepReport, SweepRow};
use crate::spectral::{spectral_radius_default, DEFAULT_TOL};

const CAMPAIGN: &str = "monotonicity";

/// Adds one random non-edge to a random connected graph and checks that the
/// spectral radius does not drop (beyond twice the solver tolerance).
///
/// Row columns: `e`/`rho` describe `G`, `e_thr`/`rho_thr` describe `G + uv`,
/// and `meets_rho` records whether the inequality held. Complete graphs have
/// no non-edge; their rows are marked `skipped`.
pub fn subgraph_monotonicity_sweep(
    samples: usize,
    seed: u64,
    opts: &SweepOptions,
) -> Result<SweepReport, HarnessError> {
    let timings = opts.timings;
    let rows: Vec<(SweepRow, Option<f64>)> = in_pool(opts.jobs, || {
        (0..samples)
            .into_par_iter()
            .map(|i| sample_row(i, seed, timings))
            .collect()
    })?;
    let mut report = SweepReport::new(CAMPAIGN, seed);
    let mut min_margin = f64::INFINITY;
    for (row, margin) in rows {
        if let Some(m) = margin {
            min_margin = min_margin.min(m);
            if !row.meets_rho {
                report.flag(&row, format!("rho fell by {}", -m));
            }
        }
        report.rows.push(row);
    }
    if min_margin.is_finite() {
        report.notes.push(format!(
            "smallest increase rho(G+e) - rho(G): {min_margin:e}"
        ));
    }
    report.cross_validate();
    Ok(report)
}

fn sample_row(row_id: usize, seed: u64, timings: bool) -> (SweepRow, Option<f64>) {
    let start = Instant::now();
    let mut rng = rng_for(seed, row_id as u64);
    let n = rng.gen_range(2..=12);
    let p = rng.gen_range(0.05..0.9);
    let g = random_connected_graph(&mut rng, n, p);
    let mut row = SweepRow::new(CAMPAIGN, seed, row_id, &g);
    row.rho = spectral_radius_default(&g).map(|r| r.rho).unwrap_or(0.0);
    let free = g.non_edges();
    if free.is_empty() {
        row.oracle = "skipped".into();
        row.elapsed_ms = elapsed_ms(start, timings);
        return (row, None);
    }
    let (u, v) = free[rng.gen_range(0..free.len())];
    let h = g.with_edge(u, v).expect("non-edge");
    let rho_h = spectral_radius_default(&h)
        .map(|r| r.rho)
        .unwrap_or(f64::NAN);
    row.e_thr = Some(h.edge_count());
    row.rho_thr = Some(rho_h);
    row.meets_e = true;
    row.meets_rho = rho_h > row.rho - 2.0 * DEFAULT_TOL;
    row.elapsed_ms = elapsed_ms(start, timings);
    let margin = rho_h - row.rho;
    (row, Some(margin))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn chord_raises_cycle_radius() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let r = spectral_radius_default(&c6.with_edge(0, 3).unwrap())
            .unwrap()
            .rho;
        assert!(r > 2.0 + 1e-6);
    }

    #[test]
    fn seeded_sweep() {
        let r = subgraph_monotonicity_sweep(200, 7, &SweepOptions::default()).unwrap();
        assert!(r.pass());
        assert_eq!(r.rows.len(), 200);
        assert!(
            r.rows.iter().any(|row| row.oracle == "skipped")
                || r.rows.iter().all(|row| row.rho_thr.is_some())
        );
    }
}
