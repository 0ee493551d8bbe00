use std::time::Instant;

use rayon::prelude::*;

use super::{elapsed_ms, in_pool, HarnessError, SweepOptions, SweepReport, SweepRow};
use crate::graph::{build_family, FamilySpec};
use crate::spectral::spectral_radius_default;
use crate::thresholds::recognize_extremal;

const CAMPAIGN: &str = "lemma_merge";
const RHO_MARGIN: f64 = 1e-9;
const MAX_ORDER: usize = 16;

/// Non-increasing `t`-part partitions of `total` with every part `≥ min_part`,
/// largest part first, in decreasing lexicographic order.
pub fn partitions(total: usize, t: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn go(
        rest: usize,
        slots: usize,
        cap: usize,
        min_part: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rest < slots * min_part {
            return;
        }
        let hi = cap.min(rest - (slots - 1) * min_part);
        for part in (min_part..=hi).rev() {
            cur.push(part);
            go(rest - part, slots - 1, part, min_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if t > 0 && min_part > 0 {
        go(total, t, total, min_part, &mut Vec::new(), &mut out);
    }
    out
}

struct Instance {
    n: usize,
    s: usize,
    p: usize,
    parts: Vec<usize>,
}

/// Compares `K_s ∨ (K_{n1} ∪ … ∪ K_{nt})` against the merged graph
/// `K_s ∨ (K_{n−s−p(t−1)} ∪ (t−1)K_p)` for every partition with `n1` below the
/// merged part. Both size and spectral radius must be strictly smaller.
///
/// Row columns: the partition graph's data, with `e_thr`/`rho_thr` holding the
/// merged graph's size and radius; `meets_e`/`meets_rho` must stay false.
pub fn lemma_merge_sweep(
    max_n: usize,
    max_s: usize,
    ps: &[usize],
    opts: &SweepOptions,
) -> Result<SweepReport, HarnessError> {
    if max_n > MAX_ORDER {
        return Err(HarnessError::InvalidParameters(format!(
            "max_n {max_n} exceeds {MAX_ORDER}"
        )));
    }
    if ps.contains(&0) {
        return Err(HarnessError::InvalidParameters("p must be positive".into()));
    }
    let mut instances = Vec::new();
    for n in 1..=max_n {
        for s in 1..=max_s.min(n) {
            for &p in ps {
                let total = n - s;
                for t in 2..=total / p {
                    let merged = total - p * (t - 1);
                    for parts in partitions(total, t, p) {
                        if parts[0] < merged {
                            instances.push(Instance { n, s, p, parts });
                        }
                    }
                }
            }
        }
    }
    let timings = opts.timings;
    let rows: Vec<(SweepRow, Option<String>)> = in_pool(opts.jobs, || {
        instances
            .par_iter()
            .enumerate()
            .map(|(row_id, inst)| evaluate(row_id, inst, timings))
            .collect()
    })?;
    let mut report = SweepReport::new(CAMPAIGN, 0);
    for (row, violation) in rows {
        if let Some(reason) = violation {
            report.flag(&row, reason);
        }
        report.rows.push(row);
    }
    report.cross_validate();
    Ok(report)
}

fn evaluate(row_id: usize, inst: &Instance, timings: bool) -> (SweepRow, Option<String>) {
    let start = Instant::now();
    let t = inst.parts.len();
    let lhs = build_family(&FamilySpec::new(inst.s, inst.parts.clone()).expect("valid partition"));
    let rhs =
        build_family(&FamilySpec::merged(inst.n, inst.s, t, inst.p).expect("valid merged family"));
    let mut row = SweepRow::new(CAMPAIGN, 0, row_id, &lhs);
    row.is_extremal = recognize_extremal(&lhs).is_some();
    row.e_thr = Some(rhs.edge_count());
    row.meets_e = row.e >= rhs.edge_count();
    let radii = (spectral_radius_default(&lhs), spectral_radius_default(&rhs));
    let mut violation = None;
    match radii {
        (Ok(a), Ok(b)) => {
            row.rho = a.rho;
            row.rho_thr = Some(b.rho);
            row.meets_rho = a.rho >= b.rho - RHO_MARGIN;
        }
        (a, b) => {
            violation = Some(format!(
                "spectral radius failed: {:?} / {:?}",
                a.err(),
                b.err()
            ))
        }
    }
    let label = format!("s={} p={} parts={:?}", inst.s, inst.p, inst.parts);
    if row.meets_e {
        violation = Some(format!(
            "{label}: e {} >= merged {}",
            row.e,
            rhs.edge_count()
        ));
    } else if row.meets_rho {
        violation = Some(format!(
            "{label}: rho {} not below merged {:?}",
            row.rho, row.rho_thr
        ));
    }
    row.elapsed_ms = elapsed_ms(start, timings);
    (row, violation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn partition_enumeration() {
        assert_eq!(
            partitions(8, 2, 1),
            vec![vec![7, 1], vec![6, 2], vec![5, 3], vec![4, 4]]
        );
        assert_eq!(partitions(7, 3, 2), vec![vec![3, 2, 2]]);
        assert!(partitions(5, 3, 2).is_empty());
        // count of partitions of 10 into exactly 3 positive parts
        assert_eq!(partitions(10, 3, 1).len(), 8);
    }

    #[test]
    fn spec_instance() {
        let lhs = build_family(&FamilySpec::new(2, vec![4, 4]).unwrap());
        let rhs = build_family(&FamilySpec::merged(10, 2, 2, 1).unwrap());
        assert_eq!((lhs.edge_count(), rhs.edge_count()), (29, 38));
        assert_eq!(build_family(&FamilySpec::new(2, vec![7, 1]).unwrap()), rhs);
        let lhs_rho = spectral_radius_default(&lhs).unwrap().rho;
        let rhs_rho = spectral_radius_default(&rhs).unwrap().rho;
        assert!(lhs_rho < rhs_rho - RHO_MARGIN);
        assert!(rhs_rho < spectral_radius_default(&complete(10)).unwrap().rho);
    }

    #[test]
    fn small_sweep_is_clean_and_excludes_merged_shape() {
        let r = lemma_merge_sweep(10, 3, &[1, 2], &SweepOptions::default()).unwrap();
        assert!(r.pass(), "{:?}", r.counterexamples);
        assert!(r.rows.iter().all(|row| row.e < row.e_thr.unwrap()));
        // (7,1) with s=2, n=10 equals the merged shape and must not appear
        let merged =
            crate::graph6::write_graph6(&build_family(&FamilySpec::new(2, vec![7, 1]).unwrap()));
        assert!(r.rows.iter().all(|row| row.graph6 != merged));
        assert!(r.rows.windows(2).all(|w| w[0].row_id + 1 == w[1].row_id));
        assert!(lemma_merge_sweep(17, 2, &[1], &SweepOptions::default()).is_err());
    }

    #[test]
    fn jobs_do_not_change_rows() {
        let one = lemma_merge_sweep(9, 2, &[1], &SweepOptions::default()).unwrap();
        let four = lemma_merge_sweep(
            9,
            2,
            &[1],
            &SweepOptions {
                jobs: 4,
                ..SweepOptions::default()
            },
        )
        .unwrap();
        assert_eq!(one.to_csv_string(), four.to_csv_string());
    }
}
