use serde::Serialize;

use super::{HarnessError, SweepOptions, SweepReport, SweepRow};
use crate::even_factor::{
    check_yan_kano_condition, has_even_factor, verify_certificate, FactorStatus,
};
use crate::graph::{extremal, odd_components_minus, Graph, VertexSet};
use crate::spectral::spectral_radius_default;
use crate::thresholds::{
    applicability, edge_threshold, spectral_threshold, verdict_with_delta, Guarantee, Theorem,
    Which,
};

const CAMPAIGN: &str = "tightness";
const EQUALITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionFinding {
    pub holds: bool,
    pub witness: Option<VertexSet>,
    pub witness_odd_components: Option<usize>,
    /// The join core and `o(G* − core)`, evaluated directly.
    pub core: VertexSet,
    pub core_odd_components: usize,
    pub core_is_tight: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AddedEdgeCheck {
    pub edge: (usize, usize),
    pub e: usize,
    pub rho: f64,
    pub guarantees: Vec<Guarantee>,
    pub oracle: FactorStatus,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessReport {
    pub n: usize,
    pub delta: usize,
    pub theorems: Vec<Theorem>,
    pub edge_threshold: usize,
    pub extremal_edges: usize,
    pub edge_equality: bool,
    pub spectral_threshold: f64,
    pub extremal_rho: f64,
    pub spectral_equality: bool,
    pub condition: ConditionFinding,
    /// Whether `G*` itself has an even factor. Recorded, not asserted.
    pub extremal_oracle: FactorStatus,
    pub extremal_certificate: Option<Vec<(usize, usize)>>,
    pub added_edges: Vec<AddedEdgeCheck>,
    pub pass: bool,
    pub sweep: SweepReport,
}

/// Equality and sharpness checks at the extremal graph `G*(n, δ)`: it sits
/// exactly on both thresholds, violates the odd-component condition at its join
/// core, and every single-edge supergraph is guaranteed an even factor by each
/// applicable theorem (confirmed by the oracle).
pub fn tightness_report(
    n: usize,
    delta: usize,
    opts: &SweepOptions,
) -> Result<TightnessReport, HarnessError> {
    if delta < 2 || n < 2 * delta {
        return Err(HarnessError::InvalidParameters(format!(
            "need delta >= 2 and n >= 2delta (n={n}, delta={delta})"
        )));
    }
    let theorems: Vec<Theorem> = [Theorem::Size, Theorem::Spectral]
        .into_iter()
        .filter(|&t| applicability(n, delta, t).unwrap_or(false))
        .collect();
    if theorems.is_empty() {
        return Err(HarnessError::NotApplicable { n, delta });
    }
    let g = extremal(n, delta).map_err(|e| HarnessError::InvalidParameters(e.to_string()))?;
    let e_thr = edge_threshold(n, delta)?;
    let theta = spectral_threshold(n, delta)?;
    let rho = spectral_radius_default(&g)
        .map_err(|e| HarnessError::InvalidParameters(e.to_string()))?
        .rho;

    let cond =
        check_yan_kano_condition(&g).map_err(|e| HarnessError::InvalidParameters(e.to_string()))?;
    let core: VertexSet = (0..delta).collect();
    let core_odd = odd_components_minus(&g, &core);
    let condition = ConditionFinding {
        holds: cond.holds,
        witness: cond.witness.clone(),
        witness_odd_components: cond.witness_odd_components,
        core_is_tight: core_odd == delta,
        core,
        core_odd_components: core_odd,
    };

    let mut sweep = SweepReport::new(CAMPAIGN, 0);
    let base = has_even_factor(&g, opts.caps);
    let mut row = SweepRow::new(CAMPAIGN, 0, 0, &g);
    row.rho = rho;
    row.e_thr = Some(e_thr);
    row.rho_thr = Some(theta);
    row.meets_e = g.edge_count() >= e_thr;
    row.meets_rho = rho >= theta - EQUALITY_TOL;
    row.is_extremal = true;
    row.oracle = base.status.as_str().into();
    row.cost_candidates = base.search_cost;
    sweep.rows.push(row);
    if base.status == FactorStatus::Unknown {
        sweep.unknown += 1;
    }

    let mut added_edges = Vec::new();
    for (u, v) in g.non_edges() {
        let h = g.with_edge(u, v).expect("non-edge");
        let check = added_edge(&h, (u, v), delta, &theorems, opts);
        let mut row = SweepRow::new(CAMPAIGN, 0, sweep.rows.len(), &h);
        row.delta = Some(delta);
        row.rho = check.rho;
        row.e_thr = Some(e_thr);
        row.rho_thr = Some(theta);
        row.meets_e = h.edge_count() >= e_thr;
        row.meets_rho = check.rho >= theta - EQUALITY_TOL;
        row.oracle = check.oracle.as_str().into();
        if check.oracle == FactorStatus::Unknown {
            sweep.unknown += 1;
        }
        if !check.pass {
            sweep.flag(
                &row,
                format!(
                    "adding {:?}: guarantees {:?}, oracle {:?}",
                    check.edge, check.guarantees, check.oracle
                ),
            );
        }
        sweep.rows.push(row);
        added_edges.push(check);
    }
    sweep.cross_validate();

    let edge_equality = g.edge_count() == e_thr;
    let spectral_equality = (rho - theta).abs() <= EQUALITY_TOL;
    let pass = edge_equality
        && spectral_equality
        && !condition.holds
        && condition.core_is_tight
        && added_edges.iter().all(|c| c.pass)
        && sweep.pass();
    Ok(TightnessReport {
        n,
        delta,
        theorems,
        edge_threshold: e_thr,
        extremal_edges: g.edge_count(),
        edge_equality,
        spectral_threshold: theta,
        extremal_rho: rho,
        spectral_equality,
        condition,
        extremal_oracle: base.status,
        extremal_certificate: base.certificate,
        added_edges,
        pass,
        sweep,
    })
}

fn added_edge(
    h: &Graph,
    edge: (usize, usize),
    delta: usize,
    theorems: &[Theorem],
    opts: &SweepOptions,
) -> AddedEdgeCheck {
    let guarantees: Vec<Guarantee> = theorems
        .iter()
        .map(|t| {
            let which = match t {
                Theorem::Size => Which::Edges,
                Theorem::Spectral => Which::Spectral,
            };
            verdict_with_delta(h, which, Some(delta)).guarantee
        })
        .collect();
    let result = has_even_factor(h, opts.caps);
    let verified = result
        .certificate
        .as_deref()
        .is_some_and(|c| verify_certificate(h, c));
    let rho = spectral_radius_default(h)
        .map(|r| r.rho)
        .unwrap_or(f64::NAN);
    AddedEdgeCheck {
        edge,
        e: h.edge_count(),
        rho,
        pass: guarantees.iter().all(|g| g.is_guaranteed())
            && result.status == FactorStatus::Exists
            && verified,
        guarantees,
        oracle: result.status,
    }
}
