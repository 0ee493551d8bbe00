//! Size and spectral-radius thresholds for even factors, hypothesis checks for
//! the two threshold theorems, recognition of the extremal graph
//! `G* = K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`, and per-graph verdicts.
//!
//! Size theorem: a connected graph of even order
//! `n ≥ max{6δ−4, (δ²+7δ+4)/6}` with minimum degree `δ ≥ 2` and
//! `e(G) ≥ e(G*)` has an even factor unless `G = G*`.
//! Spectral theorem: same with `n ≥ max{5δ−3, δ²/3+δ}` and `ρ(G) ≥ ρ(G*)`.

use serde::Serialize;
use thiserror::Error;

use crate::cubic::{char_poly, largest_real_root, quotient_matrix, QuotientFamily};
use crate::graph::Graph;
use crate::spectral::{spectral_radius_default, SpectralError};

/// Slack allowed when comparing a power-iteration `ρ(G)` with the cubic root `θ`.
pub const SPECTRAL_COMPARE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThresholdError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    /// Size threshold, serialised as `1.1`.
    #[serde(rename = "1.1")]
    Size,
    /// Spectral-radius threshold, serialised as `1.2`.
    #[serde(rename = "1.2")]
    Spectral,
}

fn require_order(n: usize, delta: usize) -> Result<(), ThresholdError> {
    if n < 2 * delta {
        return Err(ThresholdError::InvalidParameters(format!(
            "need n >= 2*delta (n={n}, delta={delta})"
        )));
    }
    Ok(())
}

/// `e(G*) = C(n−δ+1, 2) + δ(δ−1)`.
pub fn edge_threshold(n: usize, delta: usize) -> Result<usize, ThresholdError> {
    require_order(n, delta)?;
    let k = n - delta + 1;
    Ok(k * (k - 1) / 2 + delta * delta.saturating_sub(1))
}

/// `θ = ρ(G*)`, the largest root of the characteristic cubic of the extremal
/// quotient matrix; always above `n − δ`.
pub fn spectral_threshold(n: usize, delta: usize) -> Result<f64, ThresholdError> {
    require_order(n, delta)?;
    if delta < 2 {
        return Err(ThresholdError::InvalidParameters(format!(
            "need delta >= 2 (delta={delta})"
        )));
    }
    let q = quotient_matrix(QuotientFamily::Extremal { n, delta })?;
    Ok(largest_real_root(&char_poly(&q), (n - delta) as f64)?)
}

/// Order and minimum-degree hypotheses of the theorem, with cleared denominators.
pub fn applicability(n: usize, delta: usize, theorem: Theorem) -> Result<bool, ThresholdError> {
    if delta < 2 {
        return Err(ThresholdError::InvalidParameters(format!(
            "need delta >= 2 (delta={delta})"
        )));
    }
    let even = n.is_multiple_of(2);
    Ok(match theorem {
        Theorem::Size => even && n + 4 >= 6 * delta && 6 * n >= delta * delta + 7 * delta + 4,
        Theorem::Spectral => even && n + 3 >= 5 * delta && 3 * n >= delta * delta + 3 * delta,
    })
}

/// Smallest order satisfying the non-parity part of the hypotheses.
pub fn order_floor(delta: usize, theorem: Theorem) -> usize {
    match theorem {
        Theorem::Size => (6 * delta)
            .saturating_sub(4)
            .max((delta * delta + 7 * delta + 4).div_ceil(6)),
        Theorem::Spectral => (5 * delta)
            .saturating_sub(3)
            .max((delta * delta + 3 * delta).div_ceil(3)),
    }
}

/// `Some((n, δ))` iff `g` is isomorphic to `G*(n, δ)` for some `δ ≥ 2`.
///
/// Fingerprint: the `δ` universal vertices, `δ−1` vertices of degree `δ`
/// seeing exactly the universal ones, and a clique of `n−2δ+1` vertices of
/// degree `n−δ`. The three degrees are distinct once `n > 2δ`; at `n = 2δ` the
/// graph is `K_δ ∨ δK_1` and only the independence of the non-universal side is checked.
pub fn recognize_extremal(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    let degrees = g.degrees();
    let core: Vec<usize> = (0..n).filter(|&v| degrees[v] + 1 == n).collect();
    let delta = core.len();
    if delta < 2 || n < 2 * delta {
        return None;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degrees[v] + 1 != n).collect();
    let small: Vec<usize> = rest
        .iter()
        .copied()
        .filter(|&v| degrees[v] == delta)
        .collect();
    let big: Vec<usize> = rest
        .iter()
        .copied()
        .filter(|&v| degrees[v] == n - delta)
        .collect();
    let is_core = |w: usize| degrees[w] + 1 == n;
    let independent_of_rest = |v: usize| g.neighbors(v).all(is_core);
    if n == 2 * delta {
        return (small.len() == delta && small.iter().all(|&v| independent_of_rest(v)))
            .then_some((n, delta));
    }
    if small.len() != delta - 1 || big.len() != n - 2 * delta + 1 {
        return None;
    }
    if !small.iter().all(|&v| independent_of_rest(v)) {
        return None;
    }
    let big_clique = big
        .iter()
        .all(|&u| big.iter().all(|&v| u == v || g.has_edge(u, v)));
    big_clique.then_some((n, delta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Which {
    Edges,
    Spectral,
    Both,
}

impl Which {
    fn edges(self) -> bool {
        matches!(self, Which::Edges | Which::Both)
    }

    fn spectral(self) -> bool {
        matches!(self, Which::Spectral | Which::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Guarantee {
    #[serde(rename = "even_factor_guaranteed_by_1.1")]
    BySize,
    #[serde(rename = "even_factor_guaranteed_by_1.2")]
    BySpectral,
    #[serde(rename = "extremal_exception")]
    ExtremalException,
    #[serde(rename = "no_guarantee")]
    NoGuarantee,
}

impl Guarantee {
    pub fn is_guaranteed(self) -> bool {
        matches!(self, Guarantee::BySize | Guarantee::BySpectral)
    }
}

/// What the two theorems say about one graph. Serialises to a flat JSON object.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub n: usize,
    /// Minimum degree used for the hypotheses: `δ(G)`, or the override.
    #[serde(rename = "delta_G")]
    pub delta_g: Option<usize>,
    pub thm11_applicable: bool,
    pub thm12_applicable: bool,
    pub edge_threshold: Option<usize>,
    pub spectral_threshold: Option<f64>,
    #[serde(rename = "e_G")]
    pub e_g: usize,
    #[serde(rename = "rho_G")]
    pub rho_g: f64,
    pub meets_edge: bool,
    pub meets_spectral: bool,
    pub is_extremal: bool,
    pub guarantee: Guarantee,
    /// Set when `guarantee` is `no_guarantee`.
    pub reason: Option<String>,
}

pub fn verdict(g: &Graph, which: Which) -> Verdict {
    verdict_with_delta(g, which, None)
}

/// Like [`verdict`], but with the theorems instantiated at `delta` instead of
/// `δ(G)`. Overrides above `δ(G)` are refused since the graph would not have
/// that minimum degree.
pub fn verdict_with_delta(g: &Graph, which: Which, delta_override: Option<usize>) -> Verdict {
    let n = g.n();
    let e_g = g.edge_count();
    let rho_g = match spectral_radius_default(g) {
        Ok(r) => r.rho,
        Err(SpectralError::NoConvergence { estimate, .. }) => estimate,
        Err(_) => 0.0,
    };
    let min_deg = g.min_degree();
    let delta = delta_override.or(min_deg);
    let mut v = Verdict {
        n,
        delta_g: delta,
        thm11_applicable: false,
        thm12_applicable: false,
        edge_threshold: None,
        spectral_threshold: None,
        e_g,
        rho_g,
        meets_edge: false,
        meets_spectral: false,
        is_extremal: false,
        guarantee: Guarantee::NoGuarantee,
        reason: None,
    };
    let Some(delta) = delta else {
        v.reason = Some("graph has no vertices".into());
        return v;
    };
    if let Ok(t) = edge_threshold(n, delta) {
        v.edge_threshold = Some(t);
        v.meets_edge = e_g >= t;
    }
    if let Ok(theta) = spectral_threshold(n, delta) {
        v.spectral_threshold = Some(theta);
        v.meets_spectral = rho_g >= theta - SPECTRAL_COMPARE_TOL;
    }
    v.is_extremal = recognize_extremal(g) == Some((n, delta));
    if !g.is_connected() {
        v.reason = Some("graph is disconnected".into());
        return v;
    }
    if delta < 2 {
        v.reason = Some(format!("minimum degree {delta} is below 2"));
        return v;
    }
    if min_deg.is_some_and(|d| d < delta) {
        v.reason = Some(format!("delta override {delta} exceeds the minimum degree"));
        return v;
    }
    v.thm11_applicable = applicability(n, delta, Theorem::Size).unwrap_or(false);
    v.thm12_applicable = applicability(n, delta, Theorem::Spectral).unwrap_or(false);
    let size_fires = which.edges() && v.thm11_applicable && v.meets_edge;
    let spectral_fires = which.spectral() && v.thm12_applicable && v.meets_spectral;
    v.guarantee = match (size_fires, spectral_fires, v.is_extremal) {
        (true, _, false) => Guarantee::BySize,
        (false, true, false) => Guarantee::BySpectral,
        (true, _, true) | (_, true, true) => Guarantee::ExtremalException,
        (false, false, _) => Guarantee::NoGuarantee,
    };
    if v.guarantee == Guarantee::NoGuarantee {
        let applicable =
            (which.edges() && v.thm11_applicable) || (which.spectral() && v.thm12_applicable);
        v.reason = Some(
            if applicable {
                "threshold not met"
            } else {
                "order/minimum-degree hypotheses unmet"
            }
            .into(),
        );
    }
    v
}
