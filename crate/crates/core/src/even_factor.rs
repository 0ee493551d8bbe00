//! Even factors: spanning subgraphs in which every vertex has positive even degree.
//!
//! Every even-degree edge set is an element of the binary cycle space, so the
//! exact oracle searches that space: fix a fundamental-cycle basis
//! `C_1..C_d`, so that each edge `e` carries a linear form `ℓ_e` over GF(2)^d
//! (`e ∈ Σ c_i C_i` iff `ℓ_e · c = 1`). A combination is an even factor iff
//! every vertex has at least one incident edge with `ℓ_e · c = 1`. The search
//! picks an uncovered vertex with the fewest undecided incident edges
//! `e_1..e_k` and branches on which of them is the first one present, adding
//! the equations `ℓ_{e_1} = … = ℓ_{e_{i−1}} = 0, ℓ_{e_i} = 1` to an affine
//! system kept in echelon form. The branches partition the solutions, so an
//! exhausted tree proves non-existence.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{odd_components_in_mask, Graph, VertexSet};

/// Edge cap of [`has_even_factor_naive`].
pub const NAIVE_MAX_EDGES: usize = 24;
/// Vertex cap of [`check_yan_kano_condition`].
pub const CONDITION_MAX_VERTICES: usize = 24;
/// Hard ceiling on the cycle-space dimension (coordinates live in a `u64`).
pub const MAX_SUPPORTED_DIM: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvenFactorError {
    #[error("graph has {edges} edges; exhaustive enumeration is capped at {cap}")]
    TooManyEdges { edges: usize, cap: usize },
    #[error("graph has {n} vertices; subset enumeration is capped at {cap}")]
    TooManyVertices { n: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchCaps {
    /// Largest cycle-space dimension searched (clamped to 64).
    pub max_dim: usize,
    /// Search nodes visited before giving up with `Unknown`.
    pub max_candidates: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            max_dim: 40,
            max_candidates: 1 << 30,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorStatus {
    Exists,
    NotExists,
    Unknown,
}

impl FactorStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorStatus::Exists => "exists",
            FactorStatus::NotExists => "not_exists",
            FactorStatus::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenFactorResult {
    pub status: FactorStatus,
    /// Edge set of an even factor, present iff `status == Exists`.
    pub certificate: Option<Vec<(usize, usize)>>,
    /// Candidates examined: search nodes for the cycle-space oracle, edge
    /// subsets for the naive one.
    pub search_cost: u64,
}

impl EvenFactorResult {
    fn found(certificate: Vec<(usize, usize)>, search_cost: u64) -> Self {
        EvenFactorResult {
            status: FactorStatus::Exists,
            certificate: Some(certificate),
            search_cost,
        }
    }

    fn none(status: FactorStatus, search_cost: u64) -> Self {
        EvenFactorResult {
            status,
            certificate: None,
            search_cost,
        }
    }
}

/// Independent certificate check: every edge belongs to `g`, no edge repeats,
/// and every vertex ends with positive even degree.
pub fn verify_certificate(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut deg = vec![0usize; g.n()];
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in edges {
        if !g.has_edge(u, v) || !seen.insert((u.min(v), u.max(v))) {
            return false;
        }
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().all(|&d| d > 0 && d % 2 == 0)
}

/// Bridges of `g`, each as `(u, v)` with `u < v`, sorted.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut clock = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, neighbours still to visit)
        let mut stack: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, usize::MAX, g.neighbors(root).collect()));
        while let Some((v, parent, pending)) = stack.last_mut() {
            let (v, parent) = (*v, *parent);
            if let Some(w) = pending.pop() {
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, v, g.neighbors(w).collect()));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        out.push((v.min(parent), v.max(parent)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// BFS spanning forest: `parent[v]` (`usize::MAX` at roots), depth, and the
/// non-tree edges (chords) in lexicographic order.
struct Forest {
    parent: Vec<usize>,
    depth: Vec<usize>,
    chords: Vec<(usize, usize)>,
}

fn spanning_forest(g: &Graph) -> Forest {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let chords = g
        .edges()
        .filter(|&(u, v)| parent[u] != v && parent[v] != u)
        .collect();
    Forest {
        parent,
        depth,
        chords,
    }
}

impl Forest {
    /// Tree path between `u` and `v`, as the list of child endpoints of its edges.
    fn path_children(&self, mut u: usize, mut v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        while u != v {
            if self.depth[u] >= self.depth[v] {
                out.push(u);
                u = self.parent[u];
            } else {
                out.push(v);
                v = self.parent[v];
            }
        }
        out
    }
}

/// Fundamental cycles of a BFS spanning forest: one per chord, `m − n + c` in
/// total, each returned as its sorted edge list.
pub fn cycle_space_basis(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let forest = spanning_forest(g);
    forest
        .chords
        .iter()
        .map(|&(u, v)| {
            let mut cycle: Vec<(usize, usize)> = forest
                .path_children(u, v)
                .into_iter()
                .map(|c| {
                    let p = forest.parent[c];
                    (c.min(p), c.max(p))
                })
                .collect();
            cycle.push((u, v));
            cycle.sort_unstable();
            cycle
        })
        .collect()
}

/// Affine subspace of GF(2)^d given by equations in echelon form: the row with
/// pivot `p` has `p` as its highest set bit.
#[derive(Clone)]
struct AffineSystem {
    rows: [u64; 64],
    rhs: u64,
    pivots: u64,
}

enum Reduced {
    Fixed(bool),
    Free { residual: u64, parity: bool },
}

impl AffineSystem {
    fn new() -> Self {
        AffineSystem {
            rows: [0; 64],
            rhs: 0,
            pivots: 0,
        }
    }

    fn reduce(&self, mut form: u64) -> Reduced {
        let mut parity = false;
        while form != 0 {
            let p = 63 - form.leading_zeros() as usize;
            if self.pivots >> p & 1 == 0 {
                return Reduced::Free {
                    residual: form,
                    parity,
                };
            }
            form ^= self.rows[p];
            parity ^= self.rhs >> p & 1 == 1;
        }
        Reduced::Fixed(parity)
    }

    fn value(&self, form: u64) -> Option<bool> {
        match self.reduce(form) {
            Reduced::Fixed(b) => Some(b),
            Reduced::Free { .. } => None,
        }
    }

    /// Adds `form · c = value`; `false` if that contradicts the system.
    fn constrain(&mut self, form: u64, value: bool) -> bool {
        match self.reduce(form) {
            Reduced::Fixed(b) => b == value,
            Reduced::Free { residual, parity } => {
                let p = 63 - residual.leading_zeros() as usize;
                self.rows[p] = residual;
                self.pivots |= 1 << p;
                if parity != value {
                    self.rhs |= 1 << p;
                }
                true
            }
        }
    }

    /// A point of the subspace, free coordinates set to zero.
    fn solution(&self) -> u64 {
        let mut c = 0u64;
        let mut pending = self.pivots;
        while pending != 0 {
            let p = pending.trailing_zeros() as usize;
            pending &= pending - 1;
            let below = self.rows[p] & !(1u64 << p);
            let bit = (self.rhs >> p & 1) ^ u64::from((below & c).count_ones() & 1);
            c |= bit << p;
        }
        c
    }
}

struct CycleSearch {
    edges: Vec<(usize, usize)>,
    forms: Vec<u64>,
    incident: Vec<Vec<usize>>,
    max_candidates: u64,
    cost: u64,
}

struct CapExceeded;

impl CycleSearch {
    fn new(g: &Graph) -> (Self, usize) {
        let forest = spanning_forest(g);
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let index: std::collections::HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut forms = vec![0u64; edges.len()];
        for (i, &(u, v)) in forest.chords.iter().enumerate().take(MAX_SUPPORTED_DIM) {
            forms[index[&(u, v)]] |= 1 << i;
            for c in forest.path_children(u, v) {
                let p = forest.parent[c];
                forms[index[&(c.min(p), c.max(p))]] |= 1 << i;
            }
        }
        let mut incident = vec![Vec::new(); g.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let dim = forest.chords.len();
        (
            CycleSearch {
                edges,
                forms,
                incident,
                max_candidates: 0,
                cost: 0,
            },
            dim,
        )
    }

    fn search(&mut self, system: &AffineSystem) -> Result<Option<AffineSystem>, CapExceeded> {
        self.cost += 1;
        if self.cost > self.max_candidates {
            return Err(CapExceeded);
        }
        let mut branch_on: Option<Vec<usize>> = None;
        for inc in &self.incident {
            let mut open = Vec::new();
            let mut covered = false;
            for &e in inc {
                match system.value(self.forms[e]) {
                    Some(true) => {
                        covered = true;
                        break;
                    }
                    Some(false) => {}
                    None => open.push(e),
                }
            }
            if covered {
                continue;
            }
            if open.is_empty() {
                return Ok(None);
            }
            if branch_on.as_ref().is_none_or(|b| open.len() < b.len()) {
                branch_on = Some(open);
            }
        }
        let Some(open) = branch_on else {
            return Ok(Some(system.clone()));
        };
        for (i, &first) in open.iter().enumerate() {
            let mut next = system.clone();
            let consistent = open[..i]
                .iter()
                .all(|&e| next.constrain(self.forms[e], false))
                && next.constrain(self.forms[first], true);
            if consistent {
                if let Some(done) = self.search(&next)? {
                    return Ok(Some(done));
                }
            }
        }
        Ok(None)
    }

    fn certificate(&self, system: &AffineSystem) -> Vec<(usize, usize)> {
        let c = system.solution();
        self.edges
            .iter()
            .zip(&self.forms)
            .filter(|(_, &f)| (f & c).count_ones() % 2 == 1)
            .map(|(&e, _)| e)
            .collect()
    }
}

/// Exact even-factor oracle over the cycle space; `Unknown` only when a cap is hit.
pub fn has_even_factor(g: &Graph, caps: SearchCaps) -> EvenFactorResult {
    if g.n() == 0 {
        return EvenFactorResult::found(Vec::new(), 0);
    }
    if (0..g.n()).any(|v| g.degree(v) <= 1) {
        return EvenFactorResult::none(FactorStatus::NotExists, 0);
    }
    // A bridge is in no cycle, hence in no even subgraph.
    let mut core = g.clone();
    for (u, v) in bridges(g) {
        core.remove_edge(u, v);
    }
    if (0..core.n()).any(|v| core.degree(v) == 0) {
        return EvenFactorResult::none(FactorStatus::NotExists, 0);
    }
    let (mut search, dim) = CycleSearch::new(&core);
    if dim > caps.max_dim.min(MAX_SUPPORTED_DIM) {
        return EvenFactorResult::none(FactorStatus::Unknown, 0);
    }
    search.max_candidates = caps.max_candidates;
    match search.search(&AffineSystem::new()) {
        Ok(Some(system)) => {
            let cert = search.certificate(&system);
            debug_assert!(verify_certificate(g, &cert));
            EvenFactorResult::found(cert, search.cost)
        }
        Ok(None) => EvenFactorResult::none(FactorStatus::NotExists, search.cost),
        Err(CapExceeded) => EvenFactorResult::none(FactorStatus::Unknown, caps.max_candidates),
    }
}

/// Brute force over all `2^m` edge subsets (Gray-code order, one edge toggled
/// per step). Never returns `Unknown`.
pub fn has_even_factor_naive(g: &Graph) -> Result<EvenFactorResult, EvenFactorError> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    if m > NAIVE_MAX_EDGES {
        return Err(EvenFactorError::TooManyEdges {
            edges: m,
            cap: NAIVE_MAX_EDGES,
        });
    }
    let bad = |d: u32| d == 0 || d % 2 == 1;
    let mut deg = vec![0u32; g.n()];
    let mut bad_count = g.n();
    let mut chosen = 0u64;
    let mut examined = 1u64;
    if bad_count == 0 {
        return Ok(EvenFactorResult::found(Vec::new(), examined));
    }
    for step in 1u64..(1u64 << m) {
        let e = step.trailing_zeros() as usize;
        chosen ^= 1 << e;
        let adding = chosen >> e & 1 == 1;
        for w in [edges[e].0, edges[e].1] {
            bad_count -= usize::from(bad(deg[w]));
            deg[w] = if adding { deg[w] + 1 } else { deg[w] - 1 };
            bad_count += usize::from(bad(deg[w]));
        }
        examined += 1;
        if bad_count == 0 {
            let cert = (0..m)
                .filter(|&i| chosen >> i & 1 == 1)
                .map(|i| edges[i])
                .collect();
            return Ok(EvenFactorResult::found(cert, examined));
        }
    }
    Ok(EvenFactorResult::none(FactorStatus::NotExists, examined))
}

/// Outcome of checking `o(G − S) < |S|` for every `S` with `|S| ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub holds: bool,
    /// First violating `S` in increasing-bitmask order, present iff `!holds`.
    pub witness: Option<VertexSet>,
    /// `o(G − S)` for the witness.
    pub witness_odd_components: Option<usize>,
    pub subsets_checked: u64,
}

pub fn check_yan_kano_condition(g: &Graph) -> Result<ConditionReport, EvenFactorError> {
    let n = g.n();
    if n > CONDITION_MAX_VERTICES {
        return Err(EvenFactorError::TooManyVertices {
            n,
            cap: CONDITION_MAX_VERTICES,
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row_mask(v)).collect();
    let full = (1u64 << n) - 1;
    let mut checked = 0;
    for mask in 0..=full {
        let size = mask.count_ones() as usize;
        // o(G − S) ≤ n − |S|, so large S cannot violate.
        if size < 2 || n - size < size {
            continue;
        }
        checked += 1;
        let odd = odd_components_in_mask(&rows, full & !mask);
        if odd >= size {
            return Ok(ConditionReport {
                holds: false,
                witness: Some(VertexSet::from_mask(mask)),
                witness_odd_components: Some(odd),
                subsets_checked: checked,
            });
        }
    }
    Ok(ConditionReport {
        holds: true,
        witness: None,
        witness_odd_components: None,
        subsets_checked: checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, extremal, odd_components_minus};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn all_even(g: &Graph, edges: &[(usize, usize)]) -> bool {
        let mut deg = vec![0; g.n()];
        for &(u, v) in edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.iter().all(|d| d % 2 == 0)
    }

    #[test]
    fn basis_sizes() {
        assert!(cycle_space_basis(&path(6)).is_empty());
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert!(cycle_space_basis(&star).is_empty());
        let c4 = cycle(4);
        let basis = cycle_space_basis(&c4);
        assert_eq!(basis, vec![c4.edges().collect::<Vec<_>>()]);
    }

    #[test]
    fn k4_basis_combinations_are_even() {
        let k4 = complete(4);
        let basis = cycle_space_basis(&k4);
        assert_eq!(basis.len(), 3);
        for combo in 0u32..8 {
            let mut set = std::collections::BTreeSet::new();
            for (i, cyc) in basis.iter().enumerate() {
                if combo >> i & 1 == 1 {
                    for e in cyc {
                        if !set.remove(e) {
                            set.insert(*e);
                        }
                    }
                }
            }
            let edges: Vec<_> = set.into_iter().collect();
            assert!(all_even(&k4, &edges), "combo {combo}");
            assert_eq!(edges.is_empty(), combo == 0);
        }
    }

    #[test]
    fn bridges_found() {
        // two triangles joined by the bridge 2-3, plus a pendant 5-6
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (3, 5),
                (5, 6),
            ],
        )
        .unwrap();
        assert_eq!(bridges(&g), vec![(2, 3), (5, 6)]);
        assert!(bridges(&complete(5)).is_empty());
        assert_eq!(bridges(&path(4)), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn oracle_examples() {
        let c6 = cycle(6);
        let r = has_even_factor(&c6, SearchCaps::default());
        assert_eq!(r.status, FactorStatus::Exists);
        let mut cert = r.certificate.unwrap();
        cert.sort_unstable();
        assert_eq!(cert, c6.edges().collect::<Vec<_>>());

        assert_eq!(
            has_even_factor(&path(4), SearchCaps::default()).status,
            FactorStatus::NotExists
        );

        let k4 = complete(4);
        let r = has_even_factor(&k4, SearchCaps::default());
        assert_eq!(r.status, FactorStatus::Exists);
        assert!(verify_certificate(&k4, r.certificate.as_ref().unwrap()));
        assert_eq!(
            has_even_factor_naive(&k4).unwrap().status,
            FactorStatus::Exists
        );
    }

    #[test]
    fn extremal_8_2_has_an_even_factor() {
        let g = extremal(8, 2).unwrap();
        // triangle {0, 1, 7} plus the 5-cycle 2-3-4-5-6 inside K_5
        let hand = [
            (0, 1),
            (0, 7),
            (1, 7),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (2, 6),
        ];
        assert!(verify_certificate(&g, &hand));
        let r = has_even_factor(&g, SearchCaps::default());
        assert_eq!(r.status, FactorStatus::Exists);
        assert!(verify_certificate(&g, r.certificate.as_ref().unwrap()));
        assert_eq!(
            has_even_factor_naive(&g).unwrap().status,
            FactorStatus::Exists
        );
    }

    #[test]
    fn naive_examples() {
        let r = has_even_factor_naive(&cycle(5)).unwrap();
        assert_eq!(r.status, FactorStatus::Exists);
        assert!(verify_certificate(
            &cycle(5),
            r.certificate.as_ref().unwrap()
        ));
        assert_eq!(
            has_even_factor_naive(&complete(2)).unwrap().status,
            FactorStatus::NotExists
        );
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            has_even_factor_naive(&star).unwrap().status,
            FactorStatus::NotExists
        );
        assert_eq!(
            has_even_factor_naive(&complete(8)),
            Err(EvenFactorError::TooManyEdges {
                edges: 28,
                cap: NAIVE_MAX_EDGES
            })
        );
    }

    #[test]
    fn degenerate_orders() {
        let caps = SearchCaps::default();
        assert_eq!(
            has_even_factor(&Graph::empty(0), caps).status,
            FactorStatus::Exists
        );
        assert_eq!(
            has_even_factor_naive(&Graph::empty(0)).unwrap().status,
            FactorStatus::Exists
        );
        assert_eq!(
            has_even_factor(&Graph::empty(1), caps).status,
            FactorStatus::NotExists
        );
        assert_eq!(
            has_even_factor_naive(&Graph::empty(1)).unwrap().status,
            FactorStatus::NotExists
        );
    }

    #[test]
    fn bridged_triangles_have_no_even_factor_through_the_bridge() {
        // two triangles joined by a bridge: the triangles themselves form an even factor
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = has_even_factor(&g, SearchCaps::default());
        assert_eq!(r.status, FactorStatus::Exists);
        assert!(!r.certificate.unwrap().contains(&(2, 3)));
        // K_{2,3}: degree-2 vertices force every edge, hubs end with odd degree
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(
            has_even_factor(&k23, SearchCaps::default()).status,
            FactorStatus::NotExists
        );
        assert_eq!(
            has_even_factor_naive(&k23).unwrap().status,
            FactorStatus::NotExists
        );
    }

    #[test]
    fn caps_yield_unknown() {
        let g = complete(8);
        let dim_cap = SearchCaps {
            max_dim: 10,
            ..SearchCaps::default()
        };
        assert_eq!(has_even_factor(&g, dim_cap).status, FactorStatus::Unknown);
        let node_cap = SearchCaps {
            max_candidates: 1,
            ..SearchCaps::default()
        };
        let r = has_even_factor(&g, node_cap);
        assert_eq!(r.status, FactorStatus::Unknown);
        assert!(r.certificate.is_none());
    }

    #[test]
    fn certificate_checker_rejects_bad_sets() {
        let k4 = complete(4);
        assert!(!verify_certificate(&k4, &[(0, 1), (1, 2), (2, 0)]));
        assert!(!verify_certificate(
            &k4,
            &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)]
        ));
        assert!(!verify_certificate(&path(3), &[(0, 1), (1, 2), (0, 2)]));
        assert!(verify_certificate(&k4, &[(0, 1), (1, 2), (2, 3), (0, 3)]));
    }

    #[test]
    fn condition_examples() {
        let r = check_yan_kano_condition(&complete(6)).unwrap();
        assert!(r.holds && r.witness.is_none());

        let g = extremal(8, 2).unwrap();
        let r = check_yan_kano_condition(&g).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(w.iter().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(r.witness_odd_components, Some(2));
        assert_eq!(odd_components_minus(&g, &w), 2);

        let c8 = cycle(8);
        let r = check_yan_kano_condition(&c8).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert!(odd_components_minus(&c8, &w) >= w.len());
        assert!(w.len() >= 2);

        assert!(matches!(
            check_yan_kano_condition(&Graph::empty(25)),
            Err(EvenFactorError::TooManyVertices { n: 25, .. })
        ));
    }
}
