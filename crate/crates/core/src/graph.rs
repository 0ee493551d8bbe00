//! Simple undirected graphs stored as per-vertex adjacency bitsets, plus the
//! clique/join/union constructors used to build split families
//! `K_s ∨ (K_{n_1} ∪ … ∪ K_{n_t})`.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Undirected simple graph on vertices `0..n`.
///
/// Row `v` of the adjacency bitset occupies `adj[v * words .. (v + 1) * words]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set(u, v, true);
        Ok(())
    }

    /// Panicking variant of [`Graph::try_add_edge`] for indices known to be valid.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n && u != v {
            self.set(u, v, false);
        }
    }

    /// Copy of `self` with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.try_add_edge(u, v)?;
        Ok(g)
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u / 64, 1u64 << (u % 64));
        let (wv, bv) = (v / 64, 1u64 << (v % 64));
        if on {
            self.adj[u * self.words + wv] |= bv;
            self.adj[v * self.words + wu] |= bu;
        } else {
            self.adj[u * self.words + wv] &= !bv;
            self.adj[v * self.words + wu] &= !bu;
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `v` as raw bitset words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Adjacency row of `v` as a single word. Only valid for `n <= 64`.
    #[inline]
    pub fn row_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// `δ(G)`; `None` for the graph on zero vertices.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components of the subgraph induced on `alive` (all vertices when `None`).
    /// Each component is returned as its sorted vertex list; components are ordered by
    /// their smallest vertex.
    pub fn components_within(&self, alive: Option<&VertexSet>) -> Vec<Vec<usize>> {
        let is_alive = |v: usize| alive.is_none_or(|s| s.contains(v));
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] || !is_alive(start) {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for w in self.neighbors(u) {
                    if !seen[w] && is_alive(w) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(None)
    }

    /// Connected; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `verts`, relabeled `0..verts.len()` in the given order.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        g
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

/// A set of vertex indices with bitmask semantics.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet::default()
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet { words: vec![mask] }
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w >> (v % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.iter().last()
    }

    /// The complement of `self` within `0..n`.
    pub fn complement(&self, n: usize) -> VertexSet {
        (0..n).filter(|&v| !self.contains(v)).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set(u, v, true);
        }
    }
    g
}

/// Vertex-disjoint union; part `i` is shifted by the orders of parts `0..i`.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut g = Graph::empty(n);
    let mut offset = 0;
    for p in parts {
        for (u, v) in p.edges() {
            g.set(offset + u, offset + v, true);
        }
        offset += p.n();
    }
    g
}

/// `g ∨ h`: vertices of `g` first, then those of `h`, with every cross pair joined.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(&[g.clone(), h.clone()]);
    for u in 0..g.n() {
        for v in 0..h.n() {
            out.set(u, g.n() + v, true);
        }
    }
    out
}

/// Parameters of the split family `K_s ∨ (K_{n_1} ∪ … ∪ K_{n_t})` with
/// `n_1 ≥ n_2 ≥ … ≥ n_t ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    s: usize,
    parts: Vec<usize>,
}

impl FamilySpec {
    pub fn new(s: usize, parts: Vec<usize>) -> Result<Self, GraphError> {
        if parts.contains(&0) {
            return Err(GraphError::InvalidFamily(format!(
                "zero-sized part in {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(GraphError::InvalidFamily(format!(
                "parts not non-increasing: {parts:?}"
            )));
        }
        Ok(FamilySpec { s, parts })
    }

    /// `K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`.
    pub fn extremal(n: usize, delta: usize) -> Result<Self, GraphError> {
        if delta == 0 || n + 1 < 2 * delta + 1 {
            return Err(GraphError::InvalidParameters(format!(
                "extremal graph needs delta >= 1 and n - 2*delta + 1 >= 1 (n={n}, delta={delta})"
            )));
        }
        FamilySpec::tail_of_equal_parts(delta, n - delta, delta - 1, 1)
    }

    /// `K_s ∨ (K_{n−s−p(t−1)} ∪ (t−1)K_p)`, the merged form that maximises both the
    /// size and the spectral radius among partitions with parts ≥ `p`.
    pub fn merged(n: usize, s: usize, t: usize, p: usize) -> Result<Self, GraphError> {
        if t == 0 || p == 0 {
            return Err(GraphError::InvalidParameters(format!(
                "need t, p >= 1 (t={t}, p={p})"
            )));
        }
        let rest = n
            .checked_sub(s)
            .ok_or_else(|| GraphError::InvalidParameters(format!("s={s} exceeds n={n}")))?;
        FamilySpec::tail_of_equal_parts(s, rest, t - 1, p)
    }

    /// `K_s ∨ (K_{n−2s+1} ∪ (s−1)K_1)`.
    pub fn case_large_core(n: usize, s: usize) -> Result<Self, GraphError> {
        if s == 0 {
            return Err(GraphError::InvalidParameters("s must be >= 1".into()));
        }
        FamilySpec::merged(n, s, s, 1)
    }

    /// `K_s ∨ (K_{n−s−(δ+1−s)(s−1)} ∪ (s−1)K_{δ+1−s})` for `1 ≤ s ≤ δ`.
    pub fn case_small_core(n: usize, s: usize, delta: usize) -> Result<Self, GraphError> {
        if s == 0 || s > delta {
            return Err(GraphError::InvalidParameters(format!(
                "need 1 <= s <= delta (s={s}, delta={delta})"
            )));
        }
        FamilySpec::merged(n, s, s, delta + 1 - s)
    }

    fn tail_of_equal_parts(
        s: usize,
        rest: usize,
        copies: usize,
        p: usize,
    ) -> Result<Self, GraphError> {
        let head = rest
            .checked_sub(copies * p)
            .filter(|&h| h >= p.max(1))
            .ok_or_else(|| {
                GraphError::InvalidParameters(format!(
                    "leading part would be smaller than {p} (s={s}, remaining={rest}, {copies} parts of {p})"
                ))
            })?;
        let mut parts = vec![head];
        parts.extend(std::iter::repeat_n(p, copies));
        FamilySpec::new(s, parts)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Order of the realised graph.
    pub fn order(&self) -> usize {
        self.s + self.parts.iter().sum::<usize>()
    }

    /// Closed-form size `s(s−1)/2 + Σ n_i(n_i−1)/2 + sΣn_i`.
    pub fn edge_count(&self) -> usize {
        let rest: usize = self.parts.iter().sum();
        self.s * self.s.saturating_sub(1) / 2
            + self.parts.iter().map(|&p| p * (p - 1) / 2).sum::<usize>()
            + self.s * rest
    }
}

/// Realises `K_s ∨ (K_{n_1} ∪ … ∪ K_{n_t})`: join core on `0..s`, then the parts in order.
pub fn build_family(spec: &FamilySpec) -> Graph {
    let cliques: Vec<Graph> = spec.parts.iter().map(|&p| complete(p)).collect();
    join(&complete(spec.s), &disjoint_union(&cliques))
}

/// `G* = K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`.
pub fn extremal(n: usize, delta: usize) -> Result<Graph, GraphError> {
    Ok(build_family(&FamilySpec::extremal(n, delta)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub edge_count: usize,
    pub min_degree: Option<usize>,
    pub is_connected: bool,
    /// Sorted non-increasing.
    pub component_sizes: Vec<usize>,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let mut sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    GraphStats {
        n: g.n(),
        edge_count: g.edge_count(),
        min_degree: g.min_degree(),
        is_connected: sizes.len() <= 1,
        component_sizes: sizes,
    }
}

/// `o(G − S)`: number of odd-order components of the subgraph induced on `V ∖ S`.
pub fn odd_components_minus(g: &Graph, s: &VertexSet) -> usize {
    let alive = s.complement(g.n());
    g.components_within(Some(&alive))
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count()
}

/// Word-sized variant of [`odd_components_minus`] for graphs with `n <= 64`;
/// `rows[v]` is the adjacency mask of `v` and `alive` the surviving vertices.
pub(crate) fn odd_components_in_mask(rows: &[u64], mut alive: u64) -> usize {
    let mut odd = 0;
    while alive != 0 {
        let start = alive & alive.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        if comp.count_ones() % 2 == 1 {
            odd += 1;
        }
        alive &= !comp;
    }
    odd
}
