//! Even factors in graphs of given minimum degree: graph construction, exact
//! even-factor search, spectral radii, the size and spectral thresholds, checks
//! of the algebraic identities behind them, and sweep campaigns.

pub mod cubic;
pub mod even_factor;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod identities;
pub mod io;
pub mod spectral;
pub mod thresholds;

pub use cubic::{
    char_poly, largest_real_root, quotient_matrix, CubicPoly, QuotientFamily, QuotientMatrix3,
    Rational,
};
pub use even_factor::{
    check_yan_kano_condition, has_even_factor, has_even_factor_naive, verify_certificate,
    ConditionReport, EvenFactorError, EvenFactorResult, FactorStatus, SearchCaps,
};
pub use graph::{
    build_family, complete, extremal, graph_stats, FamilySpec, Graph, GraphError, GraphStats,
    VertexSet,
};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use harness::{
    lemma_merge_sweep, soundness_sweep, subgraph_monotonicity_sweep, tightness_report,
    HarnessError, SweepOptions, SweepReport, SweepRow, TightnessReport,
};
pub use identities::{identity_grid, IdentityCheck, IdentityError};
pub use io::{read_graph, InputError};
pub use spectral::{spectral_radius, spectral_radius_default, SpectralError, SpectralResult};
pub use thresholds::{
    applicability, edge_threshold, order_floor, recognize_extremal, spectral_threshold, verdict,
    verdict_with_delta, Guarantee, Theorem, ThresholdError, Verdict, Which,
};
