//! Machine checks of the algebra behind the two threshold theorems.
//!
//! Every displayed polynomial lives in [`forms`] exactly once. Checks compare
//! those closed forms against quantities computed independently: edge counts of
//! constructed graphs, characteristic polynomials of constructed quotient
//! matrices, and the spectral threshold `θ`. Identities and sign claims are
//! evaluated in exact rational arithmetic; anything involving `θ` is compared in
//! `f64` with a relative tolerance of `1e-9`.
//!
//! Sign claims carry their own hypotheses. A claim whose hypotheses fail is
//! reported as skipped with a reason, and never evaluated.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cubic::{
    char_poly, largest_real_root, quotient_matrix, CubicPoly, QuotientFamily, Rational,
};
use crate::graph::{build_family, FamilySpec, GraphError};
use crate::thresholds::{order_floor, spectral_threshold, Theorem};

pub const REAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

impl From<GraphError> for IdentityError {
    fn from(e: GraphError) -> Self {
        IdentityError::InvalidParameters(e.to_string())
    }
}

/// Field arithmetic shared by the exact and floating-point evaluations.
pub trait Scalar:
    Copy
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn int(v: i64) -> Self;
}

impl Scalar for f64 {
    fn int(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for Rational {
    fn int(v: i64) -> Self {
        Rational::from_integer(i128::from(v))
    }
}

fn q(v: i64) -> Rational {
    Rational::int(v)
}

fn frac(a: i64, b: i64) -> Rational {
    Rational::new(i128::from(a), i128::from(b))
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// The displayed closed forms, in the variables `n`, `s`, `δ` (written `d`) and `x`.
pub mod forms {
    use super::Scalar;

    /// Edge-count cubic: `x³ − (δ+5)x² + (2n+δ+7)x − 4n + 3δ − 3`.
    pub fn edge_f<T: Scalar>(n: T, d: T, x: T) -> T {
        let k = T::int;
        x * x * x - (d + k(5)) * x * x + (k(2) * n + d + k(7)) * x - k(4) * n + k(3) * d - k(3)
    }

    pub fn edge_f_prime<T: Scalar>(n: T, d: T, x: T) -> T {
        let k = T::int;
        k(3) * x * x - k(2) * (d + k(5)) * x + k(2) * n + d + k(7)
    }

    /// Quotient of `φ_B2 − φ_B*` by `s − δ`.
    pub fn spectral_f<T: Scalar>(n: T, s: T, d: T, x: T) -> T {
        let k = T::int;
        x * x - (s + d - k(2)) * x + s * n + d * n - n - k(2) * s * s - k(2) * d * s + k(2) * s
            - k(2) * d * d
            + k(2) * d
    }

    /// Quotient of `φ_B3 − φ_B*` by `δ − s`.
    pub fn g<T: Scalar>(n: T, s: T, d: T, x: T) -> T {
        let k = T::int;
        let s2 = s * s;
        (s - k(3)) * x * x + (n - d * s + s + k(2) * d - k(4)) * x + s2 * s2 - (d + k(5)) * s2 * s
            + (n + k(2) * d + k(8)) * s2
            - (k(2) * n + k(5)) * s
            + (k(2) - d) * n
            + k(2) * d * d
            - d
    }

    /// `g(n − δ)` rewritten as a polynomial in `n`.
    pub fn h<T: Scalar>(s: T, d: T, x: T) -> T {
        let k = T::int;
        let s2 = s * s;
        (s - k(2)) * x * x + (s2 - (k(3) * d + k(1)) * s + k(6) * d - k(2)) * x + s2 * s2
            - (d + k(5)) * s2 * s
            + (k(2) * d + k(8)) * s2
            + (k(2) * d * d - d - k(5)) * s
            - k(3) * d * d
            + k(3) * d
    }

    pub fn h_prime<T: Scalar>(s: T, d: T, x: T) -> T {
        let k = T::int;
        k(2) * (s - k(2)) * x + s * s - (k(3) * d + k(1)) * s + k(6) * d - k(2)
    }

    /// `φ_B2` as displayed, coefficients `(c2, c1, c0)` of the monic cubic.
    pub fn phi_b2<T: Scalar>(n: T, s: T) -> [T; 3] {
        let k = T::int;
        [
            -(n - s - k(1)),
            -(n + s * s - k(2) * s),
            s * s * n - s * n - k(2) * s * s * s + k(2) * s * s,
        ]
    }

    pub fn phi_bstar<T: Scalar>(n: T, d: T) -> [T; 3] {
        let k = T::int;
        [
            -(n - d - k(1)),
            -(n + d * d - k(2) * d),
            d * d * n - d * n - k(2) * d * d * d + k(2) * d * d,
        ]
    }

    pub fn phi_b3<T: Scalar>(n: T, s: T, d: T) -> [T; 3] {
        let k = T::int;
        let r = (d + k(1) - s) * (s - k(1));
        let big_minus_one = n - s - r - k(1);
        [
            -(n + s * s - d * s - k(3) * s + k(2) * d - k(1)),
            d * n - s * n - n + d * s * s - s * s - d * d * s - d * s + k(4) * s + d * d - k(2) * d,
            (d - s) * (n - r - k(1) + s * (s - k(1)) * big_minus_one)
                + s * (s - k(1)) * big_minus_one,
        ]
    }

    /// `φ′_B3` as displayed, coefficients `(a2, a1, a0)`.
    pub fn phi_b3_prime<T: Scalar>(n: T, s: T, d: T) -> [T; 3] {
        let k = T::int;
        [
            k(3),
            -k(2) * (n + s * s - d * s - k(3) * s + k(2) * d - k(1)),
            d * n - s * n - n + d * s * s - s * s - d * d * s - d * s + k(4) * s + d * d - k(2) * d,
        ]
    }

    /// `φ′_B3(n − δ)` expanded as a polynomial in `n`.
    pub fn phi_b3_prime_at_n_minus_delta<T: Scalar>(n: T, s: T, d: T) -> T {
        let k = T::int;
        let s2 = s * s;
        n * n + (-k(2) * s2 + k(2) * d * s + k(5) * s - k(7) * d + k(1)) * n + k(3) * d * s2
            - s2
            - k(3) * d * d * s
            - k(7) * d * s
            + k(4) * s
            + k(8) * d * d
            - k(4) * d
    }

    pub fn eval_monic<T: Scalar>(c: [T; 3], x: T) -> T {
        ((x + c[0]) * x + c[1]) * x + c[2]
    }

    pub fn eval_quadratic<T: Scalar>(c: [T; 3], x: T) -> T {
        (c[0] * x + c[1]) * x + c[2]
    }

    pub fn binom2<T: Scalar>(m: T) -> T {
        m * (m - T::int(1)) / T::int(2)
    }
}

/// A compared quantity: exact (serialised as `"p/q"`) or a float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Exact(Rational),
    Real(f64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Real(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Exact(r) => serializer.serialize_str(&r.to_string()),
            Value::Real(x) => serializer.serialize_f64(*x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Eq,
    Ge,
    Gt,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckParams {
    pub n: i64,
    pub s: Option<i64>,
    pub delta: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub params: CheckParams,
    pub relation: Relation,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub pass: bool,
    /// Hypothesis that failed, for claims reported without evaluation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl IdentityCheck {
    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    pub fn failed(&self) -> bool {
        !self.pass && self.skipped.is_none()
    }
}

fn real_holds(rel: Relation, lhs: f64, rhs: f64) -> bool {
    let slack = REAL_TOL * rhs.abs().max(1.0);
    match rel {
        Relation::Eq => (lhs - rhs).abs() <= slack,
        Relation::Ge => lhs >= rhs - slack,
        Relation::Gt => lhs > rhs,
    }
}

fn exact_holds(rel: Relation, lhs: Rational, rhs: Rational) -> bool {
    match rel {
        Relation::Eq => lhs == rhs,
        Relation::Ge => lhs >= rhs,
        Relation::Gt => lhs > rhs,
    }
}

type Hyp = Result<(), String>;

fn hyp(ok: bool, reason: impl Into<String>) -> Hyp {
    if ok {
        Ok(())
    } else {
        Err(reason.into())
    }
}

fn both(a: &Hyp, b: &Hyp) -> Hyp {
    a.clone().and(b.clone())
}

struct Checks {
    params: CheckParams,
    out: Vec<IdentityCheck>,
}

impl Checks {
    fn new(n: i64, s: Option<i64>, delta: i64) -> Self {
        Checks {
            params: CheckParams {
                n,
                s,
                delta,
                x: None,
            },
            out: Vec::new(),
        }
    }

    fn push(
        &mut self,
        name: &str,
        x: Option<Value>,
        relation: Relation,
        lhs: Value,
        rhs: Value,
        pass: bool,
    ) {
        let params = CheckParams {
            x,
            ..self.params.clone()
        };
        self.out.push(IdentityCheck {
            name: name.to_string(),
            params,
            relation,
            lhs: Some(lhs),
            rhs: Some(rhs),
            pass,
            skipped: None,
        });
    }

    fn skip(&mut self, name: &str, relation: Relation, reason: String) {
        self.out.push(IdentityCheck {
            name: name.to_string(),
            params: self.params.clone(),
            relation,
            lhs: None,
            rhs: None,
            pass: false,
            skipped: Some(reason),
        });
    }

    fn exact_at(
        &mut self,
        name: &str,
        x: Option<Rational>,
        rel: Relation,
        lhs: Rational,
        rhs: Rational,
    ) {
        self.push(
            name,
            x.map(Value::Exact),
            rel,
            Value::Exact(lhs),
            Value::Exact(rhs),
            exact_holds(rel, lhs, rhs),
        );
    }

    fn real_at(&mut self, name: &str, x: Option<f64>, rel: Relation, lhs: f64, rhs: f64) {
        self.push(
            name,
            x.map(Value::Real),
            rel,
            Value::Real(lhs),
            Value::Real(rhs),
            real_holds(rel, lhs, rhs),
        );
    }

    fn exact(
        &mut self,
        name: &str,
        h: &Hyp,
        rel: Relation,
        f: impl FnOnce() -> (Rational, Rational),
    ) {
        match h {
            Ok(()) => {
                let (l, r) = f();
                self.exact_at(name, None, rel, l, r);
            }
            Err(reason) => self.skip(name, rel, reason.clone()),
        }
    }

    fn real(&mut self, name: &str, h: &Hyp, rel: Relation, f: impl FnOnce() -> (f64, f64)) {
        match h {
            Ok(()) => {
                let (l, r) = f();
                self.real_at(name, None, rel, l, r);
            }
            Err(reason) => self.skip(name, rel, reason.clone()),
        }
    }
}

fn signed(v: usize) -> i64 {
    v as i64
}

fn counted_edges(spec: Result<FamilySpec, GraphError>) -> Result<i64, IdentityError> {
    Ok(signed(build_family(&spec?).edge_count()))
}

fn poly_of(family: QuotientFamily) -> Result<CubicPoly, IdentityError> {
    quotient_matrix(family)
        .map(|m| char_poly(&m))
        .map_err(|e| IdentityError::InvalidParameters(e.to_string()))
}

/// Sample points used to certify identities between polynomials of degree ≤ 3.
fn cubic_points() -> [Rational; 4] {
    [q(0), q(1), q(2), q(3)]
}

/// `e(G*) − e(G2)` counted on constructed graphs against `(s−δ)(2n−3s−3δ+3)/2`.
pub fn check_edge_diff_case1(
    n: usize,
    s: usize,
    delta: usize,
) -> Result<IdentityCheck, IdentityError> {
    let lhs = counted_edges(FamilySpec::extremal(n, delta))?
        - counted_edges(FamilySpec::case_large_core(n, s))?;
    let (n, s, d) = (signed(n), signed(s), signed(delta));
    let rhs = frac((s - d) * (2 * n - 3 * s - 3 * d + 3), 2);
    let mut c = Checks::new(n, Some(s), d);
    c.exact_at("edge_diff_case1", None, Relation::Eq, q(lhs), rhs);
    Ok(c.out.remove(0))
}

/// `e(G*) − e(G3)` counted on constructed graphs against `(δ−s)f(s)/2`.
pub fn check_edge_diff_case3(
    n: usize,
    s: usize,
    delta: usize,
) -> Result<IdentityCheck, IdentityError> {
    if s == 0 || s > delta {
        return Err(IdentityError::InvalidParameters(format!(
            "need 1 <= s <= delta (s={s}, delta={delta})"
        )));
    }
    let lhs = counted_edges(FamilySpec::extremal(n, delta))?
        - counted_edges(FamilySpec::case_small_core(n, s, delta))?;
    let (n, s, d) = (signed(n), signed(s), signed(delta));
    let rhs = (q(d) - q(s)) * forms::edge_f(q(n), q(d), q(s)) / q(2);
    let mut c = Checks::new(n, Some(s), d);
    c.exact_at("edge_diff_case3", None, Relation::Eq, q(lhs), rhs);
    Ok(c.out.remove(0))
}

/// Counted edges of `G*`, `G2`, `G3` against their binomial closed forms, and the
/// intermediate forms of both edge differences.
pub fn check_edge_closed_forms(
    n: usize,
    s: usize,
    delta: usize,
) -> Result<Vec<IdentityCheck>, IdentityError> {
    let e_star = counted_edges(FamilySpec::extremal(n, delta))?;
    let e2 = counted_edges(FamilySpec::case_large_core(n, s)).ok();
    let e3 = if s <= delta {
        counted_edges(FamilySpec::case_small_core(n, s, delta)).ok()
    } else {
        None
    };
    let (n, s, d) = (signed(n), signed(s), signed(delta));
    let (nq, sq, dq) = (q(n), q(s), q(d));
    let b2 = forms::binom2::<Rational>;
    let mut c = Checks::new(n, Some(s), d);
    let star_closed = b2(nq - dq + q(1)) + dq * (dq - q(1));
    c.exact_at(
        "e_gstar_closed_form",
        None,
        Relation::Eq,
        q(e_star),
        star_closed,
    );
    if let Some(e2) = e2 {
        let closed = b2(nq - sq + q(1)) + sq * (sq - q(1));
        c.exact_at("e_g2_closed_form", None, Relation::Eq, q(e2), closed);
        let diff = star_closed - closed;
        c.exact_at(
            "edge_diff_case1_halved",
            None,
            Relation::Eq,
            diff,
            (sq - dq) * (q(2) * nq - q(3) * sq - q(3) * dq + q(3)) / q(2),
        );
        c.exact_at(
            "edge_diff_case1_quartered",
            None,
            Relation::Eq,
            diff,
            (sq - dq) * (q(4) * nq - q(6) * sq - q(6) * dq + q(6)) / q(4),
        );
    }
    if let Some(e3) = e3 {
        let p = dq + q(1) - sq;
        let closed = b2(nq - p * (sq - q(1))) + sq * (sq - q(1)) * p + (sq - q(1)) * b2(p);
        c.exact_at("e_g3_closed_form", None, Relation::Eq, q(e3), closed);
        let m = nq - p * (sq - q(1));
        let middle = ((nq - dq) * (nq - dq + q(1)) + q(2) * dq * (dq - q(1))
            - m * (m - q(1))
            - q(2) * sq * (sq - q(1)) * p
            - (sq - q(1)) * p * (dq - sq))
            / q(2);
        c.exact_at(
            "edge_diff_case3_middle",
            None,
            Relation::Eq,
            star_closed - closed,
            middle,
        );
        c.exact_at(
            "edge_diff_case3_factored",
            None,
            Relation::Eq,
            middle,
            (dq - sq) * forms::edge_f(nq, dq, sq) / q(2),
        );
    }
    Ok(c.out)
}

/// Characteristic polynomials of the constructed quotient matrices against the
/// displayed `φ_B2`, `φ_B*`, `φ_B3` (4 points each), and the derivative of the
/// constructed `φ_B3` against the displayed `φ′_B3` (3 points).
pub fn check_polynomial_displays(
    n: usize,
    s: usize,
    delta: usize,
) -> Result<Vec<IdentityCheck>, IdentityError> {
    let star = poly_of(QuotientFamily::Extremal { n, delta })?;
    let b2 = poly_of(QuotientFamily::LargeCore { n, s }).ok();
    let b3 = if s < delta {
        poly_of(QuotientFamily::SmallCore { n, s, delta }).ok()
    } else {
        None
    };
    let (n, s, d) = (signed(n), signed(s), signed(delta));
    let (nq, sq, dq) = (q(n), q(s), q(d));
    let mut c = Checks::new(n, Some(s), d);
    for x in cubic_points() {
        c.exact_at(
            "phi_bstar_display",
            Some(x),
            Relation::Eq,
            star.eval_exact(x),
            forms::eval_monic(forms::phi_bstar(nq, dq), x),
        );
    }
    if let Some(p) = b2 {
        for x in cubic_points() {
            c.exact_at(
                "phi_b2_display",
                Some(x),
                Relation::Eq,
                p.eval_exact(x),
                forms::eval_monic(forms::phi_b2(nq, sq), x),
            );
        }
    }
    if let Some(p) = b3 {
        for x in cubic_points() {
            c.exact_at(
                "phi_b3_display",
                Some(x),
                Relation::Eq,
                p.eval_exact(x),
                forms::eval_monic(forms::phi_b3(nq, sq, dq), x),
            );
        }
        let (a2, a1, a0) = p.derivative();
        let derived = [q(a2), q(a1), q(a0)];
        for x in [q(0), q(1), q(2)] {
            let lhs = forms::eval_quadratic(derived, x);
            let rhs = forms::eval_quadratic(forms::phi_b3_prime(nq, sq, dq), x);
            c.exact_at("phi_b3_prime_display", Some(x), Relation::Eq, lhs, rhs);
        }
    }
    Ok(c.out)
}

/// `φ_B2(x) − φ_B*(x) = (s−δ)f(x)` at each sample point, exactly.
pub fn check_phi_diff_case1(
    n: usize,
    s: usize,
    delta: usize,
    xs: &[Rational],
) -> Result<Vec<IdentityCheck>, IdentityError> {
    let b2 = poly_of(QuotientFamily::LargeCore { n, s })?;
    let star = poly_of(QuotientFamily::Extremal { n, delta })?;
    let (n, s, d) = (signed(n), signed(s), signed(delta));
    let mut c = Checks::new(n, Some(s), d);
    for &x in xs {
        let lhs = b2.eval_exact(x) - star.eval_exact(x);
        let rhs = (q(s) - q(d)) * forms::spectral_f(q(n), q(s), q(d), x);
        c.exact_at("phi_diff_case1", Some(x), Relation::Eq, lhs, rhs);
    }
    Ok(c.out)
}

/// `φ_B3(θ) − φ_B*(θ) = (δ−s)g(θ)` in floating point, plus `φ_B*(θ) ≈ 0`
/// (scaled by the sum of the absolute values of its terms).
pub fn check_phi_diff_case3(
    n: usize,
    s: usize,
    delta: usize,
    theta: f64,
) -> Result<Vec<IdentityCheck>, IdentityError> {
    let b3 = poly_of(QuotientFamily::SmallCore { n, s, delta })?;
    let star = poly_of(QuotientFamily::Extremal { n, delta })?;
    let (n, s, d) = (signed(n), signed(s), signed(delta));
    let mut c = Checks::new(n, Some(s), d);
    let lhs = b3.eval(theta) - star.eval(theta);
    let rhs = (d - s) as f64 * forms::g(n as f64, s as f64, d as f64, theta);
    c.real_at(
        "phi_diff_case3_at_theta",
        Some(theta),
        Relation::Eq,
        lhs,
        rhs,
    );
    c.real_at(
        "phi_bstar_vanishes_at_theta",
        Some(theta),
        Relation::Eq,
        star.eval(theta) / star.magnitude(theta),
        0.0,
    );
    Ok(c.out)
}

/// `φ_B3(x) − φ_B*(x) = (δ−s)g(x)` as a polynomial identity, on 4 exact points.
pub fn check_phi_diff_case3_exact(
    n: usize,
    s: usize,
    delta: usize,
) -> Result<Vec<IdentityCheck>, IdentityError> {
    let b3 = poly_of(QuotientFamily::SmallCore { n, s, delta })?;
    let star = poly_of(QuotientFamily::Extremal { n, delta })?;
    let (n, s, d) = (signed(n), signed(s), signed(delta));
    let mut c = Checks::new(n, Some(s), d);
    for x in cubic_points() {
        let lhs = b3.eval_exact(x) - star.eval_exact(x);
        let rhs = (q(d) - q(s)) * forms::g(q(n), q(s), q(d), x);
        c.exact_at("phi_diff_case3", Some(x), Relation::Eq, lhs, rhs);
    }
    Ok(c.out)
}

/// Links of the sign arguments that do not involve `s`: the edge cubic's
/// derivative bound and value at 3, and the tail of the case-1 spectral chain.
pub fn check_parameter_claims(n: usize, delta: usize) -> Vec<IdentityCheck> {
    let (n, d) = (signed(n), signed(delta));
    let (nq, dq) = (q(n), q(d));
    let mut c = Checks::new(n, None, d);
    let always = Ok(());
    let delta_ok = hyp(d >= 2, "needs delta >= 2");
    let size_quadratic = both(
        &delta_ok,
        &hyp(
            6 * n >= d * d + 7 * d + 4,
            "needs 6n >= delta^2 + 7delta + 4",
        ),
    );
    let size_linear = both(&delta_ok, &hyp(n >= 6 * d - 4, "needs n >= 6delta - 4"));
    let spectral_linear = both(&delta_ok, &hyp(n >= 5 * d - 3, "needs n >= 5delta - 3"));

    c.exact("edge_f_prime_at_axis", &always, Relation::Eq, || {
        (
            forms::edge_f_prime(nq, dq, (dq + q(5)) / q(3)),
            (q(6) * nq - dq * dq - q(7) * dq - q(4)) / q(3),
        )
    });
    c.exact(
        "edge_f_prime_axis_nonnegative",
        &size_quadratic,
        Relation::Ge,
        || ((q(6) * nq - dq * dq - q(7) * dq - q(4)) / q(3), q(0)),
    );
    c.exact("edge_f_at_3", &always, Relation::Eq, || {
        (forms::edge_f(nq, dq, q(3)), q(2) * nq - q(3) * dq)
    });
    c.exact(
        "edge_f_at_3_lower_bound",
        &size_linear,
        Relation::Ge,
        || (q(2) * nq - q(3) * dq, q(9) * dq - q(8)),
    );
    c.exact("edge_f_at_3_positive", &size_linear, Relation::Gt, || {
        (q(9) * dq - q(8), q(0))
    });

    let tail = |m: Rational| m * m / q(2) - (q(5) * dq / q(2) - q(2)) * m;
    c.exact(
        "spectral_f_half_order_expanded",
        &delta_ok,
        Relation::Eq,
        || {
            let half = nq / q(2);
            (
                -q(2) * half * half - (dq - q(2)) * half + nq * nq - (q(2) * dq - q(1)) * nq,
                tail(nq),
            )
        },
    );
    c.exact(
        "spectral_f_order_floor",
        &spectral_linear,
        Relation::Ge,
        || (tail(nq), tail(q(5) * dq - q(3))),
    );
    c.exact("spectral_f_floor_value", &delta_ok, Relation::Eq, || {
        (tail(q(5) * dq - q(3)), (q(5) * dq - q(3)) / q(2))
    });
    c.exact("spectral_f_floor_positive", &delta_ok, Relation::Gt, || {
        ((q(5) * dq - q(3)) / q(2), q(0))
    });
    c.out
}

/// Every `s`-dependent link of the sign arguments, each under its own hypotheses.
pub fn check_sign_claims(n: usize, s: usize, delta: usize) -> Vec<IdentityCheck> {
    let theta = spectral_threshold(n, delta).ok();
    let g3_valid = s >= 1 && s <= delta && FamilySpec::case_small_core(n, s, delta).is_ok();
    let e3 = if g3_valid {
        counted_edges(FamilySpec::case_small_core(n, s, delta)).ok()
    } else {
        None
    };
    let e_star = counted_edges(FamilySpec::extremal(n, delta)).ok();
    let rho3 = if g3_valid && s < delta {
        poly_of(QuotientFamily::SmallCore { n, s, delta })
            .ok()
            .and_then(|p| largest_real_root(&p, f64::NEG_INFINITY).ok())
    } else {
        None
    };
    let rho2 = if n >= 2 * s && s >= 2 {
        poly_of(QuotientFamily::LargeCore { n, s })
            .ok()
            .and_then(|p| largest_real_root(&p, f64::NEG_INFINITY).ok())
    } else {
        None
    };
    let b3 = if g3_valid && s < delta {
        poly_of(QuotientFamily::SmallCore { n, s, delta }).ok()
    } else {
        None
    };

    let (n, s, d) = (signed(n), signed(s), signed(delta));
    let (nq, sq, dq) = (q(n), q(s), q(d));
    let (nf, sf, df) = (n as f64, s as f64, d as f64);
    let mut c = Checks::new(n, Some(s), d);

    let delta_ok = hyp(d >= 2, "needs delta >= 2");
    let theta_ok = both(&delta_ok, &hyp(theta.is_some(), "needs n >= 2delta"));
    let th = theta.unwrap_or(f64::NAN);

    // size argument, large core
    let large = both(
        &delta_ok,
        &hyp(s > d && n >= 2 * s, "needs s >= delta + 1 and n >= 2s"),
    );
    let large_floor = both(&large, &hyp(n >= 6 * d - 4, "needs n >= 6delta - 4"));
    let quarter = (sq - dq) * (nq - q(6) * dq + q(6)) / q(4);
    c.exact("edge_case1_lower_bound", &large, Relation::Ge, || {
        (
            (sq - dq) * (q(2) * nq - q(3) * sq - q(3) * dq + q(3)) / q(2),
            quarter,
        )
    });
    c.exact("edge_case1_positive", &large_floor, Relation::Gt, || {
        (quarter, q(0))
    });

    // size argument, small core
    let size_floor = hyp(
        n >= 6 * d - 4 && 6 * n >= d * d + 7 * d + 4,
        "needs n >= 6delta - 4 and 6n >= delta^2 + 7delta + 4",
    );
    let small = both(
        &size_floor,
        &hyp(s >= 3 && s < d, "needs 3 <= s <= delta - 1"),
    );
    c.exact(
        "edge_f_prime_above_axis_value",
        &small,
        Relation::Ge,
        || {
            (
                forms::edge_f_prime(nq, dq, sq),
                forms::edge_f_prime(nq, dq, (dq + q(5)) / q(3)),
            )
        },
    );
    c.exact("edge_f_increasing_from_3", &small, Relation::Ge, || {
        (forms::edge_f(nq, dq, sq), forms::edge_f(nq, dq, q(3)))
    });
    c.exact("edge_case3_positive", &small, Relation::Gt, || {
        ((dq - sq) * forms::edge_f(nq, dq, sq) / q(2), q(0))
    });
    let size_s2 = both(
        &size_floor,
        &hyp(
            s == 2 && d >= 3 && e3.is_some(),
            "needs s = 2 < delta and a valid G3",
        ),
    );
    c.exact("s2_edge_f_positive", &size_s2, Relation::Gt, || {
        (forms::edge_f(nq, dq, q(2)), q(0))
    });
    c.exact("s2_edge_diff_positive", &size_s2, Relation::Gt, || {
        (q(e_star.unwrap_or(0) - e3.unwrap_or(0)), q(0))
    });

    // spectral argument, large core
    let spec_large = both(&large, &hyp(n >= 5 * d - 3, "needs n >= 5delta - 3"));
    let spec_large_theta = both(&spec_large, &theta_ok);
    let at_floor = forms::spectral_f(nq, sq, dq, nq - dq);
    c.exact(
        "spectral_f_axis_below_s_minus_1",
        &spec_large,
        Relation::Gt,
        || (sq - q(1), (sq + dq - q(2)) / q(2)),
    );
    c.exact(
        "s_minus_1_below_n_minus_delta",
        &spec_large,
        Relation::Gt,
        || (nq - dq, sq - q(1)),
    );
    c.exact(
        "spectral_f_at_n_minus_delta",
        &spec_large,
        Relation::Eq,
        || {
            (
                at_floor,
                -q(2) * sq * sq - (dq - q(2)) * sq + nq * nq - (q(2) * dq - q(1)) * nq,
            )
        },
    );
    c.exact(
        "spectral_f_half_order_bound",
        &spec_large,
        Relation::Ge,
        || {
            let half = nq / q(2);
            (
                at_floor,
                -q(2) * half * half - (dq - q(2)) * half + nq * nq - (q(2) * dq - q(1)) * nq,
            )
        },
    );
    c.real(
        "spectral_f_theta_above_floor",
        &spec_large_theta,
        Relation::Ge,
        || (forms::spectral_f(nf, sf, df, th), to_f64(at_floor)),
    );
    c.real(
        "rho_g2_below_theta",
        &both(&spec_large_theta, &hyp(rho2.is_some(), "needs a valid B2")),
        Relation::Gt,
        || (th, rho2.unwrap_or(f64::NAN)),
    );

    // spectral argument, small core
    let spec_range = both(
        &theta_ok,
        &hyp(
            3 * n >= d * d + 3 * d && b3.is_some(),
            "needs n >= delta^2/3 + delta and a valid G3",
        ),
    );
    let spec_small_s = hyp(s >= 3 && s < d, "needs 3 <= s <= delta - 1");
    let spec_small = both(&spec_range, &spec_small_s);
    let h_floor = dq * dq / q(3) + dq;
    if s == 3 {
        c.exact("g_affine_slope_positive", &spec_small, Relation::Gt, || {
            (nq - dq * sq + sq + q(2) * dq - q(4), q(0))
        });
    } else {
        c.exact(
            "g_vertex_below_n_minus_delta",
            &spec_small,
            Relation::Gt,
            || {
                (
                    nq - dq,
                    -(nq - dq * sq + sq + q(2) * dq - q(4)) / (q(2) * (sq - q(3))),
                )
            },
        );
    }
    c.real(
        "theta_above_n_minus_delta",
        &spec_range,
        Relation::Gt,
        || (th, nf - df),
    );
    c.real(
        "g_theta_above_g_n_minus_delta",
        &spec_small,
        Relation::Gt,
        || {
            (
                forms::g(nf, sf, df, th),
                to_f64(forms::g(nq, sq, dq, nq - dq)),
            )
        },
    );
    c.exact("g_at_n_minus_delta_is_h", &spec_small, Relation::Eq, || {
        (forms::g(nq, sq, dq, nq - dq), forms::h(sq, dq, nq))
    });
    let left = (q(3) * dq - sq - q(1)) / q(2);
    c.exact(
        "h_prime_at_left_endpoint",
        &spec_small_s,
        Relation::Eq,
        || (forms::h_prime(sq, dq, left), q(0)),
    );
    c.exact(
        "h_prime_slope_positive",
        &spec_small_s,
        Relation::Gt,
        || (q(2) * (sq - q(2)), q(0)),
    );
    c.exact("h_left_endpoint_bound", &spec_small_s, Relation::Ge, || {
        ((q(3) * dq - q(4)) / q(2), left)
    });
    c.exact(
        "h_order_floor_above_endpoint",
        &spec_small_s,
        Relation::Gt,
        || (h_floor, (q(3) * dq - q(4)) / q(2)),
    );
    c.exact(
        "h_monotone_to_order_floor",
        &spec_small,
        Relation::Ge,
        || (forms::h(sq, dq, nq), forms::h(sq, dq, h_floor)),
    );
    let cubic_s = |t: Rational| -q(9) * t * t * t + q(27) * t * t - q(18) * t + q(9);
    c.exact(
        "h_order_floor_expansion",
        &spec_small_s,
        Relation::Eq,
        || {
            let inner =
                (sq - q(2)) * dq * dq - q(3) * (sq - q(2)) * dq + q(3) * sq * sq - q(3) * sq + q(3);
            let rhs = dq / q(9) * (dq * inner + cubic_s(sq))
                + sq * (sq * sq * sq - q(5) * sq * sq + q(8) * sq - q(5));
            (forms::h(sq, dq, h_floor), rhs)
        },
    );
    let h_step1 = |inner: Rational| dq / q(9) * (dq * inner + cubic_s(sq)) + sq;
    c.exact("h_chain_replace_delta", &spec_small_s, Relation::Ge, || {
        let inner =
            (sq - q(2)) * dq * dq - q(3) * (sq - q(2)) * dq + q(3) * sq * sq - q(3) * sq + q(3);
        let lhs = dq / q(9) * (dq * inner + cubic_s(sq))
            + sq * (sq * sq * sq - q(5) * sq * sq + q(8) * sq - q(5));
        let s1 = sq + q(1);
        (
            lhs,
            h_step1(
                (sq - q(2)) * s1 * s1 - q(3) * (sq - q(2)) * s1 + q(3) * sq * sq - q(3) * sq + q(3),
            ),
        )
    });
    let s_cubic = sq * sq * sq - q(3) * sq + q(7);
    c.exact("h_chain_cubic_in_s", &spec_small_s, Relation::Eq, || {
        let s1 = sq + q(1);
        (
            (sq - q(2)) * s1 * s1 - q(3) * (sq - q(2)) * s1 + q(3) * sq * sq - q(3) * sq + q(3),
            s_cubic,
        )
    });
    let quartic = sq * sq * sq * sq - q(8) * sq * sq * sq + q(24) * sq * sq - q(14) * sq + q(16);
    c.exact(
        "h_chain_replace_delta_again",
        &spec_small_s,
        Relation::Ge,
        || {
            (
                h_step1(s_cubic),
                dq / q(9) * ((sq + q(1)) * s_cubic + cubic_s(sq)) + sq,
            )
        },
    );
    c.exact("h_chain_quartic_in_s", &spec_small_s, Relation::Eq, || {
        ((sq + q(1)) * s_cubic + cubic_s(sq), quartic)
    });
    c.exact(
        "h_chain_above_6delta_plus_s",
        &spec_small_s,
        Relation::Gt,
        || (dq / q(9) * quartic + sq, q(6) * dq + sq),
    );
    c.exact("h_chain_positive", &spec_small_s, Relation::Gt, || {
        (q(6) * dq + sq, q(0))
    });
    c.exact("h_at_order_positive", &spec_small, Relation::Gt, || {
        ((dq - sq) * forms::h(sq, dq, nq), q(0))
    });
    let phi3_theta = || b3.map(|p| p.eval(th)).unwrap_or(f64::NAN);
    c.real("phi_b3_theta_above_h", &spec_small, Relation::Gt, || {
        (phi3_theta(), (df - sf) * to_f64(forms::h(sq, dq, nq)))
    });

    let vertex = (nq + sq * sq - dq * sq - q(3) * sq + q(2) * dq - q(1)) / q(3);
    let prime_at = |x: Rational| forms::eval_quadratic(forms::phi_b3_prime(nq, sq, dq), x);
    let prime_floor = forms::phi_b3_prime_at_n_minus_delta(h_floor, sq, dq);
    let prime_expansion =
        (dq * dq * (dq * dq + (q(6) * sq - q(15)) * dq - q(6) * sq * sq + q(6) * sq + q(21))
            + (q(9) * sq * sq - q(18) * sq - q(27)) * dq
            - q(9) * sq * sq
            + q(36) * sq)
            / q(9);
    let quad_s = sq * sq - sq + q(7);
    let lin_s = q(9) * sq * sq - q(18) * sq - q(27);
    let step1 = (quad_s * dq * dq + lin_s * dq - q(9) * sq * sq + q(36) * sq) / q(9);
    let s1 = sq + q(1);
    let step2 = (quad_s * s1 * s1 + lin_s * s1 - q(9) * sq * sq + q(36) * sq) / q(9);
    let step3 = (q(16) * quad_s - q(9) * sq * sq + q(36) * sq) / q(9);
    let s_at_least_3 = hyp(s >= 3, "needs s >= 3");
    c.exact(
        "phi_b3_prime_vertex_below",
        &spec_small,
        Relation::Gt,
        || (nq - dq, vertex),
    );
    c.exact(
        "phi_b3_prime_at_n_minus_delta",
        &spec_small,
        Relation::Eq,
        || {
            (
                prime_at(nq - dq),
                forms::phi_b3_prime_at_n_minus_delta(nq, sq, dq),
            )
        },
    );
    c.exact(
        "phi_b3_prime_order_floor",
        &spec_small,
        Relation::Ge,
        || {
            (
                forms::phi_b3_prime_at_n_minus_delta(nq, sq, dq),
                prime_floor,
            )
        },
    );
    c.exact(
        "phi_b3_prime_floor_expansion",
        &spec_small_s,
        Relation::Eq,
        || (prime_floor, prime_expansion),
    );
    c.exact(
        "phi_b3_prime_replace_delta",
        &spec_small_s,
        Relation::Ge,
        || {
            let inner = s1 * s1 + (q(6) * sq - q(15)) * s1 - q(6) * sq * sq + q(6) * sq + q(21);
            (
                prime_expansion,
                (dq * dq * inner + lin_s * dq - q(9) * sq * sq + q(36) * sq) / q(9),
            )
        },
    );
    c.exact(
        "phi_b3_prime_quadratic_in_s",
        &spec_small_s,
        Relation::Eq,
        || {
            (
                s1 * s1 + (q(6) * sq - q(15)) * s1 - q(6) * sq * sq + q(6) * sq + q(21),
                quad_s,
            )
        },
    );
    c.exact(
        "phi_b3_prime_replace_delta_again",
        &spec_small_s,
        Relation::Ge,
        || (step1, step2),
    );
    c.exact(
        "phi_b3_prime_replace_s",
        &s_at_least_3,
        Relation::Ge,
        || (step2, step3),
    );
    c.exact(
        "phi_b3_prime_final_value",
        &s_at_least_3,
        Relation::Eq,
        || (step3, (q(7) * sq * sq + q(20) * sq + q(112)) / q(9)),
    );
    c.exact(
        "phi_b3_prime_final_positive",
        &s_at_least_3,
        Relation::Gt,
        || ((q(7) * sq * sq + q(20) * sq + q(112)) / q(9), q(0)),
    );
    c.real("rho_g3_below_theta", &spec_small, Relation::Gt, || {
        (th, rho3.unwrap_or(f64::NAN))
    });

    // spectral argument, s = 2
    let spec_s2 = both(
        &spec_range,
        &hyp(
            s == 2 && d >= 3 && n >= 5 * d - 3,
            "needs s = 2 < delta and n >= 5delta - 3",
        ),
    );
    c.real(
        "s2_phi_b3_at_theta_positive",
        &spec_s2,
        Relation::Gt,
        || (phi3_theta(), 0.0),
    );
    c.exact(
        "s2_phi_b3_prime_vertex_below",
        &spec_s2,
        Relation::Gt,
        || (nq - dq, vertex),
    );
    c.exact(
        "s2_phi_b3_prime_at_n_minus_delta_positive",
        &spec_s2,
        Relation::Gt,
        || (prime_at(nq - dq), q(0)),
    );
    c.real("s2_rho_g3_below_theta", &spec_s2, Relation::Gt, || {
        (th, rho3.unwrap_or(f64::NAN))
    });
    c.out
}

/// Smallest and largest orders swept for `δ`: from the lower of the two
/// theorem floors to `n_extra` past the higher one.
pub fn grid_orders(delta: usize, n_extra: usize) -> std::ops::RangeInclusive<usize> {
    let a = order_floor(delta, Theorem::Size);
    let b = order_floor(delta, Theorem::Spectral);
    a.min(b)..=a.max(b) + n_extra
}

/// All identities and claims for `δ ∈ [2, delta_max]` and the orders of
/// [`grid_orders`]. Skipped claims are dropped.
pub fn identity_grid(delta_max: usize, n_extra: usize) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for delta in 2..=delta_max {
        for n in grid_orders(delta, n_extra) {
            out.extend(checks_at(n, delta));
        }
    }
    out.retain(|c| !c.is_skipped());
    out
}

fn checks_at(n: usize, delta: usize) -> Vec<IdentityCheck> {
    let mut out = check_parameter_claims(n, delta);
    let theta = spectral_threshold(n, delta).ok();
    for s in 2..=n / 2 {
        out.extend(check_sign_claims(n, s, delta));
        if let Ok(c) = check_edge_closed_forms(n, s, delta) {
            out.extend(c);
        }
        if let Ok(c) = check_polynomial_displays(n, s, delta) {
            out.extend(c);
        }
        if let Ok(c) = check_edge_diff_case1(n, s, delta) {
            out.push(c);
        }
        if s <= delta {
            if let Ok(c) = check_edge_diff_case3(n, s, delta) {
                out.push(c);
            }
        }
        let xs = [q(0), q(1), q(2), q(3), q(signed(n) - signed(delta))];
        if let Ok(c) = check_phi_diff_case1(n, s, delta, &xs) {
            out.extend(c);
        }
        if s < delta {
            if let Ok(c) = check_phi_diff_case3_exact(n, s, delta) {
                out.extend(c);
            }
            if let Some(theta) = theta {
                if let Ok(c) = check_phi_diff_case3(n, s, delta, theta) {
                    out.extend(c);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(checks: &'a [IdentityCheck], name: &str) -> &'a IdentityCheck {
        checks
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("no check named {name}"))
    }

    fn exact(v: i64) -> Option<Value> {
        Some(Value::Exact(q(v)))
    }

    #[test]
    fn edge_diff_case1_examples() {
        let c = check_edge_diff_case1(12, 3, 2).unwrap();
        assert!(c.pass);
        assert_eq!((c.lhs, c.rhs), (exact(6), exact(6)));
        let c = check_edge_diff_case1(6, 3, 3).unwrap();
        assert_eq!((c.lhs, c.pass), (exact(0), true));
        assert!(check_edge_diff_case1(16, 4, 3).unwrap().pass);
        assert!(check_edge_diff_case1(7, 4, 2).is_err());
    }

    #[test]
    fn edge_diff_case3_examples() {
        let c = check_edge_diff_case3(14, 3, 4).unwrap();
        assert_eq!((c.lhs, c.rhs, c.pass), (exact(8), exact(8), true));
        assert_eq!(forms::edge_f(q(14), q(4), q(3)), q(16));
        let c = check_edge_diff_case3(14, 4, 4).unwrap();
        assert_eq!((c.lhs, c.pass), (exact(0), true));
        let c = check_edge_diff_case3(20, 2, 5).unwrap();
        assert!(c.pass);
        assert!(matches!(c.lhs, Some(Value::Exact(v)) if v > q(0)));
        assert!(check_edge_diff_case3(6, 3, 4).is_err());
        assert!(check_edge_diff_case3(20, 6, 5).is_err());
    }

    #[test]
    fn phi_diff_case1_examples() {
        let xs = [q(0), q(1), q(2)];
        let cs = check_phi_diff_case1(10, 4, 3, &xs).unwrap();
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.pass));
        let cs = check_phi_diff_case1(10, 3, 3, &xs).unwrap();
        assert!(cs.iter().all(|c| c.pass && c.lhs == exact(0)));
        let cs = check_phi_diff_case1(12, 5, 2, &[q(10)]).unwrap();
        assert!(cs[0].pass);
        assert!(forms::spectral_f(q(12), q(5), q(2), q(10)) > q(0));
    }

    #[test]
    fn phi_diff_case3_examples() {
        for (n, s, d) in [(14, 3, 4), (20, 2, 5)] {
            let theta = spectral_threshold(n, d).unwrap();
            let cs = check_phi_diff_case3(n, s, d, theta).unwrap();
            assert!(cs.iter().all(|c| c.pass), "{cs:?}");
            assert!(check_phi_diff_case3_exact(n, s, d)
                .unwrap()
                .iter()
                .all(|c| c.pass));
        }
        let theta = spectral_threshold(14, 4).unwrap();
        let cs = check_phi_diff_case3(14, 4, 4, theta).unwrap();
        assert_eq!(cs[0].lhs, Some(Value::Real(0.0)));
    }

    #[test]
    fn perturbed_closed_form_is_caught() {
        // off-by-one in the constant of g changes the exact comparison
        let b3 = poly_of(QuotientFamily::SmallCore {
            n: 14,
            s: 3,
            delta: 4,
        })
        .unwrap();
        let star = poly_of(QuotientFamily::Extremal { n: 14, delta: 4 }).unwrap();
        let lhs = b3.eval_exact(q(2)) - star.eval_exact(q(2));
        assert_eq!(lhs, forms::g(q(14), q(3), q(4), q(2)));
        assert_ne!(lhs, forms::g(q(14), q(3), q(4), q(2)) + q(1));
    }

    #[test]
    fn parameter_claim_examples() {
        let cs = check_parameter_claims(14, 3);
        let f3 = find(&cs, "edge_f_at_3");
        assert_eq!((f3.lhs, f3.rhs, f3.pass), (exact(19), exact(19), true));
        assert!(find(&cs, "edge_f_at_3_positive").pass);
        let cs = check_parameter_claims(7, 2);
        let v = find(&cs, "spectral_f_floor_value");
        assert_eq!(v.rhs, Some(Value::Exact(frac(7, 2))));
        assert!(v.pass && find(&cs, "spectral_f_floor_positive").pass);
        assert!(find(&cs, "spectral_f_order_floor").pass);
        // below the size floor the bound is skipped, not evaluated
        let cs = check_parameter_claims(7, 2);
        let c = find(&cs, "edge_f_at_3_lower_bound");
        assert!(c.is_skipped() && c.lhs.is_none() && !c.failed());
    }

    #[test]
    fn derivative_chain_final_value() {
        let cs = check_sign_claims(9, 3, 4);
        let c = find(&cs, "phi_b3_prime_final_value");
        assert!(c.pass);
        assert_eq!(c.rhs, Some(Value::Exact(frac(235, 9))));
        assert!(find(&cs, "phi_b3_prime_final_positive").pass);
        // n = 9 is below delta^2/3 + delta for delta = 4
        assert!(find(&cs, "phi_b3_prime_order_floor").is_skipped());
        let cs = check_sign_claims(10, 3, 4);
        assert!(
            cs.iter().filter(|c| !c.is_skipped()).all(|c| c.pass),
            "{cs:#?}"
        );
        assert!(!find(&cs, "phi_b3_prime_order_floor").is_skipped());
        assert!(!find(&cs, "rho_g3_below_theta").is_skipped());
    }

    #[test]
    fn h_derivative_vanishes_at_left_endpoint() {
        for d in 4..12 {
            for s in 3..d {
                let left = (q(3 * d - s - 1)) / q(2);
                assert_eq!(forms::h_prime(q(s), q(d), left), q(0));
            }
        }
    }

    #[test]
    fn s2_escape_routes() {
        let cs = check_sign_claims(22, 2, 5);
        for name in [
            "s2_phi_b3_at_theta_positive",
            "s2_phi_b3_prime_at_n_minus_delta_positive",
            "s2_rho_g3_below_theta",
        ] {
            let c = find(&cs, name);
            assert!(c.pass && !c.is_skipped(), "{c:?}");
        }
        let cs = check_sign_claims(26, 2, 5);
        let c = find(&cs, "s2_edge_diff_positive");
        assert!(c.pass && !c.is_skipped());
    }

    #[test]
    fn displays_match_constructed_polynomials() {
        let cs = check_polynomial_displays(14, 3, 4).unwrap();
        assert_eq!(cs.len(), 4 + 4 + 4 + 3);
        assert!(cs.iter().all(|c| c.pass));
        let cs = check_edge_closed_forms(14, 3, 4).unwrap();
        assert!(cs.iter().all(|c| c.pass), "{cs:#?}");
    }

    #[test]
    fn json_shape() {
        let c = check_edge_diff_case1(12, 3, 2).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["name"], "edge_diff_case1");
        assert_eq!(v["params"]["n"], 12);
        assert_eq!(v["lhs"], "6");
        assert_eq!(v["pass"], true);
        assert!(v.get("skipped").is_none());
    }

    #[test]
    fn small_grid_has_no_failures() {
        let grid = identity_grid(4, 4);
        assert!(grid.len() > 500);
        let failures: Vec<_> = grid.iter().filter(|c| c.failed()).collect();
        assert!(failures.is_empty(), "{failures:#?}");
    }
}
