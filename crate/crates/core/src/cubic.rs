//! Exact 3×3 quotient matrices of the split families, their characteristic
//! cubics, and a bracketed Newton solver for the largest real root.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::graph::{FamilySpec, GraphError};
use crate::spectral::SpectralError;

pub type Rational = Ratio<i128>;

/// Monic `x³ + c2·x² + c1·x + c0` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CubicPoly {
    pub c2: i64,
    pub c1: i64,
    pub c0: i64,
}

impl CubicPoly {
    pub fn new(c2: i64, c1: i64, c0: i64) -> Self {
        CubicPoly { c2, c1, c0 }
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.c2 as f64) * x + self.c1 as f64) * x + self.c0 as f64
    }

    pub fn eval_exact(&self, x: Rational) -> Rational {
        let c = |v: i64| Rational::from_integer(i128::from(v));
        ((x + c(self.c2)) * x + c(self.c1)) * x + c(self.c0)
    }

    /// Coefficients `(a2, a1, a0)` of the derivative `a2·x² + a1·x + a0`.
    pub fn derivative(&self) -> (i64, i64, i64) {
        (3, 2 * self.c2, self.c1)
    }

    pub fn eval_derivative(&self, x: f64) -> f64 {
        (3.0 * x + 2.0 * self.c2 as f64) * x + self.c1 as f64
    }

    /// Sum of absolute term magnitudes at `x`, a scale for relative tolerances.
    pub fn magnitude(&self, x: f64) -> f64 {
        let ax = x.abs();
        ax.powi(3)
            + (self.c2 as f64).abs() * ax * ax
            + (self.c1 as f64).abs() * ax
            + (self.c0 as f64).abs()
    }
}

impl fmt::Display for CubicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^3")?;
        for (c, tail) in [(self.c2, "x^2"), (self.c1, "x"), (self.c0, "")] {
            if c != 0 {
                let sign = if c < 0 { '-' } else { '+' };
                let mag = c.unsigned_abs();
                if mag == 1 && !tail.is_empty() {
                    write!(f, " {sign} {tail}")?;
                } else {
                    write!(f, " {sign} {mag}{tail}")?;
                }
            }
        }
        Ok(())
    }
}

/// The three partitions whose quotient matrices appear in the spectral argument.
/// Blocks are always (join core, large clique, union of small cliques).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum QuotientFamily {
    /// `K_s ∨ (K_{n−2s+1} ∪ (s−1)K_1)`.
    LargeCore { n: usize, s: usize },
    /// `K_δ ∨ (K_{n−2δ+1} ∪ (δ−1)K_1)`.
    Extremal { n: usize, delta: usize },
    /// `K_s ∨ (K_{n−s−(δ+1−s)(s−1)} ∪ (s−1)K_{δ+1−s})`.
    SmallCore { n: usize, s: usize, delta: usize },
}

impl QuotientFamily {
    pub fn family_spec(&self) -> Result<FamilySpec, GraphError> {
        match *self {
            QuotientFamily::LargeCore { n, s } => FamilySpec::case_large_core(n, s),
            QuotientFamily::Extremal { n, delta } => FamilySpec::extremal(n, delta),
            QuotientFamily::SmallCore { n, s, delta } => FamilySpec::case_small_core(n, s, delta),
        }
    }

    /// Vertex blocks of the realised family graph (labels as in `build_family`).
    pub fn blocks(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        let spec = self.family_spec()?;
        let s = spec.s();
        let big = spec.parts()[0];
        let n = spec.order();
        Ok(vec![
            (0..s).collect(),
            (s..s + big).collect(),
            (s + big..n).collect(),
        ])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuotientMatrix3 {
    pub entries: [[i64; 3]; 3],
    /// Sizes of the (core, large clique, small cliques) blocks.
    pub block_sizes: [usize; 3],
}

impl QuotientMatrix3 {
    pub const BLOCK_LABELS: [&'static str; 3] = ["core", "large_clique", "small_cliques"];

    pub fn row_sums(&self) -> [i64; 3] {
        self.entries.map(|r| r.iter().sum())
    }
}

fn invalid(msg: String) -> SpectralError {
    SpectralError::InvalidBlocks(msg)
}

pub fn quotient_matrix(family: QuotientFamily) -> Result<QuotientMatrix3, SpectralError> {
    let spec = family.family_spec().map_err(|e| invalid(e.to_string()))?;
    let i = |v: usize| v as i64;
    let (core, big, small) = (
        spec.s(),
        spec.parts()[0],
        spec.parts()[1..].iter().sum::<usize>(),
    );
    if core == 0 || small == 0 {
        return Err(invalid(format!("empty block in {family:?}")));
    }
    let entries = match family {
        QuotientFamily::LargeCore { s, .. } | QuotientFamily::Extremal { delta: s, .. } => {
            let s = i(s);
            let b = i(big);
            [[s - 1, b, s - 1], [s, b - 1, 0], [s, 0, 0]]
        }
        QuotientFamily::SmallCore { s, delta, .. } => {
            let (s, d, b) = (i(s), i(delta), i(big));
            [
                [s - 1, b, (s - 1) * (d + 1 - s)],
                [s, b - 1, 0],
                [s, 0, d - s],
            ]
        }
    };
    Ok(QuotientMatrix3 {
        entries,
        block_sizes: [core, big, small],
    })
}

/// `det(xI − M)` expanded exactly: `x³ − tr·x² + (Σ principal 2×2 minors)·x − det`.
pub fn char_poly(m: &QuotientMatrix3) -> CubicPoly {
    let a = &m.entries;
    let trace = a[0][0] + a[1][1] + a[2][2];
    let minors = (a[0][0] * a[1][1] - a[0][1] * a[1][0])
        + (a[0][0] * a[2][2] - a[0][2] * a[2][0])
        + (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
    let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    CubicPoly::new(-trace, minors, -det)
}

/// Largest real root of `p`, to about `1e-12` absolute.
///
/// The real critical points split the line into monotone pieces; the largest
/// root lies in the rightmost piece whose ends change sign. Newton's method
/// runs inside that bracket starting from its upper end, falling back to
/// bisection whenever a step would leave the bracket.
pub fn largest_real_root(p: &CubicPoly, lower_bound: f64) -> Result<f64, SpectralError> {
    let cauchy = 1.0
        + [p.c2, p.c1, p.c0]
            .iter()
            .map(|c| c.unsigned_abs() as f64)
            .fold(0.0, f64::max);
    // discriminant of 3x² + 2c2·x + c1, divided by 4
    let disc = i128::from(p.c2) * i128::from(p.c2) - 3 * i128::from(p.c1);
    let (mut lo, mut hi) = if disc <= 0 {
        (-cauchy, cauchy)
    } else {
        let sq = (disc as f64).sqrt();
        let left = (-(p.c2 as f64) - sq) / 3.0;
        let right = (-(p.c2 as f64) + sq) / 3.0;
        if p.eval(right) <= 0.0 {
            (right, cauchy.max(right))
        } else {
            ((-cauchy).min(left), left)
        }
    };
    let root = refine(p, &mut lo, &mut hi);
    if root < lower_bound {
        return Err(SpectralError::NoRootAbove {
            lower_bound,
            largest: root,
        });
    }
    Ok(root)
}

/// Safeguarded Newton on an increasing bracket with `p(lo) ≤ 0 ≤ p(hi)`.
fn refine(p: &CubicPoly, lo: &mut f64, hi: &mut f64) -> f64 {
    let mut x = *hi;
    for _ in 0..500 {
        let fx = p.eval(x);
        if fx == 0.0 {
            return x;
        }
        if fx < 0.0 {
            *lo = x;
        } else {
            *hi = x;
        }
        let d = p.eval_derivative(x);
        let mut next = x - fx / d;
        if d.is_nan() || d <= 0.0 || !next.is_finite() || next <= *lo || next >= *hi {
            next = 0.5 * (*lo + *hi);
        }
        let width = 1e-14 * x.abs().max(1.0);
        if (next - x).abs() <= width || *hi - *lo <= width {
            return next;
        }
        x = next;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;
    use crate::spectral::equitable_quotient;

    /// Cofactor expansion of det(xI − M) evaluated at integer x, independent of `char_poly`.
    fn det_x_minus(m: &[[i64; 3]; 3], x: i64) -> i64 {
        let a = |r: usize, c: usize| if r == c { x - m[r][c] } else { -m[r][c] };
        a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
            - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
            + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
    }

    #[test]
    fn extremal_quotient() {
        let q = quotient_matrix(QuotientFamily::Extremal { n: 8, delta: 2 }).unwrap();
        assert_eq!(q.entries, [[1, 5, 1], [2, 4, 0], [2, 0, 0]]);
        assert_eq!(q.block_sizes, [2, 5, 1]);
        assert_eq!(
            quotient_matrix(QuotientFamily::LargeCore { n: 8, s: 2 }).unwrap(),
            q
        );
        let p = char_poly(&q);
        assert_eq!(p, CubicPoly::new(-5, -8, 8));
        assert_eq!(p.to_string(), "x^3 - 5x^2 - 8x + 8");
        for x in -3..=3 {
            assert_eq!(
                p.eval_exact(Rational::from_integer(x as i128)).to_integer(),
                det_x_minus(&q.entries, x) as i128
            );
        }
    }

    #[test]
    fn small_core_quotient() {
        let fam = QuotientFamily::SmallCore {
            n: 14,
            s: 3,
            delta: 4,
        };
        let q = quotient_matrix(fam).unwrap();
        assert_eq!(q.entries, [[2, 7, 4], [3, 6, 0], [3, 0, 1]]);
        let g = build_family(&fam.family_spec().unwrap());
        let realised = equitable_quotient(&g, &fam.blocks().unwrap()).unwrap();
        let as_i64: Vec<Vec<i64>> = realised
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect();
        assert_eq!(
            as_i64,
            q.entries.iter().map(|r| r.to_vec()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn realised_families_are_equitable() {
        for n in 6..=24 {
            for s in 2..=5 {
                for delta in 2..=6 {
                    for fam in [
                        QuotientFamily::LargeCore { n, s },
                        QuotientFamily::Extremal { n, delta },
                        QuotientFamily::SmallCore { n, s, delta },
                    ] {
                        let Ok(q) = quotient_matrix(fam) else {
                            continue;
                        };
                        let g = build_family(&fam.family_spec().unwrap());
                        let realised =
                            equitable_quotient(&g, &fam.blocks().unwrap()).expect("equitable");
                        for (r, row) in realised.iter().enumerate() {
                            for (c, &v) in row.iter().enumerate() {
                                assert_eq!(v as i64, q.entries[r][c], "{fam:?}");
                            }
                        }
                        let p = char_poly(&q);
                        for x in [-2i128, 0, 5, 11] {
                            assert_eq!(
                                p.eval_exact(Rational::from_integer(x)).to_integer(),
                                det_x_minus(&q.entries, x as i64) as i128
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_blocks_rejected() {
        assert!(quotient_matrix(QuotientFamily::Extremal { n: 8, delta: 1 }).is_err());
        assert!(quotient_matrix(QuotientFamily::LargeCore { n: 5, s: 3 }).is_err());
        assert!(quotient_matrix(QuotientFamily::SmallCore {
            n: 14,
            s: 1,
            delta: 4
        })
        .is_err());
        assert!(quotient_matrix(QuotientFamily::SmallCore {
            n: 6,
            s: 3,
            delta: 4
        })
        .is_err());
    }

    #[test]
    fn zero_matrix() {
        let q = QuotientMatrix3 {
            entries: [[0; 3]; 3],
            block_sizes: [1, 1, 1],
        };
        assert_eq!(char_poly(&q), CubicPoly::new(0, 0, 0));
        assert!(largest_real_root(&char_poly(&q), -1.0).unwrap().abs() < 1e-12);
    }

    #[test]
    fn roots() {
        let p = CubicPoly::new(-5, -8, 8);
        let r = largest_real_root(&p, 6.0).unwrap();
        assert!(p.eval(6.09) < 0.0 && p.eval(6.10) > 0.0);
        assert!(r > 6.09 && r < 6.10);
        assert!(p.eval(r).abs() < 1e-10);
        let r = largest_real_root(&CubicPoly::new(-6, 11, -6), 0.0).unwrap();
        assert!((r - 3.0).abs() <= 1e-12);
        // one real root with a positive local minimum to its right: x (x² − 10x + 26)
        let r = largest_real_root(&CubicPoly::new(-10, 26, 0), -1.0).unwrap();
        assert!(r.abs() <= 1e-12);
        // double root at the top: (x − 2)²(x + 1)
        let r = largest_real_root(&CubicPoly::new(-3, 0, 4), 0.0).unwrap();
        assert!((r - 2.0).abs() < 1e-6);
        assert!(matches!(
            largest_real_root(&CubicPoly::new(-6, 11, -6), 3.5),
            Err(SpectralError::NoRootAbove { .. })
        ));
    }
}
