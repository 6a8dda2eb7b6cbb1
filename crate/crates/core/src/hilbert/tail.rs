//! Contribution of the region outside the grid to the singular integrals.
//!
//! Beyond each edge the function is modelled as `c·|t|^{-p}`: `p` is fitted
//! from the last samples for `vanishing_at_infinity` inputs and `p = 0`
//! (constant continuation) for `bounded` inputs. Compactly supported inputs
//! have no tail. The tail integral is mapped to `(0, 1]` by `t = B/v`.

use crate::grid::{DecayClass, SampledFunction};
use crate::scalar::Real;

/// How the line integrals treat the region outside the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailModel {
    /// Integrate over the grid only.
    Truncate,
    /// Add the analytic contribution of a fitted power-law (or constant) tail.
    #[default]
    Extrapolate,
}

/// One-sided tail `edge_value·(edge/|t|)^{exponent}` for `|t| > edge`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTail<T> {
    /// Sample value at the grid edge.
    pub edge_value: T,
    pub exponent: T,
    /// `|t|` at the grid edge; always positive.
    pub edge: T,
}

/// Offset, in nodes, of the second sample used by the power-law fit.
const FIT_OFFSET: usize = 4;
/// Fitted exponents below this are treated as "not decaying".
const MIN_EXPONENT: f64 = 0.05;
const TAIL_NODES: usize = 4096;

impl<T: Real> PowerTail<T> {
    /// Fitted left and right tails, or `None` on a side where the model does not apply.
    pub fn fit(f: &SampledFunction<T>) -> (Option<Self>, Option<Self>) {
        let g = f.grid();
        let v = f.values();
        let n = v.len();
        if n <= FIT_OFFSET {
            return (None, None);
        }
        let a = g.a();
        let b = g.b();
        match f.decay() {
            DecayClass::VanishingAtInfinity => {
                let left = if a < T::zero() {
                    Self::power_fit(-a, -g.point(FIT_OFFSET), v[0], v[FIT_OFFSET])
                } else {
                    None
                };
                let right = if b > T::zero() {
                    Self::power_fit(
                        b,
                        g.point(n - 1 - FIT_OFFSET),
                        v[n - 1],
                        v[n - 1 - FIT_OFFSET],
                    )
                } else {
                    None
                };
                (left, right)
            }
            DecayClass::Bounded => {
                let constant = |edge: T, c: T| {
                    (edge > T::zero() && c != T::zero()).then_some(Self {
                        edge_value: c,
                        exponent: T::zero(),
                        edge,
                    })
                };
                (constant(-a, v[0]), constant(b, v[n - 1]))
            }
            _ => (None, None),
        }
    }

    fn power_fit(edge: T, inner: T, f_edge: T, f_inner: T) -> Option<Self> {
        if !(inner > T::zero()) || f_edge == T::zero() || f_edge * f_inner <= T::zero() {
            return None;
        }
        let p = (f_inner / f_edge).ln() / (edge / inner).ln();
        if !p.is_finite() || p < T::lit(MIN_EXPONENT) {
            return None;
        }
        Some(Self {
            edge_value: f_edge,
            exponent: p,
            edge,
        })
    }

    /// `(1/π) ∫_{edge}^∞ c t^{-p} K(x, t) dt` for the right tail, with
    /// `K = 1/(x-t)` or, if `modified`, `K = 1/(x-t) + t/(1+t²)`.
    /// Requires `x < edge`.
    pub fn right_contribution(&self, x: T, modified: bool) -> T {
        self.rule(modified).right(x)
    }

    /// Quadrature nodes in `v` for this tail; reusable across evaluation points.
    pub(crate) fn rule(&self, modified: bool) -> TailRule<T> {
        let bb = self.edge;
        let p = self.exponent;
        // v = y^m removes the v^{p-1} endpoint singularity for small p
        let m = if modified || p >= T::one() {
            1
        } else {
            (T::two() / p).ceil().to_usize().unwrap_or(1).max(1)
        };
        let mf = T::from_index(m);
        let dy = T::one() / T::from_index(TAIL_NODES);
        let scale = self.edge_value * dy / T::PI();
        let (v, w) = (0..TAIL_NODES)
            .map(|j| {
                let y = (T::from_index(j) + T::half()) * dy;
                let v = y.powi(m as i32);
                let jac = mf * y.powi(m as i32 - 1);
                let weight = if modified {
                    v.powf(p) * jac / (v * v + bb * bb)
                } else {
                    v.powf(p - T::one()) * jac * bb
                };
                (v, weight * scale)
            })
            .unzip();
        TailRule {
            edge: bb,
            modified,
            v,
            w,
        }
    }

    /// Left-tail counterpart (`t < -edge`), obtained by reflection.
    pub fn left_contribution(&self, x: T, modified: bool) -> T {
        -self.right_contribution(-x, modified)
    }
}

/// Precomputed nodes `v_j` and weights for one tail.
pub(crate) struct TailRule<T> {
    edge: T,
    modified: bool,
    v: Vec<T>,
    w: Vec<T>,
}

impl<T: Real> TailRule<T> {
    pub(crate) fn right(&self, x: T) -> T {
        let bb = self.edge;
        let mut acc = T::zero();
        if self.modified {
            for (&v, &w) in self.v.iter().zip(&self.w) {
                acc += w * (bb * v + bb * bb * x) / (x * v - bb);
            }
        } else {
            for (&v, &w) in self.v.iter().zip(&self.w) {
                acc += w / (x * v - bb);
            }
        }
        acc
    }
}

/// Both fitted tails of one input, ready for repeated evaluation.
pub(crate) struct Tails<T> {
    left: Option<TailRule<T>>,
    right: Option<TailRule<T>>,
}

impl<T: Real> Tails<T> {
    pub(crate) fn fit(f: &SampledFunction<T>, modified: bool) -> Option<Self> {
        let (l, r) = PowerTail::fit(f);
        if l.is_none() && r.is_none() {
            return None;
        }
        Some(Self {
            left: l.map(|t| t.rule(modified)),
            right: r.map(|t| t.rule(modified)),
        })
    }

    pub(crate) fn at(&self, x: T) -> T {
        let l = self.left.as_ref().map_or(T::zero(), |r| -r.right(-x));
        let r = self.right.as_ref().map_or(T::zero(), |r| r.right(x));
        l + r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use std::f64::consts::PI;

    #[test]
    fn steep_decay_does_not_overflow() {
        let g = Grid::<f64>::new(-20.0, 20.0, 4001).unwrap();
        let f = SampledFunction::from_fn(g, DecayClass::VanishingAtInfinity, |x| {
            -x * (-x * x / 2.0).exp()
        })
        .unwrap();
        let (l, r) = PowerTail::fit(&f);
        let r = r.unwrap();
        assert!(r.exponent > 100.0);
        assert!(r.right_contribution(1.0, false).is_finite());
        assert!(l.unwrap().left_contribution(1.0, true).is_finite());
    }

    #[test]
    fn fits_inverse_square() {
        let g = Grid::<f64>::new(-50.0, 50.0, 1000).unwrap();
        let f = SampledFunction::from_fn(g, DecayClass::VanishingAtInfinity, |x| 3.0 / (x * x))
            .unwrap();
        let (l, r) = PowerTail::fit(&f);
        let r = r.unwrap();
        assert!((r.exponent - 2.0).abs() < 1e-12);
        assert!((r.edge_value - 3.0 / 2500.0).abs() < 1e-15);
        assert!((l.unwrap().exponent - 2.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_square_tail_matches_closed_form() {
        // (1/π)∫_B^∞ t^{-2}/(x-t) dt = (1/π)[ 1/(xB) - ln(B/(B-x))/x² ]
        let tail = PowerTail {
            edge_value: 0.01,
            exponent: 2.0,
            edge: 10.0,
        };
        for &x in &[-7.0f64, -1.0, 0.5, 3.0, 8.0] {
            let exact = (1.0 / (x * 10.0) - (10.0 / (10.0 - x)).ln() / (x * x)) / PI;
            let got = tail.right_contribution(x, false);
            assert!(
                (got - exact).abs() < 1e-7 * exact.abs(),
                "{x}: {got} {exact}"
            );
        }
    }

    #[test]
    fn constant_tail_with_modified_kernel() {
        // (1/π)∫_B^∞ [1/(x-t) + t/(1+t²)] dt = (1/π)[ln(B-x) - ½ln(1+B²)]
        let tail = PowerTail {
            edge_value: 1.0,
            exponent: 0.0,
            edge: 20.0,
        };
        for &x in &[-15.0, 0.0, 12.0] {
            let exact = ((20.0f64 - x).ln() - 0.5 * (1.0 + 400.0f64).ln()) / PI;
            let got = tail.right_contribution(x, true);
            assert!((got - exact).abs() < 1e-8, "{x}: {got} {exact}");
        }
    }

    #[test]
    fn compact_support_has_no_tail() {
        let g = Grid::<f64>::new(-2.0, 2.0, 101).unwrap();
        let f = crate::grid::FamilySpec::new(crate::grid::Family::Triangle)
            .sample(&g)
            .unwrap();
        assert_eq!(PowerTail::fit(&f), (None, None));
    }
}
