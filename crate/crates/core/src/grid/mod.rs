//! Uniform grids, sampled functions and the analytic test corpus.

mod csv;
mod estimators;
mod family;
mod sampled;

pub use self::csv::{read_samples_csv, read_samples_csv_from};
pub use estimators::{derivative, lebesgue_point_defect, total_variation};
pub use family::{sample, Family, FamilySpec};
pub use sampled::{DecayClass, SampledFunction};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Closed interval `[a, b]` split into `n` equispaced nodes, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid<T> {
    a: T,
    b: T,
    n: usize,
    h: T,
}

impl<T: Real> Grid<T> {
    pub fn new(a: T, b: T, n: usize) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "endpoints must be finite (a = {a}, b = {b})"
            )));
        }
        if a >= b {
            return Err(Error::InvalidGrid(format!(
                "need a < b, got a = {a}, b = {b}"
            )));
        }
        if n < 2 {
            return Err(Error::InvalidGrid(format!("need n >= 2, got {n}")));
        }
        let h = (b - a) / T::from_index(n - 1);
        if !(h > T::zero()) {
            return Err(Error::InvalidGrid("spacing underflows to zero".into()));
        }
        Ok(Self { a, b, n, h })
    }

    #[inline]
    pub fn a(&self) -> T {
        self.a
    }

    #[inline]
    pub fn b(&self) -> T {
        self.b
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn spacing(&self) -> T {
        self.h
    }

    #[inline]
    pub fn span(&self) -> T {
        self.b - self.a
    }

    /// Node `i`; the last node is `b` exactly.
    #[inline]
    pub fn point(&self, i: usize) -> T {
        if i + 1 == self.n {
            self.b
        } else {
            self.a + T::from_index(i) * self.h
        }
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = T> + '_ {
        (0..self.n).map(move |i| self.point(i))
    }

    pub fn contains(&self, x: T) -> bool {
        x >= self.a && x <= self.b
    }

    /// Index of the node nearest to `x`, clamped to the grid.
    pub fn nearest_index(&self, x: T) -> usize {
        let r = ((x - self.a) / self.h).round();
        if r <= T::zero() {
            0
        } else {
            r.to_usize().unwrap_or(usize::MAX).min(self.n - 1)
        }
    }

    /// Same interval with `2n - 1` nodes, so every old node is kept.
    pub fn refined(&self) -> Self {
        Self::new(self.a, self.b, 2 * self.n - 1).expect("refining a valid grid")
    }
}

/// Build a uniform grid on `[a, b]` with `n` nodes.
pub fn make_uniform_grid<T: Real>(a: T, b: T, n: usize) -> Result<Grid<T>> {
    Grid::new(a, b, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_grid() {
        let g = make_uniform_grid(0.0f64, 1.0, 2).unwrap();
        assert_eq!(g.points().collect::<Vec<_>>(), vec![0.0, 1.0]);
        assert_eq!(g.spacing(), 1.0);
    }

    #[test]
    fn five_point_grid() {
        let g = make_uniform_grid(-1.0f64, 1.0, 5).unwrap();
        assert_eq!(
            g.points().collect::<Vec<_>>(),
            vec![-1.0, -0.5, 0.0, 0.5, 1.0]
        );
    }

    #[test]
    fn default_rig_spacing() {
        let g = make_uniform_grid(-50.0f64, 50.0, 1 << 14).unwrap();
        assert_eq!(g.spacing(), 100.0 / 16383.0);
        assert_eq!(g.point(g.len() - 1), 50.0);
        assert!((g.spacing() * 16383.0 - 100.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(make_uniform_grid(1.0f64, 1.0, 4).is_err());
        assert!(make_uniform_grid(2.0f64, 1.0, 4).is_err());
        assert!(make_uniform_grid(0.0f64, 1.0, 1).is_err());
        assert!(make_uniform_grid(f64::NAN, 1.0, 4).is_err());
        assert!(make_uniform_grid(0.0f64, f64::INFINITY, 4).is_err());
    }

    #[test]
    fn single_precision_grid() {
        let g = make_uniform_grid(-1.0f32, 1.0, 3).unwrap();
        assert_eq!(g.point(1), 0.0);
    }

    #[test]
    fn refinement_keeps_nodes() {
        let g = make_uniform_grid(-2.0f64, 2.0, 9).unwrap();
        let r = g.refined();
        for i in 0..g.len() {
            assert!((g.point(i) - r.point(2 * i)).abs() < 1e-15);
        }
    }
}
