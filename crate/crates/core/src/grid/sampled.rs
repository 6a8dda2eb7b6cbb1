use std::fmt;
use std::str::FromStr;

use super::Grid;
use crate::error::{Error, Result};
use crate::quad;
use crate::scalar::Real;

/// Caller-declared behaviour of a function outside (and at the edge of) its grid.
///
/// Only the endpoint zeros of `CompactSupport` and the closure of `Periodic`
/// are verified; decay is never inferred from the samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecayClass {
    CompactSupport,
    VanishingAtInfinity,
    Bounded,
    Periodic,
}

impl DecayClass {
    pub fn name(self) -> &'static str {
        match self {
            DecayClass::CompactSupport => "compact_support",
            DecayClass::VanishingAtInfinity => "vanishing_at_infinity",
            DecayClass::Bounded => "bounded",
            DecayClass::Periodic => "periodic",
        }
    }

    /// `true` for the two classes whose Hilbert transform exists as an L¹ singular integral.
    pub fn is_vanishing(self) -> bool {
        matches!(
            self,
            DecayClass::CompactSupport | DecayClass::VanishingAtInfinity
        )
    }
}

impl fmt::Display for DecayClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DecayClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "compact_support" | "compact" => Ok(DecayClass::CompactSupport),
            "vanishing_at_infinity" | "vanishing" => Ok(DecayClass::VanishingAtInfinity),
            "bounded" => Ok(DecayClass::Bounded),
            "periodic" => Ok(DecayClass::Periodic),
            other => Err(Error::InvalidParameter {
                name: "decay_class",
                reason: format!("unknown decay class `{other}`"),
            }),
        }
    }
}

const EDGE_ZERO_REL: f64 = 1e-12;
const PERIOD_CLOSURE: f64 = 1e-12;

/// Real samples on a uniform grid, tagged with a decay class.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction<T> {
    grid: Grid<T>,
    values: Vec<T>,
    decay: DecayClass,
}

impl<T: Real> SampledFunction<T> {
    pub fn new(grid: Grid<T>, values: Vec<T>, decay: DecayClass) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidSamples(format!(
                "{} values for a grid of {} nodes",
                values.len(),
                grid.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidSamples(format!(
                "non-finite value at node {i}"
            )));
        }
        let scale = values.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        let first = values[0];
        let last = values[values.len() - 1];
        match decay {
            DecayClass::CompactSupport => {
                let tol = T::lit(EDGE_ZERO_REL) * scale;
                if first.abs() > tol || last.abs() > tol {
                    return Err(Error::InvalidSamples(format!(
                        "compact_support needs zero endpoint values, got {first} and {last}"
                    )));
                }
            }
            DecayClass::Periodic
                if (first - last).abs() > T::lit(PERIOD_CLOSURE) * T::one().max(scale) =>
            {
                return Err(Error::InvalidSamples(format!(
                    "periodic samples must close over the grid: first {first}, last {last}"
                )));
            }
            _ => {}
        }
        Ok(Self {
            grid,
            values,
            decay,
        })
    }

    pub fn from_fn(grid: Grid<T>, decay: DecayClass, f: impl Fn(T) -> T) -> Result<Self> {
        let values = grid.points().map(f).collect();
        Self::new(grid, values, decay)
    }

    pub fn zeros(grid: Grid<T>, decay: DecayClass) -> Self {
        Self {
            grid,
            values: vec![T::zero(); grid.len()],
            decay,
        }
    }

    /// Skips validation; used for transform outputs whose shape is known good.
    pub(crate) fn from_parts(grid: Grid<T>, values: Vec<T>, decay: DecayClass) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        Self {
            grid,
            values,
            decay,
        }
    }

    #[inline]
    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    #[inline]
    pub fn values(&self) -> &[T] {
        &self.values
    }

    #[inline]
    pub fn decay(&self) -> DecayClass {
        self.decay
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn with_decay(mut self, decay: DecayClass) -> Result<Self> {
        let values = std::mem::take(&mut self.values);
        Self::new(self.grid, values, decay)
    }

    /// Piecewise-linear interpolant, zero outside the grid.
    pub fn eval_linear(&self, x: T) -> T {
        quad::interp_linear(&self.values, self.grid.a(), self.grid.spacing(), x)
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self::from_parts(
            self.grid,
            self.values.iter().map(|&v| f(v)).collect(),
            self.decay,
        )
    }

    /// Pointwise `self + other` on the same grid; the decay class of `self` is kept.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_grid(other)?;
        Ok(Self::from_parts(
            self.grid,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(&x, &y)| x + y)
                .collect(),
            self.decay,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_grid(other)?;
        Ok(Self::from_parts(
            self.grid,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(&x, &y)| x - y)
                .collect(),
            self.decay,
        ))
    }

    pub fn scale(&self, c: T) -> Self {
        self.map(|v| c * v)
    }

    /// Trapezoid integral over the grid.
    pub fn integral(&self) -> T {
        quad::trapezoid(&self.values, self.grid.spacing())
    }

    /// Trapezoid integral of `|f|`.
    pub fn l1_norm(&self) -> T {
        quad::trapezoid_abs(&self.values, self.grid.spacing())
    }

    pub fn sup_norm(&self) -> T {
        self.values.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    pub(crate) fn check_same_grid(&self, other: &Self) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::InvalidSamples(
                "operands live on different grids".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid<f64> {
        Grid::<f64>::new(-1.0, 1.0, 5).unwrap()
    }

    #[test]
    fn length_mismatch_rejected() {
        let e = SampledFunction::new(grid(), vec![0.0; 4], DecayClass::Bounded);
        assert!(matches!(e, Err(Error::InvalidSamples(_))));
    }

    #[test]
    fn non_finite_rejected() {
        let e = SampledFunction::new(
            grid(),
            vec![0.0, 1.0, f64::NAN, 1.0, 0.0],
            DecayClass::Bounded,
        );
        assert!(e.is_err());
    }

    #[test]
    fn compact_support_needs_zero_edges() {
        assert!(SampledFunction::new(
            grid(),
            vec![0.0, 1.0, 1.0, 1.0, 0.0],
            DecayClass::CompactSupport
        )
        .is_ok());
        assert!(SampledFunction::new(
            grid(),
            vec![1.0, 1.0, 1.0, 1.0, 0.0],
            DecayClass::CompactSupport
        )
        .is_err());
    }

    #[test]
    fn periodic_needs_closure() {
        assert!(
            SampledFunction::new(grid(), vec![1.0, 0.0, -1.0, 0.0, 1.0], DecayClass::Periodic)
                .is_ok()
        );
        assert!(
            SampledFunction::new(grid(), vec![1.0, 0.0, -1.0, 0.0, 0.5], DecayClass::Periodic)
                .is_err()
        );
    }

    #[test]
    fn decay_class_round_trips_through_names() {
        for d in [
            DecayClass::CompactSupport,
            DecayClass::VanishingAtInfinity,
            DecayClass::Bounded,
            DecayClass::Periodic,
        ] {
            assert_eq!(d.name().parse::<DecayClass>().unwrap(), d);
        }
        assert!("sometimes".parse::<DecayClass>().is_err());
    }

    #[test]
    fn linear_eval_is_zero_outside() {
        let f = SampledFunction::from_fn(grid(), DecayClass::Bounded, |x| x).unwrap();
        assert_eq!(f.eval_linear(0.25), 0.25);
        assert_eq!(f.eval_linear(2.0), 0.0);
    }
}
