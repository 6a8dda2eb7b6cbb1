//! Conjugation operators: the principal-value Hilbert transform on the line,
//! its frequency-multiplier counterpart, the modified transform for bounded
//! functions and the periodic conjugate function.
//!
//! All line transforms use the normalisation
//!
//! ```text
//! Hf(x) = (1/π) lim_{δ↓0} ∫_δ^∞ (f(x-u) - f(x+u)) du/u
//! ```
//!
//! so that the Poisson kernel `a/(π(a²+x²))` maps to `x/(π(a²+x²))`.

mod kernel;
mod multiplier;
mod periodic;
mod pv;
mod tail;

pub use kernel::{kernel_difference, KernelDifference, POLE_WARNING_DISTANCE};
pub use multiplier::{hilbert_multiplier, MULTIPLIER_SIGN};
pub(crate) use periodic::check_periodic;
pub use periodic::{periodic_conjugate, periodic_conjugate_multiplier};
pub use pv::{hilbert_pv, modified_hilbert};
pub use tail::{PowerTail, TailModel};

use crate::error::{Error, Result};
use crate::grid::{DecayClass, SampledFunction};
use crate::scalar::Real;

/// Quadrature settings for the singular integrals.
///
/// The `u`-integral is discretised by the midpoint rule on panels of width
/// `2·delta_min`, i.e. nodes `u_j = (2j+1)·delta_min`; the singular point
/// `u = 0` is never sampled. `delta_min = h/2` puts the nodes on cell
/// midpoints (cubic interpolation), `delta_min = h` on odd grid offsets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PvConfig<T> {
    pub delta_min: Option<T>,
    pub tail: TailModel,
}

impl<T: Real> Default for PvConfig<T> {
    fn default() -> Self {
        Self {
            delta_min: None,
            tail: TailModel::Extrapolate,
        }
    }
}

impl<T: Real> PvConfig<T> {
    pub fn with_delta(delta: T) -> Self {
        Self {
            delta_min: Some(delta),
            ..Self::default()
        }
    }

    pub fn truncated() -> Self {
        Self {
            tail: TailModel::Truncate,
            ..Self::default()
        }
    }

    /// Resolves the default and checks `0 < δ ≤ h`.
    pub fn resolve_delta(&self, h: T) -> Result<T> {
        let d = self.delta_min.unwrap_or(h * T::half());
        let slack = T::one() + T::lit(1e-12);
        if !(d > T::zero()) || d > h * slack {
            return Err(Error::InvalidParameter {
                name: "delta_min",
                reason: format!("must satisfy 0 < delta_min <= h = {h}, got {d}"),
            });
        }
        Ok(d)
    }
}

fn require_vanishing<T: Real>(f: &SampledFunction<T>, op: &'static str) -> Result<()> {
    match f.decay() {
        DecayClass::CompactSupport | DecayClass::VanishingAtInfinity => Ok(()),
        DecayClass::Periodic => Err(Error::WrongDecayClass {
            op,
            decay: f.decay().to_string(),
            hint: "use periodic_conjugate",
        }),
        DecayClass::Bounded => Err(Error::WrongDecayClass {
            op,
            decay: f.decay().to_string(),
            hint: "use modified_hilbert",
        }),
    }
}
