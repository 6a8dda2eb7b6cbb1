//! Numerical verification toolkit for conjugate functions, the Hilbert
//! transform and Fourier transforms of functions of bounded variation.
//!
//! Every operation is generic over the floating-point type through
//! [`scalar::Real`]; the aliases below fix it to `f64` (the default
//! precision for verification) or `f32`.
//!
//! ```
//! use bvf_core::hilbert::{hilbert_pv, PvConfig};
//! use bvf_core::{Family, FamilySpec, Grid64};
//!
//! let grid = Grid64::new(-50.0, 50.0, 1 << 12)?;
//! let f = FamilySpec::new(Family::PoissonKernel).sample(&grid)?;
//! let hf = hilbert_pv(&f, &PvConfig::default())?;
//! let x = grid.point(2500);
//! let exact = x / (std::f64::consts::PI * (1.0 + x * x));
//! assert!((hf.values()[2500] - exact).abs() < 1e-6);
//! # Ok::<(), bvf_core::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fourier;
pub mod grid;
pub mod hilbert;
pub mod quad;
pub mod radial;
pub mod report;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{DecayClass, Family, FamilySpec, Grid, SampledFunction};
pub use report::VerificationReport;
pub use scalar::Real;

pub type Grid64 = grid::Grid<f64>;
pub type Grid32 = grid::Grid<f32>;
pub type Sampled64 = grid::SampledFunction<f64>;
pub type Sampled32 = grid::SampledFunction<f32>;
pub type Transform64 = fourier::TransformResult<f64>;
pub type Transform32 = fourier::TransformResult<f32>;
pub type Profile64 = radial::RadialProfile<f64>;
pub type Profile32 = radial::RadialProfile<f32>;
