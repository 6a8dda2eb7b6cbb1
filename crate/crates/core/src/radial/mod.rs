//! Fourier transforms of radial functions `f(x) = f₀(|x|)` on `ℝⁿ`.
//!
//! The transform is computed three ways: as a cosine transform of the
//! fractional integral
//!
//! ```text
//! I(t) = (2/Γ((n-1)/2)) ∫_t^∞ s f₀(s) (s² - t²)^{(n-3)/2} ds,
//! f̂(x) = 2π^{(n-1)/2} ∫_0^∞ I(t) cos(|x| t) dt,
//! ```
//!
//! as the same integral after `n-1` integrations by parts, and directly
//! through the Bessel kernel as an independent reference.

mod bessel;
mod profiles;

pub use profiles::{read_profile_csv, zero_moment_bump};

use rayon::prelude::*;

use bessel::{gamma_half, ScaledBessel};

use crate::error::{param, Error, Result};
use crate::grid::{DecayClass, Grid, SampledFunction};
use crate::quad;
use crate::scalar::Real;

/// Relative size of `|I^{(k)}|` at either end above which the integrated
/// terms are considered non-vanishing.
pub const BOUNDARY_TOLERANCE: f64 = 1e-6;
/// Below this radius the integrated-by-parts transform defers to the direct one.
pub const IBP_MIN_RADIUS: f64 = 0.1;
/// Relative disagreement between derivatives at spacings `h` and `2h` beyond
/// which a derivative is no longer trusted.
pub const DERIVATIVE_NOISE: f64 = 1e-2;
/// Highest derivative order probed.
const MAX_DERIVATIVE_ORDER: usize = 8;
/// Trapezoid step in `u` for even dimensions, in units of the profile spacing.
const U_STEP: f64 = 2.0;

/// Profile `f₀` sampled on `[0, R]` together with the dimension `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile<T> {
    f0: SampledFunction<T>,
    dim: usize,
}

impl<T: Real> RadialProfile<T> {
    pub fn new(f0: SampledFunction<T>, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(param("dim", "dimension must be at least 1"));
        }
        if f0.grid().a() != T::zero() {
            return Err(Error::InvalidGrid(format!(
                "radial profiles start at 0, got {}",
                f0.grid().a()
            )));
        }
        Ok(Self { f0, dim })
    }

    /// Samples `f` on `n` nodes of `[0, radius]`.
    pub fn from_fn(radius: T, n: usize, dim: usize, f: impl Fn(T) -> T) -> Result<Self> {
        let grid = Grid::new(T::zero(), radius, n)?;
        Self::new(SampledFunction::from_fn(grid, DecayClass::Bounded, f)?, dim)
    }

    pub fn f0(&self) -> &SampledFunction<T> {
        &self.f0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn radius(&self) -> T {
        self.f0.grid().b()
    }

    fn grid(&self) -> &Grid<T> {
        self.f0.grid()
    }

    /// `∫ f` over `ℝⁿ`, i.e. `|S^{n-1}| ∫_0^R f₀(s) s^{n-1} ds`.
    pub fn volume_integral(&self) -> T {
        let n = self.dim;
        let surface = 2.0 * std::f64::consts::PI.powf(n as f64 / 2.0) / gamma_half(n);
        let w: Vec<T> = self
            .grid()
            .points()
            .zip(self.f0.values())
            .map(|(s, &v)| v * s.powi(n as i32 - 1))
            .collect();
        T::lit(surface) * quad::trapezoid(&w, self.grid().spacing())
    }
}

/// `I(t)` on the profile grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalIntegral<T> {
    samples: SampledFunction<T>,
    dim: usize,
    derivative_order_available: usize,
}

impl<T: Real> FractionalIntegral<T> {
    pub fn samples(&self) -> &SampledFunction<T> {
        &self.samples
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of grid derivatives whose refinement noise stays below 1%.
    pub fn derivative_order_available(&self) -> usize {
        self.derivative_order_available
    }

    /// `I^{(k)}` by `k` iterated central differences.
    pub fn derivative(&self, k: usize) -> Vec<T> {
        iterated_derivative(self.samples.values(), self.samples.grid().spacing(), k)
    }
}

/// `∫_0^R |f₀(t)| t^{n-1} (1+t)^{-(n-1)/2} dt` by the trapezoid rule.
pub fn cosa_condition<T: Real>(p: &RadialProfile<T>) -> T {
    let n = p.dim as i32;
    let e = T::lit(0.5 * (n - 1) as f64);
    let w: Vec<T> = p
        .grid()
        .points()
        .zip(p.f0.values())
        .map(|(t, &v)| v.abs() * t.powi(n - 1) / (T::one() + t).powf(e))
        .collect();
    quad::trapezoid(&w, p.grid().spacing())
}

/// `I(t)` at every profile node.
///
/// Odd `n`: the weight `(s²-t²)^{(n-3)/2}` is a polynomial and the integral
/// is a trapezoid sum over nodes `s >= t`. Even `n`: with `s = √(t²+u²)` the
/// integral becomes `(2/Γ((n-1)/2)) ∫ f₀(√(t²+u²)) u^{n-2} du` over the
/// support, integrated by the trapezoid rule in `u` with `f₀` interpolated
/// by cubics.
pub fn fractional_integral<T: Real>(p: &RadialProfile<T>) -> Result<FractionalIntegral<T>> {
    let n = p.dim;
    if n < 2 {
        return Err(param(
            "dim",
            "the fractional integral needs n >= 2; use radial_ft_leray for n = 1",
        ));
    }
    let values = if n % 2 == 1 {
        odd_dimension(p)
    } else {
        even_dimension(p)
    };
    let samples = SampledFunction::from_parts(*p.grid(), values, DecayClass::Bounded);
    let derivative_order_available =
        trusted_derivatives(samples.values(), samples.grid().spacing());
    Ok(FractionalIntegral {
        samples,
        dim: n,
        derivative_order_available,
    })
}

/// Index range `[lo, hi]` covering the nonzero samples plus one node each side.
fn support<T: Real>(v: &[T]) -> Option<(usize, usize)> {
    let first = v.iter().position(|x| *x != T::zero())?;
    let last = v.iter().rposition(|x| *x != T::zero())?;
    Some((first.saturating_sub(1), (last + 1).min(v.len() - 1)))
}

fn odd_dimension<T: Real>(p: &RadialProfile<T>) -> Vec<T> {
    let g = p.grid();
    let h = g.spacing();
    let v = p.f0.values();
    let len = v.len();
    let k = (p.dim as i32 - 3) / 2;
    let c = T::lit(2.0 / gamma_half(p.dim - 1));
    let Some((_, hi)) = support(v) else {
        return vec![T::zero(); len];
    };
    if k == 0 {
        let w: Vec<T> = g.points().zip(v).map(|(s, &f)| s * f).collect();
        return quad::cumulative_from_right(&w, h)
            .into_iter()
            .map(|x| c * x)
            .collect();
    }
    (0..len)
        .into_par_iter()
        .map(|i| {
            if i >= hi {
                return T::zero();
            }
            let t = g.point(i);
            let w: Vec<T> = (i..=hi)
                .map(|j| {
                    let s = g.point(j);
                    s * v[j] * (s * s - t * t).powi(k)
                })
                .collect();
            c * quad::trapezoid(&w, h)
        })
        .collect()
}

fn even_dimension<T: Real>(p: &RadialProfile<T>) -> Vec<T> {
    let g = p.grid();
    let h = g.spacing();
    let v = p.f0.values();
    let len = v.len();
    let Some((lo, hi)) = support(v) else {
        return vec![T::zero(); len];
    };
    let (s_lo, s_hi) = (g.point(lo), g.point(hi));
    let power = p.dim as i32 - 2;
    let c = T::lit(2.0 / gamma_half(p.dim - 1));
    (0..len)
        .into_par_iter()
        .map(|i| {
            let t = g.point(i);
            if t >= s_hi {
                return T::zero();
            }
            let u0 = (s_lo * s_lo - t * t).max(T::zero()).sqrt();
            let u1 = (s_hi * s_hi - t * t).sqrt();
            if !(u1 > u0) {
                return T::zero();
            }
            let cells = ((u1 - u0) / (h * T::lit(U_STEP)))
                .ceil()
                .to_usize()
                .unwrap_or(2)
                .max(2);
            let du = (u1 - u0) / T::from_index(cells);
            let w: Vec<T> = (0..=cells)
                .map(|j| {
                    let u = if j == cells {
                        u1
                    } else {
                        u0 + du * T::from_index(j)
                    };
                    let s = (t * t + u * u).sqrt().min(s_hi);
                    quad::interp_cubic(v, T::zero(), h, s) * u.powi(power)
                })
                .collect();
            c * quad::trapezoid(&w, du)
        })
        .collect()
}

fn iterated_derivative<T: Real>(values: &[T], h: T, k: usize) -> Vec<T> {
    let mut cur = values.to_vec();
    for _ in 0..k {
        cur = central_difference(&cur, h);
    }
    cur
}

fn central_difference<T: Real>(v: &[T], h: T) -> Vec<T> {
    let n = v.len();
    if n < 3 {
        return vec![T::zero(); n];
    }
    let mut d = Vec::with_capacity(n);
    d.push((v[1] - v[0]) / h);
    let two_h = T::two() * h;
    d.extend(v.windows(3).map(|w| (w[2] - w[0]) / two_h));
    d.push((v[n - 1] - v[n - 2]) / h);
    d
}

/// Largest `k` such that every order up to `k` agrees between spacings `h`
/// and `2h` to within `DERIVATIVE_NOISE` of its own scale, away from the ends.
fn trusted_derivatives<T: Real>(values: &[T], h: T) -> usize {
    let coarse: Vec<T> = values.iter().step_by(2).copied().collect();
    let mut fine_d = values.to_vec();
    let mut coarse_d = coarse;
    for k in 1..=MAX_DERIVATIVE_ORDER {
        fine_d = central_difference(&fine_d, h);
        coarse_d = central_difference(&coarse_d, T::two() * h);
        let margin = 2 * k + 1;
        if coarse_d.len() <= 2 * margin + 1 {
            return k - 1;
        }
        let scale = fine_d.iter().fold(T::zero(), |m, x| m.max(x.abs()));
        let mut worst = T::zero();
        for j in margin..coarse_d.len() - margin {
            worst = worst.max((coarse_d[j] - fine_d[2 * j]).abs());
        }
        if worst > T::lit(DERIVATIVE_NOISE) * scale {
            return k - 1;
        }
    }
    MAX_DERIVATIVE_ORDER
}

fn check_radii<T: Real>(radii: &[T]) -> Result<()> {
    if radii.is_empty() {
        return Err(param("radii", "need at least one radius"));
    }
    if let Some(r) = radii.iter().find(|r| !(**r >= T::zero()) || !r.is_finite()) {
        return Err(param(
            "radii",
            format!("radii must be finite and >= 0, got {r}"),
        ));
    }
    Ok(())
}

fn cosine_transform<T: Real>(g: &Grid<T>, values: &[T], r: T, phase: T) -> T {
    let w: Vec<T> = g
        .points()
        .zip(values)
        .map(|(t, &v)| v * (phase - r * t).cos())
        .collect();
    quad::trapezoid(&w, g.spacing())
}

/// `f̂` at each radius from the cosine transform of `I`; for `n = 1` the even
/// extension `2 ∫ f₀(t) cos(rt) dt`.
pub fn radial_ft_leray<T: Real>(p: &RadialProfile<T>, radii: &[T]) -> Result<Vec<T>> {
    check_radii(radii)?;
    if p.dim == 1 {
        let v = p.f0.values();
        return Ok(radii
            .par_iter()
            .map(|&r| T::two() * cosine_transform(p.grid(), v, r, T::zero()))
            .collect());
    }
    let fi = fractional_integral(p)?;
    radial_ft_leray_with(&fi, radii)
}

/// [`radial_ft_leray`] from a precomputed fractional integral.
pub fn radial_ft_leray_with<T: Real>(fi: &FractionalIntegral<T>, radii: &[T]) -> Result<Vec<T>> {
    check_radii(radii)?;
    Ok(leray_from(fi, radii))
}

fn leray_prefactor(n: usize) -> f64 {
    2.0 * std::f64::consts::PI.powf(0.5 * (n as f64 - 1.0))
}

fn leray_from<T: Real>(fi: &FractionalIntegral<T>, radii: &[T]) -> Vec<T> {
    let c = T::lit(leray_prefactor(fi.dim));
    let g = fi.samples.grid();
    let v = fi.samples.values();
    radii
        .par_iter()
        .map(|&r| c * cosine_transform(g, v, r, T::zero()))
        .collect()
}

/// `f̂(r) = 2π^{(n-1)/2} (-1)^{n-1} r^{1-n} ∫ I^{(n-1)}(t) cos(π(n-1)/2 - rt) dt`.
///
/// Needs `n - 1` trusted derivatives of `I` and `|I^{(k)}| <= 1e-6·sup|I^{(k)}|`
/// at both ends for `k < n - 1`, so that the integrated terms vanish. Radii
/// below [`IBP_MIN_RADIUS`] fall back to [`radial_ft_leray`]; for `n = 1` the
/// two coincide.
pub fn radial_ft_ibp<T: Real>(p: &RadialProfile<T>, radii: &[T]) -> Result<Vec<T>> {
    check_radii(radii)?;
    if p.dim == 1 {
        return radial_ft_leray(p, radii);
    }
    radial_ft_ibp_with(&fractional_integral(p)?, radii)
}

/// [`radial_ft_ibp`] from a precomputed fractional integral (`n >= 2`).
pub fn radial_ft_ibp_with<T: Real>(fi: &FractionalIntegral<T>, radii: &[T]) -> Result<Vec<T>> {
    check_radii(radii)?;
    let dim = fi.dim;
    let order = dim - 1;
    if fi.derivative_order_available < order {
        return Err(Error::DerivativeBudget {
            available: fi.derivative_order_available,
            needed: order,
        });
    }
    let mut deriv = fi.samples.values().to_vec();
    let h = fi.samples.grid().spacing();
    for k in 0..order {
        let scale = deriv.iter().fold(T::zero(), |m, x| m.max(x.abs()));
        let limit = T::lit(BOUNDARY_TOLERANCE) * scale;
        let ends = deriv[0].abs().max(deriv[deriv.len() - 1].abs());
        if ends > limit {
            return Err(Error::BoundaryTerms {
                k,
                value: ends.to_f64_lossy(),
                limit: limit.to_f64_lossy(),
            });
        }
        deriv = central_difference(&deriv, h);
    }

    let sign = if order.is_multiple_of(2) { 1.0 } else { -1.0 };
    let c = T::lit(sign * leray_prefactor(dim));
    let phase = T::lit(0.5 * std::f64::consts::PI * order as f64);
    let small = T::lit(IBP_MIN_RADIUS);
    let g = fi.samples.grid();
    let direct = leray_from(fi, radii);
    Ok(radii
        .par_iter()
        .zip(direct)
        .map(|(&r, d)| {
            if r < small {
                d
            } else {
                c * r.powi(1 - dim as i32) * cosine_transform(g, &deriv, r, phase)
            }
        })
        .collect())
}

/// `f̂(r) = (2π)^{n/2} r^{1-n/2} ∫ f₀(s) J_{n/2-1}(rs) s^{n/2} ds`, with the
/// Bessel function from its power series, its integral representation
/// (integer order) or the elementary half-integer forms.
pub fn radial_ft_oracle<T: Real>(p: &RadialProfile<T>, radii: &[T]) -> Result<Vec<T>> {
    check_radii(radii)?;
    let n = p.dim;
    let kernel = ScaledBessel::new(n as i32 - 2);
    let c = (2.0 * std::f64::consts::PI).powf(0.5 * n as f64);
    let g = p.grid();
    let h = g.spacing().to_f64_lossy();
    let last = p.f0.len() - 1;
    let terms: Vec<(f64, f64)> =
        p.f0.values()
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != T::zero())
            .map(|(j, &v)| {
                let s = g.point(j).to_f64_lossy();
                let w = if j == 0 || j == last { 0.5 * h } else { h };
                (s, w * v.to_f64_lossy() * s.powi(n as i32 - 1))
            })
            .collect();
    Ok(radii
        .par_iter()
        .map(|&r| {
            let r = r.to_f64_lossy();
            let sum: f64 = terms.iter().map(|&(s, w)| w * kernel.eval(r * s)).sum();
            T::lit(c * sum)
        })
        .collect())
}
