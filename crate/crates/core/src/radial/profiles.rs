use std::path::Path;

use super::RadialProfile;
use crate::error::{param, Result};
use crate::grid::{read_samples_csv, DecayClass};
use crate::scalar::Real;

/// Smooth profile on `[0, radius]` whose fractional integral vanishes with
/// all its derivatives at both ends.
///
/// `f₀(s) = s^{2-n} b'(s)` with `b(s) = (1 - y²)^6`, `y = (s - center)/half_width`,
/// so `∫ f₀(s) s^{n-2} ds = 0` and `f₀` is supported in
/// `[center - half_width, center + half_width]`, which must lie inside `(0, radius)`.
pub fn zero_moment_bump<T: Real>(
    dim: usize,
    center: f64,
    half_width: f64,
    radius: f64,
    n: usize,
) -> Result<RadialProfile<T>> {
    if !(half_width > 0.0) || center - half_width <= 0.0 || center + half_width >= radius {
        return Err(param(
            "bump",
            format!(
                "support [{}, {}] must lie inside (0, {radius})",
                center - half_width,
                center + half_width
            ),
        ));
    }
    let power = 2 - dim as i32;
    RadialProfile::from_fn(T::lit(radius), n, dim, |s: T| {
        let s = s.to_f64_lossy();
        let y = (s - center) / half_width;
        if y.abs() >= 1.0 {
            return T::zero();
        }
        let db = -12.0 * y * (1.0 - y * y).powi(5) / half_width;
        T::lit(s.powi(power) * db)
    })
}

/// Reads an `s,f0` CSV whose first abscissa is 0.
pub fn read_profile_csv<T: Real>(path: impl AsRef<Path>, dim: usize) -> Result<RadialProfile<T>> {
    let f0 = read_samples_csv(path, DecayClass::Bounded)?;
    RadialProfile::new(f0, dim)
}
