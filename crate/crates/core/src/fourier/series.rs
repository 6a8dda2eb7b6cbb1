use num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{param, Error, Result};
use crate::grid::SampledFunction;
use crate::hilbert::{check_periodic, periodic_conjugate};
use crate::scalar::Real;

/// Coefficients `c_{-kmax..=kmax}` and the partial sums `Σ_{|k|<=K} |c_k|`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficients<T> {
    kmax: usize,
    coeffs: Vec<Complex<T>>,
    abs_partial_sums: Vec<T>,
}

impl<T: Real> FourierCoefficients<T> {
    pub fn kmax(&self) -> usize {
        self.kmax
    }

    /// `c_k` for `|k| <= kmax`.
    pub fn coeff(&self, k: i64) -> Complex<T> {
        let idx = k + self.kmax as i64;
        assert!(
            idx >= 0 && (idx as usize) < self.coeffs.len(),
            "coefficient index {k} outside ±{}",
            self.kmax
        );
        self.coeffs[idx as usize]
    }

    /// All coefficients in order `k = -kmax, …, kmax`.
    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Entry `K` holds `Σ_{|k|<=K} |c_k|`, for `K = 0..=kmax`.
    pub fn abs_partial_sums(&self) -> &[T] {
        &self.abs_partial_sums
    }
}

/// Trapezoid coefficients over one period, computed by a single FFT of the
/// `N` distinct samples. Exact for trigonometric polynomials of degree below
/// `N/2`; larger `kmax` would alias and is rejected.
pub fn fourier_coefficients<T: Real>(
    f: &SampledFunction<T>,
    kmax: usize,
) -> Result<FourierCoefficients<T>> {
    let nd = check_periodic(f, "fourier_coefficients")?;
    if kmax == 0 {
        return Err(param("kmax", "must be positive"));
    }
    if 2 * kmax >= nd {
        return Err(Error::Aliasing { kmax, half: nd / 2 });
    }
    let mut buf: Vec<Complex<T>> = f.values()[..nd]
        .iter()
        .map(|&v| Complex::new(v, T::zero()))
        .collect();
    FftPlanner::new().plan_fft_forward(nd).process(&mut buf);

    let a = f.grid().a();
    let inv = T::one() / T::from_index(nd);
    let coeff = |k: i64| {
        let bin = k.rem_euclid(nd as i64) as usize;
        let shift = Complex::from_polar(T::one(), -(T::lit(k as f64) * a));
        buf[bin] * shift * inv
    };
    let k = kmax as i64;
    let coeffs: Vec<Complex<T>> = (-k..=k).map(coeff).collect();

    let mut abs_partial_sums = Vec::with_capacity(kmax + 1);
    let mut acc = coeffs[kmax].norm();
    abs_partial_sums.push(acc);
    for j in 1..=kmax {
        acc += coeffs[kmax + j].norm() + coeffs[kmax - j].norm();
        abs_partial_sums.push(acc);
    }
    Ok(FourierCoefficients {
        kmax,
        coeffs,
        abs_partial_sums,
    })
}

/// `max_{1<=|k|<=kmax} | |c̃_k| - |c_k| |` where `c̃` are the coefficients of
/// the periodic conjugate.
pub fn conjugate_coefficient_check<T: Real>(f: &SampledFunction<T>, kmax: usize) -> Result<T> {
    let c = fourier_coefficients(f, kmax)?;
    let ct = fourier_coefficients(&periodic_conjugate(f)?, kmax)?;
    let k = kmax as i64;
    Ok((1..=k)
        .flat_map(|j| [j, -j])
        .map(|j| (ct.coeff(j).norm() - c.coeff(j).norm()).abs())
        .fold(T::zero(), T::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{DecayClass, Grid};
    use std::f64::consts::PI;

    fn periodic(n: usize, f: impl Fn(f64) -> f64) -> SampledFunction<f64> {
        let g = Grid::new(-PI, PI, n).unwrap();
        let mut v: Vec<f64> = g.points().map(&f).collect();
        v[n - 1] = v[0];
        SampledFunction::new(g, v, DecayClass::Periodic).unwrap()
    }

    #[test]
    fn cosine_coefficients() {
        let f = periodic(257, |x| (3.0 * x).cos());
        let c = fourier_coefficients(&f, 20).unwrap();
        for k in -20i64..=20 {
            let want = if k.abs() == 3 { 0.5 } else { 0.0 };
            assert!(
                (c.coeff(k) - Complex::new(want, 0.0)).norm() < 1e-12,
                "k={k}"
            );
        }
    }

    #[test]
    fn constant_coefficients() {
        let f = periodic(65, |_| 1.0);
        let c = fourier_coefficients(&f, 10).unwrap();
        assert!((c.coeff(0).re - 1.0).abs() < 1e-15);
        assert!(c.abs_partial_sums().iter().all(|s| (s - 1.0).abs() < 1e-14));
        assert!(conjugate_coefficient_check(&f, 10).unwrap() < 1e-15);
    }

    #[test]
    fn aliasing_rejected() {
        let f = periodic(65, |x| x.sin());
        assert!(matches!(
            fourier_coefficients(&f, 32),
            Err(Error::Aliasing { .. })
        ));
        assert!(fourier_coefficients(&f, 31).is_ok());
    }

    #[test]
    fn conjugate_pair_moduli() {
        let f = periodic(513, |x| (7.0 * x).cos());
        assert!(conjugate_coefficient_check(&f, 100).unwrap() < 1e-10);
    }
}
