use num_complex::Complex;
use rayon::prelude::*;
use rustfft::FftPlanner;

use super::MULTIPLIER_SIGN;
use crate::error::{Error, Result};
use crate::grid::{DecayClass, SampledFunction};
use crate::scalar::Real;

const PERIOD_REL_TOL: f64 = 1e-12;

pub(crate) fn check_periodic<T: Real>(f: &SampledFunction<T>, op: &'static str) -> Result<usize> {
    if f.decay() != DecayClass::Periodic {
        return Err(Error::WrongDecayClass {
            op,
            decay: f.decay().to_string(),
            hint: "periodic input required",
        });
    }
    let span = f.grid().span();
    let two_pi = T::two() * T::PI();
    if ((span - two_pi) / two_pi).abs() > T::lit(PERIOD_REL_TOL) {
        return Err(Error::InvalidGrid(format!(
            "periodic conjugate needs a grid spanning one 2π period, got span {span}"
        )));
    }
    let distinct = f.len() - 1;
    if distinct < 2 {
        return Err(Error::GridTooSmall {
            need: 3,
            got: f.len(),
        });
    }
    Ok(distinct)
}

/// Conjugate function `(1/2π) P.V.∫_{-π}^{π} f(t) cot((x-t)/2) dt`.
///
/// Written as `(1/2π) ∫_0^{2π} (f(x-u) - f(x+u)) cot(u/2) du` and summed by
/// the midpoint rule on panels of width `2h` (nodes at odd grid offsets) when
/// the period holds an even number of samples, which is exact on
/// trigonometric polynomials of degree below `N/2`. For odd sample counts the
/// panels have width `h` with cubic-interpolated cell midpoints.
pub fn periodic_conjugate<T: Real>(f: &SampledFunction<T>) -> Result<SampledFunction<T>> {
    let nd = check_periodic(f, "periodic_conjugate")?;
    let v = &f.values()[..nd];
    let h = f.grid().spacing();
    let inv_two_pi = T::one() / (T::two() * T::PI());

    let mut out: Vec<T> = if nd % 2 == 0 {
        let w: Vec<T> = (1..nd)
            .step_by(2)
            .map(|m| h * (T::from_index(m) * h * T::half()).tan().recip())
            .collect();
        (0..nd)
            .into_par_iter()
            .map(|i| {
                let mut acc = T::zero();
                for (j, &wj) in w.iter().enumerate() {
                    let m = 2 * j + 1;
                    acc += wj * (v[(i + nd - m) % nd] - v[(i + m) % nd]);
                }
                acc * inv_two_pi
            })
            .collect()
    } else {
        let mid: Vec<T> = (0..nd)
            .map(|k| {
                let at = |o: isize| v[((k as isize + o).rem_euclid(nd as isize)) as usize];
                (T::lit(9.0) * (at(0) + at(1)) - at(-1) - at(2)) / T::lit(16.0)
            })
            .collect();
        let w: Vec<T> = (0..nd)
            .map(|j| {
                T::half()
                    * h
                    * ((T::from_index(j) + T::half()) * h * T::half())
                        .tan()
                        .recip()
            })
            .collect();
        (0..nd)
            .into_par_iter()
            .map(|i| {
                let mut acc = T::zero();
                for (j, &wj) in w.iter().enumerate() {
                    // x_i - (j+½)h is midpoint i-j-1, x_i + (j+½)h is midpoint i+j
                    let l = mid[(i + 2 * nd - j - 1) % nd];
                    let r = mid[(i + j) % nd];
                    acc += wj * (l - r);
                }
                acc * inv_two_pi
            })
            .collect()
    };
    out.push(out[0]);
    Ok(SampledFunction::from_parts(
        *f.grid(),
        out,
        DecayClass::Periodic,
    ))
}

/// Conjugate function via the coefficient multiplier `i·MULTIPLIER_SIGN·sign(k)`.
pub fn periodic_conjugate_multiplier<T: Real>(
    f: &SampledFunction<T>,
) -> Result<SampledFunction<T>> {
    let nd = check_periodic(f, "periodic_conjugate_multiplier")?;
    let mut buf: Vec<Complex<T>> = f.values()[..nd]
        .iter()
        .map(|&v| Complex::new(v, T::zero()))
        .collect();
    let mut planner = FftPlanner::<T>::new();
    planner.plan_fft_forward(nd).process(&mut buf);
    let s = T::lit(MULTIPLIER_SIGN);
    for (k, c) in buf.iter_mut().enumerate() {
        let sign = if k == 0 || 2 * k == nd {
            T::zero()
        } else if 2 * k < nd {
            T::one()
        } else {
            -T::one()
        };
        *c = Complex::new(-c.im, c.re) * (s * sign);
    }
    planner.plan_fft_inverse(nd).process(&mut buf);
    let scale = T::one() / T::from_index(nd);
    let mut out: Vec<T> = buf.iter().map(|c| c.re * scale).collect();
    out.push(out[0]);
    Ok(SampledFunction::from_parts(
        *f.grid(),
        out,
        DecayClass::Periodic,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Family, FamilySpec, Grid};
    use std::f64::consts::PI;

    fn period_grid(distinct: usize) -> Grid<f64> {
        Grid::<f64>::new(-PI, PI, distinct + 1).unwrap()
    }

    #[test]
    fn constant_has_zero_conjugate() {
        let g = period_grid(64);
        let c = SampledFunction::from_fn(g, DecayClass::Periodic, |_| 3.0).unwrap();
        let t = periodic_conjugate(&c).unwrap();
        assert!(t.values().iter().all(|v| v.abs() < 1e-13));
    }

    #[test]
    fn cosine_maps_to_sine() {
        let g = period_grid(1 << 12);
        for k in [1.0, 3.0, 40.0, 700.0] {
            let f =
                SampledFunction::from_fn(g, DecayClass::Periodic, |x: f64| (k * x).cos()).unwrap();
            let t = periodic_conjugate(&f).unwrap();
            for (x, v) in g.points().zip(t.values()) {
                assert!((v - (k * x).sin()).abs() < 1e-6, "k={k} x={x}");
            }
        }
    }

    #[test]
    fn odd_sample_count_is_accurate_for_low_modes() {
        let g = period_grid(1023);
        let f =
            SampledFunction::from_fn(g, DecayClass::Periodic, |x: f64| (2.0 * x).cos()).unwrap();
        let t = periodic_conjugate(&f).unwrap();
        let m = periodic_conjugate_multiplier(&f).unwrap();
        for ((x, v), w) in g.points().zip(t.values()).zip(m.values()) {
            assert!((v - (2.0 * x).sin()).abs() < 1e-7);
            assert!((w - (2.0 * x).sin()).abs() < 1e-12);
        }
    }

    #[test]
    fn quadrature_and_multiplier_agree() {
        let g = period_grid(1 << 10);
        let f = FamilySpec::new(Family::TriangleWavePeriodic)
            .sample(&g)
            .unwrap();
        let a = periodic_conjugate(&f).unwrap();
        let b = periodic_conjugate_multiplier(&f).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn non_periodic_rejected() {
        let g = period_grid(64);
        let f = FamilySpec::new(Family::Gaussian).sample(&g).unwrap();
        assert!(matches!(
            periodic_conjugate(&f),
            Err(Error::WrongDecayClass { .. })
        ));
        let g2 = Grid::<f64>::new(-1.0, 1.0, 65).unwrap();
        let c = SampledFunction::from_fn(g2, DecayClass::Periodic, |_| 1.0).unwrap();
        assert!(periodic_conjugate(&c).is_err());
    }
}
