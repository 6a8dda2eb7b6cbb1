use rayon::prelude::*;

use super::tail::Tails;
use super::{require_vanishing, PvConfig, TailModel};
use crate::error::{Error, Result};
use crate::grid::{DecayClass, SampledFunction};
use crate::quad;
use crate::scalar::Real;

/// Principal-value Hilbert transform in the symmetric-difference form
/// `(1/π) ∫_0^∞ (f(x-u) - f(x+u)) du/u`, sampled on the input grid.
pub fn hilbert_pv<T: Real>(
    f: &SampledFunction<T>,
    cfg: &PvConfig<T>,
) -> Result<SampledFunction<T>> {
    require_vanishing(f, "hilbert_pv")?;
    let mut out = truncated_pv(f, cfg)?;
    if cfg.tail == TailModel::Extrapolate {
        add_tails(f, &mut out, false);
    }
    Ok(SampledFunction::from_parts(
        *f.grid(),
        out,
        DecayClass::VanishingAtInfinity,
    ))
}

/// Modified Hilbert transform with kernel `1/(x-t) + t/(1+t²)`, well defined
/// for bounded inputs.
///
/// On the grid the extra kernel term integrates to an `x`-independent
/// constant, so for compactly supported input this is `hilbert_pv` plus
/// `(1/π) ∫ f(t) t/(1+t²) dt`.
pub fn modified_hilbert<T: Real>(
    f: &SampledFunction<T>,
    cfg: &PvConfig<T>,
) -> Result<SampledFunction<T>> {
    if f.decay() == DecayClass::Periodic {
        return Err(Error::WrongDecayClass {
            op: "modified_hilbert",
            decay: f.decay().to_string(),
            hint: "use periodic_conjugate",
        });
    }
    let mut out = truncated_pv(f, cfg)?;
    let g = f.grid();
    let weighted: Vec<T> = g
        .points()
        .zip(f.values())
        .map(|(t, &v)| v * t / (T::one() + t * t))
        .collect();
    let offset = quad::trapezoid(&weighted, g.spacing()) / T::PI();
    for v in &mut out {
        *v += offset;
    }
    if cfg.tail == TailModel::Extrapolate {
        add_tails(f, &mut out, true);
    }
    Ok(SampledFunction::from_parts(*g, out, DecayClass::Bounded))
}

fn add_tails<T: Real>(f: &SampledFunction<T>, out: &mut [T], modified: bool) {
    let Some(tails) = Tails::fit(f, modified) else {
        return;
    };
    let g = *f.grid();
    out.par_iter_mut().enumerate().for_each(|(i, v)| {
        *v += tails.at(g.point(i));
    });
}

/// Midpoint rule in `u` with nodes `(2j+1)δ`, the function taken as zero off the grid.
pub(crate) fn truncated_pv<T: Real>(f: &SampledFunction<T>, cfg: &PvConfig<T>) -> Result<Vec<T>> {
    let g = f.grid();
    let h = g.spacing();
    let delta = cfg.resolve_delta(h)?;
    let v = f.values();
    let n = v.len();
    let inv_pi = T::one() / T::PI();

    let ratio = delta / h;
    let tol = T::lit(1e-12);
    if (ratio - T::half()).abs() < tol {
        // nodes on cell midpoints: precompute the interpolated midpoint values
        let mid: Vec<T> = (0..n - 1).map(|k| midpoint_value(v, k)).collect();
        let weights: Vec<T> = (0..n)
            .map(|j| T::one() / (T::from_index(j) + T::half()))
            .collect();
        Ok((0..n)
            .into_par_iter()
            .map(|i| {
                // x_i - (j+½)h is midpoint i-j-1, x_i + (j+½)h is midpoint i+j
                let mut acc = T::zero();
                let reach = i.max(n - 1 - i);
                for (j, &w) in weights.iter().enumerate().take(reach) {
                    let left = if j < i { mid[i - j - 1] } else { T::zero() };
                    let right = if i + j < n - 1 { mid[i + j] } else { T::zero() };
                    acc += w * (left - right);
                }
                acc * inv_pi
            })
            .collect())
    } else if (ratio - T::one()).abs() < tol {
        // nodes on odd grid offsets: exact samples
        let weights: Vec<T> = (0..n)
            .map(|j| T::two() / T::from_index(2 * j + 1))
            .collect();
        Ok((0..n)
            .into_par_iter()
            .map(|i| {
                let mut acc = T::zero();
                let mut j = 0;
                loop {
                    let m = 2 * j + 1;
                    if m > i && i + m >= n {
                        break;
                    }
                    let left = if m <= i { v[i - m] } else { T::zero() };
                    let right = if i + m < n { v[i + m] } else { T::zero() };
                    acc += weights[j] * (left - right);
                    j += 1;
                }
                acc * inv_pi
            })
            .collect())
    } else {
        let a = g.a();
        let span = g.span();
        let two_delta = T::two() * delta;
        Ok((0..n)
            .into_par_iter()
            .map(|i| {
                let x = g.point(i);
                let mut acc = T::zero();
                let mut j = 0usize;
                loop {
                    let u = (T::from_index(j) + T::half()) * two_delta;
                    if u > span + h {
                        break;
                    }
                    let left = quad::interp_cubic(v, a, h, x - u);
                    let right = quad::interp_cubic(v, a, h, x + u);
                    acc += (left - right) / u;
                    j += 1;
                }
                acc * two_delta * inv_pi
            })
            .collect())
    }
}

/// Cubic interpolant of `v` at the midpoint of cell `k`.
#[inline]
fn midpoint_value<T: Real>(v: &[T], k: usize) -> T {
    let n = v.len();
    if n < 4 {
        return T::half() * (v[k] + v[k + 1]);
    }
    if k == 0 {
        quad::lagrange4(&v[0..4], T::half())
    } else if k + 2 >= n {
        quad::lagrange4(&v[n - 4..n], T::lit(2.5))
    } else {
        let s = T::lit(1.0 / 16.0);
        s * (T::lit(9.0) * (v[k] + v[k + 1]) - v[k - 1] - v[k + 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Family, FamilySpec, Grid};

    fn rig(n: usize) -> Grid<f64> {
        Grid::<f64>::new(-50.0, 50.0, n).unwrap()
    }

    #[test]
    fn zero_in_zero_out() {
        let g = rig(257);
        let z = SampledFunction::zeros(g, DecayClass::CompactSupport);
        let h = hilbert_pv(&z, &PvConfig::default()).unwrap();
        assert!(h.values().iter().all(|&v| v == 0.0));
        let m = modified_hilbert(&z, &PvConfig::default()).unwrap();
        assert!(m.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn even_input_gives_odd_output() {
        let g = rig(4097);
        let f = FamilySpec::new(Family::Gaussian).sample(&g).unwrap();
        for cfg in [
            PvConfig::default(),
            PvConfig::with_delta(g.spacing()),
            PvConfig::with_delta(0.7 * g.spacing()),
        ] {
            let h = hilbert_pv(&f, &cfg).unwrap();
            let v = h.values();
            let n = v.len();
            for i in 0..n {
                assert!((v[i] + v[n - 1 - i]).abs() <= 1e-10, "{i}");
            }
        }
    }

    #[test]
    fn midpoint_and_odd_offset_rules_agree_on_smooth_input() {
        let g = rig(4097);
        let f = FamilySpec::new(Family::Gaussian).sample(&g).unwrap();
        let a = hilbert_pv(&f, &PvConfig::default()).unwrap();
        let b = hilbert_pv(&f, &PvConfig::with_delta(g.spacing())).unwrap();
        let c = hilbert_pv(&f, &PvConfig::with_delta(0.7 * g.spacing())).unwrap();
        for ((x, y), z) in a.values().iter().zip(b.values()).zip(c.values()) {
            assert!((x - y).abs() < 1e-6);
            assert!((x - z).abs() < 1e-6);
        }
    }

    #[test]
    fn rejects_periodic_and_bounded() {
        let g = Grid::<f64>::new(-std::f64::consts::PI, std::f64::consts::PI, 65).unwrap();
        let p = FamilySpec::new(Family::TriangleWavePeriodic)
            .sample(&g)
            .unwrap();
        assert!(matches!(
            hilbert_pv(&p, &PvConfig::default()),
            Err(Error::WrongDecayClass { .. })
        ));
        assert!(modified_hilbert(&p, &PvConfig::default()).is_err());
        let s = FamilySpec::new(Family::SmoothStep)
            .sample(&rig(65))
            .unwrap();
        assert!(hilbert_pv(&s, &PvConfig::default()).is_err());
        assert!(modified_hilbert(&s, &PvConfig::default()).is_ok());
    }

    #[test]
    fn delta_out_of_range() {
        let g = rig(65);
        let f = FamilySpec::new(Family::Gaussian).sample(&g).unwrap();
        assert!(hilbert_pv(&f, &PvConfig::with_delta(2.0 * g.spacing())).is_err());
        assert!(hilbert_pv(&f, &PvConfig::with_delta(0.0)).is_err());
    }

    #[test]
    fn modified_minus_pv_is_constant_on_compact_support() {
        let g = rig(4097);
        let f = FamilySpec::new(Family::Triangle)
            .sample(&g)
            .unwrap()
            .map(|v| v);
        // shift the triangle so the constant is non-zero
        let shifted = SampledFunction::from_fn(g, DecayClass::CompactSupport, |x| {
            (1.0 - (x - 3.0).abs()).max(0.0)
        })
        .unwrap();
        for input in [&f, &shifted] {
            let d = modified_hilbert(input, &PvConfig::default())
                .unwrap()
                .sub(&hilbert_pv(input, &PvConfig::default()).unwrap())
                .unwrap();
            let mean = d.values().iter().sum::<f64>() / d.len() as f64;
            let sd = (d.values().iter().map(|v| (v - mean).powi(2)).sum::<f64>() / d.len() as f64)
                .sqrt();
            assert!(sd <= 1e-12, "{sd}");
        }
    }
}
