use crate::error::{Error, Result};
use crate::scalar::Real;

/// Distance to `±2π` below which [`KernelDifference::near_pole`] is set.
pub const POLE_WARNING_DISTANCE: f64 = 1e-3;

/// Symmetric partial sum and closed form of `(1/2)cot(t/2) - 1/t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelDifference<T> {
    pub partial_sum: T,
    pub closed_form: T,
    pub near_pole: bool,
}

/// Below this `|t|` the closed form is evaluated from its Taylor series.
const SERIES_CUTOFF: f64 = 0.1;

/// `(1/2)cot(t/2) - 1/t` against `Σ_{1≤|k|≤terms} t / (2kπ(t - 2kπ))` on `(-2π, 2π)`.
///
/// Both values are computed for `|t|` and the sign reapplied, so each is
/// exactly odd in `t`. At `t = 0` both are zero.
pub fn kernel_difference<T: Real>(t: T, terms: usize) -> Result<KernelDifference<T>> {
    let two_pi = T::two() * T::PI();
    if !t.is_finite() || t.abs() >= two_pi {
        return Err(Error::InvalidParameter {
            name: "t",
            reason: format!("must lie in (-2π, 2π), got {t}"),
        });
    }
    if terms == 0 {
        return Err(Error::InvalidParameter {
            name: "terms",
            reason: "need at least one term".into(),
        });
    }
    let s = t.abs();
    let sign = if t < T::zero() { -T::one() } else { T::one() };

    let closed = if s < T::lit(SERIES_CUTOFF) {
        // -t/12 - t³/720 - t⁵/30240 - t⁷/1209600 - t⁹/47900160
        let s2 = s * s;
        -s * (T::lit(1.0 / 12.0)
            + s2 * (T::lit(1.0 / 720.0)
                + s2 * (T::lit(1.0 / 30240.0)
                    + s2 * (T::lit(1.0 / 1209600.0) + s2 * T::lit(1.0 / 47900160.0)))))
    } else {
        T::half() / (s * T::half()).tan() - s.recip()
    };

    // pair k with -k: 2t / (t² - 4k²π²); accumulate smallest terms first
    let mut partial = T::zero();
    let four_pi2 = T::lit(4.0) * T::PI() * T::PI();
    for k in (1..=terms).rev() {
        let kk = T::from_index(k);
        partial += T::two() * s / (s * s - four_pi2 * kk * kk);
    }

    Ok(KernelDifference {
        partial_sum: sign * partial,
        closed_form: sign * closed,
        near_pole: (two_pi - s).to_f64_lossy() < POLE_WARNING_DISTANCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn value_at_pi() {
        let k = kernel_difference::<f64>(PI, 10).unwrap();
        assert!((k.closed_form + 1.0 / PI).abs() <= 1e-15);
    }

    #[test]
    fn vanishes_at_zero() {
        let k = kernel_difference::<f64>(0.0, 10).unwrap();
        assert_eq!(k.closed_form, 0.0);
        assert_eq!(k.partial_sum, 0.0);
        let tiny = kernel_difference::<f64>(1e-9, 10).unwrap();
        assert!(tiny.closed_form.abs() < 1e-10);
    }

    #[test]
    fn series_branch_is_continuous() {
        let below = kernel_difference::<f64>(0.1 - 1e-12, 1)
            .unwrap()
            .closed_form;
        let above = kernel_difference::<f64>(0.1 + 1e-12, 1)
            .unwrap()
            .closed_form;
        assert!((below - above).abs() < 1e-12);
    }

    #[test]
    fn partial_sum_converges() {
        let k = kernel_difference::<f64>(1.0, 10_000).unwrap();
        assert!((k.partial_sum - k.closed_form).abs() <= 1e-4);
        let coarse = kernel_difference::<f64>(1.0, 100).unwrap();
        assert!(
            (coarse.partial_sum - coarse.closed_form).abs() > (k.partial_sum - k.closed_form).abs()
        );
    }

    #[test]
    fn exactly_odd() {
        for &t in &[0.01, 0.5, 1.0, 3.0, 6.0] {
            let p = kernel_difference::<f64>(t, 50).unwrap();
            let m = kernel_difference::<f64>(-t, 50).unwrap();
            assert_eq!(p.closed_form, -m.closed_form);
            assert_eq!(p.partial_sum, -m.partial_sum);
        }
    }

    #[test]
    fn pole_flag_and_domain() {
        assert!(
            kernel_difference::<f64>(2.0 * PI - 1e-4, 10)
                .unwrap()
                .near_pole
        );
        assert!(!kernel_difference::<f64>(6.0, 10).unwrap().near_pole);
        assert!(kernel_difference::<f64>(2.0 * PI, 10).is_err());
        assert!(kernel_difference::<f64>(-7.0, 10).is_err());
        assert!(kernel_difference::<f64>(1.0, 0).is_err());
    }
}
