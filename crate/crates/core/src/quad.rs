//! Composite quadrature and interpolation on uniform samples.

use crate::scalar::Real;

/// Composite trapezoid rule.
pub fn trapezoid<T: Real>(values: &[T], h: T) -> T {
    match values.len() {
        0 | 1 => T::zero(),
        n => {
            let inner: T = values[1..n - 1].iter().copied().sum();
            h * (inner + T::half() * (values[0] + values[n - 1]))
        }
    }
}

pub fn trapezoid_abs<T: Real>(values: &[T], h: T) -> T {
    match values.len() {
        0 | 1 => T::zero(),
        n => {
            let inner: T = values[1..n - 1].iter().map(|v| v.abs()).sum();
            h * (inner + T::half() * (values[0].abs() + values[n - 1].abs()))
        }
    }
}

/// `out[i] = ∫_{x_i}^{x_last}` by trapezoid, accumulated from the right.
pub fn cumulative_from_right<T: Real>(values: &[T], h: T) -> Vec<T> {
    let n = values.len();
    let mut out = vec![T::zero(); n];
    for i in (0..n.saturating_sub(1)).rev() {
        out[i] = out[i + 1] + T::half() * h * (values[i] + values[i + 1]);
    }
    out
}

/// Piecewise-linear interpolation of samples starting at `a` with spacing `h`;
/// zero outside the sampled interval.
pub fn interp_linear<T: Real>(values: &[T], a: T, h: T, x: T) -> T {
    let n = values.len();
    let s = (x - a) / h;
    let last = T::from_index(n - 1);
    if !(s >= T::zero()) || s > last {
        return T::zero();
    }
    let i = s.floor().to_usize().unwrap_or(0).min(n - 1);
    if i + 1 >= n {
        return values[n - 1];
    }
    let w = s - T::from_index(i);
    values[i] + w * (values[i + 1] - values[i])
}

/// Four-point Lagrange interpolation on uniform samples, falling back to
/// one-sided stencils near the ends. Points outside `[a, a + (n-1)h]`
/// evaluate to zero.
pub fn interp_cubic<T: Real>(values: &[T], a: T, h: T, x: T) -> T {
    let n = values.len();
    if n < 4 {
        return interp_linear(values, a, h, x);
    }
    let s = (x - a) / h;
    let last = T::from_index(n - 1);
    if !(s >= T::zero()) || s > last {
        return T::zero();
    }
    let i = s.floor().to_usize().unwrap_or(0).min(n - 2);
    let base = if i == 0 { 0 } else { (i - 1).min(n - 4) };
    let p = s - T::from_index(base);
    lagrange4(&values[base..base + 4], p)
}

/// Lagrange polynomial through `(0, y0) .. (3, y3)` evaluated at `p`.
#[inline]
pub(crate) fn lagrange4<T: Real>(y: &[T], p: T) -> T {
    let one = T::one();
    let two = T::two();
    let three = T::lit(3.0);
    let six = T::lit(6.0);
    let p1 = p - one;
    let p2 = p - two;
    let p3 = p - three;
    -y[0] * p1 * p2 * p3 / six + y[1] * p * p2 * p3 / two - y[2] * p * p1 * p3 / two
        + y[3] * p * p1 * p2 / six
}

/// Ordinary least-squares line `y = intercept + slope·x` and its R².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit<T> {
    pub slope: T,
    pub intercept: T,
    pub r_squared: T,
}

pub fn fit_line<T: Real>(xs: &[T], ys: &[T]) -> Option<LineFit<T>> {
    let n = xs.len();
    if n < 2 || ys.len() != n {
        return None;
    }
    let nf = T::from_index(n);
    let mx = xs.iter().copied().sum::<T>() / nf;
    let my = ys.iter().copied().sum::<T>() / nf;
    let mut sxx = T::zero();
    let mut sxy = T::zero();
    let mut syy = T::zero();
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if sxx == T::zero() {
        return None;
    }
    let slope = sxy / sxx;
    let r_squared = if syy == T::zero() {
        T::one()
    } else {
        sxy * sxy / (sxx * syy)
    };
    Some(LineFit {
        slope,
        intercept: my - slope * mx,
        r_squared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trapezoid_exact_for_linear() {
        let v: Vec<f64> = (0..11).map(|i| 2.0 * i as f64 * 0.1 + 1.0).collect();
        assert!((trapezoid(&v, 0.1) - 2.0).abs() < 1e-14);
    }

    #[test]
    fn cumulative_matches_total() {
        let v: Vec<f64> = (0..21).map(|i| (i as f64 * 0.05).sin()).collect();
        let c = cumulative_from_right(&v, 0.05);
        assert!((c[0] - trapezoid(&v, 0.05)).abs() < 1e-15);
        assert_eq!(c[20], 0.0);
    }

    #[test]
    fn cubic_interpolation_exact_for_cubics() {
        let f = |x: f64| 1.0 - x + 0.5 * x * x - 0.25 * x * x * x;
        let v: Vec<f64> = (0..9).map(|i| f(-1.0 + 0.25 * i as f64)).collect();
        for &x in &[-1.0, -0.9, -0.13, 0.5, 0.77, 0.99, 1.0] {
            assert!(
                (interp_cubic(&v, -1.0, 0.25, x) - f(x)).abs() < 1e-13,
                "{x}"
            );
        }
        assert_eq!(interp_cubic(&v, -1.0, 0.25, 1.5), 0.0);
    }

    #[test]
    fn line_fit_recovers_slope() {
        let xs = [1.0f64, 2.0, 3.0, 4.0];
        let ys = [3.0, 5.0, 7.0, 9.0];
        let fit = fit_line(&xs, &ys).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-14);
        assert!((fit.intercept - 1.0).abs() < 1e-14);
        assert!((fit.r_squared - 1.0).abs() < 1e-14);
    }
}
