use super::SampledFunction;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Discrete variation `Σ |f(x_{i+1}) - f(x_i)|`.
pub fn total_variation<T: Real>(f: &SampledFunction<T>) -> T {
    f.values().windows(2).map(|w| (w[1] - w[0]).abs()).sum()
}

/// Central differences inside, one-sided first differences at the two ends.
///
/// A jump of `f` shows up as an `O(1/h)` spike at the neighbouring nodes.
pub fn derivative<T: Real>(f: &SampledFunction<T>) -> Result<SampledFunction<T>> {
    let n = f.len();
    if n < 3 {
        return Err(Error::GridTooSmall { need: 3, got: n });
    }
    let h = f.grid().spacing();
    let v = f.values();
    let mut d = Vec::with_capacity(n);
    d.push((v[1] - v[0]) / h);
    let two_h = T::two() * h;
    d.extend(v.windows(3).map(|w| (w[2] - w[0]) / two_h));
    d.push((v[n - 1] - v[n - 2]) / h);
    Ok(SampledFunction::from_parts(*f.grid(), d, f.decay()))
}

/// `(1/t) ∫_x^{x+t} |f(u) - f(x)| du` for the piecewise-linear interpolant of `f`.
///
/// Negative `t` integrates over `(x + t, x)` and divides by `|t|`.
pub fn lebesgue_point_defect<T: Real>(f: &SampledFunction<T>, x: T, t: T) -> Result<T> {
    let g = f.grid();
    if t == T::zero() || !t.is_finite() {
        return Err(Error::InvalidParameter {
            name: "t",
            reason: "window must be finite and non-zero".into(),
        });
    }
    for p in [x, x + t] {
        if !g.contains(p) {
            return Err(Error::OutsideDomain {
                x: p.to_f64_lossy(),
                a: g.a().to_f64_lossy(),
                b: g.b().to_f64_lossy(),
            });
        }
    }
    let (lo, hi) = if t > T::zero() {
        (x, x + t)
    } else {
        (x + t, x)
    };
    let fx = f.eval_linear(x);
    let h = g.spacing();

    // Breakpoints: window ends plus every node strictly inside.
    let mut pts = vec![lo];
    let first = ((lo - g.a()) / h).floor().to_usize().unwrap_or(0) + 1;
    let mut i = first;
    while i < g.len() && g.point(i) < hi {
        if g.point(i) > lo {
            pts.push(g.point(i));
        }
        i += 1;
    }
    pts.push(hi);

    // |f - f(x)| is piecewise linear between breakpoints except where it
    // crosses zero; integrate each piece exactly.
    let mut acc = T::zero();
    for w in pts.windows(2) {
        let (u0, u1) = (w[0], w[1]);
        let d0 = f.eval_linear(u0) - fx;
        let d1 = f.eval_linear(u1) - fx;
        let len = u1 - u0;
        if d0 * d1 >= T::zero() {
            acc += T::half() * len * (d0.abs() + d1.abs());
        } else {
            let s = d0.abs() / (d0.abs() + d1.abs());
            acc += T::half() * len * (s * d0.abs() + (T::one() - s) * d1.abs());
        }
    }
    Ok(acc / (hi - lo))
}
