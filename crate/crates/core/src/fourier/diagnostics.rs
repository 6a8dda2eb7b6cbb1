use num_complex::Complex;

use super::{evaluate, require_integrable, FtMethod, Nodes};
use crate::error::{param, Error, Result};
use crate::grid::{derivative, DecayClass, SampledFunction};
use crate::hilbert::hilbert_multiplier;
use crate::report::VerificationReport;
use crate::scalar::Real;

/// Frequency range `|t| <= 20` probed by [`derivative_ft_identity`].
pub const DERIVATIVE_FT_CUTOFF: f64 = 20.0;

/// `∫_{-T}^{T} |ĝ(t)| dt` for each cutoff `T`.
///
/// `ĝ` is sampled once on `[0, T_max]` with spacing at most `π/(b-a)` and
/// integrated by the trapezoid rule; a cutoff between two nodes closes with a
/// linearly interpolated partial panel. The input is real, so the negative
/// half-line contributes the same mass as the positive one.
pub fn l1_norm_ft<T: Real>(f: &SampledFunction<T>, cutoffs: &[T]) -> Result<Vec<T>> {
    require_integrable(f)?;
    let first = *cutoffs
        .first()
        .ok_or_else(|| param("cutoffs", "need at least one cutoff"))?;
    for w in cutoffs.windows(2) {
        if w[1] < w[0] {
            return Err(param("cutoffs", "must be ascending"));
        }
    }
    if !(first > T::zero()) || !cutoffs.iter().all(|c| c.is_finite()) {
        return Err(param("cutoffs", "must be positive and finite"));
    }
    let t_max = *cutoffs.last().unwrap_or(&first);
    let step0 = (T::PI() / f.grid().span()).min(first / T::lit(16.0));
    let panels = (t_max / step0).ceil().to_usize().unwrap_or(1).max(1);
    let step = t_max / T::from_index(panels);
    let mag: Vec<T> = evaluate(
        f,
        Nodes::HalfLine {
            step,
            m: panels + 1,
        },
        FtMethod::Auto,
    )
    .into_iter()
    .map(|z| z.norm())
    .collect();

    let mut prefix = Vec::with_capacity(panels + 1);
    prefix.push(T::zero());
    for j in 0..panels {
        let last = prefix[j];
        prefix.push(last + T::half() * step * (mag[j] + mag[j + 1]));
    }

    let mut out = Vec::with_capacity(cutoffs.len());
    let mut running = T::zero();
    for &c in cutoffs {
        let pos = (c / step).floor().to_usize().unwrap_or(0).min(panels - 1);
        let rest = c - step * T::from_index(pos);
        let s = (rest / step).min(T::one());
        let at_c = mag[pos] * (T::one() - s) + mag[pos + 1] * s;
        let half = prefix[pos] + T::half() * rest * (mag[pos] + at_c);
        // floating-point rounding must not break monotonicity
        running = running.max(T::two() * half);
        out.push(running);
    }
    Ok(out)
}

/// Norms entering the Hardy-space diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct H1Report<T> {
    pub l1_norm: T,
    pub hilbert_l1_norm: T,
    pub h1_norm: T,
    pub cancellation_residual: T,
}

pub fn h1_report<T: Real>(g: &SampledFunction<T>) -> Result<H1Report<T>> {
    let hg = hilbert_multiplier(g)?;
    let l1_norm = g.l1_norm();
    let hilbert_l1_norm = hg.l1_norm();
    Ok(H1Report {
        l1_norm,
        hilbert_l1_norm,
        h1_norm: l1_norm + hilbert_l1_norm,
        cancellation_residual: g.integral().abs(),
    })
}

/// Settings for [`hardy_check_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardyOptions {
    /// Upper frequency; `None` selects `π/h`.
    pub cutoff: Option<f64>,
    /// Constant multiplying the H¹ norm on the right-hand side.
    pub constant: f64,
    pub rel_tol: f64,
    /// Largest admissible `|∫g| / ‖g‖₁`.
    pub cancellation_limit: f64,
}

impl Default for HardyOptions {
    fn default() -> Self {
        Self {
            cutoff: None,
            constant: 1.0,
            rel_tol: 1e-2,
            cancellation_limit: 1e-6,
        }
    }
}

/// `∫ |ĝ(x)|/|x| dx <= ‖g‖_{H¹}` with constant 1 and relative tolerance 1%.
pub fn hardy_check<T: Real>(g: &SampledFunction<T>, cutoff: T) -> Result<VerificationReport> {
    hardy_check_with(
        g,
        &HardyOptions {
            cutoff: Some(cutoff.to_f64_lossy()),
            ..HardyOptions::default()
        },
    )
}

/// The left side integrates over `[-cutoff, cutoff]` minus the window
/// `(-Δ, Δ)` of one frequency spacing. The report's `measured` is the left
/// side, its `bound` is `constant·(1 + rel_tol)·‖g‖_{H¹}`, and the notes carry
/// the empirical ratio `lhs / ‖g‖_{H¹}`.
pub fn hardy_check_with<T: Real>(
    g: &SampledFunction<T>,
    opts: &HardyOptions,
) -> Result<VerificationReport> {
    require_integrable(g)?;
    let cutoff = match opts.cutoff {
        Some(c) if c > 0.0 && c.is_finite() => T::lit(c),
        Some(c) => return Err(param("cutoff", format!("must be positive, got {c}"))),
        None => super::default_cutoff(g),
    };
    let h1 = h1_report(g)?;
    let limit = T::lit(opts.cancellation_limit) * h1.l1_norm;
    if h1.cancellation_residual > limit {
        return Err(Error::Cancellation {
            residual: h1.cancellation_residual.to_f64_lossy(),
            limit: limit.to_f64_lossy(),
        });
    }

    let step0 = (T::PI() / g.grid().span()).min(cutoff / T::lit(64.0));
    let panels = (cutoff / step0).ceil().to_usize().unwrap_or(64).max(2);
    let step = cutoff / T::from_index(panels);
    let ft = evaluate(
        g,
        Nodes::HalfLine {
            step,
            m: panels + 1,
        },
        FtMethod::Auto,
    );
    let ratio: Vec<T> = ft
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, z)| z.norm() / (step * T::from_index(j)))
        .collect();
    let lhs = T::two() * crate::quad::trapezoid(&ratio, step);

    let rhs = h1.h1_norm.to_f64_lossy();
    let lhs = lhs.to_f64_lossy();
    let bound = opts.constant * (1.0 + opts.rel_tol) * rhs;
    let mut report = VerificationReport::new("hardy", lhs, bound, g.len());
    report.note("h1_norm", format!("{rhs:.6e}"));
    let empirical = if rhs > 0.0 { lhs / rhs } else { 0.0 };
    report.note("empirical_constant", format!("{empirical:.6e}"));
    report.note(
        "cancellation_residual",
        format!("{:.3e}", h1.cancellation_residual.to_f64_lossy()),
    );
    Ok(report)
}

/// `max_t |FT(f')(t) - i t FT(f)(t)| / (1 + |t FT(f)(t)|)` over `|t| <= 20`.
pub fn derivative_ft_identity<T: Real>(f: &SampledFunction<T>) -> Result<T> {
    let cutoff = T::lit(DERIVATIVE_FT_CUTOFF);
    let m = super::default_frequency_count(f, cutoff);
    derivative_ft_identity_with(f, cutoff, m)
}

pub fn derivative_ft_identity_with<T: Real>(
    f: &SampledFunction<T>,
    cutoff: T,
    m: usize,
) -> Result<T> {
    if f.decay() != DecayClass::CompactSupport {
        return Err(Error::WrongDecayClass {
            op: "derivative_ft_identity",
            decay: f.decay().to_string(),
            hint: "boundary terms vanish only for compactly supported input",
        });
    }
    let df = derivative(f)?.with_decay(DecayClass::VanishingAtInfinity)?;
    let lhs = super::fourier_transform(&df, cutoff, m)?;
    let rhs = super::fourier_transform(f, cutoff, m)?;
    let defect = lhs
        .values()
        .iter()
        .zip(rhs.values())
        .enumerate()
        .map(|(j, (d, v))| {
            let tv = *v * lhs.frequency(j);
            let itv = Complex::new(-tv.im, tv.re);
            (*d - itv).norm() / (T::one() + tv.norm())
        })
        .fold(T::zero(), T::max);
    Ok(defect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Family, FamilySpec, Grid};

    fn sample(fam: Family, n: usize) -> SampledFunction<f64> {
        let g = Grid::new(-50.0, 50.0, n).unwrap();
        FamilySpec::new(fam).sample(&g).unwrap()
    }

    #[test]
    fn l1_zero_input() {
        let f =
            SampledFunction::zeros(Grid::new(-1.0, 1.0, 9).unwrap(), DecayClass::CompactSupport);
        assert_eq!(l1_norm_ft(&f, &[1.0, 2.0]).unwrap(), vec![0.0, 0.0]);
        assert!(l1_norm_ft(&f, &[]).is_err());
        assert!(l1_norm_ft(&f, &[2.0, 1.0]).is_err());
    }

    #[test]
    fn triangle_mass_plateaus() {
        let f = sample(Family::Triangle, 1 << 14);
        let v = l1_norm_ft(&f, &[100.0, 200.0]).unwrap();
        assert!(v[1] >= v[0]);
        assert!((v[1] - v[0]) / v[0] <= 0.01);
        // ∫|f̂| = 2π·f(0) for a nonnegative transform
        assert!((v[1] - 2.0 * std::f64::consts::PI).abs() < 0.05);
    }

    #[test]
    fn h1_of_zero_and_poisson() {
        let z =
            SampledFunction::zeros(Grid::new(-1.0, 1.0, 9).unwrap(), DecayClass::CompactSupport);
        let r = h1_report(&z).unwrap();
        assert_eq!(r.h1_norm, 0.0);
        let p = sample(Family::PoissonKernel, 1 << 12);
        let r = h1_report(&p).unwrap();
        assert!((r.cancellation_residual - 1.0).abs() < 0.02);
        assert_eq!(r.h1_norm, r.l1_norm + r.hilbert_l1_norm);
    }

    #[test]
    fn hardy_rejects_missing_cancellation() {
        let p = sample(Family::PoissonKernel, 1 << 10);
        assert!(matches!(
            hardy_check(&p, 10.0),
            Err(Error::Cancellation { .. })
        ));
    }

    #[test]
    fn hardy_zero_passes() {
        let z =
            SampledFunction::zeros(Grid::new(-1.0, 1.0, 9).unwrap(), DecayClass::CompactSupport);
        let r = hardy_check(&z, 5.0).unwrap();
        assert!(r.passed);
        assert_eq!(r.measured, 0.0);
    }

    #[test]
    fn derivative_identity_requires_compact_support() {
        let f = sample(Family::Gaussian, 257);
        assert!(derivative_ft_identity(&f).is_err());
        let z =
            SampledFunction::zeros(Grid::new(-1.0, 1.0, 9).unwrap(), DecayClass::CompactSupport);
        assert_eq!(derivative_ft_identity(&z).unwrap(), 0.0);
    }
}
