//! Fourier transform on the line and Fourier series on the circle.
//!
//! The transform convention is `ĝ(t) = ∫ g(x) e^{-itx} dx`, evaluated by the
//! trapezoid rule on the sample grid. Periodic coefficients are
//! `c_k = (1/2π) ∫_{-π}^{π} f(x) e^{-ikx} dx`.

mod chirp;
mod diagnostics;
mod series;

pub use diagnostics::{
    derivative_ft_identity, derivative_ft_identity_with, h1_report, hardy_check, hardy_check_with,
    l1_norm_ft, H1Report, HardyOptions, DERIVATIVE_FT_CUTOFF,
};
pub use series::{conjugate_coefficient_check, fourier_coefficients, FourierCoefficients};

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{param, Error, Result};
use crate::grid::{Grid, SampledFunction};
use crate::scalar::Real;

/// Work (`nonzero samples × frequencies`) above which `Auto` switches to chirp-z.
const DIRECT_WORK_LIMIT: usize = 1 << 22;

/// Evaluation strategy for the oscillatory sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FtMethod {
    /// Direct when cheap, chirp-z otherwise.
    #[default]
    Auto,
    /// One complex exponential per sample and frequency; the reference path.
    Direct,
    /// Bluestein chirp-z through three FFTs.
    ChirpZ,
}

/// Samples of `ĝ` on a symmetric frequency grid `[-cutoff, cutoff]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformResult<T> {
    freq_grid: Grid<T>,
    values: Vec<Complex<T>>,
    source_domain: (T, T),
}

impl<T: Real> TransformResult<T> {
    pub fn freq_grid(&self) -> &Grid<T> {
        &self.freq_grid
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn cutoff(&self) -> T {
        self.freq_grid.b()
    }

    pub fn source_domain(&self) -> (T, T) {
        self.source_domain
    }

    /// Frequency of node `j`, computed so that node `m-1-j` is exactly `-t_j`
    /// and the middle node of an odd grid is exactly zero.
    pub fn frequency(&self, j: usize) -> T {
        symmetric_node(self.cutoff(), self.len(), j)
    }

    pub fn frequencies(&self) -> Vec<T> {
        (0..self.len()).map(|j| self.frequency(j)).collect()
    }

    /// `max_j |ĝ(-t_j) - conj ĝ(t_j)|`; zero up to rounding for real input.
    pub fn conjugate_symmetry_defect(&self) -> T {
        let m = self.len();
        (0..m / 2 + 1)
            .map(|j| (self.values[m - 1 - j] - self.values[j].conj()).norm())
            .fold(T::zero(), T::max)
    }
}

fn symmetric_node<T: Real>(cutoff: T, m: usize, j: usize) -> T {
    let num = 2.0 * j as f64 - (m - 1) as f64;
    cutoff * T::lit(num) / T::from_index(m - 1)
}

/// Nyquist-consistent default cutoff `π/h`.
pub fn default_cutoff<T: Real>(f: &SampledFunction<T>) -> T {
    T::PI() / f.grid().spacing()
}

/// Smallest odd node count on `[-cutoff, cutoff]` with spacing at most `π/(b-a)`.
pub fn default_frequency_count<T: Real>(f: &SampledFunction<T>, cutoff: T) -> usize {
    let max_step = T::PI() / f.grid().span();
    let intervals = (T::two() * cutoff / max_step)
        .ceil()
        .to_usize()
        .unwrap_or(2)
        .max(2);
    let intervals = intervals + intervals % 2;
    intervals + 1
}

/// `ĝ(t) ≈ Σ_k w_k h f(x_k) e^{-i t x_k}` at `m` equispaced frequencies on
/// `[-cutoff, cutoff]`.
pub fn fourier_transform<T: Real>(
    f: &SampledFunction<T>,
    cutoff: T,
    m: usize,
) -> Result<TransformResult<T>> {
    fourier_transform_with(f, cutoff, m, FtMethod::Auto)
}

pub fn fourier_transform_with<T: Real>(
    f: &SampledFunction<T>,
    cutoff: T,
    m: usize,
    method: FtMethod,
) -> Result<TransformResult<T>> {
    if !(cutoff > T::zero()) || !cutoff.is_finite() {
        return Err(param(
            "cutoff",
            format!("must be positive and finite, got {cutoff}"),
        ));
    }
    if m < 2 {
        return Err(param("m", format!("need at least 2 frequencies, got {m}")));
    }
    require_integrable(f)?;
    let nodes = Nodes::Symmetric { cutoff, m };
    let values = evaluate(f, nodes, method);
    Ok(TransformResult {
        freq_grid: Grid::new(-cutoff, cutoff, m)?,
        values,
        source_domain: (f.grid().a(), f.grid().b()),
    })
}

pub(crate) fn require_integrable<T: Real>(f: &SampledFunction<T>) -> Result<()> {
    if f.decay().is_vanishing() {
        Ok(())
    } else {
        Err(Error::WrongDecayClass {
            op: "fourier_transform",
            decay: f.decay().to_string(),
            hint: "the transform on the line needs an integrable input",
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Nodes<T> {
    Symmetric {
        cutoff: T,
        m: usize,
    },
    /// `t_j = j·step`, `j = 0..m`.
    HalfLine {
        step: T,
        m: usize,
    },
}

impl<T: Real> Nodes<T> {
    fn len(self) -> usize {
        match self {
            Nodes::Symmetric { m, .. } | Nodes::HalfLine { m, .. } => m,
        }
    }

    fn at(self, j: usize) -> T {
        match self {
            Nodes::Symmetric { cutoff, m } => symmetric_node(cutoff, m, j),
            Nodes::HalfLine { step, .. } => step * T::from_index(j),
        }
    }

    fn start_and_step(self) -> (T, T) {
        match self {
            Nodes::Symmetric { cutoff, m } => (-cutoff, T::two() * cutoff / T::from_index(m - 1)),
            Nodes::HalfLine { step, .. } => (T::zero(), step),
        }
    }
}

/// Trapezoid-weighted samples restricted to the nonzero index range.
fn weighted_support<T: Real>(f: &SampledFunction<T>) -> Option<(usize, Vec<T>)> {
    let v = f.values();
    let n = v.len();
    let lo = v.iter().position(|x| *x != T::zero())?;
    let hi = v.iter().rposition(|x| *x != T::zero())?;
    let h = f.grid().spacing();
    let w = (lo..=hi)
        .map(|k| {
            let edge = k == 0 || k == n - 1;
            v[k] * if edge { h * T::half() } else { h }
        })
        .collect();
    Some((lo, w))
}

pub(crate) fn evaluate<T: Real>(
    f: &SampledFunction<T>,
    nodes: Nodes<T>,
    method: FtMethod,
) -> Vec<Complex<T>> {
    let m = nodes.len();
    let Some((lo, w)) = weighted_support(f) else {
        return vec![Complex::new(T::zero(), T::zero()); m];
    };
    let nnz = w.iter().filter(|x| **x != T::zero()).count();
    let use_chirp = match method {
        FtMethod::Direct => false,
        FtMethod::ChirpZ => true,
        FtMethod::Auto => nnz.saturating_mul(m) > DIRECT_WORK_LIMIT,
    };
    if use_chirp {
        evaluate_chirp(f, lo, &w, nodes)
    } else {
        evaluate_direct(f, lo, &w, nodes)
    }
}

fn evaluate_direct<T: Real>(
    f: &SampledFunction<T>,
    lo: usize,
    w: &[T],
    nodes: Nodes<T>,
) -> Vec<Complex<T>> {
    let grid = f.grid();
    let terms: Vec<(T, T)> = w
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != T::zero())
        .map(|(k, &c)| (grid.point(lo + k), c))
        .collect();
    (0..nodes.len())
        .into_par_iter()
        .map(|j| {
            let t = nodes.at(j);
            let (mut re, mut im) = (T::zero(), T::zero());
            for &(x, c) in &terms {
                let (s, co) = (t * x).sin_cos();
                re += c * co;
                im -= c * s;
            }
            Complex::new(re, im)
        })
        .collect()
}

fn evaluate_chirp<T: Real>(
    f: &SampledFunction<T>,
    lo: usize,
    w: &[T],
    nodes: Nodes<T>,
) -> Vec<Complex<T>> {
    let h = f.grid().spacing();
    let origin = f.grid().point(lo);
    let (t0, dt) = nodes.start_and_step();
    let y: Vec<Complex<T>> = w
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            let phase = -(t0 * T::from_index(k) * h);
            Complex::from_polar(c, phase)
        })
        .collect();
    let x = chirp::chirp_z(&y, nodes.len(), dt * h);
    x.into_iter()
        .enumerate()
        .map(|(j, v)| v * Complex::from_polar(T::one(), -(nodes.at(j) * origin)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{DecayClass, Family, FamilySpec};

    fn box_fn(n: usize) -> SampledFunction<f64> {
        let g = Grid::new(-4.0, 4.0, n).unwrap();
        FamilySpec::new(Family::Box).sample(&g).unwrap()
    }

    #[test]
    fn zero_frequency_is_the_trapezoid_integral() {
        let g = Grid::new(-8.0, 8.0, 801).unwrap();
        let f = SampledFunction::from_fn(g, DecayClass::VanishingAtInfinity, |x: f64| {
            (-(x - 0.3) * (x - 0.3)).exp()
        })
        .unwrap();
        let r = fourier_transform(&f, 5.0, 101).unwrap();
        assert_eq!(r.frequency(50), 0.0);
        assert!((r.values()[50].re - f.integral()).abs() < 1e-14);
        assert!(r.values()[50].im.abs() < 1e-15);
    }

    #[test]
    fn gaussian_pair() {
        let g = Grid::new(-8.0, 8.0, 1601).unwrap();
        let f = SampledFunction::from_fn(g, DecayClass::VanishingAtInfinity, |x: f64| {
            (-x * x / 2.0).exp()
        })
        .unwrap();
        let r = fourier_transform(&f, 5.0, 201).unwrap();
        for (j, v) in r.values().iter().enumerate() {
            let t = r.frequency(j);
            let want = (2.0 * std::f64::consts::PI).sqrt() * (-t * t / 2.0).exp();
            assert!((v.re - want).abs() <= 1e-6 * want, "t={t}");
            assert!(v.im.abs() < 1e-12);
        }
    }

    #[test]
    fn chirp_matches_direct() {
        let f = box_fn(2049);
        let a = fourier_transform_with(&f, 300.0, 1001, FtMethod::Direct).unwrap();
        let b = fourier_transform_with(&f, 300.0, 1001, FtMethod::ChirpZ).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            assert!((x - y).norm() < 1e-10);
        }
    }

    #[test]
    fn symmetric_nodes_are_exact_mirrors() {
        let r = fourier_transform(&box_fn(513), 37.3, 77).unwrap();
        for j in 0..77 {
            assert_eq!(r.frequency(j), -r.frequency(76 - j));
        }
        assert!(r.conjugate_symmetry_defect() < 1e-14);
    }

    #[test]
    fn rejects_bad_arguments() {
        let f = box_fn(65);
        assert!(fourier_transform(&f, 0.0, 10).is_err());
        assert!(fourier_transform(&f, 1.0, 1).is_err());
        let p = f.clone().with_decay(DecayClass::Bounded).unwrap();
        assert!(matches!(
            fourier_transform(&p, 1.0, 10),
            Err(Error::WrongDecayClass { .. })
        ));
    }

    #[test]
    fn default_count_respects_spacing() {
        let f = box_fn(65);
        let c = 10.0;
        let m = default_frequency_count(&f, c);
        assert_eq!(m % 2, 1);
        assert!(2.0 * c / (m - 1) as f64 <= std::f64::consts::PI / 8.0 + 1e-15);
    }
}
