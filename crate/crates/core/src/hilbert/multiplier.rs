use num_complex::Complex;
use rayon::prelude::*;
use rustfft::FftPlanner;

use super::require_vanishing;
use super::tail::Tails;
use crate::error::{Error, Result};
use crate::grid::{DecayClass, SampledFunction};
use crate::scalar::Real;

/// Sign `s` of the Fourier multiplier `i·s·sign(ξ)` that realises the Hilbert
/// transform under `ĝ(ξ) = ∫ g(x) e^{-iξx} dx`. Pinned by the Poisson /
/// conjugate-Poisson pair.
pub const MULTIPLIER_SIGN: f64 = -1.0;

/// Zero-padding factor: the periodic wrap length is at least this many spans.
const PAD_FACTOR: usize = 4;
const IMAG_RESIDUE_REL: f64 = 1e-8;
/// Cut-off for the cotangent-series correction terms.
const SERIES_TOL: f64 = 1e-18;

/// Hilbert transform by the frequency multiplier `i·MULTIPLIER_SIGN·sign(ξ)`
/// applied to the zero-padded discrete transform.
///
/// The discrete multiplier acts on the periodised samples, i.e. with a
/// cotangent kernel of period `L`; the smooth difference to `1/u` is added
/// back through its power series in `u/L`. Vanishing tails are extrapolated
/// as in [`super::hilbert_pv`].
pub fn hilbert_multiplier<T: Real>(f: &SampledFunction<T>) -> Result<SampledFunction<T>> {
    require_vanishing(f, "hilbert_multiplier")?;
    let g = *f.grid();
    let n = f.len();
    let h = g.spacing();
    let m = (PAD_FACTOR * n).next_power_of_two();

    let mut buf: Vec<Complex<T>> = f
        .values()
        .iter()
        .map(|&v| Complex::new(v, T::zero()))
        .chain(std::iter::repeat(Complex::new(T::zero(), T::zero())))
        .take(m)
        .collect();

    let mut planner = FftPlanner::<T>::new();
    planner.plan_fft_forward(m).process(&mut buf);
    let s = T::lit(MULTIPLIER_SIGN);
    for (k, c) in buf.iter_mut().enumerate() {
        let sign = match k {
            0 => T::zero(),
            k if 2 * k == m => T::zero(),
            k if 2 * k < m => T::one(),
            _ => -T::one(),
        };
        // multiply by i·s·sign
        *c = Complex::new(-c.im, c.re) * (s * sign);
    }
    planner.plan_fft_inverse(m).process(&mut buf);

    let scale = T::one() / T::from_index(m);
    let mut out: Vec<T> = buf[..n].iter().map(|c| c.re * scale).collect();
    let max_re = out.iter().fold(T::zero(), |a, v| a.max(v.abs()));
    let max_im = buf[..n]
        .iter()
        .fold(T::zero(), |a, c| a.max((c.im * scale).abs()));
    let residue_floor = T::lit(IMAG_RESIDUE_REL) * max_re.max(T::epsilon());
    if max_im > residue_floor && max_im > T::epsilon() * T::from_index(n) {
        return Err(Error::InvalidSamples(format!(
            "imaginary residue {max_im:e} after the inverse transform"
        )));
    }

    let period = T::from_index(m) * h;
    periodic_kernel_correction(f, period, &mut out);

    if let Some(tails) = Tails::fit(f, false) {
        out.par_iter_mut().enumerate().for_each(|(i, v)| {
            *v += tails.at(g.point(i));
        });
    }
    Ok(SampledFunction::from_parts(
        g,
        out,
        DecayClass::VanishingAtInfinity,
    ))
}

/// Adds `(1/π) ∫ f(t) k(x-t) dt` with `k(u) = 1/u - (π/L)cot(πu/L)
/// = Σ_{j≥1} 2ζ(2j) u^{2j-1} / L^{2j}`.
fn periodic_kernel_correction<T: Real>(f: &SampledFunction<T>, period: T, out: &mut [T]) {
    let g = f.grid();
    let h = g.spacing();
    let centre = T::half() * (g.a() + g.b());
    let ratio = (g.span() / period).to_f64_lossy();
    // (span/L)^{2J} below the tolerance
    let terms = ((SERIES_TOL.ln() / ratio.ln()) / 2.0).ceil().max(1.0) as usize;
    let max_pow = 2 * terms - 1;

    // ν_m = ∫ f(t) (-(t-c)/L)^m dt
    let mut nu = vec![T::zero(); max_pow + 1];
    let n = f.len();
    for (i, (&v, t)) in f.values().iter().zip(g.points()).enumerate() {
        let w = if i == 0 || i + 1 == n {
            T::half()
        } else {
            T::one()
        };
        let tau = -(t - centre) / period;
        let mut pw = v * w * h;
        for slot in nu.iter_mut() {
            *slot += pw;
            pw *= tau;
        }
    }

    let zetas: Vec<T> = (1..=terms).map(|j| T::lit(zeta_even(j))).collect();
    let binom: Vec<Vec<T>> = binomial_rows(max_pow);
    let inv = T::one() / (T::PI() * period);
    for (i, o) in out.iter_mut().enumerate() {
        let xs = (g.point(i) - centre) / period;
        let mut xp = vec![T::one(); max_pow + 1];
        for q in 1..=max_pow {
            xp[q] = xp[q - 1] * xs;
        }
        let mut acc = T::zero();
        for (jm1, &z) in zetas.iter().enumerate() {
            let p = 2 * jm1 + 1;
            let mut inner = T::zero();
            for q in 0..=p {
                inner += binom[p][q] * xp[q] * nu[p - q];
            }
            acc += T::two() * z * inner;
        }
        *o += acc * inv;
    }
}

fn binomial_rows<T: Real>(max: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(max + 1);
    for p in 0..=max {
        let mut row = vec![T::one(); p + 1];
        for q in 1..p {
            row[q] = rows[p - 1][q - 1] + rows[p - 1][q];
        }
        rows.push(row);
    }
    rows
}

/// `ζ(2j)` by direct summation with an Euler–Maclaurin tail.
pub(crate) fn zeta_even(j: usize) -> f64 {
    let s = 2.0 * j as f64;
    const N: usize = 64;
    let head: f64 = (1..N).rev().map(|k| (k as f64).powf(-s)).sum();
    let nf = N as f64;
    let tail = nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s) + s * nf.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * nf.powf(-s - 3.0) / 720.0;
    head + tail
}
