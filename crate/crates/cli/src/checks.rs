//! Built-in numerical checks, grouped by the property they exercise.
//!
//! Each group returns its reports in a fixed order. A check that cannot be
//! evaluated (for example because a precondition is violated) is reported as
//! a failure with the error text in its notes, never skipped.

use std::f64::consts::PI;

use bvf_core::fourier::{
    conjugate_coefficient_check, derivative_ft_identity, fourier_coefficients, hardy_check_with,
    HardyOptions,
};
use bvf_core::grid::derivative;
use bvf_core::hilbert::{hilbert_multiplier, hilbert_pv, kernel_difference, PvConfig};
use bvf_core::radial::{
    cosa_condition, fractional_integral, radial_ft_ibp_with, radial_ft_leray_with,
    radial_ft_oracle, zero_moment_bump,
};
use bvf_core::verify::{
    conjugate_derivative_defect, hardy_littlewood_verdict, ibp_consistency, Classification,
    INTERIOR_TRIM,
};
use bvf_core::{Family, FamilySpec, Grid64, Profile64, Sampled64, VerificationReport};

use crate::profile::Profile;

/// Half-width of the line interval used by every line check.
pub const LINE_HALF_WIDTH: f64 = 50.0;

type CheckResult = bvf_core::Result<Vec<VerificationReport>>;

fn line(fam: Family, n: usize) -> bvf_core::Result<Sampled64> {
    let g = Grid64::new(-LINE_HALF_WIDTH, LINE_HALF_WIDTH, n)?;
    FamilySpec::new(fam).sample(&g)
}

/// Converts an evaluation error into failing reports named `names`.
fn settle(names: &[&str], grid_n: usize, r: CheckResult) -> Vec<VerificationReport> {
    match r {
        Ok(v) => v,
        Err(e) => names
            .iter()
            .map(|n| {
                let mut rep = VerificationReport::new(*n, f64::NAN, 0.0, grid_n);
                rep.note("error", e.to_string().replace(' ', "_"));
                rep
            })
            .collect(),
    }
}

fn interior_sup(a: &Sampled64, b: impl Fn(usize) -> f64) -> f64 {
    let n = a.len();
    let trim = (INTERIOR_TRIM * n as f64) as usize;
    (trim..n - trim)
        .map(|i| (a.values()[i] - b(i)).abs())
        .fold(0.0, f64::max)
}

fn relative_sup(got: &[f64], want: &[f64]) -> f64 {
    let scale = want.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    got.iter()
        .zip(want)
        .map(|(g, w)| (g - w).abs() / w.abs().max(1e-2 * scale))
        .fold(0.0, f64::max)
}

/// Hilbert transform of the Poisson kernel through the principal value and the multiplier.
pub fn hilbert_pairs(p: &Profile) -> Vec<VerificationReport> {
    let names = ["poisson_pv", "poisson_multiplier"];
    settle(
        &names,
        p.n,
        (|| {
            let f = line(Family::PoissonKernel, p.n)?;
            let conj = |i: usize| {
                let x = f.grid().point(i);
                x / (PI * (1.0 + x * x))
            };
            let pv = hilbert_pv(&f, &PvConfig::default())?;
            let mult = hilbert_multiplier(&f)?;
            Ok(vec![
                VerificationReport::new(names[0], interior_sup(&pv, conj), p.tol.poisson_pv, p.n),
                VerificationReport::new(
                    names[1],
                    interior_sup(&mult, conj),
                    p.tol.poisson_multiplier,
                    p.n,
                ),
            ])
        })(),
    )
}

fn pv_multiplier_gap(n: usize) -> bvf_core::Result<f64> {
    let f = line(Family::Gaussian, n)?;
    let pv = hilbert_pv(&f, &PvConfig::default())?;
    let mult = hilbert_multiplier(&f)?;
    Ok(interior_sup(&pv, |i| mult.values()[i]))
}

/// Principal value against multiplier on a Gaussian, and the gap's decay under refinement.
pub fn cross_algorithm(p: &Profile) -> Vec<VerificationReport> {
    let names = ["gaussian_pv_vs_multiplier", "gaussian_cross_refinement"];
    settle(
        &names,
        p.n,
        (|| {
            let d1 = pv_multiplier_gap(p.n)?;
            let d2 = pv_multiplier_gap(2 * p.n)?;
            let mut ratio = VerificationReport::new(names[1], d2 / d1, p.tol.cross_ratio, 2 * p.n);
            ratio.note("gap_coarse", format!("{d1:.6e}"));
            ratio.note("gap_fine", format!("{d2:.6e}"));
            Ok(vec![
                VerificationReport::new(names[0], d1, p.tol.cross_algorithm, p.n),
                ratio,
            ])
        })(),
    )
}

fn defect(fam: Family, n: usize, bound: f64) -> bvf_core::Result<VerificationReport> {
    conjugate_derivative_defect(&line(fam, n)?, bound)
}

/// Derivative of the conjugate against the conjugate of the derivative.
pub fn lemma_dc(p: &Profile) -> Vec<VerificationReport> {
    let mut out = settle(
        &[
            "conjugate_derivative_defect_raised_cosine",
            "defect_refinement_raised_cosine",
            "defect_refinement_gaussian",
        ],
        p.n,
        (|| {
            let mut coarse = defect(Family::RaisedCosine, p.n, p.tol.defect)?;
            coarse.name = "conjugate_derivative_defect_raised_cosine".into();
            let fine = defect(Family::RaisedCosine, 2 * p.n, p.tol.defect)?;
            let mut rc = VerificationReport::new(
                "defect_refinement_raised_cosine",
                fine.measured / coarse.measured,
                p.tol.defect_ratio,
                2 * p.n,
            );
            rc.note("defect_fine", format!("{:.6e}", fine.measured));
            let g1 = defect(Family::Gaussian, p.n, f64::INFINITY)?;
            let g2 = defect(Family::Gaussian, 2 * p.n, f64::INFINITY)?;
            let mut gs = VerificationReport::new(
                "defect_refinement_gaussian",
                g2.measured / g1.measured,
                p.tol.gaussian_defect_ratio,
                2 * p.n,
            );
            gs.note("defect_coarse", format!("{:.6e}", g1.measured));
            gs.note("defect_fine", format!("{:.6e}", g2.measured));
            Ok(vec![coarse, rc, gs])
        })(),
    );

    out.extend(settle(
        &["ibp_limit_gaussian"],
        p.n,
        (|| {
            let f = line(Family::Gaussian, p.n)?;
            let h = f.grid().spacing();
            let deltas: Vec<f64> = [64.0, 32.0, 16.0, 8.0, 4.0].iter().map(|k| k * h).collect();
            let seq = ibp_consistency(&f, 1.0, &deltas)?;
            let target = hilbert_pv(&derivative(&f)?, &PvConfig::default())?.eval_linear(1.0);
            let last = seq[seq.len() - 1];
            let mut r = VerificationReport::new(
                "ibp_limit_gaussian",
                (last - target).abs(),
                p.tol.ibp_limit,
                p.n,
            );
            r.note("limit", format!("{target:.6e}"));
            Ok(vec![r])
        })(),
    ));

    for (fam, tol) in [
        (Family::RaisedCosine, p.tol.ft_identity_smooth),
        (Family::Triangle, p.tol.ft_identity_kink),
    ] {
        let name = format!("derivative_ft_identity_{}", fam.name());
        out.extend(settle(
            &[name.as_str()],
            p.n,
            (|| {
                let d = derivative_ft_identity(&line(fam, p.n)?)?;
                Ok(vec![VerificationReport::new(name.as_str(), d, tol, p.n)])
            })(),
        ));
    }
    out
}

/// Fourier mass of derivatives against their H¹ norm.
pub fn hardy(p: &Profile) -> Vec<VerificationReport> {
    let fams = [Family::Triangle, Family::RaisedCosine, Family::SmoothedBox];
    let mut out = Vec::new();
    let mut constants = Vec::new();
    for fam in fams {
        let names = [
            format!("hardy_{}", fam.name()),
            format!("cancellation_{}", fam.name()),
        ];
        let res = (|| {
            let mut reports = Vec::new();
            for n in [p.n / 2, p.n] {
                let g = derivative(&line(fam, n)?)?;
                let exact = HardyOptions {
                    rel_tol: 0.0,
                    ..HardyOptions::default()
                };
                let raw = hardy_check_with(&g, &exact)?;
                let h1 = raw.bound;
                let c = raw.measured / h1;
                constants.push(c);
                if n == p.n {
                    let mut r = VerificationReport::new(
                        names[0].as_str(),
                        raw.measured,
                        (1.0 + p.tol.hardy_rel) * h1,
                        n,
                    );
                    r.note("h1_norm", format!("{h1:.6e}"));
                    r.note("empirical_constant", format!("{c:.6e}"));
                    let residual = g.integral().abs() / g.l1_norm();
                    reports.push(r);
                    reports.push(VerificationReport::new(
                        names[1].as_str(),
                        residual,
                        p.tol.cancellation,
                        n,
                    ));
                }
            }
            Ok(reports)
        })();
        out.extend(settle(&[names[0].as_str(), names[1].as_str()], p.n, res));
    }

    let spread = if constants.len() == 2 * fams.len() {
        let mean = constants.iter().sum::<f64>() / constants.len() as f64;
        constants
            .iter()
            .map(|c| (c / mean - 1.0).abs())
            .fold(0.0, f64::max)
    } else {
        f64::NAN
    };
    let mut r = VerificationReport::new(
        "hardy_constant_spread",
        spread,
        p.tol.hardy_constant_spread,
        p.n,
    );
    let listed: Vec<String> = constants.iter().map(|c| format!("{c:.4e}")).collect();
    r.note("constants", listed.join(";"));
    out.push(r);
    out
}

/// Integrable Fourier mass for a continuous function of bounded variation.
pub fn growth_plateau(p: &Profile) -> Vec<VerificationReport> {
    let names = [
        "fourier_mass_plateau_triangle",
        "conjugate_tv_stable_triangle",
    ];
    settle(
        &names,
        p.n,
        (|| {
            let v = hardy_littlewood_verdict(&line(Family::Triangle, p.n)?, &p.growth_cutoffs)?;
            let fine =
                hardy_littlewood_verdict(&line(Family::Triangle, 2 * p.n)?, &p.growth_cutoffs)?;
            let mut tv = VerificationReport::new(
                names[1],
                (fine.tv_conjugate - v.tv_conjugate).abs(),
                p.tol.tv_change,
                2 * p.n,
            );
            tv.note("tv_coarse", format!("{:.6e}", v.tv_conjugate));
            tv.note("tv_fine", format!("{:.6e}", fine.tv_conjugate));
            Ok(vec![
                v.report(names[0], Classification::IntegrablePlateau),
                tv,
            ])
        })(),
    )
}

/// Logarithmic Fourier mass and unbounded conjugate variation for a jump.
///
/// Lower bounds are encoded as negated values so that `measured <= bound` holds on success.
pub fn growth_divergent(p: &Profile) -> Vec<VerificationReport> {
    let names = [
        "fourier_mass_log_divergent_box",
        "fourier_mass_slope_box",
        "conjugate_tv_growth_box",
    ];
    settle(
        &names,
        p.n,
        (|| {
            let v = hardy_littlewood_verdict(&line(Family::Box, p.n)?, &p.growth_cutoffs)?;
            let fine = hardy_littlewood_verdict(&line(Family::Box, 2 * p.n)?, &p.growth_cutoffs)?;
            let expected = 4.0 / PI;
            let mut slope = VerificationReport::new(
                names[1],
                (v.half_line_slope / expected - 1.0).abs(),
                p.tol.slope_rel,
                p.n,
            );
            slope.note("slope", format!("{:.6e}", v.half_line_slope));
            let growth = fine.tv_conjugate - v.tv_conjugate;
            let mut tv = VerificationReport::new(names[2], -growth, -p.tol.tv_growth, 2 * p.n);
            tv.note("tv_coarse", format!("{:.6e}", v.tv_conjugate));
            tv.note("tv_fine", format!("{:.6e}", fine.tv_conjugate));
            Ok(vec![
                v.report(names[0], Classification::LogDivergent),
                slope,
                tv,
            ])
        })(),
    )
}

/// Fourier series of the triangle wave and its conjugate.
pub fn periodic(p: &Profile) -> Vec<VerificationReport> {
    let names = [
        "conjugate_coefficients_triangle_wave",
        "abs_partial_sums_triangle_wave",
    ];
    settle(
        &names,
        p.periodic_n,
        (|| {
            let g = Grid64::new(-PI, PI, p.periodic_n)?;
            let f = FamilySpec::new(Family::TriangleWavePeriodic).sample(&g)?;
            let defect = conjugate_coefficient_check(&f, p.kmax)?;
            let coeffs = fourier_coefficients(&f, p.kmax)?;
            let sums = coeffs.abs_partial_sums();
            let half = sums[p.kmax / 2];
            let growth = (sums[p.kmax] - half) / half;
            let mut r =
                VerificationReport::new(names[1], growth, p.tol.partial_sum_growth, p.periodic_n);
            r.note("kmax", p.kmax);
            Ok(vec![
                VerificationReport::new(names[0], defect, p.tol.coefficient_moduli, p.periodic_n),
                r,
            ])
        })(),
    )
}

/// Radii `start, start + 0.1, ..., 10`.
fn radii_from(start: f64) -> Vec<f64> {
    let first = (start * 10.0).round() as usize;
    (first..=100).map(|k| k as f64 / 10.0).collect()
}

/// Unit ball in three dimensions, its cosa constant and a Gaussian volume limit.
pub fn radial_constants(p: &Profile) -> Vec<VerificationReport> {
    let names = [
        "unit_ball_transform",
        "unit_ball_volume",
        "unit_ball_cosa",
        "gaussian_volume_limit",
    ];
    settle(
        &names,
        p.radial_n,
        (|| {
            let ball = Profile64::from_fn(1.0, p.radial_n, 3, |_| 1.0)?;
            let radii = radii_from(0.1);
            let fi = fractional_integral(&ball)?;
            let got = radial_ft_leray_with(&fi, &radii)?;
            let want: Vec<f64> = radii
                .iter()
                .map(|r| 4.0 * PI * (r.sin() - r * r.cos()) / (r * r * r))
                .collect();
            let at0 = radial_ft_leray_with(&fi, &[0.0])?[0];
            let cosa = cosa_condition(&ball);

            let gauss = Profile64::from_fn(12.0, p.radial_n, 3, |s| (-s * s / 2.0).exp())?;
            let limit = radial_ft_leray_with(&fractional_integral(&gauss)?, &[0.0])?[0];
            let volume = (2.0 * PI).powf(1.5);
            Ok(vec![
                VerificationReport::new(
                    names[0],
                    relative_sup(&got, &want),
                    p.tol.unit_ball,
                    p.radial_n,
                ),
                VerificationReport::new(
                    names[1],
                    (at0 - 4.0 * PI / 3.0).abs(),
                    p.tol.unit_ball_volume,
                    p.radial_n,
                ),
                VerificationReport::new(
                    names[2],
                    (cosa - (2f64.ln() - 0.5)).abs(),
                    p.tol.cosa,
                    p.radial_n,
                ),
                VerificationReport::new(
                    names[3],
                    (limit / volume - 1.0).abs(),
                    p.tol.volume_limit,
                    p.radial_n,
                ),
            ])
        })(),
    )
}

/// Fractional-integral transform, its integrated-by-parts form and the Bessel oracle on bumps.
pub fn radial_agreement(p: &Profile) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let radii = radii_from(0.5);
    for dim in [2usize, 3] {
        let names = [format!("bump_leray_dim{dim}"), format!("bump_ibp_dim{dim}")];
        let res = (|| {
            let bump = zero_moment_bump::<f64>(dim, 2.0, 1.0, 4.0, p.radial_n)?;
            let fi = fractional_integral(&bump)?;
            let oracle = radial_ft_oracle(&bump, &radii)?;
            let leray = radial_ft_leray_with(&fi, &radii)?;
            let ibp = radial_ft_ibp_with(&fi, &radii)?;
            Ok(vec![
                VerificationReport::new(
                    names[0].as_str(),
                    relative_sup(&leray, &oracle),
                    p.tol.three_way,
                    p.radial_n,
                ),
                VerificationReport::new(
                    names[1].as_str(),
                    relative_sup(&ibp, &oracle),
                    p.tol.three_way,
                    p.radial_n,
                ),
            ])
        })();
        out.extend(settle(
            &[names[0].as_str(), names[1].as_str()],
            p.radial_n,
            res,
        ));
    }
    out.extend(settle(
        &["disc_fractional_integral"],
        p.radial_n,
        (|| {
            let disc = Profile64::from_fn(1.0, p.radial_n, 2, |_| 1.0)?;
            let fi = fractional_integral(&disc)?;
            let s = fi.samples();
            let err = s
                .grid()
                .points()
                .zip(s.values())
                .map(|(t, v)| (v - 2.0 / PI.sqrt() * (1.0 - t * t).max(0.0).sqrt()).abs())
                .fold(0.0, f64::max);
            Ok(vec![VerificationReport::new(
                "disc_fractional_integral",
                err,
                p.tol.disc_integral,
                p.radial_n,
            )])
        })(),
    ));
    out
}

/// Partial sums of the conjugate-kernel series against the closed form.
pub fn kernel_series(p: &Profile) -> Vec<VerificationReport> {
    const TERMS: usize = 10_000;
    let names = ["kernel_series_at_one", "kernel_oddness", "kernel_at_pi"];
    settle(
        &names,
        TERMS,
        (|| {
            let k1 = kernel_difference(1.0f64, TERMS)?;
            let mut odd = 0.0f64;
            for j in 1..=60 {
                let t = 0.1 * j as f64;
                let (a, b) = (kernel_difference(t, TERMS)?, kernel_difference(-t, TERMS)?);
                odd = odd
                    .max((a.partial_sum + b.partial_sum).abs())
                    .max((a.closed_form + b.closed_form).abs());
            }
            let at_pi = kernel_difference(PI, TERMS)?.closed_form;
            Ok(vec![
                VerificationReport::new(
                    names[0],
                    (k1.partial_sum - k1.closed_form).abs(),
                    p.tol.kernel_series,
                    TERMS,
                ),
                VerificationReport::new(names[1], odd, 0.0, TERMS),
                VerificationReport::new(
                    names[2],
                    (at_pi + 1.0 / PI).abs(),
                    p.tol.kernel_at_pi,
                    TERMS,
                ),
            ])
        })(),
    )
}
