//! Structural invariants checked on randomly generated inputs.

use proptest::prelude::*;

use bvf_core::fourier::{fourier_transform, fourier_transform_with, l1_norm_ft, FtMethod};
use bvf_core::grid::total_variation;
use bvf_core::hilbert::{hilbert_multiplier, hilbert_pv, kernel_difference, PvConfig};
use bvf_core::radial::{fractional_integral, RadialProfile};
use bvf_core::verify::detect_jumps;
use bvf_core::{DecayClass, Grid64, Sampled64};

const N: usize = 257;

/// Smooth random bump combination `Σ c_k exp(-(x - m_k)²/ (2 w_k²))` on `[-10, 10]`.
fn bumps() -> impl Strategy<Value = Sampled64> {
    proptest::collection::vec((-2.0f64..2.0, -3.0f64..3.0, 0.4f64..1.5), 1..4).prop_map(|ps| {
        let g = Grid64::new(-10.0, 10.0, N).unwrap();
        Sampled64::from_fn(g, DecayClass::VanishingAtInfinity, move |x| {
            ps.iter()
                .map(|(c, m, w)| c * (-(x - m) * (x - m) / (2.0 * w * w)).exp())
                .sum()
        })
        .unwrap()
    })
}

fn raw_values() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-5.0f64..5.0, 2..64)
}

fn bounded(v: Vec<f64>) -> Sampled64 {
    let g = Grid64::new(0.0, 1.0, v.len()).unwrap();
    Sampled64::new(g, v, DecayClass::Bounded).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn total_variation_ignores_constant_shifts(v in raw_values(), c in -10.0f64..10.0) {
        let f = bounded(v);
        let shifted = f.map(|x| x + c);
        prop_assert!((total_variation(&f) - total_variation(&shifted)).abs() <= 1e-12 * (1.0 + total_variation(&f)));
    }

    #[test]
    fn total_variation_is_subadditive(a in raw_values(), b in raw_values()) {
        let n = a.len().min(b.len());
        let f = bounded(a[..n].to_vec());
        let g = bounded(b[..n].to_vec());
        let sum = f.add(&g).unwrap();
        prop_assert!(total_variation(&sum) <= total_variation(&f) + total_variation(&g) + 1e-12);
    }

    #[test]
    fn fourier_transform_is_linear(f in bumps(), g in bumps(), a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let combo = f.scale(a).add(&g.scale(b)).unwrap();
        let tf = fourier_transform(&f, 8.0, 65).unwrap();
        let tg = fourier_transform(&g, 8.0, 65).unwrap();
        let tc = fourier_transform(&combo, 8.0, 65).unwrap();
        let scale = 1.0 + a.abs() * f.l1_norm() + b.abs() * g.l1_norm();
        for j in 0..65 {
            let want = tf.values()[j] * a + tg.values()[j] * b;
            prop_assert!((tc.values()[j] - want).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn real_input_gives_conjugate_symmetry(f in bumps(), cutoff in 0.5f64..40.0) {
        let t = fourier_transform(&f, cutoff, 81).unwrap();
        prop_assert!(t.conjugate_symmetry_defect() <= 1e-10);
        prop_assert!((t.values()[40].re - f.integral()).abs() <= 1e-13 * (1.0 + f.l1_norm()));
    }

    #[test]
    fn chirp_path_matches_direct(f in bumps(), cutoff in 1.0f64..60.0) {
        let d = fourier_transform_with(&f, cutoff, 97, FtMethod::Direct).unwrap();
        let c = fourier_transform_with(&f, cutoff, 97, FtMethod::ChirpZ).unwrap();
        for (x, y) in d.values().iter().zip(c.values()) {
            prop_assert!((x - y).norm() <= 1e-10 * (1.0 + f.l1_norm()));
        }
    }

    #[test]
    fn ft_mass_is_monotone(f in bumps(), mut cuts in proptest::collection::vec(0.1f64..30.0, 1..8)) {
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let m = l1_norm_ft(&f, &cuts).unwrap();
        for w in m.windows(2) {
            prop_assert!(w[1] >= w[0]);
        }
    }

    #[test]
    fn hilbert_transforms_are_linear(f in bumps(), g in bumps(), a in -2.0f64..2.0) {
        let cfg = PvConfig::default();
        let combo = f.scale(a).add(&g).unwrap();
        let lhs = hilbert_pv(&combo, &cfg).unwrap();
        let hf = hilbert_pv(&f, &cfg).unwrap();
        let hg = hilbert_pv(&g, &cfg).unwrap();
        let scale = 1.0 + combo.sup_norm() + f.sup_norm() + g.sup_norm();
        for i in 0..N {
            let want = a * hf.values()[i] + hg.values()[i];
            prop_assert!((lhs.values()[i] - want).abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn even_input_has_odd_transform(c in 0.1f64..3.0, w in 0.3f64..2.0) {
        let g = Grid64::new(-10.0, 10.0, N).unwrap();
        let f = Sampled64::from_fn(g, DecayClass::VanishingAtInfinity, |x| c * (-x * x / (2.0 * w * w)).exp()).unwrap();
        for h in [hilbert_pv(&f, &PvConfig::default()).unwrap(), hilbert_multiplier(&f).unwrap()] {
            for i in 0..N {
                prop_assert!((h.values()[i] + h.values()[N - 1 - i]).abs() <= 1e-10 * c);
            }
        }
    }

    #[test]
    fn kernel_difference_is_odd(t in -6.2f64..6.2, terms in 1usize..200) {
        let p = kernel_difference(t, terms).unwrap();
        let m = kernel_difference(-t, terms).unwrap();
        prop_assert_eq!(p.partial_sum, -m.partial_sum);
        prop_assert_eq!(p.closed_form, -m.closed_form);
    }

    #[test]
    fn fractional_integral_is_linear(dim in 2usize..6, a in -2.0f64..2.0, k in 1.0f64..4.0) {
        let f = |s: f64| (-(s - 1.5) * (s - 1.5) * k).exp();
        let g = |s: f64| s * (3.0 - s).max(0.0);
        let pf = RadialProfile::from_fn(3.0, 201, dim, f).unwrap();
        let pg = RadialProfile::from_fn(3.0, 201, dim, g).unwrap();
        let ps = RadialProfile::from_fn(3.0, 201, dim, |s| a * f(s) + g(s)).unwrap();
        let (i_f, i_g, i_s) = (
            fractional_integral(&pf).unwrap(),
            fractional_integral(&pg).unwrap(),
            fractional_integral(&ps).unwrap(),
        );
        for j in 0..201 {
            let want = a * i_f.samples().values()[j] + i_g.samples().values()[j];
            prop_assert!((i_s.samples().values()[j] - want).abs() <= 1e-12 * (1.0 + want.abs()));
        }
    }

    #[test]
    fn fractional_integral_vanishes_beyond_the_support(dim in 2usize..6, edge in 0.5f64..2.5) {
        let p = RadialProfile::from_fn(3.0, 301, dim, |s| if s < edge { 1.0 + s } else { 0.0 }).unwrap();
        let fi = fractional_integral(&p).unwrap();
        let g = fi.samples().grid();
        let last_nonzero = p.f0().values().iter().rposition(|v| *v != 0.0).unwrap();
        for j in last_nonzero + 1..g.len() {
            prop_assert_eq!(fi.samples().values()[j], 0.0);
        }
    }

    #[test]
    fn steps_are_detected(pos in 10usize..90, height in 0.5f64..5.0) {
        let v: Vec<f64> = (0..100).map(|i| 0.001 * (i as f64).sin() + if i > pos { height } else { 0.0 }).collect();
        prop_assert_eq!(detect_jumps(&v), vec![pos]);
    }
}
