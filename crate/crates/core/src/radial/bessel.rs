//! `Λ_ν(x) = J_ν(x) / x^ν` for integer and half-integer `ν ≥ -1/2`.
//!
//! `Λ_ν` is entire and even, with `Λ_ν(0) = 1 / (2^ν Γ(ν+1))`, so the radial
//! Fourier kernel `r^{-ν} J_ν(rs) s^{ν}` equals `Λ_ν(rs)` without a singular
//! prefactor at `r = 0`.

use std::f64::consts::PI;

/// `Γ(m/2)` for a positive integer `m`.
pub(crate) fn gamma_half(m: usize) -> f64 {
    assert!(m > 0, "gamma_half needs a positive argument");
    if m.is_multiple_of(2) {
        (1..m / 2).map(|k| k as f64).product()
    } else {
        // Γ(j + 1/2) = (j - 1/2) Γ(j - 1/2), Γ(1/2) = √π
        let mut g = PI.sqrt();
        let mut x = 0.5;
        while 2.0 * x < m as f64 {
            g *= x;
            x += 1.0;
        }
        g
    }
}

/// Scaled Bessel function of order `ν = twice_nu / 2`, `twice_nu >= -1`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ScaledBessel {
    twice_nu: i32,
    at_zero: f64,
}

impl ScaledBessel {
    pub(crate) fn new(twice_nu: i32) -> Self {
        assert!(twice_nu >= -1, "order below -1/2 is not supported");
        let nu = 0.5 * twice_nu as f64;
        let gamma = gamma_half((twice_nu + 2) as usize);
        Self {
            twice_nu,
            at_zero: 1.0 / (2f64.powf(nu) * gamma),
        }
    }

    fn nu(&self) -> f64 {
        0.5 * self.twice_nu as f64
    }

    pub(crate) fn eval(&self, x: f64) -> f64 {
        let x = x.abs();
        let nu = self.nu();
        if x <= 4.0_f64.max(nu) {
            return self.series(x);
        }
        let j = if self.twice_nu % 2 == 0 {
            bessel_integer((self.twice_nu / 2) as usize, x)
        } else {
            bessel_half_integer(self.twice_nu, x)
        };
        j / x.powf(nu)
    }

    fn series(&self, x: f64) -> f64 {
        let nu = self.nu();
        let q = -0.25 * x * x;
        let mut term = self.at_zero;
        let mut sum = term;
        for k in 1..200 {
            let kf = k as f64;
            term *= q / (kf * (kf + nu));
            sum += term;
            if term.abs() <= 1e-17 * sum.abs() {
                break;
            }
        }
        sum
    }
}

/// `J_m(x) = (1/2π) ∫_0^{2π} cos(mτ - x sin τ) dτ`; the trapezoid rule on the
/// full period converges geometrically once the node count exceeds `x + m`.
fn bessel_integer(m: usize, x: f64) -> f64 {
    let nodes = 2 * ((x.ceil() as usize + m + 48) / 2);
    let step = 2.0 * PI / nodes as f64;
    let mf = m as f64;
    let sum: f64 = (0..nodes)
        .map(|j| {
            let tau = j as f64 * step;
            (mf * tau - x * tau.sin()).cos()
        })
        .sum();
    sum / nodes as f64
}

/// `J_{l+1/2}` by upward recurrence from `J_{±1/2}`; stable for `x > ν`.
fn bessel_half_integer(twice_nu: i32, x: f64) -> f64 {
    let pref = (2.0 / (PI * x)).sqrt();
    let mut prev = pref * x.cos(); // J_{-1/2}
    if twice_nu == -1 {
        return prev;
    }
    let mut cur = pref * x.sin(); // J_{1/2}
    let mut nu = 0.5;
    while (2.0 * nu) < twice_nu as f64 {
        let next = 2.0 * nu / x * cur - prev;
        prev = cur;
        cur = next;
        nu += 1.0;
    }
    cur
}
