use std::fmt;
use std::str::FromStr;

const REFERENCE_CUTOFFS: [f64; 4] = [25.0, 50.0, 100.0, 200.0];

/// Grid sizes and pass bounds for one verification campaign.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub name: &'static str,
    /// Node count on the line interval `[-50, 50]`; refinement checks also use `2n`.
    pub n: usize,
    /// Node count over one period `[-π, π]`, endpoint included.
    pub periodic_n: usize,
    pub kmax: usize,
    /// Node count for radial profiles on `[0, R]`.
    pub radial_n: usize,
    /// Cutoffs of the Fourier-mass growth test; the largest stays below `π/h`.
    pub growth_cutoffs: [f64; 4],
    pub tol: Tolerances,
}

/// Upper bounds applied to the measured quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances {
    pub poisson_pv: f64,
    pub poisson_multiplier: f64,
    pub cross_algorithm: f64,
    pub cross_ratio: f64,
    pub defect: f64,
    pub defect_ratio: f64,
    pub gaussian_defect_ratio: f64,
    pub ibp_limit: f64,
    pub ft_identity_smooth: f64,
    pub ft_identity_kink: f64,
    pub hardy_rel: f64,
    pub cancellation: f64,
    pub hardy_constant_spread: f64,
    pub plateau_growth: f64,
    pub slope_rel: f64,
    pub tv_growth: f64,
    pub tv_change: f64,
    pub coefficient_moduli: f64,
    pub partial_sum_growth: f64,
    pub unit_ball: f64,
    pub unit_ball_volume: f64,
    pub three_way: f64,
    pub disc_integral: f64,
    pub cosa: f64,
    pub volume_limit: f64,
    pub kernel_series: f64,
    pub kernel_at_pi: f64,
}

impl Tolerances {
    fn reference() -> Self {
        Self {
            poisson_pv: 1e-3,
            poisson_multiplier: 1e-6,
            cross_algorithm: 1e-3,
            cross_ratio: 0.5,
            defect: 1e-2,
            defect_ratio: 0.6,
            gaussian_defect_ratio: 0.5,
            ibp_limit: 1e-2,
            ft_identity_smooth: 1e-4,
            ft_identity_kink: 1e-2,
            hardy_rel: 1e-2,
            cancellation: 1e-8,
            hardy_constant_spread: 0.02,
            plateau_growth: 0.01,
            slope_rel: 0.05,
            tv_growth: 0.1,
            tv_change: 1e-3,
            coefficient_moduli: 1e-8,
            partial_sum_growth: 5e-3,
            unit_ball: 1e-4,
            unit_ball_volume: 1e-4,
            three_way: 1e-3,
            disc_integral: 1e-6,
            cosa: 1e-6,
            volume_limit: 1e-4,
            kernel_series: 1e-4,
            kernel_at_pi: 1e-15,
        }
    }
}

impl Profile {
    /// Coarse grids for a quick smoke run; bounds that depend on resolution are relaxed.
    pub fn fast() -> Self {
        let mut tol = Tolerances::reference();
        tol.poisson_multiplier = 1e-5;
        tol.ft_identity_smooth = 2e-3;
        tol.slope_rel = 0.15;
        Self {
            name: "fast",
            n: 1 << 12,
            periodic_n: (1 << 10) + 1,
            kmax: 256,
            radial_n: (1 << 12) + 1,
            growth_cutoffs: [12.5, 25.0, 50.0, 100.0],
            tol,
        }
    }

    pub fn default_profile() -> Self {
        Self {
            name: "default",
            n: 1 << 14,
            periodic_n: (1 << 12) + 1,
            kmax: 512,
            radial_n: (1 << 14) + 1,
            growth_cutoffs: REFERENCE_CUTOFFS,
            tol: Tolerances::reference(),
        }
    }

    pub fn strict() -> Self {
        Self {
            name: "strict",
            n: 1 << 15,
            periodic_n: (1 << 13) + 1,
            kmax: 1024,
            radial_n: (1 << 15) + 1,
            growth_cutoffs: REFERENCE_CUTOFFS,
            tol: Tolerances::reference(),
        }
    }
}

impl Default for Profile {
    fn default() -> Self {
        Self::default_profile()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fast" => Ok(Self::fast()),
            "default" => Ok(Self::default_profile()),
            "strict" => Ok(Self::strict()),
            other => Err(format!(
                "unknown profile `{other}` (expected fast, default or strict)"
            )),
        }
    }
}
