use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{DecayClass, Grid, SampledFunction};
use crate::error::{param, Error, Result};
use crate::scalar::Real;

/// Built-in analytic test functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Indicator of `[-width/2, width/2]`.
    Box,
    /// Hat of height 1 supported on `[-width/2, width/2]`.
    Triangle,
    /// `exp(-x²/(2σ²))`, peak 1.
    Gaussian,
    /// `a / (π (a² + x²))`.
    PoissonKernel,
    /// `x / (π (a² + x²))`, the Hilbert transform of the Poisson kernel.
    ConjugatePoisson,
    /// `(1 + cos(2πx/width)) / 2` on `[-width/2, width/2]`.
    RaisedCosine,
    /// `1 - 4|x|/period` reduced to one period: peak 1 at 0, -1 at the half period.
    TriangleWavePeriodic,
    /// Unit plateau on `[-width/2, width/2]` with raised-cosine shoulders of length `ramp`.
    SmoothedBox,
    /// `tanh(x/scale)`; bounded but not integrable.
    SmoothStep,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Box,
        Family::Triangle,
        Family::Gaussian,
        Family::PoissonKernel,
        Family::ConjugatePoisson,
        Family::RaisedCosine,
        Family::TriangleWavePeriodic,
        Family::SmoothedBox,
        Family::SmoothStep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Box => "box",
            Family::Triangle => "triangle",
            Family::Gaussian => "gaussian",
            Family::PoissonKernel => "poisson_kernel",
            Family::ConjugatePoisson => "conjugate_poisson",
            Family::RaisedCosine => "raised_cosine",
            Family::TriangleWavePeriodic => "triangle_wave_periodic",
            Family::SmoothedBox => "smoothed_box",
            Family::SmoothStep => "smooth_step",
        }
    }

    pub fn decay_class(self) -> DecayClass {
        match self {
            Family::Box | Family::Triangle | Family::RaisedCosine | Family::SmoothedBox => {
                DecayClass::CompactSupport
            }
            Family::Gaussian | Family::PoissonKernel | Family::ConjugatePoisson => {
                DecayClass::VanishingAtInfinity
            }
            Family::TriangleWavePeriodic => DecayClass::Periodic,
            Family::SmoothStep => DecayClass::Bounded,
        }
    }

    /// Parameter names and defaults.
    fn defaults(self) -> &'static [(&'static str, f64)] {
        match self {
            Family::Box | Family::Triangle | Family::RaisedCosine => &[("width", 2.0)],
            Family::Gaussian => &[("sigma", 1.0)],
            Family::PoissonKernel | Family::ConjugatePoisson => &[("a", 1.0)],
            Family::TriangleWavePeriodic => &[("period", std::f64::consts::TAU)],
            Family::SmoothedBox => &[("width", 2.0), ("ramp", 0.5)],
            Family::SmoothStep => &[("scale", 1.0)],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let fam = match key.as_str() {
            "box" => Family::Box,
            "triangle" => Family::Triangle,
            "gaussian" => Family::Gaussian,
            "poisson" | "poisson_kernel" => Family::PoissonKernel,
            "conjugate_poisson" => Family::ConjugatePoisson,
            "raised_cosine" => Family::RaisedCosine,
            "triangle_wave" | "triangle_wave_periodic" => Family::TriangleWavePeriodic,
            "smoothed_box" => Family::SmoothedBox,
            "smooth_step" => Family::SmoothStep,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        };
        Ok(fam)
    }
}

/// A family plus its named real parameters. Missing parameters take the family default.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<String, f64>,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Result<f64> {
        let default = self
            .family
            .defaults()
            .iter()
            .find(|(k, _)| *k == name)
            .map(|&(_, v)| v);
        match (self.params.get(name), default) {
            (Some(&v), Some(_)) => Ok(v),
            (None, Some(v)) => Ok(v),
            _ => Err(Error::InvalidParameter {
                name: "params",
                reason: format!("family {} has no parameter `{name}`", self.family),
            }),
        }
    }

    /// Rejects unknown keys and non-positive or non-finite scales.
    pub fn validate(&self) -> Result<()> {
        let defaults = self.family.defaults();
        for key in self.params.keys() {
            if !defaults.iter().any(|(k, _)| k == key) {
                return Err(param(
                    "params",
                    format!("family {} has no parameter `{key}`", self.family),
                ));
            }
        }
        for (key, _) in defaults {
            let v = self.get(key)?;
            if !(v.is_finite() && v > 0.0) {
                return Err(param(
                    "params",
                    format!("`{key}` must be finite and strictly positive, got {v}"),
                ));
            }
        }
        Ok(())
    }

    /// Closed-form value at `x`.
    pub fn eval<T: Real>(&self, x: T) -> Result<T> {
        self.validate()?;
        Ok(self.evaluator::<T>()(x))
    }

    fn evaluator<T: Real>(&self) -> Box<dyn Fn(T) -> T + Send + Sync> {
        let p = |k: &str| T::lit(self.get(k).expect("validated"));
        let one = T::one();
        let zero = T::zero();
        let pi = T::PI();
        match self.family {
            Family::Box => {
                let half = p("width") * T::half();
                Box::new(move |x: T| if x.abs() <= half { one } else { zero })
            }
            Family::Triangle => {
                let half = p("width") * T::half();
                Box::new(move |x: T| (one - x.abs() / half).max(zero))
            }
            Family::Gaussian => {
                let s = p("sigma");
                Box::new(move |x: T| (-(x * x) / (T::two() * s * s)).exp())
            }
            Family::PoissonKernel => {
                let a = p("a");
                Box::new(move |x: T| a / (pi * (a * a + x * x)))
            }
            Family::ConjugatePoisson => {
                let a = p("a");
                Box::new(move |x: T| x / (pi * (a * a + x * x)))
            }
            Family::RaisedCosine => {
                let w = p("width");
                let half = w * T::half();
                Box::new(move |x: T| {
                    if x.abs() <= half {
                        T::half() * (one + (T::two() * pi * x / w).cos())
                    } else {
                        zero
                    }
                })
            }
            Family::TriangleWavePeriodic => {
                let period = p("period");
                Box::new(move |x: T| {
                    let r = x - period * (x / period).round();
                    one - T::lit(4.0) * r.abs() / period
                })
            }
            Family::SmoothedBox => {
                let plateau = p("width") * T::half();
                let ramp = p("ramp");
                Box::new(move |x: T| {
                    let d = x.abs() - plateau;
                    if d <= zero {
                        one
                    } else if d < ramp {
                        T::half() * (one + (pi * d / ramp).cos())
                    } else {
                        zero
                    }
                })
            }
            Family::SmoothStep => {
                let s = p("scale");
                Box::new(move |x: T| (x / s).tanh())
            }
        }
    }

    /// Samples the closed form at every node; the decay class follows the family.
    pub fn sample<T: Real>(&self, grid: &Grid<T>) -> Result<SampledFunction<T>> {
        self.validate()?;
        let f = self.evaluator::<T>();
        SampledFunction::from_fn(*grid, self.family.decay_class(), f)
    }
}

/// Samples `spec` on `grid`.
pub fn sample<T: Real>(spec: &FamilySpec, grid: &Grid<T>) -> Result<SampledFunction<T>> {
    spec.sample(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn at(spec: &FamilySpec, x: f64) -> f64 {
        spec.eval(x).unwrap()
    }

    #[test]
    fn trivial_values() {
        let b = FamilySpec::new(Family::Box).with("width", 2.0);
        assert_eq!(at(&b, 0.0), 1.0);
        assert_eq!(at(&b, 3.0), 0.0);
        assert_eq!(at(&FamilySpec::new(Family::PoissonKernel), 0.0), 1.0 / PI);
        assert_eq!(at(&FamilySpec::new(Family::Gaussian), 0.0), 1.0);
        assert_eq!(at(&FamilySpec::new(Family::Triangle), 0.5), 0.5);
        let tw = FamilySpec::new(Family::TriangleWavePeriodic);
        assert_eq!(at(&tw, 0.0), 1.0);
        assert!((at(&tw, PI) + 1.0).abs() < 1e-15);
        assert!((at(&tw, 2.0 * PI + 0.3) - at(&tw, 0.3)).abs() < 1e-12);
    }

    #[test]
    fn decay_classes_follow_family() {
        assert_eq!(Family::Box.decay_class(), DecayClass::CompactSupport);
        assert_eq!(Family::Triangle.decay_class(), DecayClass::CompactSupport);
        assert_eq!(
            Family::Gaussian.decay_class(),
            DecayClass::VanishingAtInfinity
        );
        assert_eq!(
            Family::PoissonKernel.decay_class(),
            DecayClass::VanishingAtInfinity
        );
        assert_eq!(
            Family::TriangleWavePeriodic.decay_class(),
            DecayClass::Periodic
        );
    }

    #[test]
    fn bad_params_rejected() {
        assert!(FamilySpec::new(Family::Gaussian)
            .with("sigma", 0.0)
            .validate()
            .is_err());
        assert!(FamilySpec::new(Family::Gaussian)
            .with("sigma", -1.0)
            .validate()
            .is_err());
        assert!(FamilySpec::new(Family::Gaussian)
            .with("width", 1.0)
            .validate()
            .is_err());
        assert!("hexagon".parse::<Family>().is_err());
    }

    #[test]
    fn names_parse_back() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("poisson".parse::<Family>().unwrap(), Family::PoissonKernel);
    }

    #[test]
    fn compact_family_on_too_small_grid_fails() {
        let g = Grid::<f64>::new(-0.5, 0.5, 11).unwrap();
        assert!(FamilySpec::new(Family::Box).sample(&g).is_err());
    }

    #[test]
    fn samples_match_closed_forms() {
        let g = Grid::<f64>::new(-8.0, 8.0, 1025).unwrap();
        for fam in [
            Family::Gaussian,
            Family::PoissonKernel,
            Family::ConjugatePoisson,
            Family::RaisedCosine,
            Family::Triangle,
            Family::SmoothedBox,
        ] {
            let spec = FamilySpec::new(fam);
            let s = spec.sample(&g).unwrap();
            for (x, v) in g.points().zip(s.values()) {
                assert!((v - at(&spec, x)).abs() <= 1e-14, "{fam} at {x}");
            }
        }
    }
}
