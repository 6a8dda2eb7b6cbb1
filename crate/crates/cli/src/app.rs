//! Command-line definitions and the command implementations.

use std::fmt;
use std::fmt::Write as _;
use std::io;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bvf_core::fourier::{
    default_cutoff, default_frequency_count, fourier_transform_with, FtMethod,
};
use bvf_core::grid::read_samples_csv;
use bvf_core::hilbert::{
    hilbert_multiplier, hilbert_pv, modified_hilbert, periodic_conjugate, PvConfig,
};
use bvf_core::radial::{
    fractional_integral, radial_ft_ibp_with, radial_ft_leray_with, radial_ft_oracle,
    read_profile_csv, zero_moment_bump,
};
use bvf_core::{DecayClass, Family, FamilySpec, Grid64, Profile64, Sampled64};

use crate::output::{csv_twin, emit, number, render_csv, render_text, write_atomic};
use crate::profile::Profile;
use crate::suites::Suite;

pub const DEFAULT_LINE_N: usize = 1 << 14;
pub const DEFAULT_PERIODIC_N: usize = (1 << 12) + 1;
pub const DEFAULT_RADIAL_N: usize = (1 << 12) + 1;

#[derive(Debug, Parser)]
#[command(
    name = "bvf",
    version,
    about = "Hilbert and Fourier transforms of functions of bounded variation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fourier transform on a symmetric frequency grid; writes `t,re,im`.
    Transform(TransformArgs),
    /// Hilbert transform or periodic conjugate; writes `x,value`.
    Hilbert(HilbertArgs),
    /// Fourier transform of a radial function; writes `r,leray,ibp,oracle`.
    Radial(RadialArgs),
    /// Runs a verification suite and writes a report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Built-in family (box, triangle, gaussian, poisson, conjugate_poisson,
    /// raised_cosine, triangle_wave, smoothed_box, smooth_step).
    #[arg(long, required_unless_present = "csv", conflicts_with = "csv")]
    pub family: Option<String>,
    /// Two-column CSV of equispaced samples with a header row.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Decay class of CSV input.
    #[arg(long, default_value = "vanishing_at_infinity", requires = "csv")]
    pub decay: String,
    /// Family parameter as `name=value`; may be repeated.
    #[arg(long = "param", value_name = "NAME=VALUE", value_parser = parse_param)]
    pub params: Vec<(String, f64)>,
    #[arg(long)]
    pub width: Option<f64>,
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long)]
    pub ramp: Option<f64>,
    #[arg(long)]
    pub period: Option<f64>,
    #[arg(long)]
    pub scale: Option<f64>,
    /// Left end of the sampling interval.
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Right end of the sampling interval.
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Number of samples, endpoints included.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Largest frequency; defaults to π/h.
    #[arg(long)]
    pub cutoff: Option<f64>,
    /// Number of frequencies; defaults to an odd count resolving the sampling interval.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_enum, default_value_t = FtChoice::Auto)]
    pub method: FtChoice,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FtChoice {
    Auto,
    Direct,
    ChirpZ,
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// `auto` picks periodic, modified or principal value from the decay class.
    #[arg(long, value_enum, default_value_t = HilbertChoice::Auto)]
    pub method: HilbertChoice,
    /// Inner cut-off of the principal value, at most the grid spacing.
    #[arg(long)]
    pub delta_min: Option<f64>,
    /// Ignore the function outside the sampling interval instead of extrapolating tails.
    #[arg(long)]
    pub truncate: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HilbertChoice {
    Auto,
    Pv,
    Multiplier,
    Modified,
    Periodic,
}

#[derive(Debug, Args)]
pub struct RadialArgs {
    /// Profile family evaluated at `s = |x|`, or `bump` for the zero-moment test bump.
    #[arg(long, required_unless_present = "csv", conflicts_with = "csv")]
    pub family: Option<String>,
    /// `s,f0` CSV starting at `s = 0`.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub dim: usize,
    /// Outer radius of the profile support.
    #[arg(long, default_value_t = 4.0)]
    pub radius: f64,
    #[arg(long, default_value_t = DEFAULT_RADIAL_N)]
    pub n: usize,
    #[arg(long = "param", value_name = "NAME=VALUE", value_parser = parse_param)]
    pub params: Vec<(String, f64)>,
    /// Comma-separated radii; `start:stop:step` ranges are expanded.
    #[arg(long, default_value = "0.5:10:0.5")]
    pub radii: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// hardy, lemma-dc, hardy-littlewood, radial, periodic or all.
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    /// fast, default or strict.
    #[arg(long, default_value = "default")]
    pub profile: Profile,
    /// Report path; a CSV twin is written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure categories, each with its own process exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Io(io::Error),
    ChecksFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ChecksFailed { .. } => 1,
            CliError::Usage(_) => 2,
            CliError::Data(_) => 65,
            CliError::Io(_) => 74,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Data(m) => write!(f, "data error: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::ChecksFailed { failed, total } => {
                write!(f, "{failed} of {total} checks failed")
            }
        }
    }
}

impl std::error::Error for CliError {}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Parameter mistakes are usage errors; everything else concerns the data.
impl From<bvf_core::Error> for CliError {
    fn from(e: bvf_core::Error) -> Self {
        use bvf_core::Error as E;
        match e {
            E::InvalidParameter { .. } | E::UnknownFamily(_) | E::Aliasing { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Data(other.to_string()),
        }
    }
}

fn parse_param(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, got `{s}`"))?;
    let v: f64 = v
        .trim()
        .parse()
        .map_err(|e| format!("bad value for `{k}`: {e}"))?;
    Ok((k.trim().to_string(), v))
}

/// Expands `0.5,1,2:4:0.5` into a list of radii.
pub fn parse_radii(s: &str) -> Result<Vec<f64>, CliError> {
    let bad = |m: String| CliError::Usage(format!("--radii: {m}"));
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let parts: Vec<&str> = item.split(':').collect();
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| bad(format!("`{t}`: {e}")))
        };
        match parts.as_slice() {
            [v] => out.push(num(v)?),
            [a, b, step] => {
                let (a, b, step) = (num(a)?, num(b)?, num(step)?);
                if step.is_nan() || step <= 0.0 || b < a {
                    return Err(bad(format!(
                        "range `{item}` needs start <= stop and step > 0"
                    )));
                }
                let count = ((b - a) / step + 1e-9).floor() as usize;
                out.extend((0..=count).map(|k| a + step * k as f64));
            }
            _ => return Err(bad(format!("cannot parse `{item}`"))),
        }
    }
    if out.is_empty() {
        return Err(bad("no radii given".into()));
    }
    Ok(out)
}

fn family_spec(
    name: &str,
    params: &[(String, f64)],
    named: &[(&str, Option<f64>)],
) -> Result<FamilySpec, CliError> {
    let family: Family = name.parse()?;
    let mut spec = FamilySpec::new(family);
    for (k, v) in named {
        if let Some(v) = v {
            spec = spec.with(k, *v);
        }
    }
    for (k, v) in params {
        spec = spec.with(k, *v);
    }
    spec.validate()?;
    Ok(spec)
}

/// Samples the selected family, or reads the CSV, on the requested grid.
pub fn load_input(args: &InputArgs) -> Result<Sampled64, CliError> {
    if let Some(path) = &args.csv {
        if args.a.is_some() || args.b.is_some() || args.n.is_some() {
            return Err(CliError::Usage(
                "--a, --b and --n do not apply to --csv input".into(),
            ));
        }
        let decay: DecayClass = args.decay.parse()?;
        return Ok(read_samples_csv(path, decay)?);
    }
    let name = args.family.as_deref().unwrap_or_default();
    let spec = family_spec(
        name,
        &args.params,
        &[
            ("width", args.width),
            ("sigma", args.sigma),
            ("ramp", args.ramp),
            ("period", args.period),
            ("scale", args.scale),
        ],
    )?;
    let (a, b, n) = if spec.family.decay_class() == DecayClass::Periodic {
        let half = spec.get("period")? / 2.0;
        (-half, half, DEFAULT_PERIODIC_N)
    } else {
        (-50.0, 50.0, DEFAULT_LINE_N)
    };
    let grid = Grid64::new(
        args.a.unwrap_or(a),
        args.b.unwrap_or(b),
        args.n.unwrap_or(n),
    )?;
    Ok(spec.sample(&grid)?)
}

fn run_transform(args: &TransformArgs) -> Result<(), CliError> {
    let f = load_input(&args.input)?;
    let cutoff = args.cutoff.unwrap_or_else(|| default_cutoff(&f));
    let m = args
        .m
        .unwrap_or_else(|| default_frequency_count(&f, cutoff));
    let method = match args.method {
        FtChoice::Auto => FtMethod::Auto,
        FtChoice::Direct => FtMethod::Direct,
        FtChoice::ChirpZ => FtMethod::ChirpZ,
    };
    let t = fourier_transform_with(&f, cutoff, m, method)?;
    let mut s = String::from("t,re,im\n");
    for (j, z) in t.values().iter().enumerate() {
        writeln!(
            s,
            "{},{},{}",
            number(t.frequency(j)),
            number(z.re),
            number(z.im)
        )
        .unwrap();
    }
    Ok(emit(args.out.as_deref(), &s)?)
}

fn run_hilbert(args: &HilbertArgs) -> Result<(), CliError> {
    let f = load_input(&args.input)?;
    let mut cfg = if args.truncate {
        PvConfig::truncated()
    } else {
        PvConfig::default()
    };
    cfg.delta_min = args.delta_min;
    let method = match args.method {
        HilbertChoice::Auto => match f.decay() {
            DecayClass::Periodic => HilbertChoice::Periodic,
            DecayClass::Bounded => HilbertChoice::Modified,
            _ => HilbertChoice::Pv,
        },
        m => m,
    };
    let h = match method {
        HilbertChoice::Pv => hilbert_pv(&f, &cfg)?,
        HilbertChoice::Multiplier => hilbert_multiplier(&f)?,
        HilbertChoice::Modified => modified_hilbert(&f, &cfg)?,
        HilbertChoice::Periodic => periodic_conjugate(&f)?,
        HilbertChoice::Auto => unreachable!("resolved above"),
    };
    let mut s = String::from("x,value\n");
    for (x, v) in h.grid().points().zip(h.values()) {
        writeln!(s, "{},{}", number(x), number(*v)).unwrap();
    }
    Ok(emit(args.out.as_deref(), &s)?)
}

fn load_profile(args: &RadialArgs) -> Result<Profile64, CliError> {
    if let Some(path) = &args.csv {
        return Ok(read_profile_csv(path, args.dim)?);
    }
    let name = args.family.as_deref().unwrap_or_default();
    if name == "bump" {
        let get = |k: &str, default: f64| {
            args.params
                .iter()
                .rev()
                .find(|(n, _)| n == k)
                .map_or(default, |p| p.1)
        };
        if let Some((k, _)) = args
            .params
            .iter()
            .find(|(k, _)| k != "center" && k != "half_width")
        {
            return Err(CliError::Usage(format!("bump has no parameter `{k}`")));
        }
        let center = get("center", args.radius / 2.0);
        let half_width = get("half_width", args.radius / 4.0);
        return Ok(zero_moment_bump(
            args.dim,
            center,
            half_width,
            args.radius,
            args.n,
        )?);
    }
    let spec = family_spec(name, &args.params, &[])?;
    let f0 = spec.sample(&Grid64::new(0.0, args.radius, args.n)?)?;
    Ok(Profile64::new(
        f0.with_decay(DecayClass::Bounded)?,
        args.dim,
    )?)
}

fn run_radial(args: &RadialArgs) -> Result<(), CliError> {
    let radii = parse_radii(&args.radii)?;
    let profile = load_profile(args)?;
    let fi = fractional_integral(&profile)?;
    let leray = radial_ft_leray_with(&fi, &radii)?;
    let ibp = match radial_ft_ibp_with(&fi, &radii) {
        Ok(v) => Some(v),
        Err(e) => {
            eprintln!("warning: ibp column left empty: {e}");
            None
        }
    };
    let oracle = radial_ft_oracle(&profile, &radii)?;
    let mut s = String::from("r,leray,ibp,oracle\n");
    for (i, r) in radii.iter().enumerate() {
        let ibp_cell = ibp.as_ref().map_or(String::new(), |v| number(v[i]));
        writeln!(
            s,
            "{},{},{},{}",
            number(*r),
            number(leray[i]),
            ibp_cell,
            number(oracle[i])
        )
        .unwrap();
    }
    Ok(emit(args.out.as_deref(), &s)?)
}

fn run_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let reports = args.suite.run(&args.profile);
    let text = render_text(&reports);
    match &args.out {
        Some(path) => {
            write_atomic(&csv_twin(path), &render_csv(&reports))?;
            write_atomic(path, &text)?;
        }
        None => emit(None, &text)?,
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(CliError::ChecksFailed {
            failed,
            total: reports.len(),
        });
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Transform(a) => run_transform(a),
        Command::Hilbert(a) => run_hilbert(a),
        Command::Radial(a) => run_radial(a),
        Command::Verify(a) => run_verify(a),
    }
}

/// Caps the global worker pool at `BVF_THREADS` when that variable is set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("BVF_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "BVF_THREADS must be a positive integer, got `{raw}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size the thread pool: {e}")))
}
