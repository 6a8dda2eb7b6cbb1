use std::io::Read;
use std::path::Path;

use super::{DecayClass, Grid, SampledFunction};
use crate::error::{Error, Result};
use crate::scalar::Real;

const SPACING_REL_TOL: f64 = 1e-9;

/// Reads a two-column `x,value` CSV (header row required) with strictly
/// increasing, equispaced abscissae.
pub fn read_samples_csv<T: Real>(
    path: impl AsRef<Path>,
    decay: DecayClass,
) -> Result<SampledFunction<T>> {
    let file = std::fs::File::open(path.as_ref())
        .map_err(|e| Error::Csv(format!("{}: {e}", path.as_ref().display())))?;
    read_samples_csv_from(file, decay)
}

pub fn read_samples_csv_from<T: Real, R: Read>(
    reader: R,
    decay: DecayClass,
) -> Result<SampledFunction<T>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers().map_err(|e| Error::Csv(e.to_string()))?;
    if headers.len() != 2 {
        return Err(Error::Csv(format!(
            "expected two columns, header has {}",
            headers.len()
        )));
    }

    let mut xs = Vec::new();
    let mut vs = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::Csv(e.to_string()))?;
        if rec.len() != 2 {
            return Err(Error::Csv(format!("row {}: expected 2 fields", line + 2)));
        }
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| Error::Csv(format!("row {}: `{s}`: {e}", line + 2)))
        };
        xs.push(parse(&rec[0])?);
        vs.push(parse(&rec[1])?);
    }
    if xs.len() < 2 {
        return Err(Error::Csv("need at least two data rows".into()));
    }

    let n = xs.len();
    let h = (xs[n - 1] - xs[0]) / (n - 1) as f64;
    if !(h > 0.0) {
        return Err(Error::Csv("abscissae must be strictly increasing".into()));
    }
    for (i, w) in xs.windows(2).enumerate() {
        let d = w[1] - w[0];
        if !(d > 0.0) {
            return Err(Error::Csv(format!(
                "abscissae not strictly increasing at row {}",
                i + 3
            )));
        }
        if ((d - h) / h).abs() > SPACING_REL_TOL {
            return Err(Error::Csv(format!(
                "abscissae not equispaced at row {} (step {d}, expected {h})",
                i + 3
            )));
        }
    }
    let grid = Grid::new(T::lit(xs[0]), T::lit(xs[n - 1]), n)?;
    SampledFunction::new(grid, vs.into_iter().map(T::lit).collect(), decay)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_equispaced_file() {
        let data = "x,value\n-1,0\n-0.5,0.5\n0,1\n0.5,0.5\n1,0\n";
        let f: SampledFunction<f64> =
            read_samples_csv_from(data.as_bytes(), DecayClass::CompactSupport).unwrap();
        assert_eq!(f.len(), 5);
        assert_eq!(f.values()[2], 1.0);
        assert_eq!(f.grid().spacing(), 0.5);
    }

    #[test]
    fn rejects_uneven_spacing() {
        let data = "x,value\n0,0\n0.5,1\n1.2,0\n";
        let r: Result<SampledFunction<f64>> =
            read_samples_csv_from(data.as_bytes(), DecayClass::Bounded);
        assert!(matches!(r, Err(Error::Csv(_))));
    }

    #[test]
    fn rejects_garbage_and_wrong_shape() {
        let r: Result<SampledFunction<f64>> =
            read_samples_csv_from("x,value\n0,a\n1,2\n".as_bytes(), DecayClass::Bounded);
        assert!(r.is_err());
        let r: Result<SampledFunction<f64>> =
            read_samples_csv_from("x,value,extra\n0,1,2\n".as_bytes(), DecayClass::Bounded);
        assert!(r.is_err());
        let r: Result<SampledFunction<f64>> =
            read_samples_csv_from("x,value\n1,0\n0,0\n".as_bytes(), DecayClass::Bounded);
        assert!(r.is_err());
    }

    #[test]
    fn decay_flag_is_checked() {
        let data = "x,value\n0,1\n1,1\n2,1\n";
        let r: Result<SampledFunction<f64>> =
            read_samples_csv_from(data.as_bytes(), DecayClass::CompactSupport);
        assert!(r.is_err());
    }
}
