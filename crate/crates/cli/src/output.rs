//! Report rendering and atomic file output.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use bvf_core::VerificationReport;

/// Plain-text report: one `name status measured bound grid_n` line per check,
/// then an `overall` line whose measured column counts the failures and whose
/// last column counts the checks.
pub fn render_text(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        writeln!(s, "{r}").unwrap();
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let status = if failed == 0 { "PASS" } else { "FAIL" };
    writeln!(
        s,
        "overall {status} {:.6e} {:.6e} {}",
        failed as f64,
        0.0,
        reports.len()
    )
    .unwrap();
    s
}

/// The same reports as CSV, with the notes column added.
pub fn render_csv(reports: &[VerificationReport]) -> String {
    let mut s = String::from("check_name,status,measured,bound,grid_n,notes\n");
    for r in reports {
        writeln!(
            s,
            "{},{},{:.6e},{:.6e},{},{}",
            r.name,
            r.status(),
            r.measured,
            r.bound,
            r.grid_n,
            quote(&r.notes)
        )
        .unwrap();
    }
    s
}

fn quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Shortest round-trip decimal form, with negative zero printed as `0`.
pub fn number(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v:e}")
    }
}

/// Path of the CSV twin: the report path with its extension replaced by `csv`
/// (or `.csv` appended when the report already ends in `.csv`).
pub fn csv_twin(path: &Path) -> PathBuf {
    if path.extension().is_some_and(|e| e == "csv") {
        let mut s = path.as_os_str().to_owned();
        s.push(".csv");
        PathBuf::from(s)
    } else {
        path.with_extension("csv")
    }
}

/// Writes `contents` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partially written file.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let file_name = path.file_name().ok_or_else(|| {
        io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name")
    })?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(file_name);
    tmp_name.push(format!(".tmp{}", std::process::id()));
    let tmp = dir.join(tmp_name);
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

/// Writes to `path` atomically, or to standard output when no path is given.
pub fn emit(path: Option<&Path>, contents: &str) -> io::Result<()> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(contents.as_bytes())?;
            out.flush()
        }
    }
}
