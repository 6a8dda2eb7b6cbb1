use std::fmt;

/// Outcome of one numerical check.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub name: String,
    pub measured: f64,
    pub bound: f64,
    pub passed: bool,
    pub grid_n: usize,
    pub notes: String,
}

impl VerificationReport {
    /// `passed` is derived as `measured <= bound`; NaN never passes.
    pub fn new(name: impl Into<String>, measured: f64, bound: f64, grid_n: usize) -> Self {
        Self {
            name: name.into(),
            measured,
            bound,
            passed: measured <= bound,
            grid_n,
            notes: String::new(),
        }
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    /// Appends a `key=value` pair to the notes.
    pub fn note(&mut self, key: &str, value: impl fmt::Display) {
        if !self.notes.is_empty() {
            self.notes.push(' ');
        }
        self.notes.push_str(&format!("{key}={value}"));
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {:.6e} {:.6e} {}",
            self.name,
            self.status(),
            self.measured,
            self.bound,
            self.grid_n
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_follows_bound() {
        assert!(VerificationReport::new("a", 1.0, 1.0, 3).passed);
        assert!(!VerificationReport::new("a", 1.5, 1.0, 3).passed);
        assert!(!VerificationReport::new("a", f64::NAN, 1.0, 3).passed);
    }

    #[test]
    fn line_format() {
        let mut r = VerificationReport::new("hardy_triangle", 0.5, 1.0, 16384);
        r.note("ratio", 0.5);
        assert_eq!(
            r.to_string(),
            "hardy_triangle PASS 5.000000e-1 1.000000e0 16384"
        );
        assert_eq!(r.notes, "ratio=0.5");
    }
}
