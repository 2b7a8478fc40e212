//! Uniform result records for named verification checks. Each check reports
//! the residual it measured, the tolerance it was held to, and whether it
//! passed; informational checks report a magnitude that is expected to be
//! visible (a deviation demonstrating frame dependence, a fitted constant)
//! and never gate the run.

/// One named check outcome. `residual` is a nonnegative magnitude; for
/// informational checks it is a reported value rather than an error bound.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub suite: String,
    pub name: String,
    /// Short statement of the identity or behavior the check certifies.
    pub anchor: String,
    pub residual: f64,
    pub tol: f64,
    pub passed: bool,
    pub informational: bool,
    /// Wall time of the check; kept out of machine-readable output so runs
    /// with the same seed stay byte-identical.
    pub time_ms: f64,
    pub notes: String,
}

/// Fixed-width scientific formatting (six significant digits) used for every
/// residual and tolerance in both output formats.
pub fn format_sci(v: f64) -> String {
    format!("{:.5e}", v)
}

impl CheckReport {
    /// Human-readable single line.
    pub fn text_line(&self) -> String {
        let tag = if self.informational {
            "INFO"
        } else if self.passed {
            "PASS"
        } else {
            "FAIL"
        };
        let head = format!("{} {}/{}", tag, self.suite, self.name);
        let mut line = format!(
            "{:<58} residual {:>12}",
            head,
            format_sci(self.residual)
        );
        if !self.informational {
            line.push_str(&format!("  tol {:>12}", format_sci(self.tol)));
        } else {
            line.push_str(&format!("      {:>12}", ""));
        }
        line.push_str(&format!("  [{:7.1} ms]", self.time_ms));
        line.push_str(&format!("  {}", self.anchor));
        if !self.notes.is_empty() {
            line.push_str(&format!(" ({})", self.notes));
        }
        line
    }
}

/// Counts `(total, passed, failed, informational)`; informational checks are
/// counted only in their own bucket.
pub fn summary_counts(reports: &[CheckReport]) -> (usize, usize, usize, usize) {
    let mut passed = 0;
    let mut failed = 0;
    let mut informational = 0;
    for r in reports {
        if r.informational {
            informational += 1;
        } else if r.passed {
            passed += 1;
        } else {
            failed += 1;
        }
    }
    (reports.len(), passed, failed, informational)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_line_shows_status_and_notes() {
        let r = CheckReport {
            suite: "demo".into(),
            name: "identity".into(),
            anchor: "x = x".into(),
            residual: 3.118e-16,
            tol: 1e-12,
            passed: true,
            informational: false,
            time_ms: 0.42,
            notes: "n = 50".into(),
        };
        let line = r.text_line();
        assert!(line.starts_with("PASS demo/identity"));
        assert!(line.contains("3.11800e-16"));
        assert!(line.contains("x = x"));
        assert!(line.contains("(n = 50)"));
    }

    #[test]
    fn summary_separates_informational_checks() {
        let mk = |passed, informational| CheckReport {
            suite: "s".into(),
            name: "n".into(),
            anchor: String::new(),
            residual: 0.0,
            tol: 1.0,
            passed,
            informational,
            time_ms: 0.0,
            notes: String::new(),
        };
        let reports = vec![mk(true, false), mk(false, false), mk(true, true)];
        assert_eq!(summary_counts(&reports), (3, 1, 1, 1));
    }
}
