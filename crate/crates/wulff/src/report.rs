//! Structured check reports and their deterministic JSON encoding: stable
//! key order, fixed 17-significant-digit float formatting, trailing newline.
//! Identical inputs produce byte-identical files.

use crate::sphere::{PlanarPoint, SphericalPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Witness {
    Spherical(SphericalPoint),
    Planar(PlanarPoint),
}

/// Outcome of one named check: residual values against their tolerances,
/// witness points on failure, and the seed/trial count that produced it.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    pub residuals: Vec<(String, f64)>,
    pub witnesses: Vec<Witness>,
    pub seed: u64,
    pub trials: u64,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, seed: u64, trials: u64) -> Self {
        CheckReport {
            name: name.into(),
            status: CheckStatus::Pass,
            residuals: Vec::new(),
            witnesses: Vec::new(),
            seed,
            trials,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }

    pub fn residual(&mut self, label: impl Into<String>, value: f64) {
        self.residuals.push((label.into(), value));
    }

    /// Records a residual and fails the check when it exceeds the tolerance.
    pub fn check(&mut self, label: impl Into<String>, value: f64, tol: f64) {
        self.residuals.push((label.into(), value));
        if !(value <= tol) {
            self.status = CheckStatus::Fail;
        }
    }

    pub fn fail(&mut self) {
        self.status = CheckStatus::Fail;
    }

    pub fn not_applicable(&mut self) {
        if self.status != CheckStatus::Fail {
            self.status = CheckStatus::NotApplicable;
        }
    }

    pub fn witness_spherical(&mut self, p: SphericalPoint) {
        self.witnesses.push(Witness::Spherical(p));
    }

    pub fn witness_planar(&mut self, p: PlanarPoint) {
        self.witnesses.push(Witness::Planar(p));
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// 17 significant digits, locale-independent, valid JSON number.
/// Negative zero is canonicalized.
pub fn fmt_f64(x: f64) -> String {
    if !x.is_finite() {
        return "null".to_string();
    }
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

pub fn escape_json(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

fn witness_json(w: &Witness) -> String {
    match w {
        Witness::Spherical(p) => format!(
            "{{\"kind\":\"spherical\",\"x\":{},\"y\":{},\"z\":{}}}",
            fmt_f64(p.x),
            fmt_f64(p.y),
            fmt_f64(p.z)
        ),
        Witness::Planar(p) => format!(
            "{{\"kind\":\"planar\",\"u\":{},\"v\":{}}}",
            fmt_f64(p.u),
            fmt_f64(p.v)
        ),
    }
}

pub fn report_json(r: &CheckReport) -> String {
    let residuals: Vec<String> = r
        .residuals
        .iter()
        .map(|(label, value)| format!("[\"{}\",{}]", escape_json(label), fmt_f64(*value)))
        .collect();
    let witnesses: Vec<String> = r.witnesses.iter().map(witness_json).collect();
    format!(
        "{{\"name\":\"{}\",\"passed\":{},\"status\":\"{}\",\"residuals\":[{}],\"witnesses\":[{}],\"seed\":{},\"trials\":{}}}",
        escape_json(&r.name),
        r.passed(),
        r.status.as_str(),
        residuals.join(","),
        witnesses.join(","),
        r.seed,
        r.trials
    )
}

/// Deterministic JSON for a report list, with trailing newline.
pub fn reports_json(reports: &[CheckReport]) -> String {
    if reports.is_empty() {
        return "[]\n".to_string();
    }
    let items: Vec<String> = reports.iter().map(report_json).collect();
    format!("[\n{}\n]\n", items.join(",\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_list() {
        assert_eq!(reports_json(&[]), "[]\n");
    }

    #[test]
    fn single_report_schema() {
        let mut r = CheckReport::new("demo", 7, 3);
        r.check("residual_a", 1.0e-12, 1e-9);
        let s = reports_json(&[r]);
        assert!(s.starts_with("[\n{\"name\":\"demo\",\"passed\":true,\"status\":\"pass\""));
        assert!(s.ends_with("\n]\n"));
        assert!(s.contains("\"seed\":7"));
        assert!(s.contains("\"trials\":3"));
        // exact rendering of the nearest binary double to 1e-12
        assert!(s.contains("9.9999999999999998e-13"));
    }

    #[test]
    fn failure_requires_witness_style() {
        let mut r = CheckReport::new("w", 0, 1);
        r.check("bad", 1.0, 1e-9);
        r.witness_spherical(crate::sphere::NORTH);
        assert!(!r.passed());
        let s = report_json(&r);
        assert!(s.contains("\"kind\":\"spherical\""));
    }

    #[test]
    fn float_format_is_17_significant_digits() {
        assert_eq!(fmt_f64(std::f64::consts::PI), "3.1415926535897931e0");
        assert_eq!(fmt_f64(0.0), "0.0000000000000000e0");
        assert_eq!(fmt_f64(-1.5e-300), "-1.5000000000000001e-300");
    }
}
