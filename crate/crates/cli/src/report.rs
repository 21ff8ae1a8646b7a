//! Report structure and its three renderings.

use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::{Map, Value};

use crate::Format;

/// One pass/fail flag with the number it was decided on.
#[derive(Debug, Clone, Serialize)]
pub struct CheckFlag {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckFlag {
    pub fn at_most(name: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            value,
            tolerance,
            passed: value <= tolerance,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<CheckFlag>,
    pub passed: bool,
    /// Seconds since the Unix epoch; the only field that varies between runs.
    pub timestamp: u64,
    #[serde(skip)]
    pub pretty: Vec<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Self {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            inputs,
            results: Value::Object(Map::new()),
            checks: Vec::new(),
            passed: true,
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            pretty: Vec::new(),
        }
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        if let Value::Object(map) = &mut self.results {
            map.insert(key.into(), v);
        }
    }

    pub fn check(&mut self, flag: CheckFlag) {
        self.passed &= flag.passed;
        self.checks.push(flag);
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.pretty.push(line.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_json(&self, path: &Path) -> std::io::Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_json().as_bytes())?;
        f.write_all(b"\n")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json() + "\n",
            Format::Csv => self.to_csv(),
            Format::Pretty => self.to_pretty(),
        }
    }

    fn to_pretty(&self) -> String {
        let mut out = String::new();
        for l in &self.pretty {
            out.push_str(l);
            out.push('\n');
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                out.push_str(&format!(
                    "  {status}  {}  {:.3e} (tol {:.1e})\n",
                    c.name, c.value, c.tolerance
                ));
            }
        }
        out.push_str(if self.passed {
            "result: pass\n"
        } else {
            "result: FAIL\n"
        });
        out
    }

    /// Flattened `path,value` rows of the whole report.
    fn to_csv(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut rows = Vec::new();
        flatten("", &value, &mut rows);
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["path", "value"]).expect("in-memory write");
        for (k, v) in rows {
            w.write_record([k, v]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&join(k), v, out)),
        Value::Array(items) => items
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&join(&i.to_string()), v, out)),
        Value::String(s) => out.push((prefix.into(), s.clone())),
        other => out.push((prefix.into(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_flattens_nested_values() {
        let mut r = Report::new("x", serde_json::json!({"n": 7}));
        r.result("pairs", [[1.0, 2.0]]);
        let csv = r.to_csv();
        assert!(csv.contains("inputs.n,7"));
        assert!(csv.contains("results.pairs.0.1,2.0"));
    }

    #[test]
    fn failed_check_marks_report() {
        let mut r = Report::new("x", Value::Null);
        r.check(CheckFlag::at_most("a", 1.0, 2.0));
        assert!(r.passed);
        r.check(CheckFlag::at_most("b", 3.0, 2.0));
        assert!(!r.passed);
    }
}
