//! Text and JSON rendering of results.
//!
//! Rationals are always printed exactly as `num/den`. With `approx` a decimal
//! column is appended and marked as approximate; JSON output never carries it.

use serde_json::{json, Value};

use scalcurv_core::manifolds::ValidationReport;
use scalcurv_core::{PartitionPolynomial, Rational};

#[derive(Clone, Copy, Debug, Default)]
pub struct Printer {
    pub machine: bool,
    pub approx: bool,
}

impl Printer {
    pub fn rational(&self, r: &Rational) -> String {
        if self.approx {
            format!("{r}\t~ {:.12} (approx)", r.to_f64_approx())
        } else {
            r.to_string()
        }
    }

    pub fn list(&self, values: &[Rational]) -> String {
        let exact: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        let mut line = exact.join(", ");
        if self.approx {
            let approx: Vec<String> = values.iter().map(|v| format!("{:.12}", v.to_f64_approx())).collect();
            line.push_str(&format!("\n~ {} (approx)", approx.join(", ")));
        }
        line
    }
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn polynomial_json(name: &str, poly: &PartitionPolynomial) -> Value {
    let terms: serde_json::Map<String, Value> =
        poly.terms().map(|(p, c)| (p.to_string(), rational_json(c))).collect();
    json!({ "genus": name, "weight": poly.weight(), "terms": terms })
}

pub fn report_json(report: &ValidationReport) -> Value {
    json!({
        "passed": report.passed(),
        "failures": report.failures.iter().map(|c| c.description()).collect::<Vec<_>>(),
        "warnings": report.warnings.iter().map(|w| w.description()).collect::<Vec<_>>(),
    })
}

pub fn to_json_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialise")
}
