//! Report rendering: a JSON body for machines and text tables for people.

use rbla_core::scalar::{self, format_combination};
use rbla_core::{BilinearProduct, CheckReport, Matrix, Space};
use serde_json::{json, Map, Value};

pub fn report_json(r: &CheckReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            let defect: Map<String, Value> =
                v.defect.iter().map(|(l, c)| (l.clone(), Value::String(scalar::format(c)))).collect();
            json!({ "tag": v.tag, "witness": v.witness, "defect": defect })
        })
        .collect();
    json!({
        "check": r.name,
        "verdict": if r.passed() { "pass" } else { "fail" },
        "violations": violations,
        "notes": r.notes,
        "parts": r.parts.iter().map(report_json).collect::<Vec<_>>(),
        "elapsed_ms": r.elapsed.as_secs_f64() * 1000.0,
    })
}

/// One line per basis pair, `x∘y = combination`, zero products included.
pub fn product_table(p: &BilinearProduct, symbol: &str) -> Vec<String> {
    let s = p.space();
    let mut lines = Vec::new();
    for i in 0..s.dim() {
        for j in 0..s.dim() {
            let value = format_combination(&p.basis_product(i, j), s.labels());
            lines.push(format!("{}{symbol}{} = {value}", s.label(i), s.label(j)));
        }
    }
    lines
}

/// One line per basis vector, `name(x) = combination`.
pub fn operator_table(m: &Matrix, space: &Space, name: &str) -> Vec<String> {
    (0..space.dim())
        .map(|j| format!("{name}({}) = {}", space.label(j), format_combination(&m.column(j), space.labels())))
        .collect()
}
