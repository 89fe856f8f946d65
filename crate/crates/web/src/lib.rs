//! Browser bindings. Every entry point takes source text and returns a JSON
//! string, so the page needs no shared types and the logic is testable
//! natively.

use lmu_core::lm::{lm_equal, normalize, parse_lm};
use lmu_core::scl::{parse_scl, scl_equal, scl_normalize};
use lmu_core::trace::Trace;
use lmu_core::translate::{to_lm, to_scl};
use lmu_core::{Budget, ParseError};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

// The browser stack is small; keep terms modest.
const MAX_SIZE: usize = 20_000;

fn budget(max_steps: u32) -> Result<Budget, Value> {
    Budget::new(max_steps as usize, MAX_SIZE).map_err(|e| json!({ "error": e.to_string() }))
}

fn parse_error(side: &str, e: ParseError) -> Value {
    json!({ "error": format!("{side}: line {}, column {}: {}", e.line, e.column, e.message) })
}

fn trace_json<R: std::fmt::Display, T: std::fmt::Display>(
    trace: &Trace<R, T>,
    last: &T,
    exhausted: bool,
) -> Value {
    let steps: Vec<Value> = trace
        .steps
        .iter()
        .enumerate()
        .map(|(k, s)| {
            json!({
                "k": k + 1,
                "rule": s.rule.to_string(),
                "position": s.position.to_string(),
                "term": s.term.to_string(),
            })
        })
        .collect();
    json!({ "steps": steps, "exhausted": exhausted, "final": last.to_string() })
}

fn run(f: impl FnOnce() -> Result<Value, Value>) -> String {
    match f() {
        Ok(v) | Err(v) => v.to_string(),
    }
}

/// Normalizes a term; `calculus` is `"lm"` or `"scl"`.
#[wasm_bindgen]
pub fn reduce(src: &str, calculus: &str, max_steps: u32) -> String {
    run(|| {
        let b = budget(max_steps)?;
        match calculus {
            "lm" => {
                let m = parse_lm(src).map_err(|e| parse_error("term", e))?;
                let n = normalize(&m, b);
                Ok(trace_json(&n.trace, &n.term, n.exhausted))
            }
            "scl" => {
                let t = parse_scl(src).map_err(|e| parse_error("term", e))?;
                let n = scl_normalize(&t, b);
                Ok(trace_json(&n.trace, &n.term, n.exhausted))
            }
            other => Err(json!({ "error": format!("unknown calculus {other:?}") })),
        }
    })
}

/// `"to-scl"` reads a Λμ-term, `"to-lm"` an SCL term.
#[wasm_bindgen]
pub fn translate(src: &str, direction: &str) -> String {
    run(|| match direction {
        "to-scl" => {
            let m = parse_lm(src).map_err(|e| parse_error("term", e))?;
            Ok(json!({ "result": to_scl(&m).to_string() }))
        }
        "to-lm" => {
            let t = parse_scl(src).map_err(|e| parse_error("term", e))?;
            Ok(json!({ "result": to_lm(&t).to_string() }))
        }
        other => Err(json!({ "error": format!("unknown direction {other:?}") })),
    })
}

/// Budgeted convertibility; the verdict is `Equal`, `Distinct` or `Unknown`.
#[wasm_bindgen]
pub fn equal(left: &str, right: &str, calculus: &str, max_steps: u32) -> String {
    run(|| {
        let b = budget(max_steps)?;
        let (verdict, forms) = match calculus {
            "lm" => {
                let m = parse_lm(left).map_err(|e| parse_error("left", e))?;
                let n = parse_lm(right).map_err(|e| parse_error("right", e))?;
                let v = lm_equal(&m, &n, b);
                (v.verdict(), v.map(|t| t.to_string()))
            }
            "scl" => {
                let t = parse_scl(left).map_err(|e| parse_error("left", e))?;
                let u = parse_scl(right).map_err(|e| parse_error("right", e))?;
                let v = scl_equal(&t, &u, b);
                (v.verdict(), v.map(|t| t.to_string()))
            }
            other => return Err(json!({ "error": format!("unknown calculus {other:?}") })),
        };
        let normal_forms = match forms {
            lmu_core::EqVerdict::Equal(a, c) | lmu_core::EqVerdict::Distinct(a, c) => json!([a, c]),
            lmu_core::EqVerdict::Unknown => Value::Null,
        };
        Ok(json!({ "verdict": verdict.to_string(), "normal_forms": normal_forms }))
    })
}
