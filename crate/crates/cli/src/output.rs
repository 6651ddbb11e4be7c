//! Rendering helpers shared by the subcommands.

use permdn_core::search::{DNumberResult, RefutationMode};
use permdn_core::Coloring;
use serde_json::{json, Value};

pub fn coloring_string(c: &Coloring) -> String {
    c.colors()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Partition rendering with 1-indexed points: {1,4}|{2,3}.
pub fn partition_string(c: &Coloring) -> String {
    c.parts()
        .iter()
        .map(|part| {
            let inner = part
                .iter()
                .map(|p| (p + 1).to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("{{{inner}}}")
        })
        .collect::<Vec<_>>()
        .join("|")
}

pub fn coloring_json(c: &Coloring) -> Value {
    Value::Array(c.colors().iter().map(|&v| json!(v)).collect())
}

pub fn mode_name(mode: RefutationMode) -> &'static str {
    match mode {
        RefutationMode::Exhaustive => "exhaustive",
        RefutationMode::Pigeonhole => "pigeonhole",
    }
}

pub fn refutations_json(result: &DNumberResult) -> Value {
    Value::Array(
        result
            .refutations
            .iter()
            .map(|r| {
                json!({
                    "k": r.k,
                    "mode": mode_name(r.mode),
                    "examined": r.examined,
                })
            })
            .collect(),
    )
}

pub fn d_json(result: &DNumberResult) -> Value {
    if result.is_exact() {
        json!({ "status": "exact", "value": result.lo })
    } else {
        json!({ "status": "bounds", "lo": result.lo, "hi": result.hi })
    }
}

pub fn d_text(result: &DNumberResult) -> String {
    if result.is_exact() {
        format!("{}", result.lo)
    } else {
        format!("[{}, {}]", result.lo, result.hi)
    }
}
