//! Text and structured renderings of suite runs.

use qhakit_core::report::{Check, Witness};
use serde_json::{json, Value};

use crate::format::scalar_text;
use crate::suites::Run;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

fn witness_json(w: &Witness) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("at".into(), json!(w.at));
    m.insert("entry".into(), json!(w.entry));
    if let Some(l) = &w.lhs {
        m.insert("lhs".into(), json!(scalar_text(l)));
    }
    if let Some(r) = &w.rhs {
        m.insert("rhs".into(), json!(scalar_text(r)));
    }
    if let Some(n) = &w.note {
        m.insert("note".into(), json!(n));
    }
    Value::Object(m)
}

pub fn check_json(c: &Check) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("id".into(), json!(c.id));
    m.insert("passed".into(), json!(c.passed));
    if let Some(w) = &c.witness {
        m.insert("witness".into(), witness_json(w));
    }
    Value::Object(m)
}

pub fn witness_text(w: &Witness) -> String {
    let mut parts = Vec::new();
    if !w.at.is_empty() {
        parts.push(format!("at {:?}", w.at));
    }
    if let (Some(l), Some(r)) = (&w.lhs, &w.rhs) {
        parts.push(format!("entry {:?}: {} vs {}", w.entry, scalar_text(l), scalar_text(r)));
    }
    if let Some(n) = &w.note {
        if !n.is_empty() {
            parts.push(n.clone());
        }
    }
    parts.join("; ")
}

pub fn run_json(run: &Run) -> Value {
    let suites: Vec<Value> = run
        .outcomes
        .iter()
        .map(|o| {
            let mut m = serde_json::Map::new();
            m.insert("suite".into(), json!(o.suite.name()));
            let status = match (&o.skipped, o.report.passed()) {
                (Some(_), _) => "skipped",
                (None, true) => "pass",
                (None, false) => "fail",
            };
            m.insert("status".into(), json!(status));
            if let Some(why) = &o.skipped {
                m.insert("reason".into(), json!(why));
            }
            m.insert("checks".into(), Value::Array(o.report.checks.iter().map(check_json).collect()));
            Value::Object(m)
        })
        .collect();
    json!({
        "input": run.input,
        "seed": run.options.seed,
        "samples": run.options.samples,
        "passed": run.passed(),
        "suites": suites,
    })
}

pub fn run_text(run: &Run) -> String {
    let mut out = format!("input {} seed {} samples {}\n", run.input, run.options.seed, run.options.samples);
    for o in &run.outcomes {
        if let Some(why) = &o.skipped {
            out.push_str(&format!("suite {}: skipped ({why})\n", o.suite.name()));
            continue;
        }
        let total = o.report.checks.len();
        let failed = o.report.failures().count();
        out.push_str(&format!("suite {}: {} of {total} checks passed\n", o.suite.name(), total - failed));
        for c in &o.report.checks {
            if c.passed {
                out.push_str(&format!("  pass {}\n", c.id));
            } else {
                let w = c.witness.as_ref().map(witness_text).unwrap_or_default();
                out.push_str(&format!("  FAIL {}  {w}\n", c.id));
            }
        }
    }
    out.push_str(if run.passed() { "result: pass\n" } else { "result: fail\n" });
    out
}

pub fn render_run(run: &Run, format: Format) -> String {
    match format {
        Format::Text => run_text(run),
        Format::Structured => crate::format::json_text(&run_json(run)),
    }
}
