//! Stable text output records.
//!
//! A verdict record is a single line of `key=value` fields separated by
//! ` | `, with multisegments serialized in the input syntax:
//!
//! ```text
//! relevant=true | p=[1,2]@R + [4,7]@R | q=[0,3]@R + [6,6]@R | trace=... | failed_step=-
//! ```
//!
//! The `trace` field lists the reduction steps compactly (kind and
//! reduction point); the full before/after detail is printed separately
//! when tracing is requested.

use ggp_engine::derivative::{derivative_left_multi, derivative_right_multi};
use ggp_engine::relevance::{Certificate, TraceStep};
use ggp_engine::Multisegment;

fn ms_field(m: &Option<Multisegment>) -> String {
    match m {
        Some(m) => m.to_string(),
        None => "-".to_string(),
    }
}

/// Compact one-token description of a trace step.
pub fn step_brief(s: &TraceStep) -> String {
    match s {
        TraceStep::ReduceRight { point, .. } => format!("ReduceRight {point}"),
        TraceStep::ReduceLeft { point, .. } => format!("ReduceLeft {point}"),
        TraceStep::Interchange => "Interchange".to_string(),
    }
}

/// The one-line verdict record for a decision certificate.
pub fn verdict_record(cert: &Certificate) -> String {
    let trace = if cert.trace.is_empty() {
        "-".to_string()
    } else {
        cert.trace
            .iter()
            .map(step_brief)
            .collect::<Vec<_>>()
            .join(", ")
    };
    let failed = match cert.failed_step {
        Some(j) => j.to_string(),
        None => "-".to_string(),
    };
    format!(
        "relevant={} | p={} | q={} | trace={} | failed_step={}",
        cert.relevant,
        ms_field(&cert.p),
        ms_field(&cert.q),
        trace,
        failed
    )
}

/// Detailed multi-line rendering of the trace: every step with the pair
/// state before and after it.
pub fn trace_detail(cert: &Certificate) -> Vec<String> {
    let mut out = Vec::new();
    for (j, step) in cert.trace.iter().enumerate() {
        let (a, b) = &cert.states[j];
        let after = if j + 1 < cert.states.len() {
            cert.states[j + 1].clone()
        } else {
            apply(step, a, b)
        };
        let action = match step {
            TraceStep::ReduceRight { point, removed } => {
                format!("ReduceRight at {point} removing {removed}")
            }
            TraceStep::ReduceLeft { point, removed } => {
                format!("ReduceLeft at {point} removing {removed}")
            }
            TraceStep::Interchange => "Interchange".to_string(),
        };
        out.push(format!(
            "step {}: {action}: (L({a}), L({b})) -> (L({}), L({}))",
            j + 1,
            after.0,
            after.1
        ));
    }
    out
}

fn apply(step: &TraceStep, a: &Multisegment, b: &Multisegment) -> (Multisegment, Multisegment) {
    match step {
        TraceStep::ReduceRight { removed, .. } => (
            derivative_right_multi(a, removed).unwrap_or_else(Multisegment::empty),
            b.clone(),
        ),
        TraceStep::ReduceLeft { removed, .. } => (
            a.clone(),
            derivative_left_multi(b, removed).unwrap_or_else(Multisegment::empty),
        ),
        TraceStep::Interchange => (b.clone(), a.clone()),
    }
}
