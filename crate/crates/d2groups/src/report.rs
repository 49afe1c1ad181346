//! Report documents: JSON with sorted keys plus a plain-text summary.

use std::time::Duration;

use d2groups_core::classify::{ClassificationReport, GroupAnalysis};
use d2groups_core::presentation::Presentation;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: &str = "1";

/// Serializes with the canonical (sorted) key order. `serde_json` maps are
/// ordered by key, so a parse and re-serialize reproduces the same bytes.
pub fn to_canonical_string(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("values always serialize")
    } else {
        serde_json::to_string(v).expect("values always serialize")
    }
}

pub fn timing(elapsed: Duration) -> Value {
    json!({ "elapsed_ms": (elapsed.as_secs_f64() * 1e6).round() / 1e3 })
}

pub fn presentation_value(p: &Presentation) -> Value {
    let d = p.deficiency();
    json!({
        "text": p.to_string(),
        "generators": p.generators().len(),
        "relators": p.relators().len(),
        "deficiency": d.deficiency,
        "balanced": d.balanced,
        "euler_characteristic": d.euler_characteristic,
    })
}

fn citation_list(report: &ClassificationReport) -> Value {
    report
        .citations()
        .into_iter()
        .map(|k| json!({ "key": k.key(), "statement": k.statement() }))
        .collect()
}

/// The full analysis document: report fields at top level, plus the input
/// echo, character data, citations and timing.
pub fn analysis_document(
    input: Value,
    analysis: &GroupAnalysis,
    report: &ClassificationReport,
    presentation: Option<Value>,
    elapsed: Duration,
) -> Value {
    let mut doc: Map<String, Value> = match serde_json::to_value(report) {
        Ok(Value::Object(m)) => m,
        _ => unreachable!("reports serialize to objects"),
    };
    let chars = &analysis.characters;
    doc.insert(
        "characters".into(),
        json!({
            "prime": chars.p,
            "class_sizes": chars.class_sizes,
            "degrees": chars.degrees(),
            "indicators": chars.rows.iter().map(|r| r.fs_indicator).collect::<Vec<_>>(),
        }),
    );
    doc.insert("schema_version".into(), SCHEMA_VERSION.into());
    doc.insert("input".into(), input);
    doc.insert("citations".into(), citation_list(report));
    doc.insert("timing".into(), timing(elapsed));
    if let Some(p) = presentation {
        doc.insert("presentation".into(), p);
    }
    Value::Object(doc)
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "unknown".to_string(), T::to_string)
}

/// Human-readable rendering of a report.
pub fn summary(report: &ClassificationReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<22}{v}\n"));
    line("order", report.order.to_string());
    line("periodic", report.periodicity.periodic.to_string());
    line("period", opt(&report.periodicity.period));
    line("m_H", report.m_h.to_string());
    line("eichler", report.eichler.to_string());
    let q: Vec<String> = report
        .bpg_quotients
        .iter()
        .map(|b| format!("{} (kernel {})", b.tag, b.kernel_size))
        .collect();
    line("bpg quotients", if q.is_empty() { "none".into() } else { q.join(", ") });
    line("Q_4n quotients, n", format!("{:?}", report.quaternion_quotient_ns));
    let family = match &report.family_witness {
        Some(w) => format!("{} ({w})", report.family),
        None => report.family.to_string(),
    };
    line("family", family);
    line("sfc", opt(&report.sfc.value));
    line("chi determines D2", opt(&report.chi_determines_d2.value));
    line("D2 property", report.d2_status.value.as_str().to_string());
    line("min Euler char", opt(&report.min_euler_char.value));
    let prong = &report.prong_count.value;
    let prong = match (prong.value, prong.lower_bound) {
        (Some(v), _) => v.to_string(),
        (None, Some(b)) => format!(">= {b}"),
        (None, None) => "unknown".into(),
    };
    line("minimal D2 complexes", prong);
    for n in &report.notes {
        line("note", format!("{} [{}]", n.text, n.citation));
    }
    out
}
