use std::io::{self, Write};

use num_bigint::BigInt;
use overmex::harness::{ComparedRange, IdentityDescriptor};
use overmex::VerificationReport;
use serde_json::{json, Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub const CSV_HEADER: &str =
    "id,form,params,range,status,mismatch_index,mismatch_lhs,mismatch_rhs,mismatch_kind,elapsed_ms,anchor";

pub(crate) fn big(n: &BigInt) -> Value {
    // arbitrary_precision keeps every digit
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

fn range_json(range: &ComparedRange) -> Value {
    match *range {
        ComparedRange::Order(order) => json!({ "order": order }),
        ComparedRange::Indices { from, to } => json!({ "from": from, "to": to }),
    }
}

fn elapsed_ms(r: &VerificationReport) -> f64 {
    (r.elapsed.as_secs_f64() * 1e6).round() / 1e3
}

pub fn report_json(r: &VerificationReport, timing: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("id".into(), json!(r.id));
    obj.insert("form".into(), json!(r.form.to_string()));
    let params: Map<String, Value> = r.params.entries().into_iter().map(|(n, v)| (n.to_string(), json!(v))).collect();
    obj.insert("params".into(), Value::Object(params));
    obj.insert("range".into(), range_json(&r.range));
    obj.insert("status".into(), json!(r.status.to_string()));
    if let Some(m) = &r.first_mismatch {
        obj.insert(
            "firstMismatch".into(),
            json!({ "index": m.index, "lhs": big(&m.lhs), "rhs": big(&m.rhs), "kind": m.kind.to_string() }),
        );
    }
    obj.insert("elapsedMs".into(), if timing { json!(elapsed_ms(r)) } else { Value::Null });
    obj.insert("anchor".into(), json!(r.anchor));
    Value::Object(obj)
}

pub fn report_csv_row(r: &VerificationReport, timing: bool) -> String {
    let (index, lhs, rhs, kind) = match &r.first_mismatch {
        Some(m) => (m.index.to_string(), m.lhs.to_string(), m.rhs.to_string(), m.kind.to_string()),
        None => Default::default(),
    };
    let elapsed = if timing { elapsed_ms(r).to_string() } else { String::new() };
    [
        r.id.to_string(),
        r.form.to_string(),
        r.params.to_string(),
        r.range.to_string(),
        r.status.to_string(),
        index,
        lhs,
        rhs,
        kind,
        elapsed,
        r.anchor.to_string(),
    ]
    .join(",")
}

/// Writes reports as a JSON array or as CSV with a header row.
///
/// `elapsedMs` is only filled in when `timing` is set, so that repeated runs
/// produce identical bytes.
pub fn emit_report(out: &mut dyn Write, reports: &[VerificationReport], format: Format, timing: bool) -> io::Result<()> {
    match format {
        Format::Json => {
            let arr = Value::Array(reports.iter().map(|r| report_json(r, timing)).collect());
            writeln!(out, "{}", serde_json::to_string_pretty(&arr).expect("serializable"))
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in reports {
                writeln!(out, "{}", report_csv_row(r, timing))?;
            }
            Ok(())
        }
    }
}

pub fn emit_identities(out: &mut dyn Write, ids: &[IdentityDescriptor], format: Option<Format>) -> io::Result<()> {
    let forms = |d: &IdentityDescriptor| d.forms().map(|f| f.to_string()).collect::<Vec<_>>();
    match format {
        None => ids.iter().try_for_each(|d| writeln!(out, "{}", d.id)),
        Some(Format::Csv) => {
            writeln!(out, "id,forms,params,anchor")?;
            for d in ids {
                let mut params: Vec<&str> =
                    d.checks.iter().flat_map(|c| c.params.iter().map(|p| p.name.as_str())).collect();
                params.dedup();
                writeln!(out, "{},{},{},{}", d.id, forms(d).join(";"), params.join(";"), d.anchor)?;
            }
            Ok(())
        }
        Some(Format::Json) => {
            let arr: Vec<Value> = ids
                .iter()
                .map(|d| {
                    let checks: Vec<Value> = d
                        .checks
                        .iter()
                        .map(|c| {
                            let params: Vec<Value> = c
                                .params
                                .iter()
                                .map(|p| {
                                    let bound = |v: i64| if v == i64::MIN || v == i64::MAX { Value::Null } else { json!(v) };
                                    json!({
                                        "name": p.name.as_str(),
                                        "min": bound(p.min),
                                        "max": bound(p.max),
                                        "default": [p.default.0, p.default.1],
                                    })
                                })
                                .collect();
                            let mut obj = json!({ "form": c.form.to_string(), "params": params, "oracle": c.oracle });
                            if c.m_le_k {
                                obj["constraint"] = json!("m <= k");
                            }
                            obj
                        })
                        .collect();
                    json!({ "id": d.id, "kind": d.kind().to_string(), "anchor": d.anchor, "checks": checks })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&arr).expect("serializable"))
        }
    }
}
