use serde_json::Value;

use crate::args::Format;
use crate::{CliError, Report};

/// Scalars print as themselves, arrays of scalars as `(a,b,c)`, anything
/// else as compact JSON.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            format!("({})", items.iter().map(cell).collect::<Vec<_>>().join(","))
        }
        other => other.to_string(),
    }
}

/// `(dotted key, value)` pairs of the scalar leaves, skipping `skip`.
fn flatten(prefix: &str, v: &Value, skip: Option<&str>, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if prefix.is_empty() && Some(k.as_str()) == skip {
                    continue;
                }
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, None, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, None, out);
            }
        }
        other => out.push((prefix.to_string(), cell(other))),
    }
}

fn table_cells(report: &Report) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
    let t = report.table.as_ref()?;
    let rows =
        t.rows.iter().map(|r| t.columns.iter().map(|c| r.get(*c).map(cell).unwrap_or_default()).collect()).collect();
    Some((t.columns.clone(), rows))
}

pub fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            match table_cells(report) {
                Some((cols, rows)) => {
                    w.write_record(&cols).map_err(csv_err)?;
                    for r in rows {
                        w.write_record(&r).map_err(csv_err)?;
                    }
                }
                None => {
                    let mut pairs = Vec::new();
                    flatten("", &report.json, None, &mut pairs);
                    w.write_record(["field", "value"]).map_err(csv_err)?;
                    for (k, v) in pairs {
                        w.write_record([k, v]).map_err(csv_err)?;
                    }
                }
            }
            let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Pretty => {
            let mut pairs = Vec::new();
            flatten("", &report.json, report.table.as_ref().map(|t| t.key), &mut pairs);
            let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (k, v) in pairs {
                out.push_str(&format!("{k:width$}  {v}\n"));
            }
            if let Some((cols, rows)) = table_cells(report) {
                let widths: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .map(|(i, c)| rows.iter().map(|r| r[i].chars().count()).chain([c.len()]).max().unwrap_or(0))
                    .collect();
                let line = |cells: Vec<String>| {
                    let padded: Vec<String> =
                        cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}", w = *w)).collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                out.push('\n');
                out.push_str(&line(cols.iter().map(|c| c.to_string()).collect()));
                for r in rows {
                    out.push_str(&line(r));
                }
            }
            Ok(out)
        }
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Usage(format!("csv: {e}"))
}
