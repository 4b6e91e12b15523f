//! Report rows and their CSV/JSON serialization.
//!
//! The CSV schema is fixed:
//!
//! ```text
//! theorem,case,weight,N,p,alpha,s,q,value,bound,margin,holds,scheme,est_error
//! ```
//!
//! one row per evaluation, rows in input order, no timestamps, floats in
//! shortest-roundtrip form — two runs of the same configuration produce
//! byte-identical files. Verify rows carry `case/test` in the case column
//! so each (weight, test) pair stays identifiable under the fixed header.

use serde::Serialize;

pub const CSV_HEADER: &str = "theorem,case,weight,N,p,alpha,s,q,value,bound,margin,holds,scheme,est_error";

/// One flat report row.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ReportRow {
    pub theorem: String,
    pub case: String,
    pub weight: String,
    #[serde(rename = "N")]
    pub n: Option<u32>,
    pub p: Option<f64>,
    pub alpha: Option<f64>,
    pub s: Option<f64>,
    pub q: Option<f64>,
    pub value: Option<f64>,
    pub bound: Option<f64>,
    pub margin: Option<f64>,
    pub holds: Option<bool>,
    pub scheme: String,
    pub est_error: Option<f64>,
}

fn fmt_opt_f64(v: Option<f64>) -> String {
    match v {
        Some(x) if x.is_nan() => String::new(),
        Some(x) => format!("{x}"),
        None => String::new(),
    }
}

fn fmt_opt_u32(v: Option<u32>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn fmt_opt_bool(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}

/// Fields may contain commas (profile descriptions); quote when needed.
fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn to_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let cols = [
            csv_escape(&r.theorem),
            csv_escape(&r.case),
            csv_escape(&r.weight),
            fmt_opt_u32(r.n),
            fmt_opt_f64(r.p),
            fmt_opt_f64(r.alpha),
            fmt_opt_f64(r.s),
            fmt_opt_f64(r.q),
            fmt_opt_f64(r.value),
            fmt_opt_f64(r.bound),
            fmt_opt_f64(r.margin),
            fmt_opt_bool(r.holds),
            csv_escape(&r.scheme),
            fmt_opt_f64(r.est_error),
        ];
        out.push_str(&cols.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(rows: &[ReportRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}
