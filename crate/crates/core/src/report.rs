//! Text, CSV and JSON renderings of search results.

use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::search::{post_filter, SearchResult};

pub const SEARCH_SCHEMA: &str = "drg-search/1";

/// One CSV row per surviving array.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchRow {
    pub case: String,
    #[serde(rename = "D")]
    pub d: usize,
    pub array: String,
    pub v: String,
    pub a_1: i64,
    /// `kind:value`, `|`-separated, `θ_1..θ_D`.
    pub theta: String,
    /// `m_1..m_D`, `|`-separated.
    pub m: String,
    pub post_filter: String,
}

pub fn search_rows(results: &[SearchResult]) -> Vec<SearchRow> {
    let mut out = Vec::new();
    for res in results {
        for rep in &res.reports {
            let spec = &rep.spectrum;
            let n = spec.len();
            out.push(SearchRow {
                case: res.case.to_string(),
                d: rep.array.diameter(),
                array: rep.array.to_string(),
                v: rep.derived.v.to_string(),
                a_1: rep.array.a(1),
                theta: (1..n).map(|i| spec.theta(i).tagged()).collect::<Vec<_>>().join("|"),
                m: (1..n).map(|i| spec.m(i).to_string()).collect::<Vec<_>>().join("|"),
                post_filter: post_filter(rep).summary(),
            });
        }
    }
    out
}

pub fn write_csv<W: Write>(results: &[SearchResult], w: W) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    for row in search_rows(results) {
        wr.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    wr.flush()?;
    Ok(())
}

pub fn to_json(results: &[SearchResult]) -> serde_json::Value {
    let cases: Vec<serde_json::Value> = results
        .iter()
        .map(|r| {
            serde_json::json!({
                "case": r.case,
                "arrays": r.arrays.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                "stats": r.stats.counters,
                "reports": r.reports.iter().map(|rep| {
                    let mut j = rep.to_json();
                    j["post_filter"] = serde_json::to_value(post_filter(rep)).expect("serializable");
                    j
                }).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({ "schema": SEARCH_SCHEMA, "cases": cases })
}

pub fn to_text(results: &[SearchResult]) -> String {
    let mut s = String::new();
    for r in results {
        s.push_str(&format!("{} ({} arrays)\n", r.case, r.arrays.len()));
        for rep in &r.reports {
            let pf = post_filter(rep).summary();
            let spec: Vec<String> = rep
                .spectrum
                .records()
                .iter()
                .map(|e| format!("{}^{}", e.value, e.multiplicity))
                .collect();
            s.push_str(&format!("  {{{}}}  v={}  {}", rep.array, rep.derived.v, spec.join(" ")));
            if !pf.is_empty() {
                s.push_str(&format!("  [{pf}]"));
            }
            s.push('\n');
        }
    }
    s
}
