//! Rendering of claim results.

use serde::{Deserialize, Serialize};

use crate::catalog::{ClaimResult, Status};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
    Markdown,
}

/// Renders results sorted by claim id. JSON output is an array of objects
/// with exactly the `ClaimResult` fields; `[]` when there are none.
pub fn emit_report(results: &[ClaimResult], format: ReportFormat) -> String {
    let mut sorted: Vec<&ClaimResult> = results.iter().collect();
    sorted.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&sorted).expect("results serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let mut out = String::new();
            for r in &sorted {
                out.push_str(&format!(
                    "{:<8} {:<16} expected={} computed={}",
                    r.status.to_string(),
                    r.claim_id,
                    r.expected,
                    r.computed
                ));
                if r.elapsed_ms > 0 {
                    out.push_str(&format!(" ({} ms)", r.elapsed_ms));
                }
                out.push('\n');
            }
            out.push_str(&summary(results));
            out.push('\n');
            out
        }
        ReportFormat::Markdown => {
            let mut out = String::from("| claim | status | expected | computed | reference |\n|---|---|---|---|---|\n");
            for r in &sorted {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    r.claim_id,
                    r.status,
                    r.expected,
                    r.computed,
                    r.paper_ref.replace('|', "\\|")
                ));
            }
            out
        }
    }
}

/// `N pass, N fail, N unstable, N skipped`.
pub fn summary(results: &[ClaimResult]) -> String {
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    format!(
        "{} pass, {} fail, {} unstable, {} skipped",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Unstable),
        count(Status::Skipped)
    )
}

/// 0 when nothing failed or was unstable, 1 otherwise.
pub fn exit_code(results: &[ClaimResult]) -> i32 {
    if results.iter().any(|r| matches!(r.status, Status::Fail | Status::Unstable)) {
        1
    } else {
        0
    }
}
