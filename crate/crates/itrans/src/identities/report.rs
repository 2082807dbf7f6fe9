//! Verification reports and their JSON/CSV serializations.
//!
//! JSON carries the full per-point data (schema versioned, binary64 values
//! round-trip exactly). CSV carries the summary rows
//! `id,point,lhs,rhs,rel_residual,pass` under a schema comment line.

use serde::{Deserialize, Serialize};

use super::catalog::ParamPoint;

pub const REPORT_SCHEMA_VERSION: u32 = 1;
pub const CSV_SCHEMA_LINE: &str = "# itrans identity report csv v1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointResult {
    pub id: String,
    pub family: String,
    pub point: ParamPoint,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub n_points: usize,
    pub n_pass: usize,
    pub n_fail: usize,
    pub worst_rel: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_id: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub profile: String,
    pub summary: Summary,
    pub results: Vec<PointResult>,
}

impl VerificationReport {
    pub fn from_results(profile: String, results: Vec<PointResult>) -> Self {
        let n_points = results.len();
        let n_pass = results.iter().filter(|r| r.pass).count();
        let mut worst_rel = 0.0f64;
        let mut worst_id = None;
        for r in &results {
            if r.rel_residual.is_finite() && r.rel_residual > worst_rel {
                worst_rel = r.rel_residual;
                worst_id = Some(r.id.clone());
            }
        }
        VerificationReport {
            schema_version: REPORT_SCHEMA_VERSION,
            profile,
            summary: Summary {
                n_points,
                n_pass,
                n_fail: n_points - n_pass,
                worst_rel,
                worst_id,
            },
            results,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(CSV_SCHEMA_LINE);
        out.push('\n');
        out.push_str("id,point,lhs,rhs,rel_residual,pass\n");
        for r in &self.results {
            out.push_str(&format!(
                "{},{},{:e},{:e},{:e},{}\n",
                r.id,
                r.point.label().replace(' ', ";"),
                r.lhs,
                r.rhs,
                r.rel_residual,
                r.pass
            ));
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = if r.pass { "pass" } else { "FAIL" };
            out.push_str(&format!(
                "{status}  {:<16} {:<28} lhs {:.12e}  rhs {:.12e}  rel {:.2e}{}\n",
                r.id,
                r.point.label(),
                r.lhs,
                r.rhs,
                r.rel_residual,
                r.note
                    .as_ref()
                    .map(|n| format!("  [{n}]"))
                    .unwrap_or_default()
            ));
        }
        out.push_str(&format!(
            "{} points: {} pass, {} fail; worst rel residual {:.3e}{}\n",
            self.summary.n_points,
            self.summary.n_pass,
            self.summary.n_fail,
            self.summary.worst_rel,
            self.summary
                .worst_id
                .as_ref()
                .map(|id| format!(" ({id})"))
                .unwrap_or_default()
        ));
        out
    }
}
