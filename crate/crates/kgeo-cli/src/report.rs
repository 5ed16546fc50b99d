//! Structured report documents with two renderings: stable human-readable
//! text and machine-readable JSON with fixed field names. Identical inputs
//! produce byte-identical output in both forms.

use kgeo_core::audit::{AuditStatus, AuditVerdict};
use kgeo_core::{Digraph, GeodecityWitness, MooreReport, SearchOutcome};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub order: usize,
    pub d: usize,
    pub k: usize,
    pub min_out_degree: usize,
    pub max_out_degree: usize,
    pub min_in_degree: usize,
    pub max_in_degree: usize,
    pub moore_bound: u64,
    pub excess: Option<u64>,
    pub defect: Option<u64>,
    pub diregular: bool,
    pub geodetic: bool,
    pub geodecity_witness: Option<String>,
    /// `outliers[u]` lists the vertices at distance > k from `u`; present
    /// only for geodetic digraphs.
    pub outliers: Option<Vec<Vec<usize>>>,
}

impl CheckReport {
    pub fn build(g: &Digraph, report: &MooreReport) -> CheckReport {
        let witness = match g.check_k_geodetic(report.k) {
            Ok(()) => None,
            Err(w) => Some(w.to_string()),
        };
        CheckReport {
            order: report.n,
            d: report.d,
            k: report.k,
            min_out_degree: report.degrees.min_out,
            max_out_degree: report.degrees.max_out,
            min_in_degree: report.degrees.min_in,
            max_in_degree: report.degrees.max_in,
            moore_bound: report.moore_bound,
            excess: report.excess(),
            defect: report.defect(),
            diregular: report.diregular,
            geodetic: report.geodetic,
            geodecity_witness: witness,
            outliers: report.outliers.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "order: {}", self.order);
        let _ = writeln!(s, "parameters: d={} k={}", self.d, self.k);
        let _ = writeln!(
            s,
            "out-degree: {}..{}  in-degree: {}..{}",
            self.min_out_degree, self.max_out_degree, self.min_in_degree, self.max_in_degree
        );
        let _ = writeln!(s, "moore_bound: {}", self.moore_bound);
        match (self.excess, self.defect) {
            (Some(e), _) => {
                let _ = writeln!(s, "excess: {e}");
            }
            (_, Some(d)) => {
                let _ = writeln!(s, "defect: {d}");
            }
            _ => {}
        }
        let _ = writeln!(s, "diregular: {}", self.diregular);
        let _ = writeln!(s, "geodetic: {}", self.geodetic);
        if let Some(w) = &self.geodecity_witness {
            let _ = writeln!(s, "witness: {w}");
        }
        if let Some(outliers) = &self.outliers {
            let _ = writeln!(s, "outliers:");
            for (u, o) in outliers.iter().enumerate() {
                let rendered: Vec<String> = o.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "  {u}: {}", rendered.join(" "));
            }
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictDoc {
    pub check: String,
    pub subject: String,
    pub status: String,
    pub witness: Option<String>,
    pub informational_conclusion: Option<bool>,
    pub informational_witness: Option<String>,
}

impl VerdictDoc {
    pub fn build(v: &AuditVerdict) -> VerdictDoc {
        VerdictDoc {
            check: v.check.to_string(),
            subject: v.subject.to_string(),
            status: v.status.to_string(),
            witness: v.witness.as_ref().map(|w| w.to_string()),
            informational_conclusion: v.informational.as_ref().map(|i| i.conclusion_holds),
            informational_witness: v
                .informational
                .as_ref()
                .and_then(|i| i.witness.as_ref())
                .map(|w| w.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub d: usize,
    pub k: usize,
    pub holds: usize,
    pub fails: usize,
    pub vacuous: usize,
    pub verdicts: Vec<VerdictDoc>,
}

impl AuditReport {
    pub fn build(d: usize, k: usize, verdicts: &[AuditVerdict]) -> AuditReport {
        let count = |status: AuditStatus| verdicts.iter().filter(|v| v.status == status).count();
        AuditReport {
            d,
            k,
            holds: count(AuditStatus::Holds),
            fails: count(AuditStatus::Fails),
            vacuous: count(AuditStatus::Vacuous),
            verdicts: verdicts.iter().map(VerdictDoc::build).collect(),
        }
    }

    pub fn any_fails(&self) -> bool {
        self.fails > 0
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "audit: d={} k={}", self.d, self.k);
        for v in &self.verdicts {
            let _ = writeln!(s, "{:<32} {:<16} {}", v.check, v.subject, v.status);
            if let Some(w) = &v.witness {
                let _ = writeln!(s, "    witness: {w}");
            }
            if let Some(c) = v.informational_conclusion {
                let _ = writeln!(
                    s,
                    "    informational: conclusion {} under unmet hypotheses",
                    if c { "holds" } else { "fails" }
                );
                if let Some(w) = &v.informational_witness {
                    let _ = writeln!(s, "    informational witness: {w}");
                }
            }
        }
        let _ = writeln!(s, "summary: {} holds, {} fails, {} vacuous", self.holds, self.fails, self.vacuous);
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchSummary {
    pub d: usize,
    pub k: usize,
    pub epsilon: usize,
    pub require_diregular: bool,
    pub order: usize,
    pub split_depth: usize,
    pub result_count: usize,
    pub canonical_forms: Vec<String>,
    pub nodes_explored: u64,
    pub complete: bool,
    pub duration_ms: Option<u64>,
}

impl SearchSummary {
    pub fn build(outcome: &SearchOutcome) -> SearchSummary {
        SearchSummary {
            d: outcome.params.d,
            k: outcome.params.k,
            epsilon: outcome.params.epsilon,
            require_diregular: outcome.params.require_diregular,
            order: outcome.params.target_order().unwrap_or(0),
            split_depth: outcome.params.split_depth,
            result_count: outcome.results.len(),
            canonical_forms: outcome.canonical_forms.iter().map(|f| f.to_hex()).collect(),
            nodes_explored: outcome.nodes_explored,
            complete: outcome.complete,
            duration_ms: outcome.duration_ms,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "search: d={} k={} epsilon={} diregular={} order={}",
            self.d, self.k, self.epsilon, self.require_diregular, self.order
        );
        let _ = writeln!(s, "results: {}", self.result_count);
        let _ = writeln!(s, "nodes_explored: {}", self.nodes_explored);
        let _ = writeln!(s, "complete: {}", self.complete);
        if let Some(ms) = self.duration_ms {
            let _ = writeln!(s, "duration_ms: {ms}");
        }
        for form in &self.canonical_forms {
            let _ = writeln!(s, "canonical: {form}");
        }
        s
    }
}

/// JSON rendering shared by all report documents.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("reports serialize infallibly");
    s.push('\n');
    s
}

/// Renders a geodecity witness exactly as embedded in reports.
pub fn witness_line(w: &GeodecityWitness) -> String {
    w.to_string()
}
