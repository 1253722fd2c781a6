use serde::{Deserialize, Serialize};

use super::TrialRecord;
use crate::asymptotics::ThresholdReport;
use crate::error::Result;

/// Empirical mean of one measure at one `c`, next to its limit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub q: f64,
    pub c: f64,
    pub n: usize,
    pub measure: String,
    pub trials: usize,
    pub mean: f64,
    pub stderr: f64,
    pub predicted: Option<f64>,
    pub deviation: Option<f64>,
}

type Extractor = fn(&TrialRecord) -> Option<f64>;

fn per_vertex(count: Option<usize>, r: &TrialRecord) -> Option<f64> {
    count.map(|k| k as f64 / r.n.max(1) as f64)
}

const MEASURES: [(&str, Extractor); 8] = [
    ("n1_core_frac", |r| per_vertex(r.n1_core, r)),
    ("n2_core_frac", |r| per_vertex(r.n2_core, r)),
    ("halfedge_core_frac", |r| {
        per_vertex(r.m_core.map(|m| 2 * m), r)
    }),
    ("core_plus_frac", |r| per_vertex(r.n_core_plus, r)),
    ("gap_frac", |r| {
        r.gap
            .map(|g| if r.m == 0 { 0.0 } else { g as f64 / r.m as f64 })
    }),
    ("orientable_rate", |r| {
        r.orientable.map(|o| if o { 1.0 } else { 0.0 })
    }),
    ("largest_rigid_frac", |r| r.largest_rigid_frac),
    ("largest_connected_rigid_frac", |r| {
        r.largest_connected_rigid_frac
    }),
];

fn predicted(measure: &str, report: &ThresholdReport) -> Option<f64> {
    match measure {
        "n1_core_frac" => report.core_n1_frac,
        "n2_core_frac" => report.core_n2_frac,
        "halfedge_core_frac" => report.core_halfedge_frac,
        "core_plus_frac" => report.core_plus_frac,
        "gap_frac" => report.orientable_limit.map(|f| 1.0 - f),
        _ => None,
    }
}

/// Per-`(q, c, n)` means and standard errors of every measured quantity,
/// with the predicted limit where one exists. Rows follow the first
/// appearance of each `(q, c, n)` in `records`.
pub fn compare(records: &[TrialRecord]) -> Result<Vec<SummaryRow>> {
    let mut keys: Vec<(f64, f64, usize)> = Vec::new();
    for r in records {
        let key = (r.q, r.c, r.n);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    let mut rows = Vec::new();
    for (q, c, n) in keys {
        let report = ThresholdReport::new(q, Some(c))?;
        let group: Vec<&TrialRecord> = records
            .iter()
            .filter(|r| (r.q, r.c, r.n) == (q, c, n))
            .collect();
        for (measure, extract) in MEASURES {
            let values: Vec<f64> = group.iter().filter_map(|r| extract(r)).collect();
            if values.is_empty() {
                continue;
            }
            let (mean, stderr) = mean_stderr(&values);
            let predicted = predicted(measure, &report);
            rows.push(SummaryRow {
                q,
                c,
                n,
                measure: measure.to_string(),
                trials: values.len(),
                mean,
                stderr,
                predicted,
                deviation: predicted.map(|p| (mean - p).abs()),
            });
        }
    }
    Ok(rows)
}

fn mean_stderr(values: &[f64]) -> (f64, f64) {
    let k = values.len() as f64;
    let mean = values.iter().sum::<f64>() / k;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0);
    (mean, (var / k).sqrt())
}
