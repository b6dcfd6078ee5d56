//! Exhaustive check of the classification over a box of pretzel codes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{classify_lspace, LSpaceReport, Verdict};
use crate::diagram::PretzelCode;
use crate::error::{KnotError, Result};

/// One line of the per-code report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub code: String,
    #[serde(rename = "type")]
    pub pretzel_type: String,
    pub fibered: bool,
    /// Fiber genus, present for fibered knots.
    pub genus: Option<u64>,
    #[serde(with = "crate::laurent::json_int")]
    pub det: BigInt,
    pub coeff_ok: Option<bool>,
    pub family: Option<String>,
    pub verdict: Verdict,
    pub elimination_reason: Option<String>,
}

impl ReportRow {
    fn from_report(report: &LSpaceReport) -> Self {
        let fib = report.fiberedness.as_ref();
        Self {
            code: report.code.to_string(),
            pretzel_type: fib.map_or_else(|| "unknot".into(), |f| f.pretzel_type.to_string()),
            fibered: report.fibered,
            genus: fib.and_then(|f| f.fiber_genus),
            det: report.det.clone(),
            coeff_ok: report.coeff_ok,
            family: report.family.map(|f| f.to_string()),
            verdict: report.verdict,
            elimination_reason: report.elimination.as_ref().map(|e| e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_tangles: usize,
    pub max_twist: i64,
    pub codes_checked: usize,
    /// Number of codes per outcome: `lspace_knot`, `inconclusive`, or the
    /// elimination reason.
    pub counts: BTreeMap<String, usize>,
    pub counterexamples: Vec<String>,
    pub rows: Vec<ReportRow>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let opt = |b: Option<bool>| b.map_or(String::new(), |b| b.to_string());
        w.write_record([
            "code",
            "type",
            "fibered",
            "genus",
            "det",
            "coeff_ok",
            "family",
            "verdict",
            "elimination_reason",
        ])
        .expect("in-memory write");
        for row in &self.rows {
            w.write_record([
                row.code.clone(),
                row.pretzel_type.clone(),
                row.fibered.to_string(),
                row.genus.map_or(String::new(), |g| g.to_string()),
                row.det.to_string(),
                opt(row.coeff_ok),
                row.family.clone().unwrap_or_default(),
                row.verdict.to_string(),
                row.elimination_reason.clone().unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "checked {} knot codes with at most {} tangles and |n_i| <= {}\n",
            self.codes_checked, self.max_tangles, self.max_twist
        );
        for (k, v) in &self.counts {
            out.push_str(&format!("  {k:<14}{v:>8}\n"));
        }
        if self.counterexamples.is_empty() {
            out.push_str("no counterexamples\n");
        } else {
            out.push_str(&format!(
                "counterexamples: {}\n",
                self.counterexamples.join(" ")
            ));
        }
        out
    }
}

/// Minimal knot codes with `1 ≤ r ≤ max_tangles` and `|n_i| ≤ max_twist`,
/// one per orbit under rotation, reversal and mirroring, in increasing order.
pub fn enumerate_codes(max_tangles: usize, max_twist: i64) -> Vec<PretzelCode> {
    let values: Vec<i64> = (-max_twist..=max_twist).filter(|&n| n != 0).collect();
    let mut out = Vec::new();
    for r in 1..=max_tangles {
        let mut idx = vec![0usize; r];
        loop {
            let tangles: Vec<i64> = idx.iter().map(|&k| values[k]).collect();
            let code = PretzelCode::new(tangles).expect("nonzero entries");
            if code.is_minimal() && code.is_knot() && code == code.canonical() {
                out.push(code);
            }
            let mut k = r;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < values.len() {
                    break;
                }
                idx[k] = 0;
            }
            if idx.iter().all(|&k| k == 0) {
                break;
            }
        }
    }
    out.sort();
    out
}

fn outcome_key(report: &LSpaceReport) -> String {
    match (&report.verdict, &report.elimination) {
        (Verdict::LSpaceKnot, _) => "lspace_knot".into(),
        (Verdict::Inconclusive, _) => "inconclusive".into(),
        (_, Some(e)) => e.key().into(),
        (_, None) => "unclassified".into(),
    }
}

/// Classifies every enumerated code; counterexamples are listed in the
/// report rather than raised.
pub fn run_verification(
    max_tangles: usize,
    max_twist: i64,
    workers: Option<usize>,
) -> Result<VerificationReport> {
    if max_tangles < 3 {
        return Err(KnotError::InvalidBounds(format!(
            "max tangles must be at least 3, got {max_tangles}"
        )));
    }
    if max_twist < 1 {
        return Err(KnotError::InvalidBounds(format!(
            "max twist must be at least 1, got {max_twist}"
        )));
    }
    let codes = enumerate_codes(max_tangles, max_twist);
    let classify_all =
        || -> Result<Vec<LSpaceReport>> { codes.par_iter().map(classify_lspace).collect() };
    let reports = match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| KnotError::Inconsistent(e.to_string()))?
            .install(classify_all)?,
        None => classify_all()?,
    };
    let mut counts = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for r in &reports {
        *counts.entry(outcome_key(r)).or_insert(0) += 1;
        if r.verdict == Verdict::Inconclusive {
            counterexamples.push(r.code.to_string());
        }
    }
    Ok(VerificationReport {
        max_tangles,
        max_twist,
        codes_checked: reports.len(),
        counts,
        counterexamples,
        rows: reports.iter().map(ReportRow::from_report).collect(),
    })
}

/// Fails with the first counterexample, if any code passes every
/// obstruction without belonging to a known family.
pub fn verify_classification(max_tangles: usize, max_twist: i64) -> Result<VerificationReport> {
    let report = run_verification(max_tangles, max_twist, None)?;
    match report.counterexamples.first() {
        Some(c) => Err(KnotError::CounterexampleFound(
            c.parse().expect("rendered codes parse"),
        )),
        None => Ok(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_canonical_and_minimal() {
        let codes = enumerate_codes(3, 3);
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        for c in &codes {
            assert!(c.is_knot() && c.is_minimal());
            assert_eq!(*c, c.canonical());
        }
        assert!(codes.contains(&PretzelCode::new(vec![-3, -3, 2]).unwrap().canonical()));
    }

    #[test]
    fn small_box_has_no_counterexample() {
        let report = verify_classification(3, 5).unwrap();
        assert!(report.counterexamples.is_empty());
        assert_eq!(report.codes_checked, report.rows.len());
        assert!(report.counts["lspace_knot"] > 0);
    }

    #[test]
    fn rejects_small_bounds() {
        assert!(matches!(
            run_verification(2, 5, None),
            Err(KnotError::InvalidBounds(_))
        ));
    }

    #[test]
    fn csv_header_and_rows() {
        let report = run_verification(3, 2, Some(1)).unwrap();
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("code,type,fibered,genus,det,coeff_ok,family,verdict,elimination_reason")
        );
        assert_eq!(lines.count(), report.rows.len());
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let a = run_verification(3, 4, Some(1)).unwrap();
        let b = run_verification(3, 4, Some(3)).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
        assert_eq!(a.to_json(), b.to_json());
    }
}
