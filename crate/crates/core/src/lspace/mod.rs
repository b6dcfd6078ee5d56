//! The L-space obstruction pipeline and the classification of pretzel knots
//! with L-space surgeries.
//!
//! A code is run through, in order: fiberedness, the bound `|a_s| ≤ 1` on the
//! Alexander polynomial, the determinant bound `det ≤ 2g + 1`, and finally the
//! list of known families.

pub mod family;
pub mod hfk;
pub mod verify;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

pub use family::{match_family, Family};
pub use hfk::HfkTable;
pub use verify::{verify_classification, ReportRow, VerificationReport};

use crate::diagram::{normalize, orient, PretzelCode};
use crate::error::{KnotError, Result};
use crate::fibered::{fiberedness, FiberednessVerdict};
use crate::invariants::{determinant_formula, seifert_genus};
use crate::laurent::LaurentPolynomial;
use crate::statesum::alexander_of_diagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    LSpaceKnot,
    NotLSpaceKnot,
    /// Passes every obstruction without matching a known family.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::LSpaceKnot => "LSpaceKnot",
            Verdict::NotLSpaceKnot => "NotLSpaceKnot",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Elimination {
    NotFibered,
    /// Some `|a_s|` exceeds one; the largest is recorded.
    Coefficient {
        #[serde(with = "crate::laurent::json_int")]
        max: BigInt,
    },
    Determinant,
    /// Knot Floer homology of rank at least two in some Alexander grading.
    Hfk,
}

impl Elimination {
    pub fn key(&self) -> &'static str {
        match self {
            Elimination::NotFibered => "not_fibered",
            Elimination::Coefficient { .. } => "coefficient",
            Elimination::Determinant => "determinant",
            Elimination::Hfk => "hfk",
        }
    }
}

impl fmt::Display for Elimination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elimination::NotFibered => f.write_str("not fibered"),
            Elimination::Coefficient { max } => write!(f, "coefficient {max}"),
            Elimination::Determinant => f.write_str("det > 2g+1"),
            Elimination::Hfk => f.write_str("HFK dimension >= 2 in some grading"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LSpaceReport {
    pub code: PretzelCode,
    /// `None` when the code cancels to the unknot.
    pub normalized: Option<PretzelCode>,
    pub fiberedness: Option<FiberednessVerdict>,
    pub fibered: bool,
    pub alexander: Option<LaurentPolynomial>,
    #[serde(with = "crate::laurent::json_int")]
    pub det: BigInt,
    pub seifert_genus: u64,
    pub coeff_ok: Option<bool>,
    pub det_ok: Option<bool>,
    pub family: Option<Family>,
    pub verdict: Verdict,
    pub elimination: Option<Elimination>,
}

/// `true` iff every coefficient has absolute value at most one.
pub fn coefficient_obstruction(poly: &LaurentPolynomial) -> bool {
    poly.max_abs_coeff() <= BigInt::one()
}

fn unknot_report(code: &PretzelCode) -> LSpaceReport {
    LSpaceReport {
        code: code.clone(),
        normalized: None,
        fiberedness: None,
        fibered: true,
        alexander: Some(LaurentPolynomial::one()),
        det: BigInt::one(),
        seifert_genus: 0,
        coeff_ok: Some(true),
        det_ok: Some(true),
        family: Some(Family::Torus2 { n: 0 }),
        verdict: Verdict::LSpaceKnot,
        elimination: None,
    }
}

/// Runs the pipeline on a knot code, normalizing it first.
pub fn classify_lspace(code: &PretzelCode) -> Result<LSpaceReport> {
    let components = code.component_count();
    if components != 1 {
        return Err(KnotError::NotAKnot { components });
    }
    let normal = match normalize(code) {
        Ok(c) => c,
        Err(KnotError::Unknot) => return Ok(unknot_report(code)),
        Err(e) => return Err(e),
    };
    let diagram = orient(&normal)?;
    let mut fib = fiberedness(&diagram)?;
    let det = determinant_formula(&normal)?;
    let mut report = LSpaceReport {
        code: code.clone(),
        normalized: Some(normal.clone()),
        fiberedness: None,
        fibered: fib.fibered,
        alexander: None,
        det: det.clone(),
        seifert_genus: seifert_genus(&diagram),
        coeff_ok: None,
        det_ok: None,
        family: None,
        verdict: Verdict::NotLSpaceKnot,
        elimination: None,
    };
    if !fib.fibered {
        report.fiberedness = Some(fib);
        report.elimination = Some(Elimination::NotFibered);
        return Ok(report);
    }

    let delta = alexander_of_diagram(&diagram)?;
    let genus = delta.degree() as u64;
    fib.fiber_genus = Some(genus);
    report.fiberedness = Some(fib);
    if delta.eval(-1).abs() != det {
        return Err(KnotError::Inconsistent(format!(
            "det {det} disagrees with |Δ(-1)| for {normal}"
        )));
    }
    let coeff_ok = coefficient_obstruction(&delta);
    let det_ok = det <= BigInt::from(2 * genus + 1);
    report.coeff_ok = Some(coeff_ok);
    report.det_ok = Some(det_ok);
    let max = delta.max_abs_coeff();
    report.alexander = Some(delta);
    report.family = match_family(&normal);
    if !coeff_ok {
        report.elimination = Some(Elimination::Coefficient { max });
        return Ok(report);
    }
    if !det_ok {
        report.elimination = Some(Elimination::Determinant);
        return Ok(report);
    }
    match report.family {
        Some(Family::HfkException) => report.elimination = Some(Elimination::Hfk),
        Some(_) => report.verdict = Verdict::LSpaceKnot,
        None => report.verdict = Verdict::Inconclusive,
    }
    Ok(report)
}
