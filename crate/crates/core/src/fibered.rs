//! Gabai's fibering algorithm for oriented pretzel knots.
//!
//! A knot is Type 1 when every tangle is antiparallel, Type 3 when every
//! tangle is parallel and Type 2 otherwise. Types 2 and 3 consult the
//! auxiliary link `L'`, which replaces each parallel tangle `m` with
//! `|m| > 1` by `-2 sign(m)`, drops parallel units and keeps antiparallel
//! tangles as they are.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{orient, OrientedDiagram, PretzelCode, RoleKind};
use crate::error::{KnotError, Result};
use crate::statesum::alexander_of_diagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PretzelType {
    #[serde(rename = "Type1")]
    Type1,
    #[serde(rename = "Type2A")]
    Type2A,
    #[serde(rename = "Type2B")]
    Type2B,
    /// Type 2 with parallel sign counts differing by more than two.
    #[serde(rename = "Type2-other")]
    Type2Other,
    #[serde(rename = "Type3-2A")]
    Type3_2A,
    #[serde(rename = "Type3-2B")]
    Type3_2B,
    #[serde(rename = "Type3-min")]
    Type3Min,
    /// Type 3 with sign counts differing by more than two.
    #[serde(rename = "Type3-other")]
    Type3Other,
}

impl PretzelType {
    pub fn name(self) -> &'static str {
        match self {
            PretzelType::Type1 => "Type1",
            PretzelType::Type2A => "Type2A",
            PretzelType::Type2B => "Type2B",
            PretzelType::Type2Other => "Type2-other",
            PretzelType::Type3_2A => "Type3-2A",
            PretzelType::Type3_2B => "Type3-2B",
            PretzelType::Type3Min => "Type3-min",
            PretzelType::Type3Other => "Type3-other",
        }
    }

    /// Whether a fiber of this type is the Seifert-algorithm surface of the
    /// standard diagram.
    pub fn fiber_is_seifert_surface(self) -> bool {
        matches!(
            self,
            PretzelType::Type1 | PretzelType::Type2A | PretzelType::Type3_2A
        )
    }
}

impl fmt::Display for PretzelType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryLink {
    pub tangles: Vec<i64>,
}

impl fmt::Display for AuxiliaryLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tangles.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberednessVerdict {
    #[serde(rename = "type")]
    pub pretzel_type: PretzelType,
    pub fibered: bool,
    pub fiber_is_seifert_surface: bool,
    pub fiber_genus: Option<u64>,
    pub trace: Vec<String>,
}

pub fn auxiliary_link(diagram: &OrientedDiagram) -> Result<AuxiliaryLink> {
    if diagram.parallel_count() == 0 {
        return Err(KnotError::Type1Input);
    }
    let tangles = diagram
        .code
        .tangles()
        .iter()
        .zip(&diagram.roles)
        .filter_map(|(&n, role)| match role.kind {
            RoleKind::Parallel if n.abs() == 1 => None,
            RoleKind::Parallel => Some(-2 * n.signum()),
            RoleKind::Antiparallel => Some(n),
        })
        .collect();
    Ok(AuxiliaryLink { tangles })
}

fn dihedral(t: &[i64]) -> impl Iterator<Item = Vec<i64>> + '_ {
    let r = t.len();
    (0..r.max(1)).flat_map(move |k| {
        let mut a = t.to_vec();
        a.rotate_left(k % r.max(1));
        let mut b = a.clone();
        b.reverse();
        [a, b]
    })
}

/// `±(2,-2,...,2,-2)` up to rotation and reversal.
pub fn is_alternating_twos(t: &[i64]) -> bool {
    !t.is_empty()
        && t.len().is_multiple_of(2)
        && t.iter().all(|n| n.abs() == 2)
        && t.windows(2).all(|w| w[0] == -w[1])
}

fn alternating_prefix(t: &[i64], s: i64) -> bool {
    t.iter()
        .enumerate()
        .all(|(k, &n)| n == if k % 2 == 0 { 2 * s } else { -2 * s })
}

/// Which of the three Type 1 fibering patterns `t` satisfies, if any.
pub fn type1_rule(t: &[i64]) -> Option<u8> {
    for s in [1, -1] {
        if t.iter().all(|&n| n == s || n == -3 * s) && t.contains(&s) {
            return Some(1);
        }
    }
    let r = t.len();
    for image in dihedral(t) {
        for s in [1, -1] {
            let (body, last) = image.split_at(r - 1);
            if r % 2 == 1 && alternating_prefix(body, s) {
                return Some(2);
            }
            if r.is_multiple_of(2) && alternating_prefix(body, s) && last[0] == -4 * s {
                return Some(3);
            }
        }
    }
    None
}

fn sign_counts(diagram: &OrientedDiagram) -> (usize, usize) {
    let mut pos = 0;
    let mut neg = 0;
    for role in diagram.roles.iter().filter(|r| r.is_parallel()) {
        if role.sign > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    (pos, neg)
}

pub fn pretzel_type(diagram: &OrientedDiagram) -> Result<PretzelType> {
    let parallel = diagram.parallel_count();
    if parallel == 0 {
        return Ok(PretzelType::Type1);
    }
    let all_parallel = parallel == diagram.tangle_count();
    let (pos, neg) = sign_counts(diagram);
    let diff = pos.abs_diff(neg);
    let tag = match (all_parallel, diff) {
        (false, 2) => PretzelType::Type2A,
        (false, 0) => {
            if is_alternating_twos(&auxiliary_link(diagram)?.tangles) {
                return Err(KnotError::NotMinimal(diagram.code.clone()));
            }
            PretzelType::Type2B
        }
        (false, _) => PretzelType::Type2Other,
        (true, 2) => PretzelType::Type3_2A,
        (true, 0) => {
            if is_alternating_twos(&auxiliary_link(diagram)?.tangles) {
                PretzelType::Type3Min
            } else {
                PretzelType::Type3_2B
            }
        }
        (true, _) => PretzelType::Type3Other,
    };
    Ok(tag)
}

fn type1_decision(t: &[i64], depth: u8, trace: &mut Vec<String>) -> bool {
    assert!(
        depth <= 1,
        "auxiliary links are Type 1, so one level suffices"
    );
    let rendered = AuxiliaryLink {
        tangles: t.to_vec(),
    };
    match type1_rule(t) {
        Some(rule) => {
            trace.push(format!("{rendered} fibers by Type 1 rule ({rule})"));
            true
        }
        None => {
            trace.push(format!("{rendered} matches no Type 1 rule"));
            false
        }
    }
}

/// Fiberedness of an oriented diagram, without the fiber genus.
pub fn fiberedness(diagram: &OrientedDiagram) -> Result<FiberednessVerdict> {
    let code = &diagram.code;
    let pretzel_type = pretzel_type(diagram)?;
    let mut trace = vec![format!("{code} is {pretzel_type}")];
    let fibered = if code.len() <= 2 {
        trace.push(match code.tangles() {
            [_] => "one tangle: the unknot".to_string(),
            t => format!("two tangles: the torus knot T(2,{})", t.iter().sum::<i64>()),
        });
        true
    } else {
        match pretzel_type {
            PretzelType::Type1 => type1_decision(code.tangles(), 0, &mut trace),
            PretzelType::Type2A | PretzelType::Type3_2A => {
                let bad: Vec<i64> = code
                    .tangles()
                    .iter()
                    .zip(&diagram.roles)
                    .filter(|(n, r)| !r.is_parallel() && n.abs() != 2)
                    .map(|(n, _)| *n)
                    .collect();
                if bad.is_empty() {
                    trace.push(
                        "parallel signs differ by two and every antiparallel tangle is ±2".into(),
                    );
                    true
                } else {
                    trace.push(format!("antiparallel tangles {bad:?} are not ±2"));
                    false
                }
            }
            PretzelType::Type2B | PretzelType::Type3_2B => {
                let aux = auxiliary_link(diagram)?;
                trace.push(format!("balanced parallel signs, auxiliary link {aux}"));
                type1_decision(&aux.tangles, 1, &mut trace)
            }
            PretzelType::Type3Min => {
                let min = code
                    .tangles()
                    .iter()
                    .map(|n| n.abs())
                    .min()
                    .expect("nonempty");
                let count = code.tangles().iter().filter(|n| n.abs() == min).count();
                trace.push(format!("{count} tangle(s) of minimal length {min}"));
                count == 1
            }
            PretzelType::Type2Other | PretzelType::Type3Other => {
                trace.push("parallel sign counts differ by more than two".into());
                false
            }
        }
    };
    trace.push(if fibered { "fibered" } else { "not fibered" }.into());
    Ok(FiberednessVerdict {
        pretzel_type,
        fibered,
        fiber_is_seifert_surface: fibered && pretzel_type.fiber_is_seifert_surface(),
        fiber_genus: None,
        trace,
    })
}

/// Full verdict; a fibered knot's genus is the degree of its Alexander
/// polynomial.
pub fn is_fibered(code: &PretzelCode) -> Result<FiberednessVerdict> {
    let diagram = orient(code)?;
    let mut verdict = fiberedness(&diagram)?;
    if verdict.fibered {
        verdict.fiber_genus = Some(alexander_of_diagram(&diagram)?.degree() as u64);
    }
    Ok(verdict)
}
