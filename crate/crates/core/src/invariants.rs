//! Determinant, Seifert genus and the determinant obstruction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{
    between_tangles, endpoint, orient, OrientedDiagram, PretzelCode, RoleKind, BL, BR, TL, TR,
};
use crate::error::{KnotError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    pub seifert_genus: u64,
    pub fiber_genus: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetVerdict {
    pub violated: bool,
    #[serde(with = "crate::laurent::json_int")]
    pub det: BigInt,
    /// `2g + 1` for the certified genus g.
    #[serde(with = "crate::laurent::json_int")]
    pub genus_bound: BigInt,
}

/// `|n_1 ⋯ n_r · Σ 1/n_i|`, the order of the first homology of the double
/// branched cover. Units of either sign enter the sum as `±1`.
pub fn determinant_formula(code: &PretzelCode) -> Result<BigInt> {
    let components = code.component_count();
    if components != 1 {
        return Err(KnotError::NotAKnot { components });
    }
    Ok(determinant_unchecked(code))
}

pub(crate) fn determinant_unchecked(code: &PretzelCode) -> BigInt {
    let product = code
        .tangles()
        .iter()
        .fold(BigInt::one(), |acc, &n| acc * BigInt::from(n));
    let sum = code.tangles().iter().fold(BigRational::zero(), |acc, &n| {
        acc + BigRational::new(BigInt::one(), BigInt::from(n))
    });
    let det = BigRational::from_integer(product) * sum;
    assert!(
        det.is_integer(),
        "determinant of a pretzel code is integral"
    );
    det.to_integer().abs()
}

/// Compares the determinant with `2g + 1` for a genus the caller has
/// certified (the fiber genus of a fibered knot).
pub fn det_obstruction(code: &PretzelCode, certified_genus: Option<u64>) -> Result<DetVerdict> {
    let det = determinant_formula(code)?;
    let g = certified_genus.ok_or(KnotError::GenusUncertified)?;
    let genus_bound = BigInt::from(2 * g + 1);
    Ok(DetVerdict {
        violated: det > genus_bound,
        det,
        genus_bound,
    })
}

/// Genus of the surface Seifert's algorithm builds on the standard
/// projection.
pub fn seifert_genus(diagram: &OrientedDiagram) -> u64 {
    let r = diagram.tangle_count();
    let mut parent: Vec<usize> = (0..4 * r).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    };
    let mut small_circles = 0;
    for (i, role) in diagram.roles.iter().enumerate() {
        let n = diagram.code.tangles()[i].unsigned_abs() as usize;
        match role.kind {
            RoleKind::Parallel => {
                union(endpoint(i, TL), endpoint(i, BL));
                union(endpoint(i, TR), endpoint(i, BR));
            }
            RoleKind::Antiparallel => {
                union(endpoint(i, TL), endpoint(i, TR));
                union(endpoint(i, BL), endpoint(i, BR));
                small_circles += n - 1;
            }
        }
    }
    for e in 0..4 * r {
        union(e, between_tangles(r, e));
    }
    let big_circles = (0..4 * r).filter(|&e| find(&mut parent, e) == e).count();
    let s = big_circles + small_circles;
    let c = diagram.code.crossing_count();
    ((c + 1 - s) / 2) as u64
}

pub fn seifert_genus_of(code: &PretzelCode) -> Result<u64> {
    Ok(seifert_genus(&orient(code)?))
}
