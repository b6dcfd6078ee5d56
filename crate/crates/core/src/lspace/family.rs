//! Recognition of the knots on the L-space list.
//!
//! A pretzel code is the Montesinos knot whose rational tangles are `1/n_i`.
//! With at most two tangles of length greater than one the knot is two-bridge
//! and is compared with `T(2, α)`; with three or more such tangles it is
//! compared through the Montesinos invariants, namely the cyclic sequence of
//! fractions mod 1 up to rotation and reversal and the total `Σ 1/n_i`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::PretzelCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `±(-2, 3, q)` with q odd and at least 3.
    NegTwoThreeQ { q: i64 },
    /// `T(2, 2n+1)` up to mirror image, recorded with `n ≥ 0`.
    Torus2 { n: i64 },
    /// `±(3, -5, 3, -2)`, which passes every polynomial test.
    HfkException,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::NegTwoThreeQ { q } => write!(f, "(-2,3,{q})"),
            Family::Torus2 { n } => write!(f, "T(2,{})", 2 * n + 1),
            Family::HfkException => write!(f, "(3,-5,3,-2)"),
        }
    }
}

/// What the code is as a two-bridge or Montesinos knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MontesinosForm {
    /// Two-bridge knot `b(α, β)` with `0 ≤ β < α`.
    TwoBridge { alpha: BigInt, beta: BigInt },
    Montesinos {
        fractions: Vec<BigRational>,
        total: BigRational,
    },
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn fractional_part(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// `N(p/q + r/s)` is the two-bridge knot `b(ps + qr, p's + q'r)` where
/// `pq' - qp' = -1`.
fn two_bridge_sum(p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) -> (BigInt, BigInt) {
    let e = p.extended_gcd(q);
    // e.x * p + e.y * q = ±1, so (p', q') = ±(y, -x) gives pq' - qp' = -1
    let sign = if e.gcd.is_one() {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let p1 = &e.y * &sign;
    let q1 = -&e.x * &sign;
    debug_assert_eq!(p * &q1 - q * &p1, -BigInt::one());
    (p * s + q * r, p1 * s + q1 * r)
}

pub fn montesinos_form(code: &PretzelCode) -> MontesinosForm {
    let units: i64 = code.tangles().iter().filter(|n| n.abs() == 1).sum();
    let big: Vec<i64> = code
        .tangles()
        .iter()
        .copied()
        .filter(|n| n.abs() > 1)
        .collect();
    let reduce = |alpha: BigInt, beta: BigInt| {
        let alpha = alpha.abs();
        let beta = if alpha.is_zero() {
            beta
        } else {
            beta.mod_floor(&alpha)
        };
        MontesinosForm::TwoBridge { alpha, beta }
    };
    match big.as_slice() {
        [] => reduce(BigInt::from(units), BigInt::one()),
        [a] => reduce(BigInt::from(1 + units * a), BigInt::from(*a)),
        [a, b] => {
            let p = BigInt::from(1 + units * a);
            let q = BigInt::from(*a);
            let (alpha, beta) = two_bridge_sum(&p, &q, &BigInt::one(), &BigInt::from(*b));
            reduce(alpha, beta)
        }
        _ => {
            let total = code
                .tangles()
                .iter()
                .fold(BigRational::zero(), |acc, &n| acc + frac(1, n));
            let fractions = big.iter().map(|&n| fractional_part(&frac(1, n))).collect();
            MontesinosForm::Montesinos { fractions, total }
        }
    }
}

fn dihedral_equal<T: PartialEq + Clone>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let mut rev: Vec<T> = b.to_vec();
    rev.reverse();
    (0..n.max(1))
        .any(|k| (0..n).all(|i| a[i] == b[(i + k) % n]) || (0..n).all(|i| a[i] == rev[(i + k) % n]))
}

fn same_montesinos(x: &MontesinosForm, y: &MontesinosForm) -> bool {
    match (x, y) {
        (
            MontesinosForm::Montesinos {
                fractions: fa,
                total: ta,
            },
            MontesinosForm::Montesinos {
                fractions: fb,
                total: tb,
            },
        ) => ta == tb && dihedral_equal(fa, fb),
        _ => false,
    }
}

fn mirror_form(form: &MontesinosForm) -> MontesinosForm {
    match form {
        MontesinosForm::TwoBridge { alpha, beta } => MontesinosForm::TwoBridge {
            alpha: alpha.clone(),
            beta: if alpha.is_zero() {
                -beta
            } else {
                (-beta).mod_floor(alpha)
            },
        },
        MontesinosForm::Montesinos { fractions, total } => MontesinosForm::Montesinos {
            fractions: fractions.iter().map(|f| fractional_part(&-f)).collect(),
            total: -total,
        },
    }
}

fn equal_up_to_mirror(form: &MontesinosForm, target: &PretzelCode) -> bool {
    let t = montesinos_form(target);
    same_montesinos(form, &t) || same_montesinos(&mirror_form(form), &t)
}

/// Family membership of a pretzel knot code.
pub fn match_family(code: &PretzelCode) -> Option<Family> {
    let form = montesinos_form(code);
    match &form {
        MontesinosForm::TwoBridge { alpha, beta } => {
            let is_torus = alpha.is_one()
                || (beta - 1u32).mod_floor(alpha).is_zero()
                || (beta + 1u32).mod_floor(alpha).is_zero();
            if is_torus {
                let n: i64 = ((alpha - 1u32) / 2u32).try_into().ok()?;
                Some(Family::Torus2 { n })
            } else {
                None
            }
        }
        MontesinosForm::Montesinos { fractions, .. } => {
            if fractions.len() == 3 {
                for f in fractions {
                    let q_frac = fractional_part(f);
                    for cand in [q_frac.clone(), fractional_part(&-q_frac)] {
                        if cand.numer().is_one() && cand.denom() > &BigInt::from(2) {
                            let q: i64 = cand.denom().try_into().ok()?;
                            if q % 2 == 1
                                && equal_up_to_mirror(
                                    &form,
                                    &PretzelCode::new(vec![-2, 3, q]).expect("nonzero"),
                                )
                            {
                                return Some(Family::NegTwoThreeQ { q });
                            }
                        }
                    }
                }
            }
            let exception = PretzelCode::new(vec![3, -5, 3, -2]).expect("nonzero");
            equal_up_to_mirror(&form, &exception).then_some(Family::HfkException)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(v: &[i64]) -> PretzelCode {
        PretzelCode::new(v.to_vec()).unwrap()
    }

    fn family(v: &[i64]) -> Option<Family> {
        match_family(&code(v))
    }

    #[test]
    fn permutations_of_minus_two_three_q() {
        assert_eq!(family(&[3, 7, -2]), Some(Family::NegTwoThreeQ { q: 7 }));
        assert_eq!(family(&[2, -3, -7]), Some(Family::NegTwoThreeQ { q: 7 }));
        assert_eq!(family(&[-2, 3, 3]), Some(Family::NegTwoThreeQ { q: 3 }));
        assert_eq!(family(&[-2, 3, 9]), Some(Family::NegTwoThreeQ { q: 9 }));
        assert_eq!(family(&[-2, 5, 7]), None);
        assert_eq!(family(&[-2, 3, -3]), None);
        assert_eq!(family(&[2, 3, 7]), None);
    }

    #[test]
    fn torus_knots() {
        assert_eq!(family(&[1, 1, 1, 1, 1]), Some(Family::Torus2 { n: 2 }));
        assert_eq!(family(&[-1, -1, -1]), Some(Family::Torus2 { n: 1 }));
        assert_eq!(family(&[3, 4]), Some(Family::Torus2 { n: 3 }));
        assert_eq!(family(&[-2, 3, 1]), Some(Family::Torus2 { n: 2 }));
        assert_eq!(family(&[1, -3, -3]), Some(Family::Torus2 { n: 1 }));
        assert_eq!(family(&[5]), Some(Family::Torus2 { n: 0 }));
    }

    #[test]
    fn two_bridge_non_torus() {
        assert_eq!(family(&[1, 1, -3]), None);
        assert_eq!(family(&[1, 1, 3]), None);
        assert_eq!(
            montesinos_form(&code(&[1, 1, -3])),
            MontesinosForm::TwoBridge {
                alpha: 5.into(),
                beta: 2.into()
            }
        );
    }

    #[test]
    fn hfk_exception_orbit() {
        assert_eq!(family(&[3, -5, 3, -2]), Some(Family::HfkException));
        assert_eq!(family(&[-2, 3, -5, 3]), Some(Family::HfkException));
        assert_eq!(family(&[-3, 5, -3, 2]), Some(Family::HfkException));
        assert_eq!(family(&[3, 3, -5, -2]), None);
    }

    #[test]
    fn display() {
        assert_eq!(Family::Torus2 { n: 2 }.to_string(), "T(2,5)");
        assert_eq!(Family::NegTwoThreeQ { q: 7 }.to_string(), "(-2,3,7)");
    }
}
