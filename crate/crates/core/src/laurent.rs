//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `Σ coeffs[k] t^(min_exp + k)`, kept trimmed: the first and last stored
/// coefficients are nonzero, and the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(exp, vec![c.into()])
    }

    pub fn new(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { min_exp, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::new(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        Self::from_map(&map)
    }

    pub fn from_map(map: &BTreeMap<i64, BigInt>) -> Self {
        let (Some((&lo, _)), Some((&hi, _))) = (map.first_key_value(), map.last_key_value()) else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in map {
            coeffs[(e - lo) as usize] = c.clone();
        }
        Self::new(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    /// Distance between the extreme exponents.
    pub fn span(&self) -> i64 {
        self.coeffs.len().saturating_sub(1) as i64
    }

    /// Top exponent of a symmetric polynomial; for knots this is `deg Δ`.
    pub fn degree(&self) -> i64 {
        self.max_exp().unwrap_or(0)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.min_exp;
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.min_exp + k as i64, c))
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            min_exp: if self.is_zero() { 0 } else { self.min_exp + by },
            coeffs: self.coeffs.clone(),
        }
    }

    /// `p(t^-1)`.
    pub fn invert_variable(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(-self.max_exp().unwrap_or(0), coeffs)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.invert_variable()
    }

    pub fn eval(&self, t: i64) -> BigInt {
        // the point -1 and 1 are the ones we need; negative exponents are
        // only allowed at units
        assert!(
            t.abs() == 1 || self.min_exp >= 0,
            "negative exponent evaluated at a non-unit"
        );
        let t = BigInt::from(t);
        self.terms()
            .map(|(e, c)| c * t.pow(e.unsigned_abs() as u32))
            .sum()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Divides by the power of `t` that centres the exponent range on zero.
    /// Returns `None` when the span is odd.
    pub fn centered(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.span() % 2 != 0 {
            return None;
        }
        Some(Self {
            min_exp: -self.span() / 2,
            coeffs: self.coeffs.clone(),
        })
    }

    /// Representative of `±t^k · self` that is centred with positive value at 1
    /// (positive leading coefficient if the value at 1 vanishes).
    pub fn unit_normalized(&self) -> Option<Self> {
        let c = self.centered()?;
        let at_one = c.eval(1);
        let negative = if at_one.is_zero() {
            c.leading_coeff().is_negative()
        } else {
            at_one.is_negative()
        };
        Some(if negative { -c } else { c })
    }

    pub fn equals_up_to_unit(&self, other: &Self) -> bool {
        if self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        self.coeffs == other.coeffs || self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| *a == -b)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPolynomial::new(lo, coeffs)
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: Self) -> LaurentPolynomial {
        &self + &rhs
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            min_exp: self.min_exp,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self + &(-rhs.clone())
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::new(self.min_exp + rhs.min_exp, coeffs)
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: Self) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Ascending exponents, e.g. `t^-3 - t^-2 + 1 - t^2 + t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial term {0:?}")]
pub struct ParsePolynomialError(String);

impl FromStr for LaurentPolynomial {
    type Err = ParsePolynomialError;

    /// Accepts the rendering produced by `Display` (spacing is optional).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero());
        }
        // split into signed terms
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev = '\0';
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && prev != '^' {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = ch;
        }
        if !cur.is_empty() {
            terms.push(cur);
        }

        let bad = |t: &str| ParsePolynomialError(t.to_string());
        let mut parsed = Vec::new();
        for term in &terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, &term[..]),
            };
            let (coef, exp) = match body.find('t') {
                None => (body.parse::<BigInt>().map_err(|_| bad(term))?, 0),
                Some(k) => {
                    let coef = if k == 0 {
                        BigInt::one()
                    } else {
                        body[..k].parse::<BigInt>().map_err(|_| bad(term))?
                    };
                    let rest = &body[k + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse::<i64>().ok())
                            .ok_or_else(|| bad(term))?
                    };
                    (coef, exp)
                }
            };
            parsed.push((exp, if neg { -coef } else { coef }));
        }
        Ok(Self::from_terms(parsed))
    }
}

/// Serde adapter writing a `BigInt` as a plain JSON number.
pub mod json_int {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        n.to_string()
            .parse::<serde_json::Number>()
            .map_err(serde::ser::Error::custom)?
            .serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        serde_json::Number::deserialize(deserializer)?
            .to_string()
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    min_exp: i64,
    coeffs: Vec<serde_json::Number>,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.to_string()
                    .parse::<serde_json::Number>()
                    .map_err(serde::ser::Error::custom)
            })
            .collect::<Result<_, _>>()?;
        PolynomialJson {
            min_exp: self.min_exp,
            coeffs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|n| {
                n.to_string()
                    .parse::<BigInt>()
                    .map_err(serde::de::Error::custom)
            })
            .collect::<Result<_, _>>()?;
        Ok(Self::new(raw.min_exp, coeffs))
    }
}
