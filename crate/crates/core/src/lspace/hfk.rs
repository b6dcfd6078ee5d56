//! Knot Floer homology of `(3,-5,3,-2)` over the two-element field.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfkTable {
    /// `(maslov, alexander, dimension)` for each nonzero group.
    pub entries: Vec<(i64, i64, u32)>,
}

impl HfkTable {
    /// The groups of `(3,-5,3,-2)`, Maslov grading first.
    pub fn exception() -> Self {
        let entries = vec![
            (4, 3, 1),
            (3, 2, 3),
            (2, 1, 4),
            (2, 2, 2),
            (1, 0, 3),
            (1, 1, 4),
            (0, -1, 4),
            (0, 0, 4),
            (-1, -2, 3),
            (-1, -1, 4),
            (-2, -3, 1),
            (-2, -2, 2),
        ];
        Self { entries }
    }

    pub fn dimension(&self, maslov: i64, alexander: i64) -> u32 {
        self.entries
            .iter()
            .find(|(m, s, _)| *m == maslov && *s == alexander)
            .map_or(0, |e| e.2)
    }

    /// Total dimension in each Alexander grading.
    pub fn column_totals(&self) -> BTreeMap<i64, u32> {
        let mut totals = BTreeMap::new();
        for &(_, s, d) in &self.entries {
            *totals.entry(s).or_insert(0) += d;
        }
        totals
    }

    /// `Σ_s Σ_M (-1)^M dim · t^s`.
    pub fn euler_characteristic(&self) -> LaurentPolynomial {
        let mut map = BTreeMap::new();
        for &(m, s, d) in &self.entries {
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            *map.entry(s).or_insert_with(|| BigInt::from(0)) += sign * i64::from(d);
        }
        LaurentPolynomial::from_map(&map)
    }

    /// Alexander gradings whose group has dimension at least two, so is
    /// neither 0 nor the field.
    pub fn thick_gradings(&self) -> Vec<i64> {
        self.column_totals()
            .into_iter()
            .filter(|&(_, d)| d >= 2)
            .map(|(s, _)| s)
            .collect()
    }

    pub fn render(&self) -> String {
        let (min_s, max_s) = (-3, 3);
        let mut out = String::from("   M\\s");
        for s in min_s..=max_s {
            out.push_str(&format!("{s:>4}"));
        }
        out.push('\n');
        for m in (-2..=4).rev() {
            out.push_str(&format!("{m:>6}"));
            for s in min_s..=max_s {
                match self.dimension(m, s) {
                    0 => out.push_str("   ."),
                    d => out.push_str(&format!("{d:>4}")),
                }
            }
            out.push('\n');
        }
        out
    }
}
