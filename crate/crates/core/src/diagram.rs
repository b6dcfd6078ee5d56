//! Pretzel notation and the standard pretzel diagram.
//!
//! A code `(n_1,...,n_r)` describes r vertical twist regions placed side by
//! side. The top-right end of tangle i is joined to the top-left end of tangle
//! i+1 (cyclically, the last join runs over the top of the picture) and
//! likewise along the bottom. The bottom outer arc, joining the last tangle to
//! the first, is the decorated edge used by the state sum.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{KnotError, Result};

/// Ordered list of nonzero half-twist counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct PretzelCode(Vec<i64>);

impl PretzelCode {
    pub fn new(tangles: Vec<i64>) -> Result<Self> {
        if tangles.is_empty() {
            return Err(KnotError::Unknot);
        }
        if let Some(index) = tangles.iter().position(|&n| n == 0) {
            return Err(KnotError::ZeroTangle { index });
        }
        Ok(Self(tangles))
    }

    pub fn tangles(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.0.iter().map(|n| n.unsigned_abs() as usize).sum()
    }

    pub fn mirror(&self) -> Self {
        Self(self.0.iter().map(|n| -n).collect())
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn rotated(&self, k: usize) -> Self {
        let mut t = self.0.clone();
        if !t.is_empty() {
            let len = t.len();
            t.rotate_left(k % len);
        }
        Self(t)
    }

    /// Images under cyclic rotation and reversal of the tangle order.
    pub fn dihedral_images(&self) -> Vec<PretzelCode> {
        let r = self.len();
        let rev = self.reversed();
        (0..r)
            .flat_map(|k| [self.rotated(k), rev.rotated(k)])
            .collect()
    }

    /// Lexicographically least code among rotations, reversals and mirror
    /// images. These moves preserve the knot up to mirroring.
    pub fn canonical(&self) -> PretzelCode {
        let mirror = self.mirror();
        self.dihedral_images()
            .into_iter()
            .chain(mirror.dihedral_images())
            .min()
            .expect("nonempty code")
    }

    /// Lexicographically least permutation (or mirrored permutation).
    pub fn multiset_key(&self) -> Vec<i64> {
        let mut a = self.0.clone();
        a.sort_unstable();
        let mut b: Vec<i64> = self.0.iter().map(|n| -n).collect();
        b.sort_unstable();
        a.min(b)
    }

    /// No `{+1,-1}` pair and no `{±1,∓2}` pair.
    pub fn is_minimal(&self) -> bool {
        let has = |v: i64| self.0.contains(&v);
        !(has(1) && has(-1) || has(1) && has(-2) || has(-1) && has(2))
    }

    pub fn component_count(&self) -> usize {
        component_count(self)
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    pub fn even_count(&self) -> usize {
        self.0.iter().filter(|n| *n % 2 == 0).count()
    }
}

impl fmt::Display for PretzelCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for PretzelCode {
    type Err = KnotError;

    fn from_str(s: &str) -> Result<Self> {
        parse_pretzel(s)
    }
}

impl TryFrom<Vec<i64>> for PretzelCode {
    type Error = KnotError;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<PretzelCode> for Vec<i64> {
    fn from(c: PretzelCode) -> Self {
        c.0
    }
}

/// Parses `"(" int ("," int)* ")"` with optional whitespace.
pub fn parse_pretzel(text: &str) -> Result<PretzelCode> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let err = |position: usize, message: &str| KnotError::Syntax {
        position,
        message: message.to_string(),
    };

    skip_ws(&mut pos);
    if bytes.get(pos) != Some(&b'(') {
        return Err(err(pos, "expected '('"));
    }
    pos += 1;

    let mut tangles = Vec::new();
    loop {
        skip_ws(&mut pos);
        let start = pos;
        if matches!(bytes.get(pos), Some(b'-') | Some(b'+')) {
            pos += 1;
        }
        let digits = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == digits {
            return Err(err(pos, "expected an integer"));
        }
        let n: i64 = text[start..pos]
            .parse()
            .map_err(|_| err(start, "integer out of range"))?;
        if n == 0 {
            return Err(KnotError::ZeroTangle {
                index: tangles.len(),
            });
        }
        tangles.push(n);

        skip_ws(&mut pos);
        match bytes.get(pos) {
            Some(b',') => pos += 1,
            Some(b')') => {
                pos += 1;
                break;
            }
            _ => return Err(err(pos, "expected ',' or ')'")),
        }
    }
    skip_ws(&mut pos);
    if pos != bytes.len() {
        return Err(err(pos, "trailing characters"));
    }
    PretzelCode::new(tangles)
}

/// Cancels `+1` against `-1` tangles, then folds each remaining `±1` into a
/// `∓2` tangle (the sum of the two is the tangle `±2`). Survivors keep their
/// relative order.
pub fn normalize(code: &PretzelCode) -> Result<PretzelCode> {
    let mut t = code.0.clone();
    while let (Some(a), Some(b)) = (
        t.iter().position(|&n| n == 1),
        t.iter().position(|&n| n == -1),
    ) {
        t.remove(a.max(b));
        t.remove(a.min(b));
    }
    while let Some(u) = t.iter().position(|n| n.abs() == 1) {
        let s = t[u];
        match t.iter().position(|&n| n == -2 * s) {
            Some(k) => {
                t[k] = 2 * s;
                t.remove(u);
            }
            None => break,
        }
    }
    if t.is_empty() {
        Err(KnotError::Unknot)
    } else {
        Ok(PretzelCode(t))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReducedForm {
    Unknot,
    /// The torus knot or link `T(2, q)`.
    Torus {
        q: i64,
    },
    Pretzel(PretzelCode),
}

pub fn reduce_small(code: &PretzelCode) -> ReducedForm {
    match code.tangles() {
        [_] => ReducedForm::Unknot,
        [a, b] => ReducedForm::Torus { q: a + b },
        _ => ReducedForm::Pretzel(code.clone()),
    }
}

// Endpoint numbering of the standard diagram: tangle i owns 4i..4i+4 in the
// order top-left, top-right, bottom-left, bottom-right.
pub(crate) const TL: usize = 0;
pub(crate) const TR: usize = 1;
pub(crate) const BL: usize = 2;
pub(crate) const BR: usize = 3;

pub(crate) fn endpoint(tangle: usize, corner: usize) -> usize {
    4 * tangle + corner
}

/// Partner of an endpoint through its own tangle.
pub(crate) fn through_tangle(code: &PretzelCode, e: usize) -> usize {
    let (i, c) = (e / 4, e % 4);
    let odd = code.0[i] % 2 != 0;
    let partner = match (c, odd) {
        (TL, true) => BR,
        (TR, true) => BL,
        (BL, true) => TR,
        (BR, true) => TL,
        (TL, false) => BL,
        (TR, false) => BR,
        (BL, false) => TL,
        (_, false) => TR,
        _ => unreachable!(),
    };
    endpoint(i, partner)
}

/// Partner of an endpoint along the arcs joining neighbouring tangles.
pub(crate) fn between_tangles(r: usize, e: usize) -> usize {
    let (i, c) = (e / 4, e % 4);
    let next = (i + 1) % r;
    let prev = (i + r - 1) % r;
    match c {
        TR => endpoint(next, TL),
        TL => endpoint(prev, TR),
        BR => endpoint(next, BL),
        BL => endpoint(prev, BR),
        _ => unreachable!(),
    }
}

pub fn component_count(code: &PretzelCode) -> usize {
    let r = code.len();
    let mut seen = vec![false; 4 * r];
    let mut components = 0;
    for start in 0..4 * r {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut e = start;
        loop {
            seen[e] = true;
            let f = through_tangle(code, e);
            seen[f] = true;
            e = between_tangles(r, f);
            if e == start {
                break;
            }
        }
    }
    components
}

pub fn mirror(code: &PretzelCode) -> PretzelCode {
    code.mirror()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StrandDir {
    Up,
    Down,
}

impl StrandDir {
    pub fn flip(self) -> Self {
        match self {
            StrandDir::Up => StrandDir::Down,
            StrandDir::Down => StrandDir::Up,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RoleKind {
    /// Both strands run the same way (an `m_i` tangle).
    Parallel,
    /// The strands run opposite ways (an `m_ij` tangle).
    Antiparallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TangleRole {
    pub kind: RoleKind,
    pub sign: i8,
}

impl TangleRole {
    pub fn is_parallel(&self) -> bool {
        self.kind == RoleKind::Parallel
    }
}

/// The bottom outer arc, running from the bottom-right end of the last
/// tangle to the bottom-left end of the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecoratedEdge {
    pub from_tangle: usize,
    pub to_tangle: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedDiagram {
    pub code: PretzelCode,
    /// Per tangle: direction of the strand leaving the top-left end, then
    /// of the strand leaving the top-right end.
    pub strand_dirs: Vec<[StrandDir; 2]>,
    pub roles: Vec<TangleRole>,
    pub decorated_edge: DecoratedEdge,
    pub component_count: usize,
}

impl OrientedDiagram {
    /// The same diagram with the knot orientation reversed.
    pub fn reversed(&self) -> Self {
        let strand_dirs = self
            .strand_dirs
            .iter()
            .map(|[a, b]| [a.flip(), b.flip()])
            .collect();
        Self {
            strand_dirs,
            ..self.clone()
        }
    }

    pub fn parallel_count(&self) -> usize {
        self.roles.iter().filter(|r| r.is_parallel()).count()
    }

    pub fn tangle_count(&self) -> usize {
        self.code.len()
    }
}

fn role_of(n: i64, dirs: [StrandDir; 2]) -> TangleRole {
    let kind = if dirs[0] == dirs[1] {
        RoleKind::Parallel
    } else {
        RoleKind::Antiparallel
    };
    TangleRole {
        kind,
        sign: n.signum() as i8,
    }
}

/// Orients the knot so that the first parallel tangle points down, or, if
/// there is none, so that the top-left strand of the first tangle does.
pub fn orient(code: &PretzelCode) -> Result<OrientedDiagram> {
    let components = component_count(code);
    if components != 1 {
        return Err(KnotError::NotAKnot { components });
    }
    let r = code.len();
    let mut dirs = vec![[StrandDir::Down; 2]; r];

    // Walk the knot from the top-left end of tangle 0, heading down.
    let start = endpoint(0, TL);
    let mut e = start;
    loop {
        let f = through_tangle(code, e);
        let (i, c) = (e / 4, e % 4);
        match c {
            TL => dirs[i][0] = StrandDir::Down,
            TR => dirs[i][1] = StrandDir::Down,
            _ => {
                // entering from the bottom: the strand's top end is f
                let slot = if f % 4 == TL { 0 } else { 1 };
                dirs[i][slot] = StrandDir::Up;
            }
        }
        e = between_tangles(r, f);
        if e == start {
            break;
        }
    }

    let roles: Vec<TangleRole> = code
        .tangles()
        .iter()
        .zip(&dirs)
        .map(|(&n, &d)| role_of(n, d))
        .collect();

    if let Some(i) = roles.iter().position(|r| r.is_parallel()) {
        if dirs[i][0] == StrandDir::Up {
            for d in dirs.iter_mut() {
                *d = [d[0].flip(), d[1].flip()];
            }
        }
    }

    Ok(OrientedDiagram {
        code: code.clone(),
        strand_dirs: dirs,
        roles,
        decorated_edge: DecoratedEdge {
            from_tangle: r - 1,
            to_tangle: 0,
        },
        component_count: 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(v: &[i64]) -> PretzelCode {
        PretzelCode::new(v.to_vec()).unwrap()
    }

    fn kinds(d: &OrientedDiagram) -> String {
        d.roles
            .iter()
            .map(|r| if r.is_parallel() { 'P' } else { 'A' })
            .collect()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_pretzel("(-2,3,7)").unwrap(), code(&[-2, 3, 7]));
        assert_eq!(
            parse_pretzel("( 3, -5 , 3, -2 )").unwrap(),
            code(&[3, -5, 3, -2])
        );
        assert_eq!(
            parse_pretzel("(2,0,3)"),
            Err(KnotError::ZeroTangle { index: 1 })
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "()", "(1,", "(1,,2)", "1,2", "(1 2)", "(1)x", "(--1)"] {
            assert!(
                matches!(parse_pretzel(bad), Err(KnotError::Syntax { .. })),
                "{bad:?}"
            );
        }
        assert_eq!(parse_pretzel("(+3)").unwrap(), code(&[3]));
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(code(&[3, -5, 3, -2]).to_string(), "(3,-5,3,-2)");
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&code(&[1, -1, 3])).unwrap(), code(&[3]));
        assert_eq!(normalize(&code(&[-2, 3, 7])).unwrap(), code(&[-2, 3, 7]));
        assert_eq!(normalize(&code(&[1, -1, 1, -1])), Err(KnotError::Unknot));
        assert_eq!(normalize(&code(&[-2, 3, 1])).unwrap(), code(&[2, 3]));
        assert_eq!(normalize(&code(&[5, -1, 2, 7])).unwrap(), code(&[5, -2, 7]));
    }

    #[test]
    fn reduce_small_examples() {
        assert_eq!(reduce_small(&code(&[3, 4])), ReducedForm::Torus { q: 7 });
        assert_eq!(reduce_small(&code(&[5])), ReducedForm::Unknot);
        assert_eq!(
            reduce_small(&code(&[-2, 3, 7])),
            ReducedForm::Pretzel(code(&[-2, 3, 7]))
        );
    }

    #[test]
    fn component_examples() {
        assert_eq!(component_count(&code(&[-2, 3, 7])), 1);
        assert_eq!(component_count(&code(&[1, 1, -3])), 1);
        assert_eq!(component_count(&code(&[2, 2, 2])), 3);
        assert_eq!(component_count(&code(&[3, 3])), 2);
        assert_eq!(component_count(&code(&[3, 3, 3, 3])), 2);
        assert_eq!(component_count(&code(&[5])), 1);
        assert_eq!(component_count(&code(&[4])), 1);
    }

    #[test]
    fn orient_examples() {
        let d = orient(&code(&[3, -3, 1, 3, 2])).unwrap();
        assert_eq!(kinds(&d), "PPPPA");
        assert_eq!(d.parallel_count(), 4);
        assert_eq!(d.strand_dirs[0], [StrandDir::Down; 2]);

        assert_eq!(kinds(&orient(&code(&[1, 1, -3])).unwrap()), "AAA");
        assert_eq!(kinds(&orient(&code(&[5, -7, 5, -4])).unwrap()), "PPPP");
        assert_eq!(kinds(&orient(&code(&[-2, 3, 7])).unwrap()), "APP");

        assert_eq!(
            orient(&code(&[2, 2, 2])),
            Err(KnotError::NotAKnot { components: 3 })
        );
    }

    #[test]
    fn orient_without_parallel_points_first_strand_down() {
        let d = orient(&code(&[3, 5, -7])).unwrap();
        assert_eq!(kinds(&d), "AAA");
        assert_eq!(d.strand_dirs[0][0], StrandDir::Down);
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(mirror(&code(&[-2, 3, 7])), code(&[2, -3, -7]));
        assert_eq!(mirror(&code(&[1, -1])), code(&[-1, 1]));
        let c = code(&[4, -1, 3]);
        assert_eq!(mirror(&mirror(&c)), c);
    }

    #[test]
    fn canonical_is_orbit_minimum() {
        let c = code(&[3, 7, -2]);
        assert_eq!(c.canonical(), code(&[-7, -3, 2]));
        assert_eq!(c.reversed().canonical(), c.canonical());
        assert_eq!(c.mirror().rotated(1).canonical(), c.canonical());
    }

    #[test]
    fn serde_rejects_zero() {
        assert!(serde_json::from_str::<PretzelCode>("[1,0]").is_err());
        let c: PretzelCode = serde_json::from_str("[-2,3,7]").unwrap();
        assert_eq!(c, code(&[-2, 3, 7]));
    }
}
