//! Reference Alexander polynomial from the Wirtinger presentation and Fox
//! calculus, built from its own model of the standard diagram.
//!
//! Each tangle is a column of crossings. Between consecutive crossings (and
//! at the ends) the two strands sit at a left and a right slot; every
//! crossing swaps the slots. For `n > 0` the strand running from the upper
//! left slot to the lower right slot is on top, for `n < 0` the other one.

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use crate::diagram::PretzelCode;
use crate::error::{KnotError, Result};
use crate::laurent::LaurentPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub over: usize,
    pub incoming: usize,
    pub outgoing: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WirtingerData {
    pub arc_count: usize,
    pub relations: Vec<Relation>,
}

const LEFT: usize = 0;
const RIGHT: usize = 1;

struct Layout {
    lens: Vec<usize>,
    base: Vec<usize>,
}

impl Layout {
    fn new(code: &PretzelCode) -> Self {
        let lens: Vec<usize> = code
            .tangles()
            .iter()
            .map(|n| n.unsigned_abs() as usize)
            .collect();
        let mut base = Vec::with_capacity(lens.len());
        let mut next = 0;
        for &l in &lens {
            base.push(next);
            next += 2 * (l + 1);
        }
        Self { lens, base }
    }

    fn node(&self, tangle: usize, level: usize, slot: usize) -> usize {
        self.base[tangle] + 2 * level + slot
    }

    fn node_count(&self) -> usize {
        self.base
            .last()
            .map_or(0, |b| b + 2 * (self.lens.last().unwrap() + 1))
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut x = x;
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn wirtinger(code: &PretzelCode) -> Result<WirtingerData> {
    let r = code.len();
    let layout = Layout::new(code);
    let lens = &layout.lens;
    let nodes = layout.node_count();

    // Walk the knot, recording whether each crossing strand is traversed
    // downward. strand 0 joins (level, LEFT) to (level+1, RIGHT).
    let mut down = vec![[None::<bool>; 2]; layout.base.last().unwrap() / 2 + lens[r - 1] + 1];
    let crossing_id = |i: usize, j: usize| layout.base[i] / 2 + j;
    let start = (0usize, 0usize, LEFT, true);
    let mut state = start;
    let mut visited_nodes = 0;
    loop {
        let (i, level, slot, going_down) = state;
        visited_nodes += 1;
        if visited_nodes > 2 * nodes + 2 {
            return Err(KnotError::Inconsistent("strand walk does not close".into()));
        }
        if going_down && level < lens[i] {
            let strand = if slot == LEFT { 0 } else { 1 };
            down[crossing_id(i, level)][strand] = Some(true);
            state = (i, level + 1, 1 - slot, true);
        } else if !going_down && level > 0 {
            let strand = if slot == RIGHT { 0 } else { 1 };
            down[crossing_id(i, level - 1)][strand] = Some(false);
            state = (i, level - 1, 1 - slot, false);
        } else if going_down {
            // at the bottom end: leave along the bottom arc
            state = if slot == RIGHT {
                let k = (i + 1) % r;
                (k, lens[k], LEFT, false)
            } else {
                let k = (i + r - 1) % r;
                (k, lens[k], RIGHT, false)
            };
        } else {
            state = if slot == RIGHT {
                ((i + 1) % r, 0, LEFT, true)
            } else {
                let k = (i + r - 1) % r;
                (k, 0, RIGHT, true)
            };
        }
        if state == start {
            break;
        }
    }

    let mut parent: Vec<usize> = (0..nodes).collect();
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        parent[ra] = rb;
    };
    for i in 0..r {
        let k = (i + 1) % r;
        union(
            &mut parent,
            layout.node(i, 0, RIGHT),
            layout.node(k, 0, LEFT),
        );
        union(
            &mut parent,
            layout.node(i, lens[i], RIGHT),
            layout.node(k, lens[k], LEFT),
        );
    }
    struct Crossing {
        over: (usize, usize),
        under: (usize, usize),
        over_vec: (i64, i64),
        under_vec: (i64, i64),
    }
    let mut crossings = Vec::new();
    for i in 0..r {
        let n = code.tangles()[i];
        for j in 0..lens[i] {
            let ends = [
                (layout.node(i, j, LEFT), layout.node(i, j + 1, RIGHT)),
                (layout.node(i, j, RIGHT), layout.node(i, j + 1, LEFT)),
            ];
            // downward direction vectors in the plane (x right, y up)
            let vectors = [(1i64, -1i64), (-1, -1)];
            let dirs = down[crossing_id(i, j)];
            let oriented = |s: usize| -> Result<((usize, usize), (i64, i64))> {
                let d = dirs[s].ok_or_else(|| KnotError::NotAKnot {
                    components: code.component_count(),
                })?;
                let (a, b) = ends[s];
                let (x, y) = vectors[s];
                Ok(if d {
                    ((a, b), (x, y))
                } else {
                    ((b, a), (-x, -y))
                })
            };
            let (top, bottom) = if n > 0 { (0, 1) } else { (1, 0) };
            let (over, over_vec) = oriented(top)?;
            let (under, under_vec) = oriented(bottom)?;
            union(&mut parent, over.0, over.1);
            crossings.push(Crossing {
                over,
                under,
                over_vec,
                under_vec,
            });
        }
    }

    let mut arc_of = vec![usize::MAX; nodes];
    let mut arc_count = 0;
    for v in 0..nodes {
        let root = find(&mut parent, v);
        if arc_of[root] == usize::MAX {
            arc_of[root] = arc_count;
            arc_count += 1;
        }
        arc_of[v] = arc_of[root];
    }
    let relations = crossings
        .iter()
        .map(|c| {
            let cross = c.over_vec.0 * c.under_vec.1 - c.over_vec.1 * c.under_vec.0;
            Relation {
                over: arc_of[c.over.0],
                incoming: arc_of[c.under.0],
                outgoing: arc_of[c.under.1],
                sign: cross.signum() as i8,
            }
        })
        .collect();
    Ok(WirtingerData {
        arc_count,
        relations,
    })
}

/// Dense polynomial in `t` with nonnegative exponents, lowest degree first.
type Poly<T> = Vec<T>;

fn trim<T: Zero>(p: &mut Poly<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul<T: Clone + Zero + CheckedMul + CheckedAdd>(
    a: &Poly<T>,
    b: &Poly<T>,
) -> Option<Poly<T>> {
    if a.is_empty() || b.is_empty() {
        return Some(Vec::new());
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(&x.checked_mul(y)?)?;
        }
    }
    Some(out)
}

fn poly_sub<T: Clone + Zero + CheckedSub>(a: &Poly<T>, b: &Poly<T>) -> Option<Poly<T>> {
    let mut out = vec![T::zero(); a.len().max(b.len())];
    for (k, slot) in out.iter_mut().enumerate() {
        let x = a.get(k).cloned().unwrap_or_else(T::zero);
        let y = b.get(k).cloned().unwrap_or_else(T::zero);
        *slot = x.checked_sub(&y)?;
    }
    trim(&mut out);
    Some(out)
}

/// Exact quotient `a / b`; `None` on overflow or a nonzero remainder.
fn poly_div_exact<T>(a: &Poly<T>, b: &Poly<T>) -> Option<Poly<T>>
where
    T: Clone
        + Zero
        + CheckedMul
        + CheckedSub
        + std::ops::Div<Output = T>
        + std::ops::Rem<Output = T>,
{
    if a.is_empty() {
        return Some(Vec::new());
    }
    let lead = b.last()?.clone();
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let mut q = vec![T::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = rem[k + b.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        if !(top.clone() % lead.clone()).is_zero() {
            return None;
        }
        let c = top / lead.clone();
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] = rem[k + j].checked_sub(&c.checked_mul(bj)?)?;
        }
        q[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// Fraction-free (Bareiss) determinant. `None` signals coefficient overflow.
fn bareiss<T>(mut m: Vec<Vec<Poly<T>>>) -> Option<Poly<T>>
where
    T: Clone
        + Zero
        + One
        + CheckedMul
        + CheckedAdd
        + CheckedSub
        + std::ops::Neg<Output = T>
        + std::ops::Div<Output = T>
        + std::ops::Rem<Output = T>,
{
    let n = m.len();
    if n == 0 {
        return Some(vec![T::one()]);
    }
    let mut prev: Poly<T> = vec![T::one()];
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            let p = (k + 1..n).find(|&p| !m[p][k].is_empty());
            match p {
                Some(p) => {
                    m.swap(k, p);
                    negate = !negate;
                }
                None => return Some(Vec::new()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = poly_mul(&m[k][k], &m[i][j])?;
                let b = poly_mul(&m[i][k], &m[k][j])?;
                let mut d = poly_sub(&a, &b)?;
                d = poly_div_exact(&d, &prev)?;
                m[i][j] = d;
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if negate {
        det = det.into_iter().map(|c| -c).collect();
    }
    Some(det)
}

fn fox_matrix<T: Clone + Zero + From<i32> + CheckedAdd>(data: &WirtingerData) -> Vec<Vec<Poly<T>>> {
    let n = data.arc_count;
    let mut m: Vec<Vec<Vec<i32>>> = vec![vec![Vec::new(); n]; data.relations.len()];
    let mut add = |row: usize, col: usize, coeffs: [i32; 2]| {
        let entry = &mut m[row][col];
        if entry.len() < 2 {
            entry.resize(2, 0);
        }
        entry[0] += coeffs[0];
        entry[1] += coeffs[1];
    };
    for (row, rel) in data.relations.iter().enumerate() {
        // x_out = x_over^s x_in x_over^-s, differentiated and abelianized
        // (the negative case multiplied through by t)
        if rel.sign > 0 {
            add(row, rel.over, [1, -1]);
            add(row, rel.incoming, [0, 1]);
            add(row, rel.outgoing, [-1, 0]);
        } else {
            add(row, rel.over, [-1, 1]);
            add(row, rel.incoming, [1, 0]);
            add(row, rel.outgoing, [0, -1]);
        }
    }
    m.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| {
                    let mut p: Poly<T> = e.into_iter().map(T::from).collect();
                    trim(&mut p);
                    p
                })
                .collect()
        })
        .collect()
}

fn minor<T: Clone>(m: &[Vec<Poly<T>>]) -> Vec<Vec<Poly<T>>> {
    let n = m.len() - 1;
    m[..n].iter().map(|row| row[..n].to_vec()).collect()
}

fn alexander_minor(data: &WirtingerData) -> Poly<BigInt> {
    if data.arc_count <= 1 {
        return vec![BigInt::one()];
    }
    if let Some(det) = bareiss(minor(&fox_matrix::<i128>(data))) {
        return det.into_iter().map(BigInt::from).collect();
    }
    bareiss(minor(&fox_matrix::<BigInt>(data))).expect("exact division over the integers")
}

/// Alexander polynomial by Fox calculus, centred and normalized so that its
/// value at 1 is +1.
pub fn alexander_oracle(code: &PretzelCode) -> Result<LaurentPolynomial> {
    let components = code.component_count();
    if components != 1 {
        return Err(KnotError::NotAKnot { components });
    }
    let data = wirtinger(code)?;
    if data.relations.len() != data.arc_count {
        return Err(KnotError::Inconsistent(format!(
            "{} arcs but {} relations",
            data.arc_count,
            data.relations.len()
        )));
    }
    let det = alexander_minor(&data);
    let poly = LaurentPolynomial::new(0, det);
    poly.unit_normalized()
        .ok_or_else(|| KnotError::Inconsistent(format!("odd span in {poly}")))
}
