//! Kauffman states of the standard pretzel projection and the Alexander
//! polynomial `Δ = Σ (-1)^M t^A`.
//!
//! A black spanning tree keeps one whole tangle path (the trunk) and drops
//! exactly one edge from every other path, so states are indexed by a trunk
//! and one omitted position per remaining tangle. The dual white tree is made
//! of the white edges at the omitted crossings.

use std::collections::VecDeque;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::diagram::{orient, OrientedDiagram, PretzelCode};
use crate::error::{KnotError, Result};
use crate::graphs::{build_graphs, CheckerboardGraphs};
use crate::laurent::LaurentPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bigrading {
    pub a: i64,
    pub m: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KauffmanState {
    pub trunk: usize,
    /// Omitted position in each tangle path; `None` exactly at the trunk.
    pub omitted: Vec<Option<usize>>,
}

impl KauffmanState {
    pub fn black_tree(&self, graphs: &CheckerboardGraphs) -> Vec<usize> {
        let mut edges = Vec::new();
        for (i, o) in self.omitted.iter().enumerate() {
            for (j, c) in graphs.tangle_path(i).enumerate() {
                if Some(j) != *o {
                    edges.push(c);
                }
            }
        }
        edges
    }

    /// White edges at the crossings whose black edge is not in the tree.
    pub fn white_tree(&self, graphs: &CheckerboardGraphs) -> Vec<usize> {
        self.omitted
            .iter()
            .enumerate()
            .filter_map(|(i, o)| o.map(|j| graphs.crossing(i, j)))
            .collect()
    }
}

/// Iterates over all states: trunk first, then omitted positions
/// lexicographically.
pub struct StateIter<'a> {
    lens: Vec<usize>,
    next: Option<KauffmanState>,
    _graphs: &'a CheckerboardGraphs,
}

impl<'a> StateIter<'a> {
    fn first_for_trunk(lens: &[usize], trunk: usize) -> KauffmanState {
        let omitted = (0..lens.len())
            .map(|i| if i == trunk { None } else { Some(0) })
            .collect();
        KauffmanState { trunk, omitted }
    }
}

impl Iterator for StateIter<'_> {
    type Item = KauffmanState;

    fn next(&mut self) -> Option<KauffmanState> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut advanced = false;
        for i in (0..self.lens.len()).rev() {
            if let Some(o) = succ.omitted[i] {
                if o + 1 < self.lens[i] {
                    succ.omitted[i] = Some(o + 1);
                    advanced = true;
                    break;
                }
                succ.omitted[i] = Some(0);
            }
        }
        if advanced {
            self.next = Some(succ);
        } else if current.trunk + 1 < self.lens.len() {
            self.next = Some(Self::first_for_trunk(&self.lens, current.trunk + 1));
        }
        Some(current)
    }
}

pub fn enumerate_states(graphs: &CheckerboardGraphs) -> StateIter<'_> {
    let lens: Vec<usize> = (0..graphs.tangle_count())
        .map(|i| graphs.tangle_len(i))
        .collect();
    let next = Some(StateIter::first_for_trunk(&lens, 0));
    StateIter {
        lens,
        next,
        _graphs: graphs,
    }
}

fn sigma(k_orientation: Option<(usize, usize)>, from: usize, to: usize) -> i8 {
    match k_orientation {
        None => 0,
        Some(o) if o == (from, to) => 1,
        Some(_) => -1,
    }
}

/// Orients the tree edges away from `root` by breadth-first search, returning
/// `(crossing, from, to)` triples, or `None` if the edges do not form a
/// spanning tree.
fn orient_tree(
    vertex_count: usize,
    root: usize,
    edges: &[(usize, usize, usize)],
) -> Option<Vec<(usize, usize, usize)>> {
    if edges.len() + 1 != vertex_count {
        return None;
    }
    let mut adjacency = vec![Vec::new(); vertex_count];
    for &(c, a, b) in edges {
        adjacency[a].push((b, c));
        adjacency[b].push((a, c));
    }
    let mut seen = vec![false; vertex_count];
    let mut oriented = Vec::with_capacity(edges.len());
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        for &(w, c) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                oriented.push((c, v, w));
                queue.push_back(w);
            }
        }
    }
    (oriented.len() == edges.len()).then_some(oriented)
}

/// Per-crossing σ labels of a state, black and white, computed from the
/// root-outward orientation of each tree found by search.
pub fn sigma_labels(
    state: &KauffmanState,
    graphs: &CheckerboardGraphs,
) -> Result<(Vec<i8>, Vec<i8>)> {
    let n = graphs.crossing_count();
    let black: Vec<_> = state
        .black_tree(graphs)
        .into_iter()
        .map(|c| (c, graphs.black_edges[c].upper, graphs.black_edges[c].lower))
        .collect();
    let white: Vec<_> = state
        .white_tree(graphs)
        .into_iter()
        .map(|c| (c, graphs.white_edges[c].left, graphs.white_edges[c].right))
        .collect();
    let black = orient_tree(graphs.black_vertex_count, graphs.black_root, &black)
        .ok_or_else(|| KnotError::Inconsistent("black edges do not span".into()))?;
    let white = orient_tree(graphs.white_vertex_count, graphs.white_root, &white)
        .ok_or_else(|| KnotError::Inconsistent("dual white edges do not span".into()))?;
    let mut sb = vec![0; n];
    let mut sw = vec![0; n];
    for (c, from, to) in black {
        sb[c] = sigma(graphs.black_orientation[c], from, to);
    }
    for (c, from, to) in white {
        sw[c] = sigma(graphs.white_orientation[c], from, to);
    }
    Ok((sb, sw))
}

fn grading_from_doubled(a2: i64, m: i64) -> Result<Bigrading> {
    if a2 % 2 != 0 {
        return Err(KnotError::Inconsistent(format!(
            "half-integral Alexander grading {a2}/2"
        )));
    }
    Ok(Bigrading { a: a2 / 2, m })
}

/// `A = ½ Σ σ η` and `M = Σ_{σ=+1} η` over both trees.
pub fn bigrading(state: &KauffmanState, graphs: &CheckerboardGraphs) -> Result<Bigrading> {
    let (sb, sw) = sigma_labels(state, graphs)?;
    let mut a2 = 0i64;
    let mut m = 0i64;
    for c in 0..graphs.crossing_count() {
        for (s, eta) in [(sb[c], graphs.eta_black[c]), (sw[c], graphs.eta_white[c])] {
            a2 += (s * eta) as i64;
            if s == 1 {
                m += eta as i64;
            }
        }
    }
    grading_from_doubled(a2, m)
}

/// Doubled-A and M contributions of each tangle for each trunk, read off the
/// tree shape directly: with trunk t, a non-trunk path is hung from the top
/// above its omitted edge and from the root below it, and the white tree
/// fans out from the outer region to both sides of the trunk.
struct ContributionTable {
    /// `trunk[t]` = contribution of the trunk path itself.
    trunk: Vec<(i64, i64)>,
    /// `branch[t][i][o]` for non-trunk tangle i omitting position o.
    branch: Vec<Vec<Vec<(i64, i64)>>>,
}

impl ContributionTable {
    fn new(graphs: &CheckerboardGraphs) -> Self {
        let r = graphs.tangle_count();
        let add = |acc: &mut (i64, i64), s: i8, eta: i8| {
            acc.0 += (s * eta) as i64;
            if s == 1 {
                acc.1 += eta as i64;
            }
        };
        let mut trunk = Vec::with_capacity(r);
        let mut branch = Vec::with_capacity(r);
        for t in 0..r {
            let mut tc = (0, 0);
            for c in graphs.tangle_path(t) {
                let e = graphs.black_edges[c];
                add(
                    &mut tc,
                    sigma(graphs.black_orientation[c], e.lower, e.upper),
                    graphs.eta_black[c],
                );
            }
            trunk.push(tc);
            let mut per_tangle = Vec::with_capacity(r);
            for i in 0..r {
                if i == t {
                    per_tangle.push(Vec::new());
                    continue;
                }
                let path: Vec<usize> = graphs.tangle_path(i).collect();
                let mut options = Vec::with_capacity(path.len());
                for o in 0..path.len() {
                    let mut acc = (0, 0);
                    for (j, &c) in path.iter().enumerate() {
                        let e = graphs.black_edges[c];
                        let s = match j.cmp(&o) {
                            std::cmp::Ordering::Less => {
                                sigma(graphs.black_orientation[c], e.upper, e.lower)
                            }
                            std::cmp::Ordering::Greater => {
                                sigma(graphs.black_orientation[c], e.lower, e.upper)
                            }
                            std::cmp::Ordering::Equal => continue,
                        };
                        add(&mut acc, s, graphs.eta_black[c]);
                    }
                    let c = path[o];
                    let w = graphs.white_edges[c];
                    let s = if i < t {
                        sigma(graphs.white_orientation[c], w.left, w.right)
                    } else {
                        sigma(graphs.white_orientation[c], w.right, w.left)
                    };
                    add(&mut acc, s, graphs.eta_white[c]);
                    options.push(acc);
                }
                per_tangle.push(options);
            }
            branch.push(per_tangle);
        }
        Self { trunk, branch }
    }
}

/// Visits every state with its bigrading, using precomputed per-tangle
/// contributions. Stops at the first error returned by `visit`.
pub fn for_each_graded_state<F>(graphs: &CheckerboardGraphs, mut visit: F) -> Result<()>
where
    F: FnMut(&KauffmanState, Bigrading) -> Result<()>,
{
    let table = ContributionTable::new(graphs);
    let r = graphs.tangle_count();
    for t in 0..r {
        let others: Vec<usize> = (0..r).filter(|&i| i != t).collect();
        let mut state = StateIter::first_for_trunk(
            &(0..r).map(|i| graphs.tangle_len(i)).collect::<Vec<_>>(),
            t,
        );
        // partial sums: prefix[k] = trunk + contributions of others[..k]
        let mut prefix = vec![table.trunk[t]; others.len() + 1];
        let refill = |prefix: &mut Vec<(i64, i64)>, state: &KauffmanState, from: usize| {
            for k in from..others.len() {
                let i = others[k];
                let o = state.omitted[i].expect("non-trunk");
                let (a, m) = table.branch[t][i][o];
                prefix[k + 1] = (prefix[k].0 + a, prefix[k].1 + m);
            }
        };
        refill(&mut prefix, &state, 0);
        loop {
            let (a2, m) = prefix[others.len()];
            visit(&state, grading_from_doubled(a2, m)?)?;
            // odometer over the non-trunk tangles
            let mut k = others.len();
            let mut advanced = false;
            while k > 0 {
                k -= 1;
                let i = others[k];
                let o = state.omitted[i].expect("non-trunk");
                if o + 1 < graphs.tangle_len(i) {
                    state.omitted[i] = Some(o + 1);
                    advanced = true;
                    break;
                }
                state.omitted[i] = Some(0);
            }
            if !advanced {
                break;
            }
            refill(&mut prefix, &state, k);
        }
    }
    Ok(())
}

/// State sum over an already oriented diagram.
pub fn alexander_of_diagram(diagram: &OrientedDiagram) -> Result<LaurentPolynomial> {
    let graphs = build_graphs(diagram);
    let offset = graphs.crossing_count() as i64;
    let mut counts = vec![0i64; 2 * graphs.crossing_count() + 1];
    for_each_graded_state(&graphs, |_, g| {
        counts[(g.a + offset) as usize] += if g.m.rem_euclid(2) == 0 { 1 } else { -1 };
        Ok(())
    })?;
    let coeffs = counts.into_iter().map(BigInt::from).collect();
    Ok(LaurentPolynomial::new(-offset, coeffs))
}

pub fn alexander(code: &PretzelCode) -> Result<LaurentPolynomial> {
    alexander_of_diagram(&orient(code)?)
}

/// All states of minimal Alexander grading, with that grading.
pub fn minimal_states(code: &PretzelCode) -> Result<(i64, Vec<(KauffmanState, Bigrading)>)> {
    let graphs = build_graphs(&orient(code)?);
    minimal_states_of(&graphs)
}

pub fn minimal_states_of(
    graphs: &CheckerboardGraphs,
) -> Result<(i64, Vec<(KauffmanState, Bigrading)>)> {
    let mut best = i64::MAX;
    let mut found = Vec::new();
    for_each_graded_state(graphs, |s, g| {
        if g.a < best {
            best = g.a;
            found.clear();
        }
        if g.a == best {
            found.push((s.clone(), g));
        }
        Ok(())
    })?;
    Ok((best, found))
}

/// The tangle whose whole path lies in the black tree.
pub fn trunk_of(state: &KauffmanState, graphs: &CheckerboardGraphs) -> Option<usize> {
    let tree = state.black_tree(graphs);
    let mut full =
        (0..graphs.tangle_count()).filter(|&i| graphs.tangle_path(i).all(|c| tree.contains(&c)));
    let first = full.next()?;
    full.next().is_none().then_some(first)
}

/// The trades of the unique minimal state: in each non-trunk tangle of
/// length at least two, the terminal tree edge is swapped for the omitted
/// one. Returned with their bigradings.
pub fn trades_of(code: &PretzelCode) -> Result<(Bigrading, Vec<(KauffmanState, Bigrading)>)> {
    let graphs = build_graphs(&orient(code)?);
    let (_, minimal) = minimal_states_of(&graphs)?;
    if minimal.len() != 1 {
        return Err(KnotError::NoUniqueMinimum {
            count: minimal.len(),
        });
    }
    let (min_state, min_grading) = minimal.into_iter().next().expect("one state");
    let mut trades = Vec::new();
    for (i, o) in min_state.omitted.iter().enumerate() {
        let Some(o) = *o else { continue };
        let len = graphs.tangle_len(i);
        if len < 2 {
            continue;
        }
        let terminal = if o == 0 {
            1
        } else if o + 1 == len {
            len - 2
        } else {
            return Err(KnotError::AmbiguousTrade { tangle: i });
        };
        let mut s = min_state.clone();
        s.omitted[i] = Some(terminal);
        let g = bigrading(&s, &graphs)?;
        trades.push((s, g));
    }
    Ok((min_grading, trades))
}
