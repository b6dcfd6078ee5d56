//! Black and white checkerboard graphs of the standard pretzel projection.
//!
//! Regions inside the twist regions are black. The black graph has a root
//! (the region below every tangle), a top vertex (the region above every
//! tangle) and `|n_i| - 1` interior vertices per tangle, so tangle i becomes a
//! path `T(n_i)` of `|n_i|` edges from the root to the top. The white regions
//! are the `r` gaps between consecutive tangles; region i sits to the right of
//! tangle i and region `r - 1` is the outer region, which is the white root.
//! Crossing `(i, j)` (tangle i, j-th crossing from the top) owns black edge and
//! white edge number `offset(i) + j`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::{OrientedDiagram, PretzelCode, RoleKind, StrandDir};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlackEdge {
    pub tangle: usize,
    pub position: usize,
    pub upper: usize,
    pub lower: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WhiteEdge {
    pub tangle: usize,
    pub position: usize,
    pub left: usize,
    pub right: usize,
}

/// Which side of a crossing carries the knot-induced orientation, and which
/// way it points, for every crossing of one tangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrientationRule {
    /// Black edges oriented along the common strand direction.
    Black(StrandDir),
    /// White edges oriented from the region between the two incoming ends;
    /// `first_left_to_right` gives the direction at the top crossing, which
    /// alternates going down.
    White { first_left_to_right: bool },
}

#[derive(Debug, Clone)]
pub struct CheckerboardGraphs {
    pub code: PretzelCode,
    pub black_vertex_count: usize,
    pub black_root: usize,
    pub top_vertex: usize,
    pub black_edges: Vec<BlackEdge>,
    pub white_vertex_count: usize,
    pub white_root: usize,
    pub white_edges: Vec<WhiteEdge>,
    pub eta_black: Vec<i8>,
    pub eta_white: Vec<i8>,
    /// Knot-induced orientation `(from, to)` of each black edge, if any.
    pub black_orientation: Vec<Option<(usize, usize)>>,
    pub white_orientation: Vec<Option<(usize, usize)>>,
    pub rules: Vec<EdgeOrientationRule>,
    offsets: Vec<usize>,
}

impl CheckerboardGraphs {
    pub fn tangle_count(&self) -> usize {
        self.code.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.black_edges.len()
    }

    pub fn tangle_len(&self, tangle: usize) -> usize {
        self.code.tangles()[tangle].unsigned_abs() as usize
    }

    /// Crossing index of the `position`-th crossing of `tangle`.
    pub fn crossing(&self, tangle: usize, position: usize) -> usize {
        self.offsets[tangle] + position
    }

    /// Crossing indices of the path `T(n_i)`, top to bottom.
    pub fn tangle_path(&self, tangle: usize) -> std::ops::Range<usize> {
        let start = self.offsets[tangle];
        start..start + self.tangle_len(tangle)
    }

    /// Graphviz rendering of both graphs with their η labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph checkerboard {{");
        let _ = writeln!(s, "  subgraph cluster_black {{");
        let _ = writeln!(s, "    label=\"G_B {}\";", self.code);
        for v in 0..self.black_vertex_count {
            let name = match v {
                _ if v == self.black_root => "root".to_string(),
                _ if v == self.top_vertex => "top".to_string(),
                _ => format!("b{v}"),
            };
            let _ = writeln!(s, "    B{v} [label=\"{name}\"];");
        }
        for (c, e) in self.black_edges.iter().enumerate() {
            let _ = writeln!(
                s,
                "    B{} -- B{} [label=\"c{c} eta={}\"];",
                e.upper, e.lower, self.eta_black[c]
            );
        }
        let _ = writeln!(s, "  }}");
        let _ = writeln!(s, "  subgraph cluster_white {{");
        let _ = writeln!(s, "    label=\"G_W\";");
        for v in 0..self.white_vertex_count {
            let root = if v == self.white_root { " (root)" } else { "" };
            let _ = writeln!(s, "    W{v} [label=\"w{v}{root}\"];");
        }
        for (c, e) in self.white_edges.iter().enumerate() {
            let _ = writeln!(
                s,
                "    W{} -- W{} [label=\"c{c} eta={}\"];",
                e.left, e.right, self.eta_white[c]
            );
        }
        let _ = writeln!(s, "  }}");
        let _ = writeln!(s, "}}");
        s
    }
}

pub fn build_graphs(diagram: &OrientedDiagram) -> CheckerboardGraphs {
    let code = &diagram.code;
    let r = code.len();
    let lens: Vec<usize> = code
        .tangles()
        .iter()
        .map(|n| n.unsigned_abs() as usize)
        .collect();

    let black_root = 0;
    let top_vertex = 1;
    let mut next_vertex = 2;
    let mut offsets = Vec::with_capacity(r);
    let mut black_edges = Vec::new();
    let mut white_edges = Vec::new();
    let mut eta_black = Vec::new();
    let mut eta_white = Vec::new();
    let mut black_orientation = Vec::new();
    let mut white_orientation = Vec::new();
    let mut rules = Vec::with_capacity(r);

    for (i, &len) in lens.iter().enumerate() {
        offsets.push(black_edges.len());
        // interior vertices of this tangle, top to bottom
        let interior: Vec<usize> = (0..len - 1).map(|k| next_vertex + k).collect();
        next_vertex += len - 1;

        let role = diagram.roles[i];
        let sign = role.sign;
        let dirs = diagram.strand_dirs[i];
        let rule = match role.kind {
            RoleKind::Parallel => EdgeOrientationRule::Black(dirs[0]),
            RoleKind::Antiparallel => EdgeOrientationRule::White {
                first_left_to_right: dirs[0] == StrandDir::Down,
            },
        };
        rules.push(rule);

        let left = (i + r - 1) % r;
        let right = i;
        for j in 0..len {
            let upper = if j == 0 { top_vertex } else { interior[j - 1] };
            let lower = if j + 1 == len {
                black_root
            } else {
                interior[j]
            };
            black_edges.push(BlackEdge {
                tangle: i,
                position: j,
                upper,
                lower,
            });
            white_edges.push(WhiteEdge {
                tangle: i,
                position: j,
                left,
                right,
            });
            match rule {
                EdgeOrientationRule::Black(dir) => {
                    eta_black.push(-sign);
                    eta_white.push(0);
                    black_orientation.push(Some(match dir {
                        StrandDir::Down => (upper, lower),
                        StrandDir::Up => (lower, upper),
                    }));
                    white_orientation.push(None);
                }
                EdgeOrientationRule::White {
                    first_left_to_right,
                } => {
                    eta_black.push(0);
                    eta_white.push(sign);
                    black_orientation.push(None);
                    let ltr = first_left_to_right == (j % 2 == 0);
                    white_orientation.push(Some(if ltr { (left, right) } else { (right, left) }));
                }
            }
        }
    }

    CheckerboardGraphs {
        code: code.clone(),
        black_vertex_count: next_vertex,
        black_root,
        top_vertex,
        black_edges,
        white_vertex_count: r,
        white_root: r - 1,
        white_edges,
        eta_black,
        eta_white,
        black_orientation,
        white_orientation,
        rules,
        offsets,
    }
}

/// Number of spanning trees of the black graph: a tree keeps one whole path
/// and drops exactly one edge from every other path.
pub fn spanning_tree_count(graphs: &CheckerboardGraphs) -> BigInt {
    let lens: Vec<BigInt> = (0..graphs.tangle_count())
        .map(|i| BigInt::from(graphs.tangle_len(i)))
        .collect();
    (0..lens.len())
        .map(|i| {
            lens.iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(BigInt::one(), |acc, (_, l)| acc * l)
        })
        .fold(BigInt::zero(), |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::orient;

    fn graphs(v: &[i64]) -> CheckerboardGraphs {
        let code = PretzelCode::new(v.to_vec()).unwrap();
        build_graphs(&orient(&code).unwrap())
    }

    fn eta_per_tangle(g: &CheckerboardGraphs, eta: &[i8]) -> Vec<i8> {
        (0..g.tangle_count())
            .map(|i| {
                let path = g.tangle_path(i);
                let first = eta[path.start];
                assert!(path.clone().all(|c| eta[c] == first));
                first
            })
            .collect()
    }

    /// Determinant of the reduced Laplacian by fraction-free elimination.
    fn matrix_tree(vertices: usize, edges: &[(usize, usize)]) -> i128 {
        let n = vertices - 1;
        let mut m = vec![vec![0i128; n]; n];
        for &(a, b) in edges {
            if a == b {
                continue;
            }
            for (x, y) in [(a, b), (b, a)] {
                if x > 0 {
                    m[x - 1][x - 1] += 1;
                    if y > 0 {
                        m[x - 1][y - 1] -= 1;
                    }
                }
            }
        }
        let mut prev = 1i128;
        let mut sign = 1;
        for k in 0..n {
            if m[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&p| m[p][k] != 0) else {
                    return 0;
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        sign * if n == 0 { 1 } else { m[n - 1][n - 1] }
    }

    fn connected(vertices: usize, edges: &[(usize, usize)]) -> bool {
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let mut comps = vertices;
        for &(a, b) in edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps == 1
    }

    /// Counts spanning trees by testing every edge subset of size |V| - 1.
    fn brute_force_trees(vertices: usize, edges: &[(usize, usize)]) -> u64 {
        let m = edges.len();
        let mut count = 0;
        for mask in 0u64..(1 << m) {
            if mask.count_ones() as usize != vertices - 1 {
                continue;
            }
            let chosen: Vec<_> = (0..m)
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| edges[k])
                .collect();
            if connected(vertices, &chosen) {
                count += 1;
            }
        }
        count
    }

    fn black_pairs(g: &CheckerboardGraphs) -> Vec<(usize, usize)> {
        g.black_edges.iter().map(|e| (e.upper, e.lower)).collect()
    }

    #[test]
    fn eta_labels_type_2a_example() {
        let g = graphs(&[3, -3, 1, 3, 2]);
        assert_eq!(eta_per_tangle(&g, &g.eta_black), vec![-1, 1, -1, -1, 0]);
        assert_eq!(eta_per_tangle(&g, &g.eta_white), vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn eta_labels_type_3_example() {
        let g = graphs(&[5, -7, 5, -4]);
        assert_eq!(eta_per_tangle(&g, &g.eta_black), vec![-1, 1, -1, 1]);
        assert!(g.eta_white.iter().all(|&e| e == 0));
    }

    #[test]
    fn counts_for_minus_two_three_seven() {
        let g = graphs(&[-2, 3, 7]);
        assert_eq!(g.black_edges.len(), 12);
        assert_eq!(g.white_edges.len(), 12);
        assert_eq!(g.black_vertex_count, 11);
        assert_eq!(g.white_vertex_count, 3);
    }

    #[test]
    fn structural_invariants() {
        for v in [
            vec![-2, 3, 7],
            vec![3, -3, 1, 3, 2],
            vec![1, 1, -3],
            vec![5, -7, 5, -4],
            vec![4],
        ] {
            let g = graphs(&v);
            let c = g.code.crossing_count();
            assert_eq!(g.black_edges.len(), c);
            assert_eq!(g.white_edges.len(), c);
            assert_eq!(g.black_vertex_count + g.white_vertex_count, c + 2);
            for k in 0..c {
                let nonzero = (g.eta_black[k] != 0) as u8 + (g.eta_white[k] != 0) as u8;
                assert_eq!(nonzero, 1);
                assert_eq!(g.black_orientation[k].is_some(), g.eta_black[k] != 0);
                assert_eq!(g.white_orientation[k].is_some(), g.eta_white[k] != 0);
            }
        }
    }

    #[test]
    fn spanning_tree_count_examples() {
        assert_eq!(spanning_tree_count(&graphs(&[-2, 3, 7])), BigInt::from(41));
        assert_eq!(spanning_tree_count(&graphs(&[1, 1, 1])), BigInt::from(3));
        assert_eq!(
            spanning_tree_count(&graphs(&[3, -3, 1, 3, 2])),
            BigInt::from(135)
        );
    }

    #[test]
    fn spanning_tree_count_matches_brute_force() {
        for v in [vec![-2, 3, 7], vec![1, 1, 1], vec![3, -3, 1, 3, 2]] {
            let g = graphs(&v);
            let brute = brute_force_trees(g.black_vertex_count, &black_pairs(&g));
            assert_eq!(spanning_tree_count(&g), BigInt::from(brute), "{v:?}");
        }
    }

    #[test]
    fn spanning_tree_count_matches_matrix_tree() {
        for v in [
            vec![-2, 3, 7],
            vec![3, -3, 1, 3, 2],
            vec![5, -7, 5, -4],
            vec![3, -9, 3, -2, 5],
            vec![7, 7, 7, 7, 6],
        ] {
            let g = graphs(&v);
            let det = matrix_tree(g.black_vertex_count, &black_pairs(&g));
            assert_eq!(spanning_tree_count(&g), BigInt::from(det), "{v:?}");
            // the white graph is the planar dual, so it has as many trees
            let white: Vec<_> = g.white_edges.iter().map(|e| (e.left, e.right)).collect();
            assert_eq!(matrix_tree(g.white_vertex_count, &white), det);
        }
    }

    #[test]
    fn dot_dump_mentions_every_edge() {
        let g = graphs(&[-2, 3, 7]);
        let dot = g.to_dot();
        assert_eq!(dot.matches(" -- B").count(), 12);
        assert_eq!(dot.matches(" -- W").count(), 12);
        assert!(dot.contains("(root)"));
    }
}
