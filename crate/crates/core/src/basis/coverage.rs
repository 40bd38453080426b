use std::collections::BTreeMap;

use serde::Serialize;

use super::curve::{refine, CurveSegment};
use crate::family::FuzzyFamily;
use crate::rational::Rational;

/// Where the image of one refined segment sits relative to the 1-skeleton
/// of the simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Placement {
    /// The whole image is the vertex `e_i`.
    Vertex(usize),
    /// Inside `conv{e_i, e_j}`, `i < j`, covering barycentric range
    /// `[lo, hi]` measured by the coordinate of `e_j`.
    Edge { i: usize, j: usize, lo: Rational, hi: Rational },
    /// Not contained in any edge.
    Leftover,
}

/// Merged coverage of one skeleton edge `conv{e_i, e_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCoverage {
    pub i: usize,
    pub j: usize,
    /// Disjoint, sorted closed intervals of the `e_j` coordinate.
    pub intervals: Vec<(Rational, Rational)>,
}

impl EdgeCoverage {
    pub fn is_full(&self) -> bool {
        self.intervals.len() == 1 && self.intervals[0].0.is_zero() && self.intervals[0].1.is_one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathCoverage {
    pub n: usize,
    /// One entry per refined segment, in parameter order.
    pub placements: Vec<Placement>,
    /// Every edge touched by the image.
    pub edges: Vec<EdgeCoverage>,
    /// Vertices `e_i` lying in the image.
    pub vertices: Vec<usize>,
    /// Parameter intervals whose image leaves the skeleton.
    pub leftovers: Vec<(Rational, Rational)>,
    /// Present iff the image is exactly the Hamiltonian path
    /// `e_{pi(1)} - e_{pi(2)} - ... - e_{pi(n)}`.
    pub permutation: Option<Vec<usize>>,
}

impl PathCoverage {
    pub fn is_hamiltonian(&self) -> bool {
        self.permutation.is_some()
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<&EdgeCoverage> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.edges.iter().find(|e| e.i == i && e.j == j)
    }

    pub fn full_edges(&self) -> impl Iterator<Item = &EdgeCoverage> {
        self.edges.iter().filter(|e| e.is_full())
    }
}

/// 1-based indices of nonzero coordinates, if the point lies on the
/// skeleton (coordinates summing to 1, at most two nonzero).
fn skeleton_support(point: &[Rational]) -> Option<Vec<usize>> {
    let support: Vec<usize> =
        point.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, _)| k + 1).collect();
    let sum: Rational = point.iter().sum();
    (support.len() <= 2 && sum.is_one()).then_some(support)
}

fn place(seg: &CurveSegment) -> Placement {
    let (Some(mut s), Some(t)) = (skeleton_support(&seg.start), skeleton_support(&seg.end)) else {
        return Placement::Leftover;
    };
    s.extend(t);
    s.sort_unstable();
    s.dedup();
    match s[..] {
        [i] => Placement::Vertex(i),
        [i, j] => {
            let (a, b) = (&seg.start[j - 1], &seg.end[j - 1]);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            Placement::Edge { i, j, lo: lo.clone(), hi: hi.clone() }
        }
        _ => Placement::Leftover,
    }
}

/// Locates the image of `T_P` on the 1-skeleton of the simplex and decides
/// whether it is a Hamiltonian path.
pub fn path_coverage(p: &FuzzyFamily) -> PathCoverage {
    let n = p.len();
    let segs = refine(p);
    let placements: Vec<Placement> = segs.iter().map(place).collect();

    let mut raw: BTreeMap<(usize, usize), Vec<(Rational, Rational)>> = BTreeMap::new();
    let mut vertex_hits = vec![false; n + 1];
    let mut leftovers = Vec::new();
    for (seg, pl) in segs.iter().zip(&placements) {
        match pl {
            Placement::Vertex(i) => vertex_hits[*i] = true,
            Placement::Edge { i, j, lo, hi } => {
                raw.entry((*i, *j)).or_default().push((lo.clone(), hi.clone()));
                if lo.is_zero() {
                    vertex_hits[*i] = true;
                }
                if hi.is_one() {
                    vertex_hits[*j] = true;
                }
            }
            Placement::Leftover => leftovers.push((seg.a.clone(), seg.b.clone())),
        }
    }
    let edges: Vec<EdgeCoverage> =
        raw.into_iter().map(|((i, j), ivs)| EdgeCoverage { i, j, intervals: merge_intervals(ivs) }).collect();
    let vertices: Vec<usize> = (1..=n).filter(|&i| vertex_hits[i]).collect();

    let start_vertex = p.point_at(&Rational::zero()).ok().and_then(|pt| {
        let s = skeleton_support(&pt)?;
        (s.len() == 1 && pt[s[0] - 1].is_one()).then(|| s[0])
    });
    let permutation = hamiltonian_order(n, &edges, &vertices, &leftovers, start_vertex);

    PathCoverage { n, placements, edges, vertices, leftovers, permutation }
}

fn merge_intervals(mut ivs: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    ivs.sort();
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(ivs.len());
    for (lo, hi) in ivs {
        match out.last_mut() {
            Some(last) if lo <= last.1 => {
                if hi > last.1 {
                    last.1 = hi;
                }
            }
            _ => out.push((lo, hi)),
        }
    }
    out
}

fn hamiltonian_order(
    n: usize,
    edges: &[EdgeCoverage],
    vertices: &[usize],
    leftovers: &[(Rational, Rational)],
    start_vertex: Option<usize>,
) -> Option<Vec<usize>> {
    if !leftovers.is_empty() || !edges.iter().all(EdgeCoverage::is_full) {
        return None;
    }
    if n == 1 {
        return (vertices == [1]).then(|| vec![1]);
    }
    if edges.len() != n - 1 {
        return None;
    }
    let mut adj = vec![Vec::new(); n + 1];
    for e in edges {
        adj[e.i].push(e.j);
        adj[e.j].push(e.i);
    }
    if adj[1..].iter().any(|a| a.is_empty() || a.len() > 2) {
        return None;
    }
    let ends: Vec<usize> = (1..=n).filter(|&v| adj[v].len() == 1).collect();
    if ends.len() != 2 {
        return None;
    }
    let first = match start_vertex {
        Some(v) if ends.contains(&v) => v,
        _ => ends[0],
    };
    let mut order = vec![first];
    let mut prev = 0;
    let mut cur = first;
    while let Some(&next) = adj[cur].iter().find(|&&v| v != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

/// The vertex order of the image path when the image is a Hamiltonian
/// path, read in the direction the curve starts from.
pub fn detected_permutation(p: &FuzzyFamily) -> Option<Vec<usize>> {
    path_coverage(p).permutation
}
