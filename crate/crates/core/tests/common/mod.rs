//! Random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use tribasis::logic::{Connective, Formula};
use tribasis::{rat, FuzzyFamily, PlFunc, Rational};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A rational `k/d` strictly inside (0,1) with a small random denominator.
pub fn unit_rational(rng: &mut impl Rng) -> Rational {
    let d = rng.gen_range(2..=13);
    rat(rng.gen_range(1..d), d)
}

/// A rational in [0,1] on a small grid.
pub fn closed_unit_rational(rng: &mut impl Rng) -> Rational {
    let d = rng.gen_range(1..=12);
    rat(rng.gen_range(0..=d), d)
}

/// `count` distinct sorted rationals strictly inside `(a, b)`.
pub fn distinct_between(rng: &mut impl Rng, a: &Rational, b: &Rational, count: usize) -> Vec<Rational> {
    let mut set = BTreeSet::new();
    while set.len() < count {
        let u = unit_rational(rng);
        set.insert(a + &((b - a) * u));
    }
    set.into_iter().collect()
}

/// A family already in node order, plus the data used to build it.
#[derive(Clone, Debug)]
pub struct GeneratedBasis {
    pub nodes: Vec<Rational>,
    /// Breakpoints of the decreasing piece on each node interval.
    pub falls: Vec<Vec<(Rational, Rational)>>,
    /// Member `k` of the relabelled family is hat `order[k-1]`.
    pub order: Vec<usize>,
}

impl GeneratedBasis {
    /// Hats in node order.
    pub fn hats(&self) -> Vec<PlFunc> {
        let n = self.nodes.len();
        let zero = Rational::zero();
        let one = Rational::one();
        (0..n)
            .map(|k| {
                let mut pts: Vec<(Rational, Rational)> = Vec::new();
                let mut push = |x: &Rational, y: Rational| {
                    if pts.last().is_none_or(|(px, _)| px != x) {
                        pts.push((x.clone(), y));
                    }
                };
                if k >= 2 {
                    push(&zero, zero.clone());
                }
                if k >= 1 {
                    for (x, y) in &self.falls[k - 1] {
                        push(x, &one - y);
                    }
                }
                if k + 1 < n {
                    for (x, y) in &self.falls[k] {
                        push(x, y.clone());
                    }
                }
                if k + 1 < n {
                    push(&one, zero.clone());
                }
                PlFunc::new(pts).expect("generated hat is valid")
            })
            .collect()
    }

    pub fn family(&self) -> FuzzyFamily {
        let hats = self.hats();
        let members = self.order.iter().map(|&i| hats[i - 1].clone()).collect();
        FuzzyFamily::new(members).expect("non-empty")
    }

    /// Path order of the relabelled family: position `k` holds the member
    /// index whose hat is the `k`-th node.
    pub fn path_order(&self) -> Vec<usize> {
        let mut inv = vec![0; self.order.len()];
        for (k, &i) in self.order.iter().enumerate() {
            inv[i - 1] = k + 1;
        }
        inv
    }
}

/// Strictly decreasing PL map from 1 at `a` to 0 at `b` with at most
/// `max_pieces` pieces.
pub fn random_fall(
    rng: &mut impl Rng,
    a: &Rational,
    b: &Rational,
    max_pieces: usize,
) -> Vec<(Rational, Rational)> {
    let pieces = rng.gen_range(1..=max_pieces);
    let xs = distinct_between(rng, a, b, pieces - 1);
    let mut ys = distinct_between(rng, &Rational::zero(), &Rational::one(), pieces - 1);
    ys.reverse();
    let mut pts = vec![(a.clone(), Rational::one())];
    pts.extend(xs.into_iter().zip(ys));
    pts.push((b.clone(), Rational::zero()));
    pts
}

/// Random pseudo-triangular basis with `n` members, randomly relabelled.
pub fn random_basis(rng: &mut impl Rng, n: usize) -> GeneratedBasis {
    assert!(n >= 2);
    let mut nodes = vec![Rational::zero()];
    nodes.extend(distinct_between(rng, &Rational::zero(), &Rational::one(), n - 2));
    nodes.push(Rational::one());
    let falls = nodes.windows(2).map(|w| random_fall(rng, &w[0], &w[1], 6)).collect();
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    GeneratedBasis { nodes, falls, order }
}

pub fn random_basis_any(rng: &mut impl Rng) -> GeneratedBasis {
    let n = rng.gen_range(2..=8);
    random_basis(rng, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    Plateau,
    Scale,
    ExtraMember,
    TruncateLast,
}

pub const MUTATIONS: [Mutation; 4] =
    [Mutation::Plateau, Mutation::Scale, Mutation::ExtraMember, Mutation::TruncateLast];

/// Applies a mutation that must turn a basis into a non-basis.
pub fn mutate(rng: &mut impl Rng, b: &GeneratedBasis, m: Mutation) -> FuzzyFamily {
    let n = b.nodes.len();
    match m {
        Mutation::Plateau => {
            let mut b = b.clone();
            let k = rng.gen_range(0..n - 1);
            let (lo, hi) = (b.nodes[k].clone(), b.nodes[k + 1].clone());
            let mid = distinct_between(rng, &lo, &hi, 2);
            let level = unit_rational(rng);
            b.falls[k] = vec![
                (lo, Rational::one()),
                (mid[0].clone(), level.clone()),
                (mid[1].clone(), level),
                (hi, Rational::zero()),
            ];
            b.family()
        }
        Mutation::Scale => {
            let p = b.family();
            let i = rng.gen_range(1..=n);
            let c = unit_rational(rng);
            replace(&p, i, p[i].scale(&c).expect("scale in range"))
        }
        Mutation::ExtraMember => {
            let p = b.family();
            let k = rng.gen_range(0..n - 1);
            let xs = distinct_between(rng, &b.nodes[k], &b.nodes[k + 1], 3);
            let h = unit_rational(rng);
            let tent = PlFunc::new(vec![
                (Rational::zero(), Rational::zero()),
                (xs[0].clone(), Rational::zero()),
                (xs[1].clone(), h),
                (xs[2].clone(), Rational::zero()),
                (Rational::one(), Rational::zero()),
            ])
            .expect("valid tent");
            let mut members = p.into_members();
            members.push(tent);
            FuzzyFamily::new(members).expect("non-empty")
        }
        Mutation::TruncateLast => {
            let p = b.family();
            // the member whose hat sits at node 1
            let i = b.order.iter().position(|&h| h == n).expect("permutation") + 1;
            let c = PlFunc::constant(unit_rational(rng)).expect("in range");
            replace(&p, i, p[i].min(&c))
        }
    }
}

fn replace(p: &FuzzyFamily, i: usize, f: PlFunc) -> FuzzyFamily {
    let mut members = p.clone().into_members();
    members[i - 1] = f;
    FuzzyFamily::new(members).expect("non-empty")
}

/// Random continuous PL function with 2 to `max_points` breakpoints.
pub fn random_pl(rng: &mut impl Rng, max_points: usize) -> PlFunc {
    let k = rng.gen_range(2..=max_points.max(2));
    let mut pts = vec![(Rational::zero(), closed_unit_rational(rng))];
    for x in distinct_between(rng, &Rational::zero(), &Rational::one(), k - 2) {
        pts.push((x, closed_unit_rational(rng)));
    }
    pts.push((Rational::one(), closed_unit_rational(rng)));
    PlFunc::new(pts).expect("random PL is valid")
}

pub fn random_family(rng: &mut impl Rng) -> FuzzyFamily {
    let n = rng.gen_range(1..=5);
    FuzzyFamily::new((0..n).map(|_| random_pl(rng, 6)).collect()).expect("non-empty")
}

/// Random formula over `X1..Xn` of depth at most `depth`.
pub fn random_formula(rng: &mut impl Rng, n: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Formula::Bot,
            1 => Formula::Top,
            _ => Formula::var(rng.gen_range(1..=n)),
        };
    }
    if rng.gen_bool(0.2) {
        return Formula::not(random_formula(rng, n, depth - 1));
    }
    let c = *Connective::ALL.choose(rng).expect("non-empty");
    Formula::binary(c, random_formula(rng, n, depth - 1), random_formula(rng, n, depth - 1))
}

/// Points `j / steps` for `j = 0..=steps`.
pub fn grid(steps: i64) -> Vec<Rational> {
    (0..=steps).map(|j| rat(j, steps)).collect()
}

/// `x -> f(a + (b - a) x)`: the member restricted to `[a, b]` and rescaled.
pub fn restrict(f: &PlFunc, a: &Rational, b: &Rational) -> PlFunc {
    let width = b - a;
    let mut pts = vec![(Rational::zero(), f.eval(a).expect("in range"))];
    for (x, y) in f.breakpoints() {
        if a < x && x < b {
            pts.push(((x - a) / &width, y.clone()));
        }
    }
    pts.push((Rational::one(), f.eval(b).expect("in range")));
    PlFunc::new(pts).expect("restriction is valid")
}

pub fn restrict_family(p: &FuzzyFamily, a: &Rational, b: &Rational) -> FuzzyFamily {
    FuzzyFamily::new(p.members().iter().map(|f| restrict(f, a, b)).collect()).expect("non-empty")
}

/// Breakpoints plus midpoints of every piece, sorted.
pub fn refined_samples(f: &PlFunc) -> Vec<Rational> {
    let xs: Vec<Rational> = f.xs().cloned().collect();
    let mut out = Vec::with_capacity(2 * xs.len());
    for w in xs.windows(2) {
        out.push(w[0].clone());
        out.push(Rational::midpoint(&w[0], &w[1]));
    }
    out.push(xs.last().expect("at least two breakpoints").clone());
    out
}
