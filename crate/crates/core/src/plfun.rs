//! Continuous piecewise-linear functions `[0,1] -> [0,1]` with rational
//! breakpoints, closed under the pointwise Lukasiewicz operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A breakpoint `(x, f(x))`.
pub type Breakpoint = (Rational, Rational);

/// Pointwise binary operations on truth values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointwiseOp {
    Min,
    Max,
    /// `min{1, a + b}`
    TruncatedSum,
    /// `max{0, a + b - 1}`
    TruncatedProduct,
    /// `max{0, a - b}`
    TruncatedDifference,
    /// `1 - |a - b|`
    Biconditional,
    /// `min{1, 1 - (a - b)}`
    Implication,
}

impl PointwiseOp {
    pub const ALL: [PointwiseOp; 7] = [
        PointwiseOp::Min,
        PointwiseOp::Max,
        PointwiseOp::TruncatedSum,
        PointwiseOp::TruncatedProduct,
        PointwiseOp::TruncatedDifference,
        PointwiseOp::Biconditional,
        PointwiseOp::Implication,
    ];

    pub fn apply(self, a: &Rational, b: &Rational) -> Rational {
        let zero = Rational::zero();
        let one = Rational::one();
        match self {
            PointwiseOp::Min => a.min(b).clone(),
            PointwiseOp::Max => a.max(b).clone(),
            PointwiseOp::TruncatedSum => (a + b).min(one),
            PointwiseOp::TruncatedProduct => (a + b - one).max(zero),
            PointwiseOp::TruncatedDifference => (a - b).max(zero),
            PointwiseOp::Biconditional => one - (a - b).abs(),
            PointwiseOp::Implication => (one - (a - b)).min(Rational::one()),
        }
    }

    /// Affine expression whose sign change marks where the truncation (or
    /// the choice of argument) switches.
    fn switch(self, a: &Rational, b: &Rational) -> Rational {
        match self {
            PointwiseOp::TruncatedSum | PointwiseOp::TruncatedProduct => a + b - Rational::one(),
            _ => a - b,
        }
    }
}

/// A continuous piecewise-linear function on `[0,1]`, stored as its
/// canonical breakpoint list.
///
/// Invariants: the first abscissa is 0, the last is 1, abscissae strictly
/// increase, every ordinate lies in `[0,1]`, and no interior breakpoint is
/// collinear with its neighbours. Two functions are equal iff their
/// canonical lists are equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PlFunc {
    points: Vec<Breakpoint>,
}

impl PlFunc {
    /// Validates and canonicalises a breakpoint list.
    pub fn new(points: Vec<Breakpoint>) -> Result<Self> {
        let invalid = |m: String| Err(Error::InvalidFunction(m));
        if points.len() < 2 {
            return invalid("need at least two breakpoints".into());
        }
        if !points[0].0.is_zero() {
            return invalid(format!("first breakpoint is at x = {}, expected 0", points[0].0));
        }
        let last = &points[points.len() - 1].0;
        if !last.is_one() {
            return invalid(format!("last breakpoint is at x = {last}, expected 1"));
        }
        for w in points.windows(2) {
            if w[1].0 <= w[0].0 {
                return invalid(format!("breakpoints not strictly increasing: {} then {}", w[0].0, w[1].0));
            }
        }
        if let Some((x, y)) = points.iter().find(|(_, y)| !y.in_unit_interval()) {
            return invalid(format!("value {y} at x = {x} is outside [0,1]"));
        }
        Ok(Self::canonical(points))
    }

    /// Parses `"x1 y1, x2 y2, ..."` (the same syntax as a family file line).
    pub fn parse_points(text: &str) -> Result<Self> {
        let mut pts = Vec::new();
        for pair in text.split(',') {
            let mut it = pair.split_whitespace();
            let (Some(x), Some(y), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::InvalidFunction(format!("expected `x y`, found `{}`", pair.trim())));
            };
            pts.push((x.parse()?, y.parse()?));
        }
        Self::new(pts)
    }

    pub fn constant(c: Rational) -> Result<Self> {
        Self::new(vec![(Rational::zero(), c.clone()), (Rational::one(), c)])
    }

    pub fn zero() -> Self {
        Self::unit_constant(Rational::zero())
    }

    pub fn one() -> Self {
        Self::unit_constant(Rational::one())
    }

    pub fn identity() -> Self {
        PlFunc { points: vec![(Rational::zero(), Rational::zero()), (Rational::one(), Rational::one())] }
    }

    fn unit_constant(c: Rational) -> Self {
        PlFunc { points: vec![(Rational::zero(), c.clone()), (Rational::one(), c)] }
    }

    /// Drops collinear interior points. Input must already satisfy the
    /// ordering and range invariants.
    fn canonical(points: Vec<Breakpoint>) -> Self {
        let mut out: Vec<Breakpoint> = Vec::with_capacity(points.len());
        for p in points {
            while out.len() >= 2 && collinear(&out[out.len() - 2], &out[out.len() - 1], &p) {
                out.pop();
            }
            out.push(p);
        }
        PlFunc { points: out }
    }

    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.points
    }

    pub fn xs(&self) -> impl Iterator<Item = &Rational> {
        self.points.iter().map(|(x, _)| x)
    }

    /// Number of affine pieces.
    pub fn pieces(&self) -> usize {
        self.points.len() - 1
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if !x.in_unit_interval() {
            return Err(Error::Domain(x.clone()));
        }
        Ok(self.value_at(x))
    }

    /// Evaluation without the domain check; `x` must lie in `[0,1]`.
    pub(crate) fn value_at(&self, x: &Rational) -> Rational {
        let idx = self.points.partition_point(|(px, _)| px < x);
        if idx < self.points.len() && &self.points[idx].0 == x {
            return self.points[idx].1.clone();
        }
        debug_assert!(idx > 0 && idx < self.points.len());
        let (x0, y0) = &self.points[idx - 1];
        let (x1, y1) = &self.points[idx];
        interpolate(x0, y0, x1, y1, x)
    }

    pub fn negate(&self) -> PlFunc {
        PlFunc { points: self.points.iter().map(|(x, y)| (x.clone(), Rational::one() - y)).collect() }
    }

    /// Pointwise `op(self(x), other(x))`.
    pub fn combine(&self, other: &PlFunc, op: PointwiseOp) -> PlFunc {
        let samples = merged_samples(self, other);
        let mut out: Vec<Breakpoint> = Vec::with_capacity(samples.len() * 2);
        for (i, (x, a, b)) in samples.iter().enumerate() {
            if i > 0 {
                let (px, pa, pb) = &samples[i - 1];
                let s0 = op.switch(pa, pb);
                let s1 = op.switch(a, b);
                if (s0.is_positive() && s1.is_negative()) || (s0.is_negative() && s1.is_positive()) {
                    // s is affine on the segment; insert its root.
                    let t = &s0 / (&s0 - &s1);
                    let cx = px + (x - px) * &t;
                    let ca = pa + (a - pa) * &t;
                    let cb = pb + (b - pb) * &t;
                    out.push((cx, op.apply(&ca, &cb)));
                }
            }
            out.push((x.clone(), op.apply(a, b)));
        }
        Self::canonical(out)
    }

    pub fn min(&self, other: &PlFunc) -> PlFunc {
        self.combine(other, PointwiseOp::Min)
    }

    pub fn max(&self, other: &PlFunc) -> PlFunc {
        self.combine(other, PointwiseOp::Max)
    }

    /// Minimum value and the smallest point attaining it.
    pub fn global_min(&self) -> (Rational, Rational) {
        let (x, y) = self.points.iter().fold(&self.points[0], |best, p| if p.1 < best.1 { p } else { best });
        (y.clone(), x.clone())
    }

    /// Maximum value and the smallest point attaining it.
    pub fn global_max(&self) -> (Rational, Rational) {
        let (x, y) = self.points.iter().fold(&self.points[0], |best, p| if p.1 > best.1 { p } else { best });
        (y.clone(), x.clone())
    }

    pub fn is_constant(&self) -> bool {
        self.points.len() == 2 && self.points[0].1 == self.points[1].1
    }

    pub fn is_identically(&self, c: &Rational) -> bool {
        self.is_constant() && &self.points[0].1 == c
    }

    /// Pointwise product with a constant `c` in `[0,1]`.
    pub fn scale(&self, c: &Rational) -> Result<PlFunc> {
        if !c.in_unit_interval() {
            return Err(Error::Argument(format!("scale factor {c} is outside [0,1]")));
        }
        Ok(Self::canonical(self.points.iter().map(|(x, y)| (x.clone(), y * c)).collect()))
    }

    /// Values at `a`, at `b`, and at every breakpoint strictly between;
    /// these determine the function on `[a, b]`.
    pub fn samples_on(&self, a: &Rational, b: &Rational) -> Vec<Breakpoint> {
        let mut out = vec![(a.clone(), self.value_at(a))];
        out.extend(self.points.iter().filter(|(x, _)| x > a && x < b).cloned());
        if b > a {
            out.push((b.clone(), self.value_at(b)));
        }
        out
    }

    /// True when the function is a single affine piece on `[a, b]`.
    pub fn is_affine_on(&self, a: &Rational, b: &Rational) -> bool {
        !self.points.iter().any(|(x, _)| x > a && x < b)
    }
}

impl fmt::Debug for PlFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlFunc[{self}]")
    }
}

impl fmt::Display for PlFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, y)) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x} {y}")?;
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for PlFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            points: Vec<Breakpoint>,
        }
        let raw = Raw::deserialize(deserializer)?;
        PlFunc::new(raw.points).map_err(serde::de::Error::custom)
    }
}

/// Structural equality of canonical forms, i.e. equality as functions.
pub fn pl_equal(f: &PlFunc, g: &PlFunc) -> bool {
    f == g
}

fn collinear(p: &Breakpoint, q: &Breakpoint, r: &Breakpoint) -> bool {
    (&q.1 - &p.1) * (&r.0 - &p.0) == (&r.1 - &p.1) * (&q.0 - &p.0)
}

fn interpolate(x0: &Rational, y0: &Rational, x1: &Rational, y1: &Rational, x: &Rational) -> Rational {
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}

/// Values of both functions on the union of their breakpoints.
fn merged_samples(f: &PlFunc, g: &PlFunc) -> Vec<(Rational, Rational, Rational)> {
    let xs = merge_sorted(f.xs(), g.xs());
    xs.into_iter()
        .map(|x| {
            let a = f.value_at(&x);
            let b = g.value_at(&x);
            (x, a, b)
        })
        .collect()
}

/// Sorted, de-duplicated union of two sorted sequences.
pub(crate) fn merge_sorted<'a>(
    a: impl Iterator<Item = &'a Rational>,
    b: impl Iterator<Item = &'a Rational>,
) -> Vec<Rational> {
    let mut out: Vec<Rational> = a.chain(b).cloned().collect();
    out.sort();
    out.dedup();
    out
}
