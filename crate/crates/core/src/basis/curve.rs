use serde::Serialize;

use crate::family::FuzzyFamily;
use crate::props::PairWitness;
use crate::rational::Rational;
use crate::verdict::Verdict;

/// One affine piece of `T_P`: parameters `[a, b]` map affinely onto the
/// straight segment from `start` to `end` in `[0,1]^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveSegment {
    pub a: Rational,
    pub b: Rational,
    pub start: Vec<Rational>,
    pub end: Vec<Rational>,
}

impl CurveSegment {
    pub fn direction(&self) -> Vec<Rational> {
        self.end.iter().zip(&self.start).map(|(e, s)| e - s).collect()
    }

    pub fn is_stationary(&self) -> bool {
        self.start == self.end
    }

    /// Global parameter for local parameter `t` in `[0,1]`.
    pub fn parameter(&self, t: &Rational) -> Rational {
        &self.a + (&self.b - &self.a) * t
    }
}

/// Splits `[0,1]` at every breakpoint of every member.
pub fn refine(p: &FuzzyFamily) -> Vec<CurveSegment> {
    let xs = p.common_breakpoints();
    let images: Vec<Vec<Rational>> =
        xs.iter().map(|x| p.members().iter().map(|f| f.value_at(x)).collect()).collect();
    xs.windows(2)
        .zip(images.windows(2))
        .map(|(x, img)| CurveSegment {
            a: x[0].clone(),
            b: x[1].clone(),
            start: img[0].clone(),
            end: img[1].clone(),
        })
        .collect()
}

/// Decides whether `T_P` is injective.
///
/// A stationary segment is an immediate failure. Otherwise every pair of
/// segments is intersected exactly: independent directions give a unique
/// candidate solution, parallel directions reduce to an interval overlap on
/// a common line.
pub fn injectivity_check(p: &FuzzyFamily) -> Verdict<PairWitness> {
    let segs = refine(p);
    if let Some(s) = segs.iter().find(|s| s.is_stationary()) {
        return Verdict::Fails(PairWitness { x: s.a.clone(), y: s.b.clone() });
    }
    let dirs: Vec<Vec<Rational>> = segs.iter().map(CurveSegment::direction).collect();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if let Some((x, y)) = collision(&segs[i], &dirs[i], &segs[j], &dirs[j]) {
                if x != y {
                    let (x, y) = if x < y { (x, y) } else { (y, x) };
                    return Verdict::Fails(PairWitness { x, y });
                }
            }
        }
    }
    Verdict::Holds
}

/// A common image point of two non-stationary segments, returned as the
/// pair of global parameters reaching it. Prefers a pair with distinct
/// parameters when the intersection is more than one point.
fn collision(
    sa: &CurveSegment,
    da: &[Rational],
    sb: &CurveSegment,
    db: &[Rational],
) -> Option<(Rational, Rational)> {
    let n = da.len();
    let w: Vec<Rational> = sb.start.iter().zip(&sa.start).map(|(b, a)| b - a).collect();
    let unit = |t: &Rational| t.in_unit_interval();

    // Solve t*da - s*db = w.
    for k in 0..n {
        for l in k + 1..n {
            let det = &db[k] * &da[l] - &da[k] * &db[l];
            if det.is_zero() {
                continue;
            }
            let t = (&db[k] * &w[l] - &w[k] * &db[l]) / &det;
            let s = (&da[k] * &w[l] - &w[k] * &da[l]) / &det;
            let consistent = (0..n).all(|c| &t * &da[c] - &s * &db[c] == w[c]);
            return (consistent && unit(&t) && unit(&s)).then(|| (sa.parameter(&t), sb.parameter(&s)));
        }
    }

    // Parallel: db = mu*da, and the lines coincide iff w = lambda*da.
    let c = da.iter().position(|v| !v.is_zero())?;
    let mu = &db[c] / &da[c];
    let lambda = &w[c] / &da[c];
    if (0..n).any(|k| w[k] != &lambda * &da[k]) {
        return None;
    }
    // Points of b sit at t = lambda + s*mu on a's line.
    let t_end = &lambda + &mu;
    let (lo, hi) = if lambda <= t_end { (lambda.clone(), t_end) } else { (t_end, lambda.clone()) };
    let lo = lo.max(Rational::zero());
    let hi = hi.min(Rational::one());
    if lo > hi {
        return None;
    }
    let t = Rational::midpoint(&lo, &hi);
    let s = (&t - &lambda) / &mu;
    Some((sa.parameter(&t), sb.parameter(&s)))
}
