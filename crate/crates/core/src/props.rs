//! Exact property checks for single fuzzy sets and for families.
//!
//! Every failing verdict carries a witness; [`PropertyReport::verify`]
//! re-evaluates all of them directly.

use serde::Serialize;

use crate::basis;
use crate::family::FuzzyFamily;
use crate::plfun::PlFunc;
use crate::rational::Rational;
use crate::verdict::Verdict;

/// A point where `f_1 + ... + f_n` differs from 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumWitness {
    pub x: Rational,
    pub sum: Rational,
}

/// Three members simultaneously positive at `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapWitness {
    pub triple: [usize; 3],
    pub x: Rational,
    pub min: Rational,
}

/// The maximum of a member, attained at `at`, which is below 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxWitness {
    pub max: Rational,
    pub at: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StrongNormalityFailure {
    NotNormal(MaxWitness),
    /// Two distinct points mapping to 1.
    MultiplePeaks {
        x: Rational,
        y: Rational,
    },
}

/// Points `x < z < y` violating the min-convexity criterion.
///
/// For the plain check: `f(z) < f(x)` and `f(y) > f(z)`. For the strict
/// check on the support: `f(z) <= f(x)` and `f(y) >= f(z)`, with `[x, y]`
/// inside the support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexityViolation {
    pub x: Rational,
    pub z: Rational,
    pub y: Rational,
    pub fx: Rational,
    pub fz: Rational,
    pub fy: Rational,
}

/// Two distinct parameters with the same image under `T_P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub x: Rational,
    pub y: Rational,
}

pub fn is_ruspini(p: &FuzzyFamily) -> Verdict<SumWitness> {
    // The sum is affine between consecutive common breakpoints.
    p.common_breakpoints()
        .into_iter()
        .map(|x| {
            let sum = p.members().iter().map(|f| f.value_at(&x)).sum::<Rational>();
            SumWitness { x, sum }
        })
        .find(|w| !w.sum.is_one())
        .into()
}

pub fn is_2_overlapping(p: &FuzzyFamily) -> Verdict<OverlapWitness> {
    let n = p.len();
    for i in 1..=n {
        for j in i + 1..=n {
            let ij = p[i].min(&p[j]);
            if ij == PlFunc::zero() {
                continue;
            }
            for k in j + 1..=n {
                let (min, x) = ij.min(&p[k]).global_max();
                if min.is_positive() {
                    return Verdict::Fails(OverlapWitness { triple: [i, j, k], x, min });
                }
            }
        }
    }
    Verdict::Holds
}

pub fn is_normal(f: &PlFunc) -> Verdict<MaxWitness> {
    let (max, at) = f.global_max();
    if max.is_one() {
        Verdict::Holds
    } else {
        Verdict::Fails(MaxWitness { max, at })
    }
}

pub fn is_strongly_normal(f: &PlFunc) -> Verdict<StrongNormalityFailure> {
    // A PL function bounded by 1 reaches 1 only at breakpoints or along
    // flat segments, whose ends are breakpoints.
    let mut peaks = f.breakpoints().iter().filter(|(_, y)| y.is_one()).map(|(x, _)| x);
    match (peaks.next(), peaks.next()) {
        (None, _) => {
            let (max, at) = f.global_max();
            Verdict::Fails(StrongNormalityFailure::NotNormal(MaxWitness { max, at }))
        }
        (Some(_), None) => Verdict::Holds,
        (Some(x), Some(y)) => {
            Verdict::Fails(StrongNormalityFailure::MultiplePeaks { x: x.clone(), y: y.clone() })
        }
    }
}

/// The unique point where `f` equals 1, if `f` is strongly normal.
pub fn peak(f: &PlFunc) -> Option<Rational> {
    match is_strongly_normal(f) {
        Verdict::Holds => f.breakpoints().iter().find(|(_, y)| y.is_one()).map(|(x, _)| x.clone()),
        Verdict::Fails(_) => None,
    }
}

/// Quasiconcavity. For PL data it is enough to look for a breakpoint that
/// lies strictly below some earlier and some later breakpoint.
pub fn is_min_convex(f: &PlFunc) -> Verdict<ConvexityViolation> {
    valley(f.breakpoints()).map(|(i, j, k)| triple(f.breakpoints(), i, j, k)).into()
}

pub fn is_strictly_min_convex_on_support(f: &PlFunc) -> Verdict<ConvexityViolation> {
    let pts = f.breakpoints();
    for (l, r) in support_components(pts) {
        let run = &pts[l..=r];
        if let Some(j) = run.windows(2).position(|w| w[0].1 == w[1].1) {
            let (x, fx) = &run[j];
            let (y, fy) = &run[j + 1];
            let z = Rational::midpoint(x, y);
            return Verdict::Fails(ConvexityViolation {
                fz: fx.clone(),
                x: x.clone(),
                z,
                y: y.clone(),
                fx: fx.clone(),
                fy: fy.clone(),
            });
        }
        if let Some((i, j, k)) = valley(run) {
            return Verdict::Fails(triple(run, i, j, k));
        }
    }
    Verdict::Holds
}

/// `T_P` injective.
pub fn is_separating(p: &FuzzyFamily) -> Verdict<PairWitness> {
    basis::injectivity_check(p)
}

/// Indices `i < j < k` with `v_j < v_i` and `v_j < v_k`.
fn valley(pts: &[(Rational, Rational)]) -> Option<(usize, usize, usize)> {
    let m = pts.len();
    if m < 3 {
        return None;
    }
    let mut prefix = vec![0usize; m];
    for j in 1..m {
        let best = prefix[j - 1];
        prefix[j] = if pts[j - 1].1 > pts[best].1 { j - 1 } else { best };
    }
    let mut suffix = vec![m - 1; m];
    for j in (0..m - 2).rev() {
        let best = suffix[j + 1];
        suffix[j] = if pts[j + 1].1 > pts[best].1 { j + 1 } else { best };
    }
    (1..m - 1).find_map(|j| {
        let (i, k) = (prefix[j], suffix[j]);
        (pts[i].1 > pts[j].1 && pts[k].1 > pts[j].1).then_some((i, j, k))
    })
}

fn triple(pts: &[(Rational, Rational)], i: usize, j: usize, k: usize) -> ConvexityViolation {
    ConvexityViolation {
        x: pts[i].0.clone(),
        z: pts[j].0.clone(),
        y: pts[k].0.clone(),
        fx: pts[i].1.clone(),
        fz: pts[j].1.clone(),
        fy: pts[k].1.clone(),
    }
}

/// Breakpoint index ranges `[l, r]` whose closures are the closures of the
/// maximal open intervals where `f > 0`.
fn support_components(pts: &[(Rational, Rational)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for s in 0..pts.len() - 1 {
        let positive = pts[s].1.is_positive() || pts[s + 1].1.is_positive();
        match (start, positive) {
            (None, true) => start = Some(s),
            (Some(l), false) => {
                out.push((l, s));
                start = None;
            }
            _ => {}
        }
        // A zero breakpoint between two positive segments splits them.
        if let Some(l) = start {
            if positive && pts[s + 1].1.is_zero() {
                out.push((l, s + 1));
                start = None;
            }
        }
    }
    if let Some(l) = start {
        out.push((l, pts.len() - 1));
    }
    out
}

/// All single-set properties of one member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberReport {
    pub index: usize,
    pub normal: Verdict<MaxWitness>,
    pub strongly_normal: Verdict<StrongNormalityFailure>,
    pub min_convex: Verdict<ConvexityViolation>,
    pub strictly_min_convex_on_support: Verdict<ConvexityViolation>,
}

impl MemberReport {
    pub fn all_hold(&self) -> bool {
        self.normal.holds()
            && self.strongly_normal.holds()
            && self.min_convex.holds()
            && self.strictly_min_convex_on_support.holds()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub ruspini: Verdict<SumWitness>,
    pub two_overlapping: Verdict<OverlapWitness>,
    pub separating: Verdict<PairWitness>,
    pub members: Vec<MemberReport>,
}

pub fn member_report(index: usize, f: &PlFunc) -> MemberReport {
    MemberReport {
        index,
        normal: is_normal(f),
        strongly_normal: is_strongly_normal(f),
        min_convex: is_min_convex(f),
        strictly_min_convex_on_support: is_strictly_min_convex_on_support(f),
    }
}

pub fn property_report(p: &FuzzyFamily) -> PropertyReport {
    PropertyReport {
        ruspini: is_ruspini(p),
        two_overlapping: is_2_overlapping(p),
        separating: is_separating(p),
        members: p.members().iter().enumerate().map(|(k, f)| member_report(k + 1, f)).collect(),
    }
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.ruspini.holds()
            && self.two_overlapping.holds()
            && self.separating.holds()
            && self.members.iter().all(MemberReport::all_hold)
    }

    /// The condition bundle characterising pseudo-triangular bases: a
    /// 2-overlapping Ruspini partition whose members are strongly normal,
    /// min-convex, and strictly min-convex on their supports.
    pub fn basis_bundle_holds(&self) -> bool {
        self.ruspini.holds()
            && self.two_overlapping.holds()
            && self.members.iter().all(|m| {
                m.strongly_normal.holds() && m.min_convex.holds() && m.strictly_min_convex_on_support.holds()
            })
    }

    /// Re-checks every failure witness by direct evaluation.
    pub fn verify(&self, p: &FuzzyFamily) -> bool {
        let ok_sum = self
            .ruspini
            .witness()
            .is_none_or(|w| p.sum_at(&w.x).ok().as_ref() == Some(&w.sum) && !w.sum.is_one());
        let ok_overlap = self.two_overlapping.witness().is_none_or(|w| {
            let [i, j, k] = w.triple;
            i < j
                && j < k
                && k <= p.len()
                && [i, j, k].iter().map(|&m| p[m].value_at(&w.x)).min().as_ref() == Some(&w.min)
                && w.min.is_positive()
        });
        let ok_sep = self.separating.witness().is_none_or(|w| verify_pair(p, w));
        ok_sum
            && ok_overlap
            && ok_sep
            && self.members.len() == p.len()
            && self.members.iter().all(|m| m.verify(&p[m.index]))
    }
}

impl MemberReport {
    pub fn verify(&self, f: &PlFunc) -> bool {
        let ok_normal = self.normal.witness().is_none_or(|w| verify_max(f, w));
        let ok_strong = self.strongly_normal.witness().is_none_or(|w| match w {
            StrongNormalityFailure::NotNormal(w) => verify_max(f, w),
            StrongNormalityFailure::MultiplePeaks { x, y } => {
                x != y && f.value_at(x).is_one() && f.value_at(y).is_one()
            }
        });
        let ok_convex = self.min_convex.witness().is_none_or(|t| t.matches(f) && t.fz < t.fx && t.fy > t.fz);
        let ok_strict = self.strictly_min_convex_on_support.witness().is_none_or(|t| {
            t.matches(f)
                && t.fz <= t.fx
                && t.fy >= t.fz
                && f.samples_on(&t.x, &t.y).iter().all(|(_, v)| v.is_positive())
        });
        ok_normal && ok_strong && ok_convex && ok_strict
    }
}

impl ConvexityViolation {
    fn matches(&self, f: &PlFunc) -> bool {
        self.x < self.z
            && self.z < self.y
            && f.value_at(&self.x) == self.fx
            && f.value_at(&self.z) == self.fz
            && f.value_at(&self.y) == self.fy
    }
}

fn verify_max(f: &PlFunc, w: &MaxWitness) -> bool {
    f.value_at(&w.at) == w.max && !w.max.is_one() && f.global_max().0 == w.max
}

pub(crate) fn verify_pair(p: &FuzzyFamily, w: &PairWitness) -> bool {
    w.x != w.y
        && w.x.in_unit_interval()
        && w.y.in_unit_interval()
        && p.members().iter().all(|f| f.value_at(&w.x) == f.value_at(&w.y))
}
