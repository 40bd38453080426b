use serde::Serialize;

use super::coverage::{path_coverage, PathCoverage};
use super::curve::injectivity_check;
use crate::error::{Error, Result};
use crate::family::FuzzyFamily;
use crate::plfun::merge_sorted;
use crate::props::{self, PairWitness, PropertyReport};
use crate::rational::Rational;
use crate::verdict::Verdict;

/// Nodes and member order of a pseudo-triangular basis: member
/// `permutation[k]` peaks at `nodes[k]`, and nodes strictly increase from 0
/// to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisStructure {
    pub permutation: Vec<usize>,
    pub nodes: Vec<Rational>,
}

/// Why a family is not a pseudo-triangular basis by direct inspection of the
/// definition. Member indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum DefinitionFailure {
    TooFewMembers,
    NotStronglyNormal {
        member: usize,
    },
    CoincidentNodes {
        first: usize,
        second: usize,
        node: Rational,
    },
    FirstNodeNotZero {
        node: Rational,
    },
    LastNodeNotOne {
        node: Rational,
    },
    /// a) the member does not vanish at the next node
    NoVanishingAtNextNode {
        member: usize,
        node: Rational,
        value: Rational,
    },
    /// b) a member positive on an interval it should not touch
    PositiveOffInterval {
        member: usize,
        lo: Rational,
        hi: Rational,
        x: Rational,
    },
    /// c) neighbours not complementary
    NotComplementary {
        left: usize,
        right: usize,
        x: Rational,
    },
    /// d) not strictly monotone between the nodes (witness: two points in
    ///    order where the required strict inequality fails)
    NotBijective {
        member: usize,
        x: Rational,
        y: Rational,
    },
}

/// Failure of the geometric characterisation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometricFailure {
    pub injectivity: Option<PairWitness>,
    pub hamiltonian_path: bool,
}

/// The three equivalent characterisations of pseudo-triangular bases, each
/// computed on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Direct check of the defining conditions a)-d).
    pub definition: Verdict<DefinitionFailure>,
    pub structure: Option<BasisStructure>,
    /// Ruspini, 2-overlapping, strongly normal, min-convex, strictly
    /// min-convex on support.
    pub properties: Verdict<Vec<String>>,
    /// `T_P` injective with range a Hamiltonian path on the 1-skeleton.
    pub geometric: Verdict<GeometricFailure>,
    /// Pseudo-triangular with affine pieces between nodes.
    pub triangular: bool,
    #[serde(skip)]
    pub report: PropertyReport,
    #[serde(skip)]
    pub coverage: PathCoverage,
}

impl Classification {
    pub fn routes_agree(&self) -> bool {
        let d = self.definition.holds();
        d == self.properties.holds() && d == self.geometric.holds()
    }

    pub fn is_pseudo_triangular(&self) -> bool {
        self.definition.holds()
    }

    /// Re-checks the reported structure and every failure witness against
    /// `P` by direct evaluation.
    pub fn verify(&self, p: &FuzzyFamily) -> bool {
        let ok_definition = match (&self.definition, &self.structure) {
            (Verdict::Holds, Some(s)) => {
                s.permutation.len() == p.len()
                    && s.permutation
                        .iter()
                        .zip(&s.nodes)
                        .all(|(&m, t)| m >= 1 && m <= p.len() && props::peak(&p[m]).as_ref() == Some(t))
            }
            (Verdict::Fails(f), None) => f.verify(p),
            _ => false,
        };
        let ok_injectivity = match &self.geometric {
            Verdict::Fails(GeometricFailure { injectivity: Some(w), .. }) => props::verify_pair(p, w),
            _ => true,
        };
        ok_definition && ok_injectivity && self.report.verify(p)
    }
}

impl DefinitionFailure {
    /// Checks the failure directly against `P`.
    pub fn verify(&self, p: &FuzzyFamily) -> bool {
        let n = p.len();
        let member_ok = |m: usize| m >= 1 && m <= n;
        let peaks = || (1..=n).filter_map(|m| props::peak(&p[m]));
        match self {
            DefinitionFailure::TooFewMembers => n < 2,
            DefinitionFailure::NotStronglyNormal { member } => {
                member_ok(*member) && props::is_strongly_normal(&p[*member]).fails()
            }
            DefinitionFailure::CoincidentNodes { first, second, node } => {
                member_ok(*first)
                    && member_ok(*second)
                    && first != second
                    && props::peak(&p[*first]).as_ref() == Some(node)
                    && props::peak(&p[*second]).as_ref() == Some(node)
            }
            DefinitionFailure::FirstNodeNotZero { node } => {
                !node.is_zero() && peaks().min().as_ref() == Some(node)
            }
            DefinitionFailure::LastNodeNotOne { node } => {
                !node.is_one() && peaks().max().as_ref() == Some(node)
            }
            DefinitionFailure::NoVanishingAtNextNode { member, node, value } => {
                member_ok(*member) && !value.is_zero() && &p[*member].value_at(node) == value
            }
            DefinitionFailure::PositiveOffInterval { member, lo, hi, x } => {
                member_ok(*member) && lo <= x && x <= hi && p[*member].value_at(x).is_positive()
            }
            DefinitionFailure::NotComplementary { left, right, x } => {
                member_ok(*left)
                    && member_ok(*right)
                    && x.in_unit_interval()
                    && !(p[*left].value_at(x) + p[*right].value_at(x)).is_one()
            }
            DefinitionFailure::NotBijective { member, x, y } => {
                if !member_ok(*member) || x >= y || !x.in_unit_interval() || !y.in_unit_interval() {
                    return false;
                }
                let f = &p[*member];
                let (fx, fy) = (f.value_at(x), f.value_at(y));
                match props::peak(f) {
                    Some(t) if &t <= x => fy >= fx,
                    Some(_) => fy <= fx,
                    None => false,
                }
            }
        }
    }
}

/// Runs all three routes and fails with [`Error::Internal`] if they
/// disagree.
pub fn classify(p: &FuzzyFamily) -> Result<Classification> {
    let c = classify_routes(p);
    if !c.routes_agree() {
        return Err(Error::Internal(format!(
            "classification routes disagree: definition={}, properties={}, geometric={}",
            c.definition.holds(),
            c.properties.holds(),
            c.geometric.holds()
        )));
    }
    Ok(c)
}

/// Runs all three routes without checking that they agree.
pub fn classify_routes(p: &FuzzyFamily) -> Classification {
    let (definition, structure, triangular) = match definition_route(p) {
        Ok((s, tri)) => (Verdict::Holds, Some(s), tri),
        Err(f) => (Verdict::Fails(f), None, false),
    };
    let report = props::property_report(p);
    let properties =
        if report.basis_bundle_holds() { Verdict::Holds } else { Verdict::Fails(bundle_failures(&report)) };
    let coverage = path_coverage(p);
    let injectivity = injectivity_check(p);
    let geometric = if injectivity.holds() && coverage.is_hamiltonian() {
        Verdict::Holds
    } else {
        Verdict::Fails(GeometricFailure {
            injectivity: injectivity.witness().cloned(),
            hamiltonian_path: coverage.is_hamiltonian(),
        })
    };
    Classification { definition, structure, properties, geometric, triangular, report, coverage }
}

fn bundle_failures(r: &PropertyReport) -> Vec<String> {
    let mut out = Vec::new();
    if r.ruspini.fails() {
        out.push("not a Ruspini partition".to_string());
    }
    if r.two_overlapping.fails() {
        out.push("not 2-overlapping".to_string());
    }
    for m in &r.members {
        if m.strongly_normal.fails() {
            out.push(format!("f{} not strongly normal", m.index));
        }
        if m.min_convex.fails() {
            out.push(format!("f{} not min-convex", m.index));
        }
        if m.strictly_min_convex_on_support.fails() {
            out.push(format!("f{} not strictly min-convex on its support", m.index));
        }
    }
    out
}

/// Checks conditions a)-d) after locating each member's unique peak.
/// Returns the structure and whether d*) (affine pieces) also holds.
#[allow(clippy::result_large_err)]
fn definition_route(p: &FuzzyFamily) -> std::result::Result<(BasisStructure, bool), DefinitionFailure> {
    let n = p.len();
    if n < 2 {
        return Err(DefinitionFailure::TooFewMembers);
    }
    let mut peaks: Vec<(Rational, usize)> = Vec::with_capacity(n);
    for i in 1..=n {
        let t = props::peak(&p[i]).ok_or(DefinitionFailure::NotStronglyNormal { member: i })?;
        peaks.push((t, i));
    }
    peaks.sort();
    if let Some(w) = peaks.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(DefinitionFailure::CoincidentNodes {
            first: w[0].1.min(w[1].1),
            second: w[0].1.max(w[1].1),
            node: w[0].0.clone(),
        });
    }
    let (nodes, order): (Vec<Rational>, Vec<usize>) = peaks.into_iter().unzip();
    if !nodes[0].is_zero() {
        return Err(DefinitionFailure::FirstNodeNotZero { node: nodes[0].clone() });
    }
    if !nodes[n - 1].is_one() {
        return Err(DefinitionFailure::LastNodeNotOne { node: nodes[n - 1].clone() });
    }

    let mut affine = true;
    for k in 0..n - 1 {
        let (lo, hi) = (&nodes[k], &nodes[k + 1]);
        let (i, j) = (order[k], order[k + 1]);
        let (fi, fj) = (&p[i], &p[j]);

        let v = fi.value_at(hi);
        if !v.is_zero() {
            return Err(DefinitionFailure::NoVanishingAtNextNode { member: i, node: hi.clone(), value: v });
        }
        for m in (1..=n).filter(|&m| m != i && m != j) {
            if let Some((x, _)) = p[m].samples_on(lo, hi).into_iter().find(|(_, y)| !y.is_zero()) {
                return Err(DefinitionFailure::PositiveOffInterval {
                    member: m,
                    lo: lo.clone(),
                    hi: hi.clone(),
                    x,
                });
            }
        }
        let xs = merge_sorted(
            fi.samples_on(lo, hi).iter().map(|(x, _)| x),
            fj.samples_on(lo, hi).iter().map(|(x, _)| x),
        );
        if let Some(x) = xs.iter().find(|x| !(fi.value_at(x) + fj.value_at(x)).is_one()) {
            return Err(DefinitionFailure::NotComplementary { left: i, right: j, x: x.clone() });
        }
        for (member, f, decreasing) in [(i, fi, true), (j, fj, false)] {
            let s = f.samples_on(lo, hi);
            if let Some(w) =
                s.windows(2).find(|w| if decreasing { w[1].1 >= w[0].1 } else { w[1].1 <= w[0].1 })
            {
                return Err(DefinitionFailure::NotBijective { member, x: w[0].0.clone(), y: w[1].0.clone() });
            }
        }
        affine &= fi.is_affine_on(lo, hi) && fj.is_affine_on(lo, hi);
    }
    Ok((BasisStructure { permutation: order, nodes }, affine))
}
