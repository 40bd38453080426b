//! Decision procedures for the theory of a family and for consequence from
//! the axiom set.
//!
//! Consequence from the finite axiom set is decided semantically: for
//! finite premise sets, syntactic and semantic consequence coincide in
//! Lukasiewicz logic, so no proof search is needed.

use serde::Serialize;

use super::axioms::{axioms, phi_k, Axiom};
use super::formula::Formula;
use crate::basis::{canonical_basis, detected_permutation, path_coverage};
use crate::error::{Error, Result};
use crate::family::FuzzyFamily;
use crate::plfun::PlFunc;
use crate::props::{is_separating, PairWitness};
use crate::rational::Rational;
use crate::verdict::Verdict;

fn check_arity(phi: &Formula, n: usize) -> Result<()> {
    match phi.variables().into_iter().find(|&i| i > n) {
        Some(index) => Err(Error::Arity { index, arity: n }),
        None => Ok(()),
    }
}

/// The PL function `x -> phi(f_1(x), ..., f_n(x))`.
pub fn compose(phi: &Formula, p: &FuzzyFamily) -> Result<PlFunc> {
    check_arity(phi, p.len())?;
    Ok(compose_unchecked(phi, p))
}

fn compose_unchecked(phi: &Formula, p: &FuzzyFamily) -> PlFunc {
    match phi {
        Formula::Var(i) => p[*i].clone(),
        Formula::Bot => PlFunc::zero(),
        Formula::Top => PlFunc::one(),
        Formula::Not(a) => compose_unchecked(a, p).negate(),
        Formula::Binary(c, a, b) => compose_unchecked(a, p).combine(&compose_unchecked(b, p), c.pointwise()),
    }
}

/// A parameter `x` whose realised assignment `T_P(x)` gives the formula a
/// value below 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipWitness {
    pub x: Rational,
    pub point: Vec<Rational>,
    pub value: Rational,
}

impl MembershipWitness {
    /// `T_P(x)` is the reported point and `phi` takes the reported value
    /// below 1 there.
    pub fn verify(&self, phi: &Formula, p: &FuzzyFamily) -> Result<bool> {
        let point = p.point_at(&self.x)?;
        Ok(point == self.point && phi.eval_at(&point)? == self.value && !self.value.is_one())
    }
}

/// Whether `phi` evaluates to 1 under every assignment realised by `P`.
pub fn theta_member(phi: &Formula, p: &FuzzyFamily) -> Result<Verdict<MembershipWitness>> {
    let h = compose(phi, p)?;
    let (value, x) = h.global_min();
    if value.is_one() {
        return Ok(Verdict::Holds);
    }
    let point = p.point_at(&x)?;
    Ok(Verdict::Fails(MembershipWitness { x, point, value }))
}

/// Whether `phi` is a consequence of the axiom set in `n` variables.
///
/// The canonical basis parametrises the 1-set of the axioms exactly, so
/// this reduces to membership in the theory of the canonical basis.
pub fn a_consequence(phi: &Formula, n: usize) -> Result<Verdict<MembershipWitness>> {
    check_arity(phi, n)?;
    theta_member(phi, &canonical_basis(n)?)
}

/// Evidence that the theory of `P` differs from the consequences of the
/// axiom set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Separation {
    /// An axiom (hence a consequence) that fails somewhere along `P`.
    AxiomOutsideTheory { axiom: Axiom, x: Rational, value: Rational },
    /// A formula true along all of `P` but refuted at the vertex `e_m`,
    /// which satisfies every axiom.
    FormulaOutsideClosure {
        vertex: usize,
        /// Maximum of `f_m` over `[0,1]`.
        max_coordinate: Rational,
        k: usize,
        formula: Formula,
        min_along_family: Rational,
        value_at_vertex: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "separation")]
#[allow(clippy::large_enum_variant)]
pub enum TheoryCertificate {
    Equal,
    NotEqual(Separation),
}

impl TheoryCertificate {
    pub fn is_equal(&self) -> bool {
        matches!(self, TheoryCertificate::Equal)
    }

    /// Re-checks the certificate against `P` by direct evaluation.
    pub fn verify(&self, p: &FuzzyFamily) -> Result<bool> {
        let n = p.len();
        match self {
            TheoryCertificate::Equal => {
                let set = axioms(n)?;
                for f in set.formulas() {
                    if theta_member(f, p)?.fails() {
                        return Ok(false);
                    }
                }
                let cov = path_coverage(p);
                Ok((1..n).all(|i| cov.edge(i, i + 1).is_some_and(|e| e.is_full())))
            }
            TheoryCertificate::NotEqual(Separation::AxiomOutsideTheory { axiom, x, value }) => {
                let listed = axioms(n)?.axioms.contains(axiom);
                let v = axiom.formula.eval_at(&p.point_at(x)?)?;
                Ok(listed && &v == value && !v.is_one())
            }
            TheoryCertificate::NotEqual(Separation::FormulaOutsideClosure {
                vertex,
                k,
                formula,
                value_at_vertex,
                ..
            }) => {
                if *vertex == 0 || *vertex > n || formula != &phi_k(*vertex, *k)? {
                    return Ok(false);
                }
                let in_theory = theta_member(formula, p)?.holds();
                let e_m = unit_vector(n, *vertex);
                let at_vertex = formula.eval_at(&e_m)?;
                let vertex_in_oneset = axioms(n)?.satisfied_at(&e_m)?;
                Ok(in_theory && at_vertex.is_zero() && value_at_vertex.is_zero() && vertex_in_oneset)
            }
        }
    }
}

fn unit_vector(n: usize, m: usize) -> Vec<Rational> {
    (1..=n).map(|i| if i == m { Rational::one() } else { Rational::zero() }).collect()
}

/// Decides whether the theory of `P` equals the deductive closure of the
/// axiom set in `n = |P|` variables (axioms in the given index order).
///
/// If some axiom fails along `P`, that axiom is the certificate. Otherwise
/// the range of `T_P` lies on the path `e_1 - ... - e_n`; if it is a proper
/// subset, connectedness leaves `e_1` or `e_n` uncovered, and with `c` the
/// largest value of that coordinate along `P`, the formula `phi_k` for
/// `k = ceil(1/(1-c))` is true along `P` but false at the vertex. (A
/// metric bound `k >= sqrt(2)/eps`, with `eps` the distance from the vertex
/// to the range, also works; the coordinate bound is exact and tighter.)
pub fn theory_equal(p: &FuzzyFamily) -> Result<TheoryCertificate> {
    let n = p.len();
    let set = axioms(n)?;
    for axiom in &set.axioms {
        if let Verdict::Fails(w) = theta_member(&axiom.formula, p)? {
            return Ok(TheoryCertificate::NotEqual(Separation::AxiomOutsideTheory {
                axiom: axiom.clone(),
                x: w.x,
                value: w.value,
            }));
        }
    }
    let cov = path_coverage(p);
    if (1..n).all(|i| cov.edge(i, i + 1).is_some_and(|e| e.is_full())) {
        return Ok(TheoryCertificate::Equal);
    }
    for m in [1, n] {
        let (c, _) = p[m].global_max();
        if c.is_one() {
            continue;
        }
        let k_big = (Rational::one() - &c).recip().ceil_int();
        let k = usize::try_from(k_big.clone())
            .map_err(|_| Error::Argument(format!("separating formula would need k = {k_big} summands")))?;
        let formula = phi_k(m, k)?;
        let min_along_family = compose(&formula, p)?.global_min().0;
        let value_at_vertex = formula.eval_at(&unit_vector(n, m))?;
        if !min_along_family.is_one() || !value_at_vertex.is_zero() {
            return Err(Error::Internal(format!(
                "phi_{k} for X{m} failed to separate (min {min_along_family}, vertex value {value_at_vertex})"
            )));
        }
        return Ok(TheoryCertificate::NotEqual(Separation::FormulaOutsideClosure {
            vertex: m,
            max_coordinate: c,
            k,
            formula,
            min_along_family,
            value_at_vertex,
        }));
    }
    Err(Error::Internal("range is a proper subset of the path but reaches both end vertices".into()))
}

/// Separation plus theory equality, after relabelling members along the
/// detected path order when one exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomatisationReport {
    pub separating: Verdict<PairWitness>,
    /// Path order used to relabel members; absent when the range is not a
    /// Hamiltonian path (members are then compared in their given order).
    pub permutation: Option<Vec<usize>>,
    pub certificate: TheoryCertificate,
}

impl AxiomatisationReport {
    pub fn holds(&self) -> bool {
        self.separating.holds() && self.certificate.is_equal()
    }
}

/// `P` is separating and its theory, up to relabelling, is axiomatised by
/// the axiom set. Holds exactly for pseudo-triangular bases.
pub fn axiomatised_by_path(p: &FuzzyFamily) -> Result<AxiomatisationReport> {
    let separating = is_separating(p);
    let permutation = detected_permutation(p);
    let q = match &permutation {
        Some(order) => p.relabel(order)?,
        None => p.clone(),
    };
    let certificate = theory_equal(&q)?;
    Ok(AxiomatisationReport { separating, permutation, certificate })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureProbe {
    pub antecedent: bool,
    pub implication: bool,
    pub consequent: bool,
    /// Modus ponens respected: antecedent and implication imply consequent.
    pub closed: bool,
}

/// Checks one modus-ponens instance against membership in the theory.
pub fn deductive_closure_probe(p: &FuzzyFamily, phi: &Formula, psi: &Formula) -> Result<ClosureProbe> {
    let antecedent = theta_member(phi, p)?.holds();
    let implication = theta_member(&Formula::implies(phi.clone(), psi.clone()), p)?.holds();
    let consequent = theta_member(psi, p)?.holds();
    Ok(ClosureProbe {
        antecedent,
        implication,
        consequent,
        closed: !(antecedent && implication) || consequent,
    })
}
