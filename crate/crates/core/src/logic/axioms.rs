use std::fmt;

use serde::Serialize;

use super::formula::Formula;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomKind {
    /// `X_1 + ... + X_n`
    Rho,
    /// `!(X_i * X_j)` for adjacent `i < j`
    Alpha(usize, usize),
    /// `!(X_i & X_j)` for non-adjacent `i < j`
    Beta(usize, usize),
}

impl fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomKind::Rho => f.write_str("rho"),
            AxiomKind::Alpha(i, j) => write!(f, "alpha_{i}_{j}"),
            AxiomKind::Beta(i, j) => write!(f, "beta_{i}_{j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Axiom {
    pub kind: AxiomKind,
    pub formula: Formula,
}

/// The finite axiom set whose 1-set is the path `e_1 - e_2 - ... - e_n`
/// on the 1-skeleton of the simplex. Pairs are unordered (`i < j`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomSet {
    pub n: usize,
    pub axioms: Vec<Axiom>,
}

impl AxiomSet {
    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.axioms.iter().map(|a| &a.formula)
    }

    pub fn len(&self) -> usize {
        self.axioms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axioms.is_empty()
    }

    /// True iff every axiom evaluates to 1 at `point`.
    pub fn satisfied_at(&self, point: &[Rational]) -> Result<bool> {
        for f in self.formulas() {
            if !f.eval_at(point)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn axioms(n: usize) -> Result<AxiomSet> {
    if n < 2 {
        return Err(Error::Argument(format!("the axiom set needs n >= 2, got {n}")));
    }
    let x = Formula::var;
    let rho = (2..=n).fold(x(1), |acc, i| Formula::strong_or(acc, x(i)));
    let mut out = vec![Axiom { kind: AxiomKind::Rho, formula: rho }];
    out.extend((1..n).map(|i| Axiom {
        kind: AxiomKind::Alpha(i, i + 1),
        formula: Formula::not(Formula::strong_and(x(i), x(i + 1))),
    }));
    for i in 1..=n {
        for j in i + 2..=n {
            out.push(Axiom { kind: AxiomKind::Beta(i, j), formula: Formula::not(Formula::and(x(i), x(j))) });
        }
    }
    Ok(AxiomSet { n, axioms: out })
}

/// Membership in the path `e_1 - e_2 - ... - e_n`: at most two nonzero
/// coordinates, adjacent if two, summing to 1.
pub fn on_path(point: &[Rational]) -> bool {
    let nz: Vec<usize> = (0..point.len()).filter(|&k| !point[k].is_zero()).collect();
    let sum: Rational = point.iter().sum();
    sum.is_one()
        && match nz[..] {
            [_] => true,
            [i, j] => j == i + 1,
            _ => false,
        }
}

/// Exhaustively compares the 1-set of the axiom set with the path on the
/// grid `{0, 1/d, ..., 1}^n`. A counterexample point would be a bug.
pub fn oneset_grid_check(n: usize, d: usize) -> Result<Verdict<Vec<Rational>>> {
    if d < 1 {
        return Err(Error::Argument("grid denominator must be at least 1".into()));
    }
    let set = axioms(n)?;
    let levels: Vec<Rational> = (0..=d).map(|k| Rational::new(k as i64, d as i64)).collect();
    let mut idx = vec![0usize; n];
    loop {
        let point: Vec<Rational> = idx.iter().map(|&k| levels[k].clone()).collect();
        if set.satisfied_at(&point)? != on_path(&point) {
            return Ok(Verdict::Fails(point));
        }
        // odometer
        let mut c = 0;
        while c < n && idx[c] == d {
            idx[c] = 0;
            c += 1;
        }
        if c == n {
            return Ok(Verdict::Holds);
        }
        idx[c] += 1;
    }
}

/// `!X_m + ... + !X_m` with `k` summands; its 1-set is
/// `{x : x_m <= (k-1)/k}`.
pub fn phi_k(m: usize, k: usize) -> Result<Formula> {
    if k == 0 {
        return Err(Error::Argument("phi_k needs k >= 1".into()));
    }
    if m == 0 {
        return Err(Error::Argument("variable indices start at 1".into()));
    }
    let term = || Formula::not(Formula::var(m));
    Ok((1..k).fold(term(), |acc, _| Formula::strong_or(acc, term())))
}
