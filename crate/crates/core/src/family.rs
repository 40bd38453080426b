use std::ops::Index;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::plfun::PlFunc;
use crate::rational::Rational;

/// An ordered, non-empty family of fuzzy sets `f_1, ..., f_n`.
///
/// Public indices are 1-based throughout the crate: `family[1]` is `f_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FuzzyFamily {
    members: Vec<PlFunc>,
}

impl FuzzyFamily {
    pub fn new(members: Vec<PlFunc>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Argument("a family needs at least one member".into()));
        }
        Ok(FuzzyFamily { members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[PlFunc] {
        &self.members
    }

    pub fn into_members(self) -> Vec<PlFunc> {
        self.members
    }

    /// `f_i` for 1-based `i`.
    pub fn member(&self, i: usize) -> Option<&PlFunc> {
        i.checked_sub(1).and_then(|k| self.members.get(k))
    }

    /// The point `T_P(x) = (f_1(x), ..., f_n(x))`.
    pub fn point_at(&self, x: &Rational) -> Result<Vec<Rational>> {
        self.members.iter().map(|f| f.eval(x)).collect()
    }

    /// `f_1(x) + ... + f_n(x)`, untruncated.
    pub fn sum_at(&self, x: &Rational) -> Result<Rational> {
        Ok(self.point_at(x)?.into_iter().sum())
    }

    /// Sorted union of all members' breakpoints.
    pub fn common_breakpoints(&self) -> Vec<Rational> {
        let mut xs: Vec<Rational> = self.members.iter().flat_map(|f| f.xs().cloned()).collect();
        xs.sort();
        xs.dedup();
        xs
    }

    /// Relabels members so that the new `f_k` is the old `f_{order[k-1]}`.
    /// `order` must be a permutation of `1..=n`.
    pub fn relabel(&self, order: &[usize]) -> Result<Self> {
        let n = self.len();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::Argument(format!(
                "permutation has {} entries, family has {n} members",
                order.len()
            )));
        }
        for &i in order {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::Argument(format!("{order:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(FuzzyFamily { members: order.iter().map(|&i| self.members[i - 1].clone()).collect() })
    }
}

impl Index<usize> for FuzzyFamily {
    type Output = PlFunc;

    /// 1-based; panics on 0 or out of range.
    fn index(&self, i: usize) -> &PlFunc {
        &self.members[i - 1]
    }
}
