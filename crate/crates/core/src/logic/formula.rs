use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::plfun::PointwiseOp;
use crate::rational::Rational;

/// Binary connectives of Lukasiewicz logic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connective {
    /// `->`
    Implies,
    /// `&`, lattice conjunction (min)
    And,
    /// `|`, lattice disjunction (max)
    Or,
    /// `+`, strong disjunction
    StrongOr,
    /// `*`, strong conjunction
    StrongAnd,
    /// `-`, difference
    Minus,
    /// `<->`
    Iff,
}

impl Connective {
    pub const ALL: [Connective; 7] = [
        Connective::Implies,
        Connective::And,
        Connective::Or,
        Connective::StrongOr,
        Connective::StrongAnd,
        Connective::Minus,
        Connective::Iff,
    ];

    pub fn pointwise(self) -> PointwiseOp {
        match self {
            Connective::Implies => PointwiseOp::Implication,
            Connective::And => PointwiseOp::Min,
            Connective::Or => PointwiseOp::Max,
            Connective::StrongOr => PointwiseOp::TruncatedSum,
            Connective::StrongAnd => PointwiseOp::TruncatedProduct,
            Connective::Minus => PointwiseOp::TruncatedDifference,
            Connective::Iff => PointwiseOp::Biconditional,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Connective::Implies => "->",
            Connective::And => "&",
            Connective::Or => "|",
            Connective::StrongOr => "+",
            Connective::StrongAnd => "*",
            Connective::Minus => "-",
            Connective::Iff => "<->",
        }
    }

    /// Binding level; smaller binds tighter.
    pub(crate) fn level(self) -> u8 {
        match self {
            Connective::And | Connective::StrongAnd | Connective::Minus => 2,
            Connective::Or | Connective::StrongOr => 3,
            Connective::Implies => 4,
            Connective::Iff => 5,
        }
    }

    pub(crate) fn right_assoc(self) -> bool {
        self == Connective::Implies
    }
}

/// A formula over variables `X_1, X_2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(usize),
    Bot,
    Top,
    Not(Box<Formula>),
    Binary(Connective, Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Panics if `i == 0`.
    pub fn var(i: usize) -> Formula {
        assert!(i >= 1, "variable indices start at 1");
        Formula::Var(i)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn binary(c: Connective, a: Formula, b: Formula) -> Formula {
        Formula::Binary(c, Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Self::binary(Connective::Implies, a, b)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Self::binary(Connective::And, a, b)
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Self::binary(Connective::Or, a, b)
    }

    pub fn strong_or(a: Formula, b: Formula) -> Formula {
        Self::binary(Connective::StrongOr, a, b)
    }

    pub fn strong_and(a: Formula, b: Formula) -> Formula {
        Self::binary(Connective::StrongAnd, a, b)
    }

    pub fn minus(a: Formula, b: Formula) -> Formula {
        Self::binary(Connective::Minus, a, b)
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Self::binary(Connective::Iff, a, b)
    }

    /// Largest variable index used, 0 for closed formulas.
    pub fn max_var(&self) -> usize {
        match self {
            Formula::Var(i) => *i,
            Formula::Bot | Formula::Top => 0,
            Formula::Not(a) => a.max_var(),
            Formula::Binary(_, a, b) => a.max_var().max(b.max_var()),
        }
    }

    /// Sorted, de-duplicated variable indices.
    pub fn variables(&self) -> Vec<usize> {
        fn walk(f: &Formula, out: &mut Vec<usize>) {
            match f {
                Formula::Var(i) => out.push(*i),
                Formula::Bot | Formula::Top => {}
                Formula::Not(a) => walk(a, out),
                Formula::Binary(_, a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut v = Vec::new();
        walk(self, &mut v);
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 0,
            Formula::Not(a) => 1 + a.depth(),
            Formula::Binary(_, a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Renames variable `X_i` to `X_{map(i)}`.
    pub fn rename(&self, map: &impl Fn(usize) -> usize) -> Formula {
        match self {
            Formula::Var(i) => Formula::Var(map(*i)),
            Formula::Bot => Formula::Bot,
            Formula::Top => Formula::Top,
            Formula::Not(a) => Formula::not(a.rename(map)),
            Formula::Binary(c, a, b) => Formula::binary(*c, a.rename(map), b.rename(map)),
        }
    }

    /// Rewrites every derived connective in terms of falsum, negation and
    /// implication.
    pub fn desugar(&self) -> Formula {
        use Connective::*;
        match self {
            Formula::Var(i) => Formula::Var(*i),
            Formula::Bot => Formula::Bot,
            Formula::Top => Formula::not(Formula::Bot),
            Formula::Not(a) => Formula::not(a.desugar()),
            Formula::Binary(c, a, b) => {
                let (a, b) = (a.desugar(), b.desugar());
                let imp = Formula::implies;
                let or = |a: Formula, b: Formula| imp(imp(a, b.clone()), b);
                let and = |a: Formula, b: Formula| Formula::not(or(Formula::not(a), Formula::not(b)));
                match c {
                    Implies => imp(a, b),
                    Or => or(a, b),
                    And => and(a, b),
                    Iff => and(imp(a.clone(), b.clone()), imp(b, a)),
                    StrongOr => imp(Formula::not(a), b),
                    StrongAnd => Formula::not(imp(a, Formula::not(b))),
                    Minus => Formula::not(imp(a, b)),
                }
            }
        }
    }

    /// Truth value under the assignment `X_i -> point[i-1]`.
    pub fn eval_at(&self, point: &[Rational]) -> Result<Rational> {
        let arity = point.len();
        if let Some(index) = self.variables().into_iter().find(|&i| i > arity) {
            return Err(Error::Arity { index, arity });
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[Rational]) -> Rational {
        match self {
            Formula::Var(i) => point[i - 1].clone(),
            Formula::Bot => Rational::zero(),
            Formula::Top => Rational::one(),
            Formula::Not(a) => Rational::one() - a.eval_unchecked(point),
            Formula::Binary(c, a, b) => {
                c.pointwise().apply(&a.eval_unchecked(point), &b.eval_unchecked(point))
            }
        }
    }

    fn level(&self) -> u8 {
        match self {
            Formula::Binary(c, _, _) => c.level(),
            _ => 0,
        }
    }
}

impl fmt::Display for Formula {
    /// ASCII form with the fewest parentheses that re-parse to the same
    /// tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(i) => write!(f, "X{i}"),
            Formula::Bot => f.write_str("bot"),
            Formula::Top => f.write_str("top"),
            Formula::Not(a) => {
                if a.level() > 0 {
                    write!(f, "!({a})")
                } else {
                    write!(f, "!{a}")
                }
            }
            Formula::Binary(c, a, b) => {
                let lvl = c.level();
                let (left_paren, right_paren) = if c.right_assoc() {
                    (a.level() >= lvl, b.level() > lvl)
                } else {
                    (a.level() > lvl, b.level() >= lvl)
                };
                write_operand(f, a, left_paren)?;
                write!(f, " {} ", c.symbol())?;
                write_operand(f, b, right_paren)
            }
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, a: &Formula, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({a})")
    } else {
        write!(f, "{a}")
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
