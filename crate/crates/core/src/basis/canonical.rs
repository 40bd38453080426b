use crate::error::{Error, Result};
use crate::family::FuzzyFamily;
use crate::plfun::PlFunc;
use crate::rational::Rational;

/// The triangular basis of `n` hats with equally spaced nodes
/// `t_i = (i-1)/(n-1)`.
pub fn canonical_basis(n: usize) -> Result<FuzzyFamily> {
    if n < 2 {
        return Err(Error::Argument(format!("canonical basis needs n >= 2, got {n}")));
    }
    let node = |i: usize| Rational::new(i as i64 - 1, n as i64 - 1);
    let members = (1..=n)
        .map(|i| {
            let mut pts = Vec::with_capacity(5);
            if i > 2 {
                pts.push((Rational::zero(), Rational::zero()));
            }
            if i > 1 {
                pts.push((node(i - 1), Rational::zero()));
            }
            pts.push((node(i), Rational::one()));
            if i < n {
                pts.push((node(i + 1), Rational::zero()));
            }
            if i + 1 < n {
                pts.push((Rational::one(), Rational::zero()));
            }
            PlFunc::new(pts)
        })
        .collect::<Result<Vec<_>>>()?;
    FuzzyFamily::new(members)
}
