//! Equally spaced samples of a family, for external plotting.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::family::FuzzyFamily;
use crate::rational::Rational;

/// `k + 1` rows `(x, [f_1(x), ..., f_n(x)])` at `x = j/k`.
pub fn sample_rows(p: &FuzzyFamily, k: usize) -> Result<Vec<(Rational, Vec<Rational>)>> {
    if k == 0 {
        return Err(Error::Argument("need at least one sampling step".into()));
    }
    let denom = i64::try_from(k).map_err(|_| Error::Argument(format!("{k} steps is too many")))?;
    (0..=denom)
        .map(|j| {
            let x = Rational::new(j, denom);
            let values = p.point_at(&x)?;
            Ok((x, values))
        })
        .collect()
}

/// CSV text: a `#` line marking the decimal columns as approximate, the
/// header `x,f1,...,fn,x_exact,f1_exact,...,fn_exact`, then the rows.
pub fn sample_csv(p: &FuzzyFamily, k: usize) -> Result<String> {
    let n = p.len();
    let mut out = String::from("# decimal columns are approximate; *_exact columns are exact rationals\n");
    let names: Vec<String> =
        std::iter::once("x".to_string()).chain((1..=n).map(|i| format!("f{i}"))).collect();
    let exact: Vec<String> = names.iter().map(|c| format!("{c}_exact")).collect();
    let _ = writeln!(out, "{},{}", names.join(","), exact.join(","));
    for (x, values) in sample_rows(p, k)? {
        let row: Vec<&Rational> = std::iter::once(&x).chain(values.iter()).collect();
        let decimal: Vec<String> = row.iter().map(|r| r.to_f64().to_string()).collect();
        let rational: Vec<String> = row.iter().map(|r| r.to_string()).collect();
        let _ = writeln!(out, "{},{}", decimal.join(","), rational.join(","));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::canonical_basis;
    use crate::rational::rat;

    #[test]
    fn canonical_three_at_four_steps() {
        let p = canonical_basis(3).unwrap();
        let rows = sample_rows(&p, 4).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[2], (rat(1, 2), vec![rat(0, 1), rat(1, 1), rat(0, 1)]));
        let csv = sample_csv(&p, 4).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[1], "x,f1,f2,f3,x_exact,f1_exact,f2_exact,f3_exact");
        assert_eq!(lines[3], "0.25,0.5,0.5,0,1/4,1/2,1/2,0");
        assert_eq!(lines[4], "0.5,0,1,0,1/2,0,1,0");
    }

    #[test]
    fn zero_steps_rejected() {
        assert!(sample_rows(&canonical_basis(2).unwrap(), 0).is_err());
    }
}
