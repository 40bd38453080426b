//! The curve x -> (f_1(x), ..., f_n(x)) and the edges of the simplex it covers.
//!
//! cargo run --example curve_geometry

use tribasis::basis::{injectivity_check, path_coverage, refine};
use tribasis::{canonical_basis, FuzzyFamily, PlFunc};

fn main() -> tribasis::Result<()> {
    let p = canonical_basis(3)?.relabel(&[2, 3, 1])?;
    for s in refine(&p) {
        println!("[{}, {}]: {:?} -> {:?}", s.a, s.b, s.start, s.end);
    }
    let cov = path_coverage(&p);
    for e in &cov.edges {
        println!("edge {{{}, {}}} covered by {:?}, full: {}", e.i, e.j, e.intervals, e.is_full());
    }
    println!("path order: {:?}", cov.permutation);
    println!("injective: {:?}", injectivity_check(&p));

    // A tent and its complement trace the same edge twice.
    let tent = PlFunc::parse_points("0 0, 1/2 1, 1 0")?;
    let folded = FuzzyFamily::new(vec![tent.clone(), tent.negate()])?;
    println!("folded injective: {:?}", injectivity_check(&folded));
    println!("folded path order: {:?}", path_coverage(&folded).permutation);
    Ok(())
}
