//! Three independent routes to recognising a pseudo-triangular basis.
//!
//! cargo run --example classify_bases

use tribasis::basis::classify;
use tribasis::{canonical_basis, FuzzyFamily, PlFunc};

fn pair(f1: &str) -> tribasis::Result<FuzzyFamily> {
    let f1 = PlFunc::parse_points(f1)?;
    let f2 = f1.negate();
    FuzzyFamily::new(vec![f1, f2])
}

fn show(name: &str, p: &FuzzyFamily) -> tribasis::Result<()> {
    let c = classify(p)?;
    println!("{name}");
    println!("  definition  {:?}", c.definition);
    println!("  properties  {:?}", c.properties);
    println!("  geometric   {:?}", c.geometric);
    println!("  pseudo-triangular {}, triangular {}", c.is_pseudo_triangular(), c.triangular);
    if let Some(s) = &c.structure {
        println!("  nodes {:?}, order {:?}", s.nodes, s.permutation);
    }
    Ok(())
}

fn main() -> tribasis::Result<()> {
    show("canonical 4-basis", &canonical_basis(4)?)?;
    show("relabelled 4-basis", &canonical_basis(4)?.relabel(&[4, 2, 1, 3])?)?;
    show("kinked pair", &pair("0 1, 1/2 1/4, 1 0")?)?;
    show("plateau pair", &pair("0 1, 1/3 1/2, 2/3 1/2, 1 0")?)?;
    Ok(())
}
