//! Deciding whether a family's theory is axiomatised by the path axioms, with
//! certificates when it is not.
//!
//! cargo run --example theory_equality

use tribasis::logic::{axiomatised_by_path, deductive_closure_probe, parse, theory_equal};
use tribasis::{canonical_basis, rat, FuzzyFamily, PlFunc};

fn main() -> tribasis::Result<()> {
    let t4 = canonical_basis(4)?;
    println!("canonical 4-basis: {:?}", theory_equal(&t4)?);

    let half = PlFunc::parse_points("0 1, 1 1/2")?;
    let p = FuzzyFamily::new(vec![half.clone(), half.negate()])?;
    let cert = theory_equal(&p)?;
    println!("half path: {cert:?}");
    println!("  re-verifies: {}", cert.verify(&p)?);

    let third = PlFunc::constant(rat(1, 3))?;
    let thirds = FuzzyFamily::new(vec![third.clone(), third.clone(), third])?;
    println!("constant thirds: {:?}", theory_equal(&thirds)?);

    let shuffled = t4.relabel(&[2, 4, 1, 3])?;
    println!("shuffled 4-basis, given order: equal = {}", theory_equal(&shuffled)?.is_equal());
    let r = axiomatised_by_path(&shuffled)?;
    println!("shuffled 4-basis, path order {:?}: holds = {}", r.permutation, r.holds());

    let probe =
        deductive_closure_probe(&t4, &parse("X1 + X2 + X3 + X4")?, &parse("X1 + X2 + X3 + X4 + X1")?)?;
    println!("modus ponens probe: {probe:?}");
    Ok(())
}
