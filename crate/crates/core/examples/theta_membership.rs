//! Which formulas are true at every point a family realises.
//!
//! cargo run --example theta_membership

use tribasis::canonical_basis;
use tribasis::logic::{a_consequence, compose, parse, theta_member};

fn main() -> tribasis::Result<()> {
    let t3 = canonical_basis(3)?;
    for text in ["X1 + X2 + X3", "!(X1 & X3)", "X1 | X3", "X2 -> X2", "X2", "!(X1 * X2)"] {
        let phi = parse(text)?;
        println!("{text:<14} composed: {}", compose(&phi, &t3)?);
        println!("{:<14} member: {:?}", "", theta_member(&phi, &t3)?);
    }

    let phi = parse("!X2 + !X2")?;
    println!("{phi} follows from the axioms in 2 variables: {:?}", a_consequence(&phi, 2)?);
    Ok(())
}
