//! Parsing, printing and evaluating Lukasiewicz formulas.
//!
//! cargo run --example formulas

use tribasis::logic::{parse, Connective};
use tribasis::rat;

fn main() -> tribasis::Result<()> {
    for text in ["X1 -> X2 -> X3", "!X1 + X2 * X3", "(X1 | X2) & ⊤", "X1 <-> X2 - X1", "¬(X1 ⊙ X2)"] {
        let f = parse(text)?;
        println!("{text:<18} => {f:<22} depth {}", f.depth());
    }

    let point = [rat(1, 4), rat(3, 4)];
    for c in Connective::ALL {
        let f = tribasis::logic::Formula::binary(c, parse("X1")?, parse("X2")?);
        println!("{f:<10} at (1/4, 3/4) = {}", f.eval_at(&point)?);
    }

    let f = parse("X1 | X2")?;
    println!("{f} desugars to {}", f.desugar());

    match parse("X1 & (X2") {
        Err(e) => println!("error: {e}"),
        Ok(f) => println!("unexpected: {f}"),
    }
    Ok(())
}
