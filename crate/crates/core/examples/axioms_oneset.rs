//! The axiom set and an exhaustive grid check that its 1-set is the path.
//!
//! cargo run --release --example axioms_oneset

use tribasis::logic::{axioms, on_path, oneset_grid_check, phi_k};
use tribasis::rat;

fn main() -> tribasis::Result<()> {
    for n in 2..=5 {
        let set = axioms(n)?;
        println!("n = {n}: {} axioms", set.len());
        for a in &set.axioms {
            println!("  {:<10} {}", a.kind.to_string(), a.formula);
        }
    }

    let p = [rat(0, 1), rat(1, 3), rat(2, 3)];
    println!("{:?} on path: {}, satisfies axioms: {}", p, on_path(&p), axioms(3)?.satisfied_at(&p)?);
    let q = [rat(1, 3), rat(0, 1), rat(2, 3)];
    println!("{:?} on path: {}, satisfies axioms: {}", q, on_path(&q), axioms(3)?.satisfied_at(&q)?);

    for (n, d) in [(2, 24), (3, 12), (4, 6)] {
        println!("grid n = {n}, step 1/{d}: {:?}", oneset_grid_check(n, d)?);
    }

    println!("phi_3 for X1: {}", phi_k(1, 3)?);
    Ok(())
}
