//! Single-set and family properties with checkable witnesses.
//!
//! cargo run --example property_report

use tribasis::props::{is_min_convex, is_strongly_normal, property_report};
use tribasis::{canonical_basis, rat, FuzzyFamily, PlFunc};

fn main() -> tribasis::Result<()> {
    let t3 = canonical_basis(3)?;
    let r = property_report(&t3);
    println!("canonical 3-basis: all hold = {}", r.all_hold());

    let third = PlFunc::constant(rat(1, 3))?;
    let thirds = FuzzyFamily::new(vec![third.clone(), third.clone(), third])?;
    let r = property_report(&thirds);
    println!("three copies of 1/3:");
    println!("  ruspini        {:?}", r.ruspini);
    println!("  2-overlapping  {:?}", r.two_overlapping);
    println!("  witnesses re-verify: {}", r.verify(&thirds));

    let plateau = PlFunc::parse_points("0 0, 1/4 1, 3/4 1, 1 0")?;
    println!("plateau strongly normal: {:?}", is_strongly_normal(&plateau));

    let dip = PlFunc::parse_points("0 1, 1/3 0, 2/3 1, 1 0")?;
    println!("dip min-convex: {:?}", is_min_convex(&dip));
    Ok(())
}
