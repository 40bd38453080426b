//! Exact piecewise-linear arithmetic on [0,1].
//!
//! cargo run --example pl_algebra

use tribasis::{rat, PlFunc, PointwiseOp};

fn main() -> tribasis::Result<()> {
    let x = PlFunc::identity();
    let tent = PlFunc::parse_points("0 0, 1/2 1, 1 0")?;

    println!("x        = {x}");
    println!("tent     = {tent}");
    println!("1 - x    = {}", x.negate());

    for op in PointwiseOp::ALL {
        println!("{op:?}(tent, 1 - x) = {}", tent.combine(&x.negate(), op));
    }

    // Kinks appear where a truncation switches on.
    let s = tent.combine(&x, PointwiseOp::TruncatedSum);
    println!("tent (+) x = {s}");
    println!("value at 1/3 = {}", s.eval(&rat(1, 3))?);

    let (lo, at) = tent.global_min();
    let (hi, peak) = tent.global_max();
    println!("min {lo} at {at}, max {hi} at {peak}");

    let halved = tent.scale(&rat(1, 2))?;
    println!("tent / 2 = {halved}, constant: {}", halved.is_constant());
    Ok(())
}
