//! Reading, writing and sampling family files.
//!
//! cargo run --example family_files

use tribasis::family_file::{format_family, parse_family};
use tribasis::sample::sample_csv;

const TEXT: &str = "\
# a kinked pair
n = 2
f 1: 0 1, 1/2 1/4, 1 0
f 2: 0 0, 1/2 3/4, 1 1
";

fn main() -> tribasis::Result<()> {
    let p = parse_family(TEXT)?;
    print!("{}", format_family(&p));
    print!("{}", sample_csv(&p, 4)?);

    let bad = "n = 2\nf 1: 0 1, 1 0\nf 2: 0 0, 2/3 1, 1/3 1, 1 1\n";
    if let Err(e) = parse_family(bad) {
        println!("rejected: {e}");
    }
    Ok(())
}
