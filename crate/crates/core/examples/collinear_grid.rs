//! Collinear triples and spanned lines of `A x A`.

use fvr::geometry::{count_collinear_triples, count_lines, count_weak_collinear_triples, spanned_lines};
use fvr::ring::Ring;
use fvr::setalg::RSet;

fn main() -> fvr::Result<()> {
    let z3 = Ring::parse("zpr:p=3,r=1")?;
    let a = RSet::parse(&z3, "0,1")?;
    println!("Z/3, A = {{0,1}}: T = {}, lines = {}", count_collinear_triples(&a), count_lines(&a)?);

    let z9 = Ring::parse("zpr:p=3,r=2")?;
    let a = RSet::parse(&z9, "0,1,3,4")?;
    println!(
        "Z/9, A = {{{a}}}: T = {}, weak = {}, lines = {}",
        count_collinear_triples(&a),
        count_weak_collinear_triples(&a),
        count_lines(&a)?
    );
    let mut sizes: Vec<u64> = spanned_lines(&a)?.iter().map(|l| l.grid_points).collect();
    sizes.sort_unstable();
    println!("grid points per line: {sizes:?}");
    Ok(())
}
