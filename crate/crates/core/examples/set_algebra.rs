//! Sumsets, product sets, dilates and additive energy.

use fvr::ring::Ring;
use fvr::setalg::{diffset, dilate, energy, power_set, prodset, sumset, RSet};

fn main() -> fvr::Result<()> {
    let ring = Ring::parse("zpr:p=5,r=2")?;
    let a = RSet::parse(&ring, "1,2,3,7,11")?;
    println!("A       = {{{a}}}");
    println!("A + A   = {{{}}}", sumset(&a, &a)?);
    println!("A - A   = {{{}}}", diffset(&a, &a)?);
    println!("A * A   = {{{}}}", prodset(&a, &a)?);
    println!("3 * A   = {{{}}}", dilate(&a, ring.elem(3)?));
    println!("A^(2)   = {{{}}}", power_set(&a, 2));
    for d in 1..=3 {
        println!("E_{d}(A) = {}", energy(&a, d));
    }
    Ok(())
}
