//! Sum-product inequalities on a few sets, including the ones that fail a hypothesis.

use fvr::checks::{check_cube_sum, check_f_of_a_plus_a, check_plunnecke_corollary, check_prod_diff, check_sum_square, CheckReport};
use fvr::ring::Ring;
use fvr::setalg::{Poly1, RSet};

fn show(r: &CheckReport) {
    let ratio = r.ratio_f64().map_or(String::new(), |x| format!(" ratio {x:.4}"));
    println!("  {:<6} {:<20} {} {} {}{ratio}", r.theorem.to_string(), r.verdict.to_string(), r.conclusion.lhs, r.conclusion.relation.as_str(), r.conclusion.rhs);
}

fn main() -> fvr::Result<()> {
    let ring = Ring::parse("zpr:p=7,r=2")?;
    let f = Poly1::parse(&ring, "1,1,0")?;
    let sets = [RSet::units(&ring), RSet::full(&ring), RSet::parse(&ring, "1,8,15,22,29")?, RSet::parse(&ring, "0,7,14,21")?];
    for a in sets {
        println!("|A| = {}", a.len());
        show(&check_sum_square(&a)?);
        show(&check_cube_sum(&a)?);
        show(&check_f_of_a_plus_a(&f, &a)?);
        show(&check_prod_diff(&a)?);
        show(&check_plunnecke_corollary(&a)?);
    }
    Ok(())
}
