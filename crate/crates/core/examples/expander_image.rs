//! Image of `f(x, y, z) = a xy + R(x) + S(y) + T(z)` over three sets, checked against the
//! expander bound.

use fvr::checks::check_expander;
use fvr::ring::Ring;
use fvr::setalg::{image_quad3, QuadPolySpec, RSet};

fn main() -> fvr::Result<()> {
    let ring = Ring::parse("zpr:p=3,r=3")?;
    let f = QuadPolySpec::parse(&ring, "a=1;R=0,0,0;S=0,0,0;T=0,1,0")?;
    let a = RSet::parse(&ring, "1,2,4,5,7,8")?;
    let b = RSet::parse(&ring, "1,2,10,11")?;
    let c = RSet::parse(&ring, "0,1,2,3,4,5,6")?;

    let image = image_quad3(&f, &a, &b, &c)?;
    println!("|f(A,B,C)| = {} of {}", image.len(), ring.order());

    let report = check_expander(&f, &a, &b, &c)?;
    for h in &report.hypotheses {
        println!("hypothesis {}: {} {} {} ({})", h.name, h.lhs, h.relation.as_str(), h.rhs, h.ok());
    }
    println!("conclusion: {} {} {}", report.conclusion.lhs, report.conclusion.relation.as_str(), report.conclusion.rhs);
    println!("verdict: {}", report.verdict);
    Ok(())
}
