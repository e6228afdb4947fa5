//! Weighted incidence counts and the weighted bound ratio.

use fvr::incidence::{all_planes, all_points, count_weighted_incidences, weighted_bound_report, WeightedFamily};
use fvr::ring::Ring;

fn main() -> fvr::Result<()> {
    let ring = Ring::parse("fqxr:p=3,s=1,r=2")?;
    let points: Vec<_> = all_points(&ring).into_iter().enumerate().filter(|(i, _)| i % 7 == 0).map(|(i, p)| (p, 1 + i as u64 % 4)).collect();
    let planes: Vec<_> = all_planes(&ring).into_iter().enumerate().filter(|(i, _)| i % 5 == 0).map(|(i, p)| (p, 1 + i as u64 % 3)).collect();
    let w = WeightedFamily::new(&ring, points)?;
    let pi = WeightedFamily::new(&ring, planes)?;

    println!("{} weighted points (total {}), {} weighted planes (total {})", w.len(), w.total_weight(), pi.len(), pi.total_weight());
    println!("weighted incidences: {}", count_weighted_incidences(&w, &pi)?);
    let report = weighted_bound_report(&w, &pi)?;
    println!("lhs {} rhs {} ratio {:?}", report.conclusion.lhs, report.conclusion.rhs, report.ratio_f64());
    Ok(())
}
