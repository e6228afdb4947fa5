//! Point-plane incidences for random families, with the two-sided bound.

use fvr::experiment::sample_indices;
use fvr::incidence::{incidence_bound_report, triple_from_index, Plane3, Point3};
use fvr::ring::Ring;

fn main() -> fvr::Result<()> {
    let ring = Ring::parse("zpr:p=3,r=3")?;
    let cube = ring.order().pow(3);
    for (n, seed) in [(50, 1), (500, 2), (5000, 3)] {
        let points: Vec<Point3> = sample_indices(cube, n, seed)?.into_iter().map(|t| triple_from_index(&ring, t)).collect();
        let planes: Vec<Plane3> = sample_indices(cube, n, !seed)?.into_iter().map(|t| triple_from_index(&ring, t)).collect();
        let report = incidence_bound_report(&ring, &points, &planes)?;
        println!(
            "|Q| = |P| = {n}: I = {}, deviation {} <= {}, verdict {}",
            report.quantity("incidences").unwrap(),
            report.conclusion.lhs,
            report.conclusion.rhs,
            report.verdict,
        );
    }
    Ok(())
}
