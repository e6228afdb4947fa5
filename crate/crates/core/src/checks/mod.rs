//! Hypothesis gating and exact evaluation of the sum-product and expander inequalities.
//!
//! Fractional powers are cleared by raising both sides to an integer power, so
//! `M >= 2^(-1/3) |A|^(2/3) q^(r/3)` is decided as `2 M^3 >= |A|^2 q^r`.

mod report;

pub use report::{CheckReport, Comparison, ComparisonRecord, Literal, Relation, ReportRecord, TheoremId, Verdict};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::setalg::{self, energy, power_set, prodset, sumset, diffset, Poly1, QuadPolySpec, RSet};

pub(crate) fn big(n: impl Into<BigInt>) -> BigInt {
    n.into()
}

pub(crate) fn q_pow(ring: &Ring, e: u32) -> BigInt {
    big(ring.q()).pow(e)
}

fn size(set: &RSet) -> BigInt {
    big(set.len())
}

fn nonempty(a: &RSet, what: &str) -> Result<()> {
    if a.is_empty() {
        Err(Error::InvalidArgument(format!("{what} requires a nonempty set")))
    } else {
        Ok(())
    }
}

/// `|f(A,B,C)| >= (1/8) min{q^r, |A||B||C| / q^(2r-1)}`, decided as
/// `8 q^(2r-1) |f(A,B,C)| >= min{q^(3r-1), |A||B||C|}`.
///
/// When `T` is quadratic the theorem additionally needs `|C| >= 2 q^(r-1)`.
pub fn check_expander(spec: &QuadPolySpec, a: &RSet, b: &RSet, c: &RSet) -> Result<CheckReport> {
    let image = setalg::image_quad3(spec, a, b, c)?;
    let ring = a.ring();
    let r = ring.r();
    let c_floor = if spec.t_degree() == 2 { 2 * ring.q_pow(r - 1) } else { 0 };
    let triple = size(a) * size(b) * size(c);
    let rhs = std::cmp::min(q_pow(ring, 3 * r - 1), triple.clone());
    Ok(CheckReport::build(
        TheoremId::T1_3,
        ring,
        vec![Comparison::ge("C_size_for_quadratic_T", c.len(), c_floor)],
        Comparison::ge("image_size", 8 * q_pow(ring, 2 * r - 1) * size(&image), rhs),
        vec![],
        vec![("image", size(&image)), ("ABC", triple)],
    )
    .with_set("A", a)
    .with_set("B", b)
    .with_set("C", c)
    .with_set("f", spec))
}

/// `|A^2+A^2| |A+A|^2 >= |A|^2 q^r / 2` under `|A| >= 2q^(r-1)` and `|A+A||A|^2 >= q^(3r-1)`.
pub fn check_sum_square(a: &RSet) -> Result<CheckReport> {
    nonempty(a, "T1_5")?;
    let ring = a.ring();
    let r = ring.r();
    let sums = sumset(a, a)?;
    let squares = power_set(a, 2);
    let square_sums = sumset(&squares, &squares)?;
    let (n, s, t) = (size(a), size(&sums), size(&square_sums));
    let qr = q_pow(ring, r);
    let m = s.clone().max(t.clone());
    Ok(CheckReport::build(
        TheoremId::T1_5,
        ring,
        vec![
            Comparison::ge("A_size", a.len(), 2 * ring.q_pow(r - 1)),
            Comparison::ge("sumset_gate", &s * &n * &n, q_pow(ring, 3 * r - 1)),
        ],
        Comparison::ge("square_sum_times_sumset_sq", 2 * &t * &s * &s, &n * &n * &qr),
        vec![Comparison::ge("max_form_cubed", 2 * m.pow(3), &n * &n * &qr)],
        vec![("A", n.clone()), ("A+A", s), ("A^2+A^2", t)],
    )
    .with_set("A", a))
}

/// `max{|A+A|, |A^3+A^3|} >> q^(r/10) |A|^(9/10)`; records `M^10 / (q^r |A|^9)`.
/// Gate: `|A+A|^4 >= q^(3r-1) |A|`.
pub fn check_cube_sum(a: &RSet) -> Result<CheckReport> {
    nonempty(a, "T1_6")?;
    let ring = a.ring();
    let r = ring.r();
    let sums = sumset(a, a)?;
    let cubes = power_set(a, 3);
    let cube_sums = sumset(&cubes, &cubes)?;
    let (n, s, t) = (size(a), size(&sums), size(&cube_sums));
    let m = s.clone().max(t.clone());
    Ok(CheckReport::build(
        TheoremId::T1_6,
        ring,
        vec![Comparison::ge("doubling_gate", s.pow(4), q_pow(ring, 3 * r - 1) * &n)],
        Comparison::ge("max_pow10", m.pow(10), q_pow(ring, r) * n.pow(9)),
        vec![],
        vec![("A", n), ("A+A", s), ("A^3+A^3", t)],
    )
    .with_set("A", a))
}

/// `|f(A)+A| >= 2^(-1/3) |A|^(2/3) q^(r/3)` for quadratic `f`, decided as
/// `2 |f(A)+A|^3 >= |A|^2 q^r` under `|A+f(A)| |A|^2 >= q^(3r-1)`.
pub fn check_f_of_a_plus_a(f: &Poly1, a: &RSet) -> Result<CheckReport> {
    nonempty(a, "T1_7")?;
    if f.degree() != Some(2) {
        return Err(Error::InvalidPolynomial(format!("f = {f} is not quadratic")));
    }
    let ring = a.ring();
    let r = ring.r();
    let image = sumset(&f.image(a), a)?;
    let (n, s) = (size(a), size(&image));
    Ok(CheckReport::build(
        TheoremId::T1_7,
        ring,
        vec![Comparison::ge("image_gate", &s * &n * &n, q_pow(ring, 3 * r - 1))],
        Comparison::ge("image_cubed", 2 * s.pow(3), &n * &n * q_pow(ring, r)),
        vec![],
        vec![("A", n), ("f(A)+A", s)],
    )
    .with_set("A", a)
    .with_set("f", f))
}

/// `max{|A-A|, |AA+AA|} >= 2^(-1/3) |A|^(2/3) q^(r/3)` under `|A| >= q^(r-1/3)`.
///
/// The gate is emitted twice: as stated (`|A| >= q^(r-1/3)`, cubed) and in the form the
/// argument actually uses (`|A|^3 >= q^(3r-1)`). The product form
/// `2 |AA+AA| |A-A|^2 >= |A|^2 q^r`, from which the max form follows, is checked as well.
pub fn check_prod_diff(a: &RSet) -> Result<CheckReport> {
    nonempty(a, "T1_8")?;
    let ring = a.ring();
    let r = ring.r();
    let diffs = diffset(a, a)?;
    let prods = prodset(a, a)?;
    let prod_sums = sumset(&prods, &prods)?;
    let (n, d, t) = (size(a), size(&diffs), size(&prod_sums));
    let m = d.clone().max(t.clone());
    let target = &n * &n * q_pow(ring, r);
    Ok(CheckReport::build(
        TheoremId::T1_8,
        ring,
        vec![
            Comparison::ge("size_gate_statement_form", n.pow(3), q_pow(ring, 3 * r - 1)),
            Comparison::ge("size_gate_proof_form", n.pow(3), q_pow(ring, 3 * r - 1)),
        ],
        Comparison::ge("max_cubed", 2 * m.pow(3), target.clone()),
        vec![Comparison::ge("product_form", 2 * &t * &d * &d, target)],
        vec![("A", n), ("A-A", d), ("AA+AA", t)],
    )
    .with_set("A", a))
}

/// `|A^d+A^d| |AA|^2 >> q^r |A|^2` for `A` inside the units, under `|AA||A|^2 >= q^(3r-1)`.
/// Records the ratio of the product form and, as quantities, the max form and `E_d(A)`.
pub fn check_power_energy(a: &RSet, d: u32) -> Result<CheckReport> {
    nonempty(a, "T1_9")?;
    if d == 0 {
        return Err(Error::InvalidArgument("T1_9 needs d >= 1".into()));
    }
    let ring = a.ring();
    let r = ring.r();
    let powers = power_set(a, d);
    let power_sums = sumset(&powers, &powers)?;
    let prods = prodset(a, a)?;
    let (n, s, p) = (size(a), size(&power_sums), size(&prods));
    let units_in_a = a.iter().filter(|&e| ring.is_unit(e)).count();
    let target = &n * &n * q_pow(ring, r);
    let m = s.clone().max(p.clone());
    Ok(CheckReport::build(
        TheoremId::T1_9,
        ring,
        vec![
            Comparison::ge("A_within_units", units_in_a, a.len()),
            Comparison::ge("product_gate", &p * &n * &n, q_pow(ring, 3 * r - 1)),
        ],
        Comparison::ge("power_sum_times_product_sq", &s * &p * &p, target.clone()),
        vec![],
        vec![
            ("A", n),
            ("A^d+A^d", s),
            ("AA", p),
            ("d", big(d)),
            ("energy_d", big(energy(a, d))),
            ("max_form_cubed", m.pow(3)),
            ("max_form_target", target),
        ],
    )
    .with_set("A", a))
}

/// The Plünnecke chain `|A - (A+A)/2| = |2A-A-A| <= |A+A-A-A| <= |A+A|^3 / |A|^2`.
///
/// `2A` is the dilate `{2a}`. The conclusion is the end-to-end bound
/// `|2A-A-A| |A|^2 <= |A+A|^3`; the halving identity and the containment
/// `2A-A-A ⊆ A+A-A-A` are secondaries. The middle link `|A+A-A-A| |A|^2 <= |A+A|^3` is
/// false in general (a dissociated 6-set has `|A+A| = 21`, `|A+A-A-A| = 271`), so it is
/// reported as a diagnostic only.
pub fn check_plunnecke_corollary(a: &RSet) -> Result<CheckReport> {
    nonempty(a, "PLUN13")?;
    let ring = a.ring();
    let two = ring.from_int(2);
    let half = ring.inv(two)?;
    let sums = sumset(a, a)?;
    let two_a = setalg::dilate(a, two);
    let dilated = diffset(&diffset(&two_a, a)?, a)?;
    let halved = diffset(a, &setalg::dilate(&sums, half))?;
    let full = diffset(&diffset(&sums, a)?, a)?;
    let (n, s) = (size(a), size(&sums));
    let (dl, hv, fl) = (size(&dilated), size(&halved), size(&full));
    Ok(CheckReport::build(
        TheoremId::Plun13,
        ring,
        vec![],
        Comparison::le("dilated_difference", &dl * &n * &n, s.pow(3)),
        vec![
            Comparison::new("halving_identity", hv.clone(), Relation::Eq, dl.clone()),
            Comparison::le("dilate_inside_sumset", dl.clone(), fl.clone()),
        ],
        vec![("A", n.clone()), ("A+A", s.clone()), ("2A-A-A", dl), ("A-(A+A)/2", hv), ("A+A-A-A", fl.clone())],
    )
    .with_diagnostic(Comparison::le("plunnecke_twice", &fl * &n * &n, s.pow(3)))
    .with_set("A", a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, RingKind};
    use num_rational::BigRational;

    fn z9() -> Ring {
        make_ring(RingKind::Zpr, 3, 1, 2).unwrap()
    }

    fn set(ring: &Ring, lit: &str) -> RSet {
        RSet::parse(ring, lit).unwrap()
    }

    #[test]
    fn expander_examples() {
        let r = z9();
        let f = QuadPolySpec::parse(&r, "a=1;T=0,1,0").unwrap();
        let full = RSet::full(&r);
        let rep = check_expander(&f, &full, &full, &full).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.quantity("image"), Some(&big(9)));
        assert_eq!((rep.conclusion.lhs.clone(), rep.conclusion.rhs.clone()), (big(8 * 27 * 9), big(243)));

        let ideal = set(&r, "0,3,6");
        let rep = check_expander(&f, &ideal, &ideal, &ideal).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.quantity("image"), Some(&big(3)));
        assert_eq!(rep.conclusion.rhs, big(27));

        let g = QuadPolySpec::parse(&r, "a=1;T=1,0,0").unwrap();
        let rep = check_expander(&g, &full, &full, &set(&r, "4")).unwrap();
        assert_eq!(rep.verdict, Verdict::HypothesisNotMet);
        assert_eq!(rep.hypotheses[0].rhs, big(6));
    }

    #[test]
    fn sum_square_examples() {
        let r = z9();
        let rep = check_sum_square(&RSet::full(&r)).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.quantity("A^2+A^2"), Some(&big(7)));
        assert_eq!(rep.conclusion.lhs, big(2 * 7 * 81));
        assert_eq!(rep.conclusion.rhs, big(729));
        assert_eq!(check_sum_square(&set(&r, "1,2")).unwrap().verdict, Verdict::HypothesisNotMet);
        assert!(check_sum_square(&RSet::empty(&r)).is_err());
    }

    #[test]
    fn cube_sum_examples() {
        let r = z9();
        let rep = check_cube_sum(&RSet::full(&r)).unwrap();
        assert_eq!(rep.verdict, Verdict::RatioRecorded);
        assert_eq!(rep.quantity("A^3+A^3"), Some(&big(5)));
        assert_eq!(rep.ratio, Some(BigRational::from_integer(big(1))));
        let rep = check_cube_sum(&set(&r, "0,3")).unwrap();
        assert_eq!(rep.verdict, Verdict::HypothesisNotMet);
        assert_eq!(rep.hypotheses[0].lhs, big(81));
        assert_eq!(rep.hypotheses[0].rhs, big(486));
    }

    #[test]
    fn f_of_a_examples() {
        let r = z9();
        let sq = Poly1::from_indices(&r, 1, 0, 0).unwrap();
        let rep = check_f_of_a_plus_a(&sq, &RSet::full(&r)).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.conclusion.lhs, big(2 * 729));
        assert_eq!(check_f_of_a_plus_a(&sq, &set(&r, "0")).unwrap().verdict, Verdict::HypothesisNotMet);
        let lin = Poly1::from_indices(&r, 0, 1, 0).unwrap();
        assert!(check_f_of_a_plus_a(&lin, &RSet::full(&r)).is_err());
    }

    #[test]
    fn prod_diff_examples() {
        let r = z9();
        let a = set(&r, "1,2,4,5,6,7,8");
        let rep = check_prod_diff(&a).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(check_prod_diff(&set(&r, "1,2")).unwrap().verdict, Verdict::HypothesisNotMet);
        for ring in [z9(), make_ring(RingKind::Fqxr, 3, 2, 1).unwrap()] {
            let rep = check_prod_diff(&RSet::full(&ring)).unwrap();
            assert_eq!(rep.verdict, Verdict::Pass);
        }
    }

    #[test]
    fn power_energy_examples() {
        let r = z9();
        let rep = check_power_energy(&RSet::units(&r), 2).unwrap();
        assert_eq!(rep.verdict, Verdict::HypothesisNotMet);
        assert_eq!(rep.hypotheses[1].lhs, big(216));
        let r25 = make_ring(RingKind::Zpr, 5, 1, 2).unwrap();
        let rep = check_power_energy(&RSet::units(&r25), 2).unwrap();
        assert_eq!(rep.verdict, Verdict::RatioRecorded);
        assert_eq!(rep.hypotheses[1].lhs, big(8000));
        assert!(check_power_energy(&RSet::units(&r25), 0).is_err());
        let with_zero = check_power_energy(&RSet::full(&r25), 2).unwrap();
        assert!(!with_zero.hypotheses[0].ok());
    }

    #[test]
    fn plunnecke_examples() {
        let r = z9();
        let rep = check_plunnecke_corollary(&set(&r, "1,2")).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.quantity("A+A-A-A"), Some(&big(5)));
        assert_eq!(rep.diagnostics[0].lhs, big(20));
        assert_eq!(rep.diagnostics[0].rhs, big(27));
        let rep = check_plunnecke_corollary(&RSet::full(&r)).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.conclusion.lhs, rep.conclusion.rhs);
        let rep = check_plunnecke_corollary(&set(&r, "4")).unwrap();
        assert_eq!((rep.conclusion.lhs.clone(), rep.conclusion.rhs.clone()), (big(1), big(1)));
    }

    #[test]
    fn middle_link_can_fail() {
        let r = make_ring(RingKind::Zpr, 997, 1, 1).unwrap();
        let rep = check_plunnecke_corollary(&set(&r, "179,360,525,657,748,926")).unwrap();
        assert_eq!(rep.quantity("A+A"), Some(&big(21)));
        assert_eq!(rep.quantity("A+A-A-A"), Some(&big(267)));
        assert!(!rep.diagnostics[0].ok());
        assert_eq!(rep.verdict, Verdict::Pass);
    }
}
