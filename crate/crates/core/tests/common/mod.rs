//! Brute-force reference implementations. Each one follows the definition directly and
//! shares no code path with the library beyond element encoding.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use fvr::geometry::Point2;
use fvr::incidence::{Plane3, Point3};
use fvr::ring::{Elem, Ring, RingKind};
use fvr::setalg::RSet;

pub const TEST_RINGS: [&str; 5] =
    ["zpr:p=3,r=2", "zpr:p=3,r=3", "zpr:p=5,r=2", "fqxr:p=3,s=1,r=2", "fqxr:p=3,s=2,r=1"];

pub fn ring(spec: &str) -> Ring {
    Ring::parse(spec).unwrap()
}

pub fn set(ring: &Ring, literal: &str) -> RSet {
    RSet::parse(ring, literal).unwrap()
}

pub fn el(ring: &Ring, i: u64) -> Elem {
    ring.elem(i).unwrap()
}

/// Schoolbook arithmetic on coefficient vectors.
pub struct PolyOracle {
    p: u64,
    s: usize,
    r: usize,
    modulus: Vec<u64>,
}

impl PolyOracle {
    pub fn new(ring: &Ring) -> Self {
        let modulus = ring.field_modulus().map(<[u64]>::to_vec).unwrap_or_else(|| vec![0, 1]);
        PolyOracle { p: ring.p(), s: ring.s() as usize, r: ring.r() as usize, modulus }
    }

    fn field_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut prod = vec![0u64; 2 * self.s];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // reduce by the monic modulus, top degree down
        for deg in (self.s..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for (k, &m) in self.modulus.iter().enumerate() {
                let at = deg - self.s + k;
                prod[at] = (prod[at] + (p - c) * m % p) % p;
            }
        }
        prod.truncate(self.s);
        prod
    }

    fn field_add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    fn pad(&self, mut v: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
        for c in v.iter_mut() {
            c.resize(self.s, 0);
        }
        v.resize(self.r, vec![0; self.s]);
        v
    }

    pub fn mul(&self, ring: &Ring, a: Elem, b: Elem) -> Elem {
        let (ca, cb) = (self.pad(ring.coeffs(a)), self.pad(ring.coeffs(b)));
        let mut out = vec![vec![0u64; self.s]; self.r];
        for i in 0..self.r {
            for j in 0..self.r - i {
                let t = self.field_mul(&ca[i], &cb[j]);
                out[i + j] = self.field_add(&out[i + j], &t);
            }
        }
        ring.from_coeffs(&out).unwrap()
    }

    pub fn add(&self, ring: &Ring, a: Elem, b: Elem) -> Elem {
        let (ca, cb) = (self.pad(ring.coeffs(a)), self.pad(ring.coeffs(b)));
        let out: Vec<Vec<u64>> = ca.iter().zip(&cb).map(|(x, y)| self.field_add(x, y)).collect();
        ring.from_coeffs(&out).unwrap()
    }
}

/// Independent product: integer arithmetic for `Z/p^r`, polynomial schoolbook otherwise.
pub fn oracle_mul(ring: &Ring, a: Elem, b: Elem) -> Elem {
    match ring.kind() {
        RingKind::Zpr => el(ring, a.index() * b.index() % ring.order()),
        RingKind::Fqxr => PolyOracle::new(ring).mul(ring, a, b),
    }
}

pub fn oracle_add(ring: &Ring, a: Elem, b: Elem) -> Elem {
    match ring.kind() {
        RingKind::Zpr => el(ring, (a.index() + b.index()) % ring.order()),
        RingKind::Fqxr => PolyOracle::new(ring).add(ring, a, b),
    }
}

/// Largest `k <= r` with `a in (z^k)`, from the definition of the ideal as `z^k R`.
pub fn oracle_valuation(ring: &Ring, a: Elem) -> u32 {
    let z = ring.uniformizer();
    let mut k = ring.r();
    loop {
        let zk = ring.pow(z, k as u64);
        if ring.elements().any(|t| ring.mul(zk, t) == a) {
            return k;
        }
        k -= 1;
    }
}

pub fn brute_sumset(a: &RSet, b: &RSet) -> BTreeSet<u64> {
    let ring = a.ring();
    a.iter().flat_map(|x| b.iter().map(move |y| ring.add(x, y).index())).collect()
}

pub fn brute_incidences(ring: &Ring, points: &[Point3], planes: &[Plane3]) -> u64 {
    let mut n = 0;
    for pl in planes {
        for pt in points {
            let lhs = ring.add(ring.add(ring.mul(pl.u, pt.x), ring.mul(pl.v, pt.y)), pt.z);
            n += (lhs == pl.d) as u64;
        }
    }
    n
}

pub fn brute_weighted(ring: &Ring, points: &[(Point3, u64)], planes: &[(Plane3, u64)]) -> u128 {
    let mut n = 0u128;
    for (pl, wp) in planes {
        for (pt, wq) in points {
            let lhs = ring.add(ring.add(ring.mul(pl.u, pt.x), ring.mul(pl.v, pt.y)), pt.z);
            if lhs == pl.d {
                n += *wp as u128 * *wq as u128;
            }
        }
    }
    n
}

pub fn brute_energy(a: &RSet, d: u32) -> u128 {
    let ring = a.ring();
    let xs = a.to_vec();
    let pw = |x: Elem| (0..d).fold(ring.one(), |acc, _| ring.mul(acc, x));
    let mut n = 0u128;
    for &w in &xs {
        for &x in &xs {
            let lhs = ring.add(pw(w), pw(x));
            for &y in &xs {
                for &z in &xs {
                    n += (lhs == ring.add(pw(y), pw(z))) as u128;
                }
            }
        }
    }
    n
}

fn sub2(ring: &Ring, a: Point2, b: Point2) -> Point2 {
    Point2::new(ring.sub(a.x, b.x), ring.sub(a.y, b.y))
}

/// `exists k in R : p1 - p2 = k (p3 - p2)`, by trying every `k`.
pub fn brute_collinear(ring: &Ring, p1: Point2, p2: Point2, p3: Point2) -> bool {
    let (n, m) = (sub2(ring, p1, p2), sub2(ring, p3, p2));
    ring.elements().any(|k| ring.mul(k, m.x) == n.x && ring.mul(k, m.y) == n.y)
}

pub fn grid(a: &RSet) -> Vec<Point2> {
    let xs = a.to_vec();
    xs.iter().flat_map(|&x| xs.iter().map(move |&y| Point2::new(x, y))).collect()
}

pub fn brute_triples(a: &RSet) -> u64 {
    let ring = a.ring();
    let pts = grid(a);
    let mut n = 0;
    for &p1 in &pts {
        for &p2 in &pts {
            for &p3 in &pts {
                n += brute_collinear(ring, p1, p2, p3) as u64;
            }
        }
    }
    n
}

/// Distinct point sets `{q + k (p - q) : k in R}` over pairs of distinct grid points.
pub fn brute_lines(a: &RSet) -> HashSet<BTreeSet<Point2>> {
    let ring = a.ring();
    let pts = grid(a);
    let mut lines = HashSet::new();
    for &p in &pts {
        for &q in &pts {
            if p == q {
                continue;
            }
            let d = sub2(ring, p, q);
            let line: BTreeSet<Point2> = ring
                .elements()
                .map(|k| Point2::new(ring.add(q.x, ring.mul(k, d.x)), ring.add(q.y, ring.mul(k, d.y))))
                .collect();
            lines.insert(line);
        }
    }
    lines
}

/// Compares `content` with `tests/fixtures/<name>` byte for byte. With `FVR_BLESS=1` the
/// fixture is (re)written instead.
pub fn check_fixture(name: &str, content: &[u8]) -> Result<(), String> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    if std::env::var_os("FVR_BLESS").is_some() {
        std::fs::write(&path, content).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let pinned = std::fs::read(&path).map_err(|e| format!("{}: {e} (run with FVR_BLESS=1 to create)", path.display()))?;
    if pinned == content {
        Ok(())
    } else {
        Err(format!("{} differs from the pinned fixture", path.display()))
    }
}

/// Runs an experiment to completion, collecting every report.
pub fn run_experiment(cfg: fvr::experiment::ExperimentConfig) -> (Vec<fvr::checks::CheckReport>, fvr::experiment::Summary) {
    let exp = fvr::experiment::Experiment::new(cfg).unwrap();
    let mut out = Vec::new();
    let summary = exp
        .run(&mut |r| {
            out.push(r.clone());
            Ok(())
        })
        .unwrap();
    (out, summary)
}

/// JSONL bytes of a report list.
pub fn jsonl(reports: &[fvr::checks::CheckReport]) -> Vec<u8> {
    let mut buf = Vec::new();
    fvr::experiment::write_jsonl(reports, &mut buf).unwrap();
    buf
}
