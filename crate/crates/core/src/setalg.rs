//! Dense subsets of a ring and the set algebra built on them: sumsets, product sets,
//! element-wise images, representation counts and `d`-power energy.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// A subset of a ring, stored as a membership bit-vector over canonical indices.
#[derive(Clone, PartialEq, Eq)]
pub struct RSet {
    ring: Ring,
    mask: Vec<u64>,
}

impl fmt::Debug for RSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RSet({} {{{}}})", self.ring, self)
    }
}

/// Comma-separated canonical indices in increasing order.
impl fmt::Display for RSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl RSet {
    pub fn empty(ring: &Ring) -> RSet {
        let words = (ring.order() as usize).div_ceil(64);
        RSet { ring: ring.clone(), mask: vec![0; words] }
    }

    pub fn full(ring: &Ring) -> RSet {
        let mut set = RSet::empty(ring);
        let n = ring.order() as usize;
        for (w, word) in set.mask.iter_mut().enumerate() {
            let bits = (n - w * 64).min(64);
            *word = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
        }
        set
    }

    pub fn units(ring: &Ring) -> RSet {
        RSet::from_elems(ring, ring.units())
    }

    pub fn from_elems(ring: &Ring, elems: impl IntoIterator<Item = Elem>) -> RSet {
        let mut set = RSet::empty(ring);
        for e in elems {
            set.insert(e);
        }
        set
    }

    pub fn from_indices(ring: &Ring, indices: &[u64]) -> Result<RSet> {
        let mut set = RSet::empty(ring);
        for &i in indices {
            set.insert(ring.elem(i)?);
        }
        Ok(set)
    }

    /// Parses a set literal such as `1,2,5`. The empty string is the empty set.
    pub fn parse(ring: &Ring, literal: &str) -> Result<RSet> {
        let literal = literal.trim();
        if literal.is_empty() {
            return Ok(RSet::empty(ring));
        }
        let indices = literal
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad set element `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        RSet::from_indices(ring, &indices)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn insert(&mut self, e: Elem) {
        let i = e.index() as usize;
        self.mask[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        let i = e.index() as usize;
        i < self.ring.order() as usize && self.mask[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.mask.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() as u64 == self.ring.order()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.mask.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                Some(Elem::from_raw(w as u64 * 64 + t))
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn union(&self, other: &RSet) -> Result<RSet> {
        same_ring(self, other)?;
        let mask = self.mask.iter().zip(&other.mask).map(|(a, b)| a | b).collect();
        Ok(RSet { ring: self.ring.clone(), mask })
    }

    pub fn is_subset(&self, other: &RSet) -> bool {
        self.ring == other.ring && self.mask.iter().zip(&other.mask).all(|(a, b)| a & !b == 0)
    }

    /// `{g(a) : a in A}`.
    pub fn map(&self, g: impl Fn(Elem) -> Elem) -> RSet {
        RSet::from_elems(&self.ring, self.iter().map(g))
    }

    /// True when every member is a unit.
    pub fn all_units(&self) -> bool {
        self.iter().all(|e| self.ring.is_unit(e))
    }
}

fn same_ring(a: &RSet, b: &RSet) -> Result<()> {
    if a.ring == b.ring {
        Ok(())
    } else {
        Err(Error::RingMismatch { left: a.ring.to_string(), right: b.ring.to_string() })
    }
}

fn combine(a: &RSet, b: &RSet, op: impl Fn(Elem, Elem) -> Elem) -> Result<RSet> {
    same_ring(a, b)?;
    let mut out = RSet::empty(&a.ring);
    let order = a.ring.order() as usize;
    let bs = b.to_vec();
    let mut filled = 0usize;
    for x in a.iter() {
        for &y in &bs {
            let e = op(x, y);
            if !out.contains(e) {
                out.insert(e);
                filled += 1;
            }
        }
        if filled == order {
            break;
        }
    }
    Ok(out)
}

/// `A + B`.
pub fn sumset(a: &RSet, b: &RSet) -> Result<RSet> {
    let ring = a.ring.clone();
    combine(a, b, |x, y| ring.add(x, y))
}

/// `A - B`.
pub fn diffset(a: &RSet, b: &RSet) -> Result<RSet> {
    let ring = a.ring.clone();
    combine(a, b, |x, y| ring.sub(x, y))
}

/// `AB`.
pub fn prodset(a: &RSet, b: &RSet) -> Result<RSet> {
    let ring = a.ring.clone();
    combine(a, b, |x, y| ring.mul(x, y))
}

/// `c * A`.
pub fn dilate(a: &RSet, c: Elem) -> RSet {
    a.map(|x| a.ring.mul(c, x))
}

/// `A + c`.
pub fn translate(a: &RSet, c: Elem) -> RSet {
    a.map(|x| a.ring.add(x, c))
}

/// `A^d = {a^d : a in A}` (element-wise powers, not an iterated product set).
pub fn power_set(a: &RSet, d: u32) -> RSet {
    a.map(|x| a.ring.pow(x, d as u64))
}

/// `f(x) = c2 x^2 + c1 x + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Poly1 {
    pub c2: Elem,
    pub c1: Elem,
    pub c0: Elem,
}

impl Poly1 {
    pub fn new(c2: Elem, c1: Elem, c0: Elem) -> Poly1 {
        Poly1 { c2, c1, c0 }
    }

    pub fn zero() -> Poly1 {
        Poly1::new(Elem::ZERO, Elem::ZERO, Elem::ZERO)
    }

    pub fn from_indices(ring: &Ring, c2: u64, c1: u64, c0: u64) -> Result<Poly1> {
        Ok(Poly1::new(ring.elem(c2)?, ring.elem(c1)?, ring.elem(c0)?))
    }

    /// Parses `c2,c1,c0`.
    pub fn parse(ring: &Ring, literal: &str) -> Result<Poly1> {
        let parts = literal
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad coefficient `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        match parts[..] {
            [c2, c1, c0] => Poly1::from_indices(ring, c2, c1, c0),
            _ => Err(Error::Parse(format!("expected three coefficients c2,c1,c0, got `{literal}`"))),
        }
    }

    #[inline]
    pub fn eval(&self, ring: &Ring, x: Elem) -> Elem {
        let t = ring.add(ring.mul(self.c2, x), self.c1);
        ring.add(ring.mul(t, x), self.c0)
    }

    /// Index of the highest nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        [self.c0, self.c1, self.c2].iter().rposition(|&c| c != Elem::ZERO).map(|d| d as u32)
    }

    pub fn leading(&self) -> Elem {
        match self.degree() {
            Some(2) => self.c2,
            Some(1) => self.c1,
            _ => self.c0,
        }
    }

    pub fn image(&self, a: &RSet) -> RSet {
        a.map(|x| self.eval(&a.ring, x))
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.c2, self.c1, self.c0)
    }
}

/// `f(x, y, z) = a x y + R(x) + S(y) + T(z)` with `R, S, T` of degree at most two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadPolySpec {
    a: Elem,
    r: Poly1,
    s: Poly1,
    t: Poly1,
}

impl QuadPolySpec {
    /// Requires `a != 0` and `T` non-constant with a unit leading coefficient.
    pub fn new(ring: &Ring, a: Elem, r: Poly1, s: Poly1, t: Poly1) -> Result<QuadPolySpec> {
        for e in [a, r.c2, r.c1, r.c0, s.c2, s.c1, s.c0, t.c2, t.c1, t.c0] {
            ring.elem(e.index())?;
        }
        if a == Elem::ZERO {
            return Err(Error::InvalidPolynomial("coefficient a of xy must be nonzero".into()));
        }
        if !matches!(t.degree(), Some(1 | 2)) {
            return Err(Error::InvalidPolynomial("T must be non-constant".into()));
        }
        if !ring.is_unit(t.leading()) {
            return Err(Error::InvalidPolynomial("leading coefficient of T must be a unit".into()));
        }
        Ok(QuadPolySpec { a, r, s, t })
    }

    /// Parses `a=<idx>;R=<c2,c1,c0>;S=<c2,c1,c0>;T=<c2,c1,c0>`; omitted `R`, `S` are zero.
    pub fn parse(ring: &Ring, literal: &str) -> Result<QuadPolySpec> {
        let (mut a, mut r, mut s, mut t) = (None, Poly1::zero(), Poly1::zero(), None);
        for part in literal.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in `{part}`")))?;
            match key.trim() {
                "a" => {
                    let idx = value.trim().parse().map_err(|_| Error::Parse(format!("bad a `{value}`")))?;
                    a = Some(ring.elem(idx)?);
                }
                "R" => r = Poly1::parse(ring, value)?,
                "S" => s = Poly1::parse(ring, value)?,
                "T" => t = Some(Poly1::parse(ring, value)?),
                other => return Err(Error::Parse(format!("unknown polynomial key `{other}`"))),
            }
        }
        let a = a.ok_or_else(|| Error::Parse("missing a".into()))?;
        let t = t.ok_or_else(|| Error::Parse("missing T".into()))?;
        QuadPolySpec::new(ring, a, r, s, t)
    }

    pub fn a(&self) -> Elem {
        self.a
    }

    pub fn r(&self) -> &Poly1 {
        &self.r
    }

    pub fn s(&self) -> &Poly1 {
        &self.s
    }

    pub fn t(&self) -> &Poly1 {
        &self.t
    }

    pub fn t_degree(&self) -> u32 {
        self.t.degree().expect("validated non-constant")
    }

    pub fn eval(&self, ring: &Ring, x: Elem, y: Elem, z: Elem) -> Elem {
        let xy = ring.mul(self.a, ring.mul(x, y));
        let sum = ring.add(xy, ring.add(self.r.eval(ring, x), self.s.eval(ring, y)));
        ring.add(sum, self.t.eval(ring, z))
    }
}

impl fmt::Display for QuadPolySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={};R={};S={};T={}", self.a, self.r, self.s, self.t)
    }
}

/// `f(A, B, C)` for `f = a x y + R(x) + S(y) + T(z)`.
///
/// The image is `{a x y + R(x) + S(y)} + T(C)`: the `(x, y)` part and the `z` part are
/// tabulated separately and combined with one sumset.
pub fn image_quad3(spec: &QuadPolySpec, a: &RSet, b: &RSet, c: &RSet) -> Result<RSet> {
    same_ring(a, b)?;
    same_ring(a, c)?;
    if a.is_empty() || b.is_empty() || c.is_empty() {
        return Err(Error::InvalidArgument("image_quad3 needs nonempty sets".into()));
    }
    let ring = &a.ring;
    let s_vals: Vec<(Elem, Elem)> = b.iter().map(|y| (y, spec.s.eval(ring, y))).collect();
    let mut xy_part = RSet::empty(ring);
    for x in a.iter() {
        let ax = ring.mul(spec.a, x);
        let rx = spec.r.eval(ring, x);
        for &(y, sy) in &s_vals {
            xy_part.insert(ring.add(ring.add(ring.mul(ax, y), rx), sy));
        }
    }
    sumset(&xy_part, &spec.t.image(c))
}

/// `{f(x - y) + z : x in X, y in Y, z in Z}`, computed as `f(X - Y) + Z`.
pub fn image_shifted_quad(f: &Poly1, x: &RSet, y: &RSet, z: &RSet) -> Result<RSet> {
    let diffs = diffset(x, y)?;
    sumset(&f.image(&diffs), z)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combiner {
    Sum,
    Product,
    /// `a^d + b^d`.
    PowerSum(u32),
}

/// `r(n) = #{(a, b) in A x B : combine(a, b) = n}` over ordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepHistogram {
    counts: Vec<u64>,
}

impl RepHistogram {
    pub fn get(&self, n: Elem) -> u64 {
        self.counts.get(n.index() as usize).copied().unwrap_or(0)
    }

    /// Nonzero entries in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (Elem, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (Elem::from_raw(i as u64), c))
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn sum_of_squares(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128 * c as u128).sum()
    }
}

pub fn rep_histogram(a: &RSet, b: &RSet, combiner: Combiner) -> Result<RepHistogram> {
    same_ring(a, b)?;
    let ring = &a.ring;
    let mut counts = vec![0u64; ring.order() as usize];
    let (xs, ys): (Vec<Elem>, Vec<Elem>) = match combiner {
        Combiner::PowerSum(d) => (power_list(a, d), power_list(b, d)),
        _ => (a.to_vec(), b.to_vec()),
    };
    for &x in &xs {
        for &y in &ys {
            let n = match combiner {
                Combiner::Product => ring.mul(x, y),
                Combiner::Sum | Combiner::PowerSum(_) => ring.add(x, y),
            };
            counts[n.index() as usize] += 1;
        }
    }
    Ok(RepHistogram { counts })
}

/// `a^d` for each member, with multiplicity.
fn power_list(a: &RSet, d: u32) -> Vec<Elem> {
    a.iter().map(|x| a.ring.pow(x, d as u64)).collect()
}

/// `E_d(A) = #{(a, b, c, e) in A^4 : a^d + b^d = c^d + e^d}`.
pub fn energy(a: &RSet, d: u32) -> u128 {
    rep_histogram(a, a, Combiner::PowerSum(d)).expect("same ring").sum_of_squares()
}
