//! Finite valuation rings `Z/p^r` and `F_q[x]/(x^r)`.
//!
//! Elements are addressed by a canonical index in `[0, q^r)`. In `Z/p^r` the index is the
//! residue itself. In `F_q[x]/(x^r)` it is `sum_i idx(c_i) * q^i`, where `idx(c)` reads the
//! `F_p`-digits of the coefficient `c` in base `p`.
//!
//! Both layouts share the property the rest of the crate is built on: the ideal `(z^k)` is
//! exactly the set of indices divisible by `q^k`, and multiplying (dividing) by the
//! uniformizer `z^k` multiplies (divides) the index by `q^k`, modulo `q^r`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest ring order accepted by [`make_ring`].
pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

/// Rings up to this order get dense addition and multiplication tables (F_q[x]/(x^r) only).
const TABLE_ORDER_LIMIT: u64 = 729;

const MAX_DIGITS: usize = 32;

/// A ring element, stored as its canonical index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    #[inline]
    pub fn index(self) -> u64 {
        self.0 as u64
    }

    #[inline]
    pub(crate) fn from_raw(index: u64) -> Elem {
        Elem(index as u32)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// Integers modulo `p^r`.
    Zpr,
    /// Truncated polynomials `F_q[x]/(x^r)` with `q = p^s`.
    Fqxr,
}

/// The parameters that determine a ring up to the canonical choice of field modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub kind: RingKind,
    pub p: u64,
    pub s: u32,
    pub r: u32,
}

impl RingSpec {
    pub fn zpr(p: u64, r: u32) -> Self {
        RingSpec { kind: RingKind::Zpr, p, s: 1, r }
    }

    pub fn fqxr(p: u64, s: u32, r: u32) -> Self {
        RingSpec { kind: RingKind::Fqxr, p, s, r }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::Zpr => write!(f, "zpr:p={},r={}", self.p, self.r),
            RingKind::Fqxr => write!(f, "fqxr:p={},s={},r={}", self.p, self.s, self.r),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Parses `zpr:p=<int>,r=<int>` or `fqxr:p=<int>,s=<int>,r=<int>`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("ring spec `{text}`: {msg}"));
        let (kind, rest) = text.trim().split_once(':').ok_or_else(|| bad("missing `:`"))?;
        let kind = match kind.trim().to_ascii_lowercase().as_str() {
            "zpr" => RingKind::Zpr,
            "fqxr" => RingKind::Fqxr,
            other => return Err(bad(&format!("unknown ring kind `{other}`"))),
        };
        let (mut p, mut s, mut r) = (None, None, None);
        for part in rest.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let value: u64 = value.trim().parse().map_err(|_| bad("non-integer value"))?;
            let slot = match key.trim() {
                "p" => &mut p,
                "s" => &mut s,
                "r" => &mut r,
                other => return Err(bad(&format!("unknown key `{other}`"))),
            };
            if slot.replace(value).is_some() {
                return Err(bad("duplicate key"));
            }
        }
        let p = p.ok_or_else(|| bad("missing p"))?;
        let r = r.ok_or_else(|| bad("missing r"))?;
        let s = match (kind, s) {
            (RingKind::Zpr, s) => s.unwrap_or(1),
            (RingKind::Fqxr, Some(s)) => s,
            (RingKind::Fqxr, None) => return Err(bad("missing s")),
        };
        let narrow = |v: u64| u32::try_from(v).map_err(|_| bad("parameter too large"));
        Ok(RingSpec { kind, p, s: narrow(s)?, r: narrow(r)? })
    }
}

/// The residue field `F_q = F_p[y]/(m(y))`, with elements indexed by their base-`p` digits.
#[derive(Debug)]
struct ResidueField {
    p: u64,
    s: u32,
    q: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl ResidueField {
    fn new(p: u64, s: u32, modulus: &[u64]) -> Self {
        let q = p.pow(s);
        if s == 1 {
            return ResidueField { p, s, q, exp: Vec::new(), log: Vec::new() };
        }
        // find a primitive element by brute force; the multiplicative group is cyclic
        for g in 2..q {
            let g_poly = digits(g, p, s as usize);
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut cur = vec![1u64];
            loop {
                let idx = from_digits(&cur, p);
                if idx == 1 && !exp.is_empty() {
                    break;
                }
                exp.push(idx as u32);
                cur = poly_mulmod(&cur, &g_poly, modulus, p);
            }
            if exp.len() as u64 == q - 1 {
                let mut log = vec![0u32; q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                return ResidueField { p, s, q, exp, log };
            }
        }
        unreachable!("F_{q}^* is cyclic, so some element has order q-1")
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        if self.s == 1 {
            (a + b) % self.p
        } else {
            digit_add(a, b, self.p, self.s as usize)
        }
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.s == 1 {
            return a * b % self.p;
        }
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q - 1);
        self.exp[e as usize] as u64
    }
}

#[derive(Debug)]
struct RingData {
    spec: RingSpec,
    q: u64,
    order: u64,
    /// `q^k` for `k = 0..=r`.
    q_pows: Vec<u64>,
    field_modulus: Option<Vec<u64>>,
    field: Option<ResidueField>,
    tables: Option<(Vec<u32>, Vec<u32>)>,
}

/// A concrete finite valuation ring. Cheap to clone; immutable after construction.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.spec.fmt(f)
    }
}

/// Builds a ring with the default enumeration cap.
pub fn make_ring(kind: RingKind, p: u64, s: u32, r: u32) -> Result<Ring> {
    Ring::with_cap(RingSpec { kind, p, s, r }, DEFAULT_ORDER_CAP)
}

impl Ring {
    pub fn new(spec: RingSpec) -> Result<Ring> {
        Ring::with_cap(spec, DEFAULT_ORDER_CAP)
    }

    /// Parses a ring-spec string (`zpr:p=3,r=2`) and builds the ring.
    pub fn parse(text: &str) -> Result<Ring> {
        Ring::new(text.parse()?)
    }

    pub fn with_cap(spec: RingSpec, cap: u64) -> Result<Ring> {
        let RingSpec { kind, p, s, r } = spec;
        if p < 2 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if s == 0 || r == 0 {
            return Err(Error::InvalidRing(format!("s and r must be positive (s={s}, r={r})")));
        }
        if kind == RingKind::Zpr && s != 1 {
            return Err(Error::InvalidRing(format!("Z/p^r has residue field F_p, so s must be 1 (got {s})")));
        }
        let cap = cap.min(u32::MAX as u64);
        let order = (p as u128)
            .checked_pow(s.saturating_mul(r))
            .filter(|&o| o <= cap as u128)
            .ok_or(Error::OrderTooLarge {
                order: (p as u128).saturating_pow(s.saturating_mul(r)),
                cap,
            })? as u64;
        let q = p.pow(s);
        let q_pows = (0..=r).map(|k| q.pow(k)).collect();
        let field_modulus = (s > 1).then(|| smallest_irreducible(p, s));
        let field = match kind {
            RingKind::Zpr => None,
            RingKind::Fqxr => {
                let modulus = field_modulus.clone().unwrap_or_else(|| vec![0, 1]);
                Some(ResidueField::new(p, s, &modulus))
            }
        };
        let mut ring = Ring(Arc::new(RingData {
            spec,
            q,
            order,
            q_pows,
            field_modulus,
            field,
            tables: None,
        }));
        if kind == RingKind::Fqxr && order <= TABLE_ORDER_LIMIT {
            let n = order as usize;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in 0..order {
                for b in 0..order {
                    let (ea, eb) = (Elem::from_raw(a), Elem::from_raw(b));
                    add[(a * order + b) as usize] = ring.add(ea, eb).0;
                    mul[(a * order + b) as usize] = ring.mul(ea, eb).0;
                }
            }
            Arc::get_mut(&mut ring.0).expect("freshly built").tables = Some((add, mul));
        }
        Ok(ring)
    }

    pub fn spec(&self) -> RingSpec {
        self.0.spec
    }

    pub fn kind(&self) -> RingKind {
        self.0.spec.kind
    }

    pub fn p(&self) -> u64 {
        self.0.spec.p
    }

    pub fn s(&self) -> u32 {
        self.0.spec.s
    }

    /// Nilpotency degree of the uniformizer.
    pub fn r(&self) -> u32 {
        self.0.spec.r
    }

    /// Size of the residue field.
    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// `q^k` for `0 <= k <= r`.
    pub fn q_pow(&self, k: u32) -> u64 {
        self.0.q_pows[k as usize]
    }

    /// Monic irreducible `m(y)` defining `F_q` over `F_p`, low degree first. `None` when `s = 1`.
    pub fn field_modulus(&self) -> Option<&[u64]> {
        self.0.field_modulus.as_deref()
    }

    /// `q^r - q^(r-1)`.
    pub fn unit_count(&self) -> u64 {
        self.order() - self.order() / self.q()
    }

    /// `|(z^k)| = q^(r-k)`.
    pub fn ideal_size(&self, k: u32) -> u64 {
        self.q_pow(self.r() - k.min(self.r()))
    }

    /// True for fields (`r = 1`), where the maximal ideal is zero.
    pub fn is_degenerate(&self) -> bool {
        self.r() == 1
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    /// Element with the given canonical index.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.order() {
            Ok(Elem::from_raw(index))
        } else {
            Err(Error::ElementOutOfRange { index, order: self.order() })
        }
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.index() < self.order()
    }

    /// The image of an integer under `Z -> R`.
    pub fn from_int(&self, n: i64) -> Elem {
        let m = match self.kind() {
            RingKind::Zpr => self.order() as i64,
            RingKind::Fqxr => self.p() as i64,
        };
        Elem::from_raw(n.rem_euclid(m) as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order()).map(Elem::from_raw)
    }

    pub fn units(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elements().filter(move |&e| self.is_unit(e))
    }

    /// Coefficients `c_0..c_{r-1}`, each as `s` base-`p` digits (low first).
    /// For `Z/p^r` this is the base-`p` expansion of the residue.
    pub fn coeffs(&self, e: Elem) -> Vec<Vec<u64>> {
        let (q, p, s) = (self.q(), self.p(), self.s() as usize);
        let mut idx = e.index();
        (0..self.r())
            .map(|_| {
                let c = idx % q;
                idx /= q;
                digits(c, p, s)
            })
            .collect()
    }

    /// Inverse of [`Ring::coeffs`]. Missing trailing coefficients or digits are zero.
    pub fn from_coeffs(&self, coeffs: &[Vec<u64>]) -> Result<Elem> {
        if coeffs.len() > self.r() as usize {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients given for a ring with r = {}",
                coeffs.len(),
                self.r()
            )));
        }
        let mut idx = 0u64;
        for (i, c) in coeffs.iter().enumerate() {
            if c.len() > self.s() as usize || c.iter().any(|&d| d >= self.p()) {
                return Err(Error::InvalidArgument(format!("bad coefficient digits {c:?}")));
            }
            idx += from_digits(c, self.p()) * self.q_pow(i as u32);
        }
        self.elem(idx)
    }

    fn field(&self) -> &ResidueField {
        self.0.field.as_ref().expect("F_q[x]/(x^r) ring has a residue field")
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let (x, y) = (a.index(), b.index());
        match self.kind() {
            RingKind::Zpr => {
                let s = x + y;
                Elem::from_raw(if s >= self.order() { s - self.order() } else { s })
            }
            RingKind::Fqxr => match &self.0.tables {
                Some((add, _)) => Elem(add[(x * self.order() + y) as usize]),
                None => {
                    let n = (self.s() * self.r()) as usize;
                    Elem::from_raw(digit_add(x, y, self.p(), n))
                }
            },
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match self.kind() {
            RingKind::Zpr => Elem::from_raw((self.order() - a.index()) % self.order()),
            RingKind::Fqxr => {
                let p = self.p();
                let mut x = a.index();
                let (mut out, mut w) = (0, 1);
                while x > 0 {
                    out += ((p - x % p) % p) * w;
                    w *= p;
                    x /= p;
                }
                Elem::from_raw(out)
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        match self.kind() {
            RingKind::Zpr => {
                let (x, y) = (a.index(), b.index());
                Elem::from_raw(if x >= y { x - y } else { x + self.order() - y })
            }
            RingKind::Fqxr => self.add(a, self.neg(b)),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (x, y) = (a.index(), b.index());
        match self.kind() {
            RingKind::Zpr => Elem::from_raw(x * y % self.order()),
            RingKind::Fqxr => match &self.0.tables {
                Some((_, mul)) => Elem(mul[(x * self.order() + y) as usize]),
                None => self.mul_truncated(x, y),
            },
        }
    }

    fn mul_truncated(&self, x: u64, y: u64) -> Elem {
        let (q, r) = (self.q(), self.r() as usize);
        let field = self.field();
        let mut cx = [0u64; MAX_DIGITS];
        let mut cy = [0u64; MAX_DIGITS];
        let (mut tx, mut ty) = (x, y);
        for i in 0..r {
            cx[i] = tx % q;
            cy[i] = ty % q;
            tx /= q;
            ty /= q;
        }
        let mut out = [0u64; MAX_DIGITS];
        for i in 0..r {
            if cx[i] == 0 {
                continue;
            }
            for j in 0..r - i {
                if cy[j] != 0 {
                    out[i + j] = field.add(out[i + j], field.mul(cx[i], cy[j]));
                }
            }
        }
        Elem::from_raw((0..r).rev().fold(0, |acc, i| acc * q + out[i]))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `r` for zero, otherwise the largest `k` with `a` in `(z^k)`.
    #[inline]
    pub fn valuation(&self, a: Elem) -> u32 {
        let mut x = a.index();
        if x == 0 {
            return self.r();
        }
        let q = self.q();
        let mut k = 0;
        while x % q == 0 {
            x /= q;
            k += 1;
        }
        k
    }

    #[inline]
    pub fn is_unit(&self, a: Elem) -> bool {
        a.index() % self.q() != 0
    }

    /// `p` in `Z/p^r`, `x` in `F_q[x]/(x^r)`. Zero when `r = 1` (see [`Ring::is_degenerate`]).
    pub fn uniformizer(&self) -> Elem {
        if self.is_degenerate() {
            Elem::ZERO
        } else {
            Elem::from_raw(self.q())
        }
    }

    /// `a * z^k`.
    pub fn mul_z_pow(&self, a: Elem, k: u32) -> Elem {
        if k >= self.r() {
            return Elem::ZERO;
        }
        Elem::from_raw(a.index() * self.q_pow(k) % self.order())
    }

    /// `a / z^k` as a coefficient shift; the low `k` coefficients are dropped.
    pub fn div_z_pow(&self, a: Elem, k: u32) -> Elem {
        if k >= self.r() {
            return Elem::ZERO;
        }
        Elem::from_raw(a.index() / self.q_pow(k))
    }

    /// Multiplicative inverse of a unit.
    ///
    /// `Z/p^r` uses extended Euclid on representatives. `F_q[x]/(x^r)` raises to the power
    /// `|R*| - 1`, which is the inverse because `|R*| = q^(r-1)(q-1)` annihilates the unit group.
    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit(a.index()));
        }
        let out = match self.kind() {
            RingKind::Zpr => {
                let m = self.order() as i128;
                let (mut old_r, mut r) = (a.index() as i128, m);
                let (mut old_s, mut s) = (1i128, 0i128);
                while r != 0 {
                    let quot = old_r / r;
                    (old_r, r) = (r, old_r - quot * r);
                    (old_s, s) = (s, old_s - quot * s);
                }
                Elem::from_raw(old_s.rem_euclid(m) as u64)
            }
            RingKind::Fqxr => self.pow(a, self.unit_count() - 1),
        };
        debug_assert_eq!(self.mul(a, out), self.one());
        Ok(out)
    }

    /// All `k` with `k * m = n`, as a coset `k0 + (z^(r - v(m)))`, or `None` when `v(m) > v(n)`.
    pub fn solve_linear(&self, m: Elem, n: Elem) -> Option<Coset> {
        let (vm, vn) = (self.valuation(m), self.valuation(n));
        if vm > vn {
            return None;
        }
        if vm == self.r() {
            // m = 0 and n = 0: every k works
            return Some(Coset { rep: Elem::ZERO, exp: 0 });
        }
        let unit = self.div_z_pow(m, vm);
        let inv = self.inv(unit).expect("m / z^v(m) is a unit");
        let rep = self.mul(self.div_z_pow(n, vm), inv);
        let exp = self.r() - vm;
        // canonical representative: the smallest index in the coset
        let rep = Elem::from_raw(rep.index() % self.q_pow(exp));
        Some(Coset { rep, exp })
    }

    /// Human-readable rendering: the residue for `Z/p^r`, a polynomial in `x` otherwise
    /// (with residue-field coefficients written as polynomials in `y` when `s > 1`).
    pub fn display(&self, e: Elem) -> String {
        if self.kind() == RingKind::Zpr {
            return e.index().to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs(e).iter().enumerate() {
            let coeff = render_poly(c, "y");
            if coeff.is_empty() {
                continue;
            }
            let coeff = if self.s() > 1 && c.iter().filter(|&&d| d != 0).count() > 1 {
                format!("({coeff})")
            } else {
                coeff
            };
            terms.push(match (i, coeff.as_str()) {
                (0, _) => coeff,
                (1, "1") => "x".to_string(),
                (1, _) => format!("{coeff}x"),
                (_, "1") => format!("x^{i}"),
                _ => format!("{coeff}x^{i}"),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

/// The set `rep + (z^exp)`; `exp = r` is the singleton `{rep}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coset {
    pub rep: Elem,
    pub exp: u32,
}

impl Coset {
    pub fn contains(&self, ring: &Ring, k: Elem) -> bool {
        ring.valuation(ring.sub(k, self.rep)) >= self.exp
    }

    pub fn len(&self, ring: &Ring) -> u64 {
        ring.ideal_size(self.exp)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Two cosets `k1 + (z^i)` and `k2 + (z^j)` meet iff `v(k1 - k2) >= min(i, j)`.
    pub fn intersects(&self, ring: &Ring, other: &Coset) -> bool {
        ring.valuation(ring.sub(self.rep, other.rep)) >= self.exp.min(other.exp)
    }

    pub fn elements<'a>(&self, ring: &'a Ring) -> impl Iterator<Item = Elem> + 'a {
        let (rep, step, count) = (self.rep, ring.q_pow(self.exp), self.len(ring));
        (0..count).map(move |t| ring.add(rep, Elem::from_raw(t * step)))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn digits(mut x: u64, p: u64, n: usize) -> Vec<u64> {
    (0..n)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn from_digits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

#[inline]
fn digit_add(mut a: u64, mut b: u64, p: u64, n: usize) -> u64 {
    let (mut out, mut w) = (0, 1);
    for _ in 0..n {
        if a == 0 && b == 0 {
            break;
        }
        out += ((a % p + b % p) % p) * w;
        w *= p;
        a /= p;
        b /= p;
    }
    out
}

fn render_poly(c: &[u64], var: &str) -> String {
    let mut terms = Vec::new();
    for (j, &d) in c.iter().enumerate() {
        if d == 0 {
            continue;
        }
        terms.push(match (j, d) {
            (0, _) => d.to_string(),
            (1, 1) => var.to_string(),
            (1, _) => format!("{d}{var}"),
            (_, 1) => format!("{var}^{j}"),
            _ => format!("{d}{var}^{j}"),
        });
    }
    terms.join("+")
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p` (low degree first).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - lead * c % p) % p;
        }
        a = trim(a);
    }
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_rem(&out, m, p)
}

/// True when the monic polynomial `f` (low degree first) has no monic factor of degree
/// `1..=deg(f)/2` over `F_p`, checked by trial division against every candidate.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for t in 0..p.pow(d as u32) {
            let mut g = digits(t, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    deg >= 1
}

/// The monic irreducible of degree `s` over `F_p` whose coefficient vector
/// `(c_{s-1}, ..., c_0)` is lexicographically smallest.
pub fn smallest_irreducible(p: u64, s: u32) -> Vec<u64> {
    (0..p.pow(s))
        .map(|t| {
            let mut f = digits(t, p, s as usize);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
