use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setalg::{Poly1, QuadPolySpec, RSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// `|f(A,B,C)| >= (1/8) min{q^r, |A||B||C| / q^(2r-1)}`.
    #[serde(rename = "T1_3")]
    T1_3,
    /// `|A^2+A^2| |A+A|^2 >= |A|^2 q^r / 2`.
    #[serde(rename = "T1_5")]
    T1_5,
    /// `max{|A+A|, |A^3+A^3|} >> q^(r/10) |A|^(9/10)`.
    #[serde(rename = "T1_6")]
    T1_6,
    /// `|f(A)+A| >= 2^(-1/3) |A|^(2/3) q^(r/3)`.
    #[serde(rename = "T1_7")]
    T1_7,
    /// `max{|A-A|, |AA+AA|} >= 2^(-1/3) |A|^(2/3) q^(r/3)`.
    #[serde(rename = "T1_8")]
    T1_8,
    /// `|A^d+A^d| |AA|^2 >> q^r |A|^2`.
    #[serde(rename = "T1_9")]
    T1_9,
    /// Two-sided point-plane incidence bound.
    #[serde(rename = "T2_2")]
    T2_2,
    /// Weighted incidences `I_w << W^2/q^r + q^(2r-1) W`.
    #[serde(rename = "T2_4")]
    T2_4,
    /// Collinear-triple upper bound on a grid `A x A`.
    #[serde(rename = "T7_1")]
    T7_1,
    /// Spanned-line lower bound on a grid `A x A`.
    #[serde(rename = "T7_1_lines")]
    T7_1Lines,
    /// `|2A-A-A| |A|^2 <= |A+A|^3`.
    #[serde(rename = "PLUN13")]
    Plun13,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::T1_3,
        TheoremId::T1_5,
        TheoremId::T1_6,
        TheoremId::T1_7,
        TheoremId::T1_8,
        TheoremId::T1_9,
        TheoremId::T2_2,
        TheoremId::T2_4,
        TheoremId::T7_1,
        TheoremId::T7_1Lines,
        TheoremId::Plun13,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1_3 => "T1_3",
            TheoremId::T1_5 => "T1_5",
            TheoremId::T1_6 => "T1_6",
            TheoremId::T1_7 => "T1_7",
            TheoremId::T1_8 => "T1_8",
            TheoremId::T1_9 => "T1_9",
            TheoremId::T2_2 => "T2_2",
            TheoremId::T2_4 => "T2_4",
            TheoremId::T7_1 => "T7_1",
            TheoremId::T7_1Lines => "T7_1_lines",
            TheoremId::Plun13 => "PLUN13",
        }
    }

    /// Theorems stated with `>>`/`<<` only have an empirical constant to record.
    pub fn has_explicit_constant(self) -> bool {
        !matches!(self, TheoremId::T1_6 | TheoremId::T1_9 | TheoremId::T2_4 | TheoremId::T7_1Lines)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('.', "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().to_ascii_uppercase() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown theorem id `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisNotMet,
    RatioRecorded,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::HypothesisNotMet => "hypothesis_not_met",
            Verdict::RatioRecorded => "ratio_recorded",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "==")]
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "==",
        }
    }
}

/// A named exact comparison `lhs <relation> rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub name: &'static str,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub relation: Relation,
}

impl Comparison {
    pub fn new(name: &'static str, lhs: impl Into<BigInt>, relation: Relation, rhs: impl Into<BigInt>) -> Self {
        Comparison { name, lhs: lhs.into(), rhs: rhs.into(), relation }
    }

    pub fn ge(name: &'static str, lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Self {
        Comparison::new(name, lhs, Relation::Ge, rhs)
    }

    pub fn le(name: &'static str, lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Self {
        Comparison::new(name, lhs, Relation::Le, rhs)
    }

    pub fn ok(&self) -> bool {
        self.relation.holds(&self.lhs, &self.rhs)
    }

    /// `lhs / rhs`, or `None` when `rhs = 0`.
    pub fn ratio(&self) -> Option<BigRational> {
        (!self.rhs.is_zero()).then(|| BigRational::new(self.lhs.clone(), self.rhs.clone()))
    }
}

/// An input recorded on a report; rendered to text only when the report is serialized.
#[derive(Clone, Debug)]
pub enum Literal {
    Set(RSet),
    Quad(QuadPolySpec),
    Poly(Poly1),
    Text(String),
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Set(s) => s.fmt(f),
            Literal::Quad(p) => p.fmt(f),
            Literal::Poly(p) => p.fmt(f),
            Literal::Text(t) => f.write_str(t),
        }
    }
}

impl PartialEq for Literal {
    fn eq(&self, other: &Self) -> bool {
        self.to_string() == other.to_string()
    }
}

impl From<&RSet> for Literal {
    fn from(s: &RSet) -> Self {
        Literal::Set(s.clone())
    }
}

impl From<&QuadPolySpec> for Literal {
    fn from(p: &QuadPolySpec) -> Self {
        Literal::Quad(*p)
    }
}

impl From<&Poly1> for Literal {
    fn from(p: &Poly1) -> Self {
        Literal::Poly(*p)
    }
}

impl From<String> for Literal {
    fn from(t: String) -> Self {
        Literal::Text(t)
    }
}

/// One theorem evaluation on one input.
///
/// Every decision is an exact integer comparison with denominators cleared; `ratio` is
/// `lhs / rhs` of the main conclusion and is the only place a float ever appears (on the wire).
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub theorem: TheoremId,
    pub ring: String,
    pub hypotheses: Vec<Comparison>,
    pub conclusion: Comparison,
    /// Further inequalities asserted alongside the conclusion; they take part in pass/fail.
    pub secondary: Vec<Comparison>,
    /// Evaluated and reported, but never part of the verdict.
    pub diagnostics: Vec<Comparison>,
    /// Named exact intermediate quantities.
    pub quantities: Vec<(&'static str, BigInt)>,
    pub ratio: Option<BigRational>,
    pub verdict: Verdict,
    pub seed: Option<u64>,
    pub sets: Vec<(&'static str, Literal)>,
}

impl CheckReport {
    pub(crate) fn build(
        theorem: TheoremId,
        ring: &crate::ring::Ring,
        hypotheses: Vec<Comparison>,
        conclusion: Comparison,
        secondary: Vec<Comparison>,
        quantities: Vec<(&'static str, BigInt)>,
    ) -> CheckReport {
        let ratio = conclusion.ratio();
        let verdict = if !hypotheses.iter().all(Comparison::ok) {
            Verdict::HypothesisNotMet
        } else if !theorem.has_explicit_constant() {
            Verdict::RatioRecorded
        } else if conclusion.ok() && secondary.iter().all(Comparison::ok) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CheckReport {
            theorem,
            ring: ring.to_string(),
            hypotheses,
            conclusion,
            secondary,
            diagnostics: Vec::new(),
            quantities,
            ratio,
            verdict,
            seed: None,
            sets: Vec::new(),
        }
    }

    pub fn with_diagnostic(mut self, c: Comparison) -> Self {
        self.diagnostics.push(c);
        self
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_set(mut self, name: &'static str, literal: impl Into<Literal>) -> Self {
        self.sets.retain(|(k, _)| *k != name);
        self.sets.push((name, literal.into()));
        self
    }

    /// The recorded inputs as text, keyed by name.
    pub fn set_literals(&self) -> BTreeMap<String, String> {
        self.sets.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    pub fn quantity(&self, name: &str) -> Option<&BigInt> {
        self.quantities.iter().find(|(k, _)| *k == name).map(|(_, v)| v)
    }

    pub fn ratio_f64(&self) -> Option<f64> {
        self.ratio.as_ref().and_then(ToPrimitive::to_f64)
    }

    pub fn to_record(&self) -> ReportRecord {
        let cmp = |c: &Comparison| ComparisonRecord {
            name: c.name.to_string(),
            ok: c.ok(),
            lhs: c.lhs.to_string(),
            rhs: c.rhs.to_string(),
            relation: c.relation,
        };
        ReportRecord {
            theorem: self.theorem,
            ring: self.ring.clone(),
            hypotheses: self.hypotheses.iter().map(cmp).collect(),
            lhs: self.conclusion.lhs.to_string(),
            rhs: self.conclusion.rhs.to_string(),
            relation: self.conclusion.relation,
            ratio: self.ratio_f64(),
            ratio_exact: self.ratio.as_ref().map(|r| format!("{}/{}", r.numer(), r.denom())),
            verdict: self.verdict,
            seed: self.seed,
            sets: self.set_literals(),
            secondary: self.secondary.iter().map(cmp).collect(),
            diagnostics: self.diagnostics.iter().map(cmp).collect(),
            quantities: self.quantities.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRecord {
    pub name: String,
    pub ok: bool,
    pub lhs: String,
    pub rhs: String,
    pub relation: Relation,
}

/// Wire form of a [`CheckReport`]: one JSON object per JSONL line.
/// Integers are decimal strings since they routinely exceed 64 bits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub theorem: TheoremId,
    pub ring: String,
    pub hypotheses: Vec<ComparisonRecord>,
    pub lhs: String,
    pub rhs: String,
    pub relation: Relation,
    pub ratio: Option<f64>,
    pub ratio_exact: Option<String>,
    pub verdict: Verdict,
    pub seed: Option<u64>,
    pub sets: BTreeMap<String, String>,
    pub secondary: Vec<ComparisonRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<ComparisonRecord>,
    pub quantities: BTreeMap<String, String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(json, format!("\"{}\"", t.as_str()));
        }
        assert_eq!("t1.3".parse::<TheoremId>().unwrap(), TheoremId::T1_3);
        assert!("T9_9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn comparisons() {
        assert!(Comparison::ge("x", 3, 3).ok());
        assert!(!Comparison::le("x", 4, 3).ok());
        assert!(Comparison::new("x", 2, Relation::Eq, 2).ok());
        assert_eq!(Comparison::ge("x", 1, 0).ratio(), None);
        assert_eq!(Comparison::ge("x", 6, 4).ratio().unwrap(), BigRational::new(3.into(), 2.into()));
    }
}
