//! Batch evaluation of theorem checks: fixed inputs, exhaustive enumeration over small
//! subsets, or seeded random trials. Output is order-preserving and byte-identical for a
//! given config regardless of the worker count.

mod config;
mod emit;
mod sampling;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use config::{ExperimentConfig, FamilySource, OutputFormat, SamplingMode, Universe, DEFAULT_BUDGET};
pub use emit::{exit_code, write_csv, write_jsonl, ReportSink};
pub use sampling::{mix64, rng_for, sample_from, sample_indices, sample_subset, splitmix64, subset_count, subsets_up_to};

use crate::checks::{
    check_cube_sum, check_expander, check_f_of_a_plus_a, check_plunnecke_corollary, check_power_energy, check_prod_diff,
    check_sum_square, CheckReport, TheoremId, Verdict,
};
use crate::error::{Error, Result};
use crate::geometry::geometry_bound_report;
use crate::incidence::{
    incidence_bound_report, parse_family, triple_from_index, weighted_bound_report, Plane3, Point3,
    Triple, WeightedFamily,
};
use crate::ring::{Elem, Ring};
use crate::setalg::{Poly1, QuadPolySpec, RSet};

/// Environment variable holding the worker count.
pub const THREADS_ENV: &str = "FVR_THREADS";

const CHUNK: usize = 4096;

/// Names of the set arguments a theorem takes; empty for the incidence theorems.
pub fn set_slots(theorem: TheoremId) -> &'static [&'static str] {
    match theorem {
        TheoremId::T1_3 => &["A", "B", "C"],
        TheoremId::T2_2 | TheoremId::T2_4 => &[],
        _ => &["A"],
    }
}

enum Poly {
    None,
    Quad(QuadPolySpec),
    Linear(Poly1),
}

/// A prepared experiment: the ring, parsed polynomial and the job list.
pub struct Experiment {
    config: ExperimentConfig,
    ring: Ring,
    poly: Poly,
    plan: Plan,
}

enum Plan {
    Sets(Vec<RSet>),
    Families(Vec<(Point3, u64)>, Vec<(Plane3, u64)>),
    Exhaustive(Vec<Vec<Elem>>),
    Random,
}

/// Aggregate over one experiment.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub theorem: String,
    pub ring: String,
    pub mode: String,
    pub jobs: u64,
    pub reports: u64,
    pub verdicts: BTreeMap<String, u64>,
    /// Over `ratio_recorded` reports only.
    pub min_ratio: Option<f64>,
    pub min_ratio_exact: Option<String>,
    pub max_ratio: Option<f64>,
    pub mean_ratio: Option<f64>,
    pub argmin_sets: Option<BTreeMap<String, String>>,
    pub argmin_seed: Option<u64>,
}

impl Summary {
    fn new(config: &ExperimentConfig, ring: &Ring) -> Self {
        let verdicts = [Verdict::Pass, Verdict::Fail, Verdict::HypothesisNotMet, Verdict::RatioRecorded]
            .iter()
            .map(|v| (v.as_str().to_string(), 0))
            .collect();
        Summary {
            theorem: config.theorem.to_string(),
            ring: ring.to_string(),
            mode: config.mode.to_string(),
            verdicts,
            ..Summary::default()
        }
    }

    pub fn count(&self, v: Verdict) -> u64 {
        self.verdicts.get(v.as_str()).copied().unwrap_or(0)
    }

    fn absorb(&mut self, report: &CheckReport, best: &mut Option<num_rational::BigRational>, sum: &mut f64, n: &mut u64) {
        self.reports += 1;
        *self.verdicts.entry(report.verdict.as_str().to_string()).or_default() += 1;
        if report.verdict != Verdict::RatioRecorded {
            return;
        }
        let Some(ratio) = report.ratio.as_ref() else { return };
        let f = report.ratio_f64().unwrap_or(f64::NAN);
        *sum += f;
        *n += 1;
        self.mean_ratio = Some(*sum / *n as f64);
        self.max_ratio = Some(self.max_ratio.map_or(f, |m| m.max(f)));
        if best.as_ref().is_none_or(|b| ratio < b) {
            *best = Some(ratio.clone());
            self.min_ratio = Some(f);
            self.min_ratio_exact = Some(format!("{}/{}", ratio.numer(), ratio.denom()));
            self.argmin_sets = Some(report.set_literals());
            self.argmin_seed = report.seed;
        }
    }
}

impl Experiment {
    pub fn new(config: ExperimentConfig) -> Result<Self> {
        let ring = Ring::new(config.ring)?;
        let poly = match (config.theorem, config.poly.as_deref()) {
            (TheoremId::T1_3, Some(text)) => Poly::Quad(QuadPolySpec::parse(&ring, text)?),
            (TheoremId::T1_3, None) => return Err(Error::Config("T1_3 needs `f`".into())),
            (TheoremId::T1_7, Some(text)) => Poly::Linear(Poly1::parse(&ring, text)?),
            (TheoremId::T1_7, None) => return Err(Error::Config("T1_7 needs `f`".into())),
            _ => Poly::None,
        };
        let slots = set_slots(config.theorem);
        let plan = match &config.mode {
            SamplingMode::Fixed if slots.is_empty() => {
                let seed = config.master_seed;
                let points = load_family::<Point3>(&ring, config.points.as_ref(), mix64(seed, 0))?;
                let planes = load_family::<Plane3>(&ring, config.planes.as_ref(), mix64(seed, 1))?;
                Plan::Families(points, planes)
            }
            SamplingMode::Fixed => Plan::Sets(parse_sets(&ring, slots, config.sets.as_deref())?),
            SamplingMode::Exhaustive { .. } if slots.is_empty() => {
                return Err(Error::Config("exhaustive mode is for set theorems".into()))
            }
            SamplingMode::Exhaustive { max_size } => {
                let pool = universe(&ring, config.universe);
                let per_slot = subset_count(pool.len() as u64, *max_size as u64);
                let jobs = (0..slots.len()).fold(1u128, |acc, _| acc.saturating_mul(per_slot));
                if jobs > config.budget as u128 {
                    return Err(Error::Config(format!(
                        "exhaustive enumeration needs {jobs} evaluations, over the budget of {}",
                        config.budget
                    )));
                }
                Plan::Exhaustive(subsets_up_to(&pool, *max_size).collect())
            }
            SamplingMode::Random { .. } => Plan::Random,
        };
        Ok(Experiment { config, ring, poly, plan })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn config(&self) -> &ExperimentConfig {
        &self.config
    }

    pub fn job_count(&self) -> u64 {
        match (&self.plan, &self.config.mode) {
            (Plan::Sets(_) | Plan::Families(..), _) => 1,
            (Plan::Exhaustive(subsets), _) => (subsets.len() as u64).pow(set_slots(self.config.theorem).len() as u32),
            (Plan::Random, SamplingMode::Random { trials, .. }) => *trials,
            (Plan::Random, _) => 0,
        }
    }

    /// Evaluates every job, feeding reports to `sink` in job order.
    pub fn run(&self, sink: &mut dyn FnMut(&CheckReport) -> Result<()>) -> Result<Summary> {
        let mut summary = Summary::new(&self.config, &self.ring);
        let (mut best, mut sum, mut n) = (None, 0.0, 0u64);
        let total = self.job_count();
        summary.jobs = total;
        let mut start = 0u64;
        while start < total {
            let end = (start + CHUNK as u64).min(total);
            let batch: Vec<Result<Vec<CheckReport>>> = (start..end).into_par_iter().map(|i| self.job(i)).collect();
            for reports in batch {
                for report in reports? {
                    summary.absorb(&report, &mut best, &mut sum, &mut n);
                    sink(&report)?;
                }
            }
            start = end;
        }
        Ok(summary)
    }

    /// Runs on a pool sized by `FVR_THREADS` when it is set.
    pub fn run_with_env_threads(&self, sink: &mut (dyn FnMut(&CheckReport) -> Result<()> + Send)) -> Result<Summary> {
        match worker_count_from_env()? {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Config(e.to_string()))?
                .install(|| self.run(sink)),
            None => self.run(sink),
        }
    }

    fn job(&self, index: u64) -> Result<Vec<CheckReport>> {
        let slots = set_slots(self.config.theorem);
        match &self.plan {
            Plan::Sets(sets) => self.evaluate_sets(sets, None),
            Plan::Families(points, planes) => self.evaluate_families(points.clone(), planes.clone(), None),
            Plan::Exhaustive(subsets) => {
                let base = subsets.len() as u64;
                let mut rest = index;
                let mut picks = vec![0u64; slots.len()];
                for slot in picks.iter_mut().rev() {
                    *slot = rest % base;
                    rest /= base;
                }
                let sets: Vec<RSet> =
                    picks.iter().map(|&k| RSet::from_elems(&self.ring, subsets[k as usize].iter().copied())).collect();
                self.evaluate_sets(&sets, None)
            }
            Plan::Random => {
                let SamplingMode::Random { sizes, .. } = &self.config.mode else { unreachable!() };
                let size = sizes[(index % sizes.len() as u64) as usize];
                let seed = mix64(self.config.master_seed, index);
                if slots.is_empty() {
                    let (points, planes) = self.random_families(size, seed)?;
                    return self.evaluate_families(points, planes, Some(seed));
                }
                let pool = universe(&self.ring, self.config.universe);
                let sets = (0..slots.len())
                    .map(|j| sample_from(&self.ring, &pool, size, mix64(seed, j as u64)))
                    .collect::<Result<Vec<_>>>()?;
                self.evaluate_sets(&sets, Some(seed))
            }
        }
    }

    fn evaluate_sets(&self, sets: &[RSet], seed: Option<u64>) -> Result<Vec<CheckReport>> {
        let a = &sets[0];
        let reports = match (self.config.theorem, &self.poly) {
            (TheoremId::T1_3, Poly::Quad(f)) => vec![check_expander(f, a, &sets[1], &sets[2])?],
            (TheoremId::T1_5, _) => vec![check_sum_square(a)?],
            (TheoremId::T1_6, _) => vec![check_cube_sum(a)?],
            (TheoremId::T1_7, Poly::Linear(f)) => vec![check_f_of_a_plus_a(f, a)?],
            (TheoremId::T1_8, _) => vec![check_prod_diff(a)?],
            (TheoremId::T1_9, _) => vec![check_power_energy(a, self.config.d)?],
            (TheoremId::Plun13, _) => vec![check_plunnecke_corollary(a)?],
            (TheoremId::T7_1, _) => geometry_bound_report(a)?,
            (TheoremId::T7_1Lines, _) => geometry_bound_report(a)?.split_off(1),
            (t, _) => return Err(Error::Config(format!("{t} does not take sets"))),
        };
        Ok(reports.into_iter().map(|r| r.with_seed(seed)).collect())
    }

    fn evaluate_families(
        &self,
        points: Vec<(Point3, u64)>,
        planes: Vec<(Plane3, u64)>,
        seed: Option<u64>,
    ) -> Result<Vec<CheckReport>> {
        let report = match self.config.theorem {
            TheoremId::T2_2 => {
                let pts: Vec<Point3> = points.iter().map(|(p, _)| *p).collect();
                let pls: Vec<Plane3> = planes.iter().map(|(p, _)| *p).collect();
                incidence_bound_report(&self.ring, &pts, &pls)?
            }
            TheoremId::T2_4 => {
                let pts = WeightedFamily::new(&self.ring, points.clone())?;
                let pls = WeightedFamily::new(&self.ring, planes.clone())?;
                weighted_bound_report(&pts, &pls)?
            }
            t => return Err(Error::Config(format!("{t} does not take point/plane families"))),
        };
        let label = |n: usize| match seed {
            Some(_) => format!("random:{n}"),
            None => format!("{n} items"),
        };
        Ok(vec![report.with_seed(seed).with_set("points", label(points.len())).with_set("planes", label(planes.len()))])
    }

    /// `size` distinct points and planes. For `T2_4` point weights are uniform in
    /// `1..=max_weight` and plane weights are a shuffle of them, so totals agree.
    #[allow(clippy::type_complexity)]
    fn random_families(&self, size: u64, seed: u64) -> Result<(Vec<(Point3, u64)>, Vec<(Plane3, u64)>)> {
        let cube = self.ring.order().pow(3);
        let points: Vec<Point3> = sample_indices(cube, size.min(cube), mix64(seed, 0))?
            .into_iter()
            .map(|t| triple_from_index(&self.ring, t))
            .collect();
        let planes: Vec<Plane3> = sample_indices(cube, size.min(cube), mix64(seed, 1))?
            .into_iter()
            .map(|t| triple_from_index(&self.ring, t))
            .collect();
        let mut rng = rng_for(mix64(seed, 2));
        let weights: Vec<u64> = if self.config.theorem == TheoremId::T2_4 {
            (0..points.len()).map(|_| rng.gen_range(1..=self.config.max_weight)).collect()
        } else {
            vec![1; points.len()]
        };
        let mut shuffled = weights.clone();
        shuffled.shuffle(&mut rng);
        Ok((points.into_iter().zip(weights).collect(), planes.into_iter().zip(shuffled).collect()))
    }
}

/// The worker count requested through `FVR_THREADS`, if any.
pub fn worker_count_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| Error::Config(format!("{THREADS_ENV} must be a positive integer, got `{v}`"))),
        _ => Ok(None),
    }
}

fn universe(ring: &Ring, which: Universe) -> Vec<Elem> {
    match which {
        Universe::Ring => ring.elements().collect(),
        Universe::Units => ring.units().collect(),
    }
}

/// `A=1,2;B=3` into one set per slot. A single-slot theorem also accepts a bare literal.
fn parse_sets(ring: &Ring, slots: &[&str], text: Option<&str>) -> Result<Vec<RSet>> {
    let text = text.ok_or_else(|| Error::Config("fixed mode needs `sets`".into()))?;
    if slots.len() == 1 && !text.contains('=') {
        return Ok(vec![RSet::parse(ring, text)?]);
    }
    let mut named = BTreeMap::new();
    for part in text.split(';').filter(|p| !p.trim().is_empty()) {
        let (name, literal) = part.split_once('=').ok_or_else(|| Error::Config(format!("bad set assignment `{part}`")))?;
        named.insert(name.trim().to_string(), RSet::parse(ring, literal)?);
    }
    slots
        .iter()
        .map(|s| named.remove(*s).ok_or_else(|| Error::Config(format!("missing set `{s}`"))))
        .collect()
}

fn load_family<T: Triple>(ring: &Ring, source: Option<&FamilySource>, seed: u64) -> Result<Vec<(T, u64)>> {
    match source.unwrap_or(&FamilySource::All) {
        FamilySource::All => {
            let cube = ring.order().pow(3);
            Ok((0..cube).map(|t| (triple_from_index(ring, t), 1)).collect())
        }
        FamilySource::Random(n) => {
            let cube = ring.order().pow(3);
            Ok(sample_indices(cube, *n, seed)?.into_iter().map(|t| (triple_from_index(ring, t), 1)).collect())
        }
        FamilySource::File(path) => parse_family(ring, &std::fs::read_to_string(path)?),
    }
}
