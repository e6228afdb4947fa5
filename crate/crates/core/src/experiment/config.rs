use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::checks::TheoremId;
use crate::error::{Error, Result};
use crate::ring::RingSpec;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SamplingMode {
    /// One evaluation on the literal sets or families given in the config.
    Fixed,
    /// Every tuple of subsets with sizes `1..=max_size`.
    Exhaustive { max_size: usize },
    /// `trials` random draws; trial `i` uses size `sizes[i % sizes.len()]`.
    Random { sizes: Vec<u64>, trials: u64 },
}

impl FromStr for SamplingMode {
    type Err = Error;

    /// `fixed`, `exhaustive:N` or `random:S1,S2,...:TRIALS`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("bad mode `{s}`"));
        let parts: Vec<&str> = s.trim().split(':').map(str::trim).collect();
        match parts.as_slice() {
            ["fixed"] => Ok(SamplingMode::Fixed),
            ["exhaustive", n] => Ok(SamplingMode::Exhaustive { max_size: n.parse().map_err(|_| bad())? }),
            ["random", sizes, trials] => {
                let sizes = sizes.split(',').map(|x| x.trim().parse()).collect::<std::result::Result<Vec<u64>, _>>().map_err(|_| bad())?;
                let trials = trials.parse().map_err(|_| bad())?;
                if sizes.is_empty() || sizes.contains(&0) {
                    return Err(bad());
                }
                Ok(SamplingMode::Random { sizes, trials })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for SamplingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SamplingMode::Fixed => f.write_str("fixed"),
            SamplingMode::Exhaustive { max_size } => write!(f, "exhaustive:{max_size}"),
            SamplingMode::Random { sizes, trials } => {
                let sizes: Vec<String> = sizes.iter().map(u64::to_string).collect();
                write!(f, "random:{}:{trials}", sizes.join(","))
            }
        }
    }
}

/// Where a point or plane family comes from in fixed mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySource {
    All,
    Random(u64),
    File(PathBuf),
}

impl FromStr for FamilySource {
    type Err = Error;

    /// `all`, `random:N` or a file path.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "all" {
            Ok(FamilySource::All)
        } else if let Some(n) = s.strip_prefix("random:") {
            n.trim().parse().map(FamilySource::Random).map_err(|_| Error::Config(format!("bad family source `{s}`")))
        } else {
            Ok(FamilySource::File(PathBuf::from(s)))
        }
    }
}

/// The pool random and exhaustive subsets are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Universe {
    #[default]
    Ring,
    Units,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "jsonl" => Ok(OutputFormat::Jsonl),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Config(format!("unknown output format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub ring: RingSpec,
    pub theorem: TheoremId,
    pub mode: SamplingMode,
    pub master_seed: u64,
    /// Polynomial literal: a [`crate::setalg::QuadPolySpec`] for `T1_3`, a
    /// [`crate::setalg::Poly1`] for `T1_7`.
    pub poly: Option<String>,
    /// Exponent for `T1_9`.
    pub d: u32,
    /// Fixed-mode sets, `A=1,2,3;B=...`, or a bare literal for single-set theorems.
    pub sets: Option<String>,
    pub universe: Universe,
    pub points: Option<FamilySource>,
    pub planes: Option<FamilySource>,
    pub max_weight: u64,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    pub budget: u64,
}

impl ExperimentConfig {
    pub fn new(ring: RingSpec, theorem: TheoremId, mode: SamplingMode) -> Self {
        ExperimentConfig {
            ring,
            theorem,
            mode,
            master_seed: 0,
            poly: None,
            d: 2,
            sets: None,
            universe: Universe::Ring,
            points: None,
            planes: None,
            max_weight: 1,
            output: None,
            format: OutputFormat::Jsonl,
            budget: DEFAULT_BUDGET,
        }
    }

    /// Parses a flat `key = value` file. Blank lines and `#` comments are skipped.
    ///
    /// Keys: `ring`, `theorem`, `mode`, `seed`, `f`, `d`, `sets`, `universe`, `points`,
    /// `planes`, `max_weight`, `out`, `format`, `budget`. Relative file paths are kept as
    /// written.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ring = None;
        let mut theorem = None;
        let mut mode = None;
        let mut rest = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            match key {
                "ring" => ring = Some(value.parse::<RingSpec>()?),
                "theorem" => theorem = Some(value.parse::<TheoremId>()?),
                "mode" => mode = Some(value.parse::<SamplingMode>()?),
                _ => rest.push((lineno + 1, key.to_string(), value.to_string())),
            }
        }
        let missing = |k: &str| Error::Config(format!("missing key `{k}`"));
        let mut cfg = ExperimentConfig::new(ring.ok_or_else(|| missing("ring"))?, theorem.ok_or_else(|| missing("theorem"))?, mode.unwrap_or(SamplingMode::Fixed));
        for (lineno, key, value) in rest {
            let num = |v: &str| v.parse::<u64>().map_err(|_| Error::Config(format!("line {lineno}: `{key}` needs an integer")));
            match key.as_str() {
                "seed" => cfg.master_seed = num(&value)?,
                "f" => cfg.poly = Some(value),
                "d" => cfg.d = num(&value)? as u32,
                "sets" => cfg.sets = Some(value),
                "universe" => {
                    cfg.universe = match value.as_str() {
                        "ring" => Universe::Ring,
                        "units" => Universe::Units,
                        _ => return Err(Error::Config(format!("line {lineno}: universe is `ring` or `units`"))),
                    }
                }
                "points" => cfg.points = Some(value.parse()?),
                "planes" => cfg.planes = Some(value.parse()?),
                "max_weight" => cfg.max_weight = num(&value)?.max(1),
                "out" => cfg.output = Some(PathBuf::from(value)),
                "format" => cfg.format = value.parse()?,
                "budget" => cfg.budget = num(&value)?,
                _ => return Err(Error::Config(format!("line {lineno}: unknown key `{key}`"))),
            }
        }
        Ok(cfg)
    }
}
