use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use fvr::checks::TheoremId;
use fvr::experiment::{exit_code, Experiment, ExperimentConfig, FamilySource, OutputFormat, ReportSink, SamplingMode, Summary, Universe};
use fvr::geometry::{count_collinear_triples, count_lines, count_weak_collinear_triples};
use fvr::ring::{Ring, RingSpec};
use fvr::setalg::RSet;

/// Finite valuation ring experiments. Set FVR_THREADS to fix the worker count.
#[derive(Parser)]
#[command(name = "fvr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring inspection.
    Ring {
        #[command(subcommand)]
        action: RingAction,
    },
    /// Evaluate one theorem on literal sets or point/plane families.
    Check {
        theorem: TheoremId,
        #[arg(long)]
        ring: RingSpec,
        /// Set literal for A, e.g. `1,2,5`.
        #[arg(long = "A", alias = "a")]
        a: Option<String>,
        #[arg(long = "B", alias = "b")]
        b: Option<String>,
        #[arg(long = "C", alias = "c")]
        c: Option<String>,
        /// Polynomial literal (`a=..;R=..;S=..;T=..` or `c2,c1,c0`).
        #[arg(long)]
        f: Option<String>,
        #[arg(long, default_value_t = 2)]
        d: u32,
        /// `all`, `random:N` or a family file.
        #[arg(long)]
        points: Option<String>,
        #[arg(long)]
        planes: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `fixed`, `exhaustive:N` or `random:S1,S2,...:TRIALS`.
        #[arg(long, default_value = "fixed")]
        mode: SamplingMode,
        /// Draw sampled sets from the unit group instead of the whole ring.
        #[arg(long)]
        units_only: bool,
        #[arg(long, default_value = "jsonl")]
        format: OutputFormat,
    },
    /// Count point-plane incidences and evaluate the incidence bound.
    Incidence {
        #[arg(long)]
        ring: RingSpec,
        #[arg(long, default_value = "all")]
        points: String,
        #[arg(long, default_value = "all")]
        planes: String,
        /// Evaluate the weighted bound using the families' weights.
        #[arg(long)]
        weighted: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Collinear triples and spanned lines of the grid `A x A`.
    Geometry {
        #[arg(long)]
        ring: RingSpec,
        #[arg(long = "A", alias = "a")]
        a: String,
        /// Also print the bound reports.
        #[arg(long)]
        report: bool,
    },
    /// Run a config-file experiment.
    Sweep {
        config: PathBuf,
        /// Overrides `out` in the config; `-` is stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        format: Option<OutputFormat>,
    },
}

#[derive(Subcommand)]
enum RingAction {
    /// Order, unit count, ideal chain and field modulus.
    Info { spec: RingSpec },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Ring { action: RingAction::Info { spec } } => ring_info(spec),
        Command::Check { theorem, ring, a, b, c, f, d, points, planes, seed, mode, units_only, format } => {
            let single = mode == SamplingMode::Fixed;
            let mut cfg = ExperimentConfig::new(ring, theorem, mode);
            if units_only {
                cfg.universe = Universe::Units;
            }
            cfg.poly = f;
            cfg.d = d;
            cfg.master_seed = seed;
            cfg.format = format;
            cfg.points = points.map(|s| s.parse()).transpose()?;
            cfg.planes = planes.map(|s| s.parse()).transpose()?;
            let named: Vec<String> = [("A", a), ("B", b), ("C", c)]
                .into_iter()
                .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
                .collect();
            if !named.is_empty() {
                cfg.sets = Some(named.join(";"));
            }
            execute(cfg, None, single)
        }
        Command::Incidence { ring, points, planes, weighted, seed } => {
            let theorem = if weighted { TheoremId::T2_4 } else { TheoremId::T2_2 };
            let mut cfg = ExperimentConfig::new(ring, theorem, SamplingMode::Fixed);
            cfg.points = Some(points.parse::<FamilySource>()?);
            cfg.planes = Some(planes.parse::<FamilySource>()?);
            cfg.master_seed = seed;
            execute(cfg, None, true)
        }
        Command::Geometry { ring, a, report } => {
            let ring = Ring::new(ring)?;
            let set = RSet::parse(&ring, &a)?;
            println!("ring         {ring}");
            println!("|A|          {}", set.len());
            println!("triples      {}", count_collinear_triples(&set));
            println!("weak_triples {}", count_weak_collinear_triples(&set));
            if set.len() >= 2 {
                println!("lines        {}", count_lines(&set)?);
            }
            if !report {
                return Ok(0);
            }
            let mut cfg = ExperimentConfig::new(ring.spec(), TheoremId::T7_1, SamplingMode::Fixed);
            cfg.sets = Some(a);
            execute(cfg, None, true)
        }
        Command::Sweep { config, out, format } => {
            let text = std::fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let mut cfg = ExperimentConfig::parse(&text)?;
            if let Some(f) = format {
                cfg.format = f;
            }
            let out = out.or(cfg.output.clone());
            execute(cfg, out, false)
        }
    }
}

fn ring_info(spec: RingSpec) -> Result<i32> {
    let ring = Ring::new(spec)?;
    println!("ring        {ring}");
    println!("q           {}", ring.q());
    println!("r           {}", ring.r());
    println!("order       {}", ring.order());
    println!("units       {}", ring.unit_count());
    println!("degenerate  {}", ring.is_degenerate());
    println!("uniformizer {}", ring.display(ring.uniformizer()));
    let chain: Vec<String> = (0..=ring.r()).map(|k| ring.ideal_size(k).to_string()).collect();
    println!("ideal sizes {}", chain.join(" > "));
    if let Some(m) = ring.field_modulus() {
        let terms: Vec<String> = m.iter().enumerate().rev().map(|(i, c)| format!("{c}t^{i}")).collect();
        println!("modulus     {}", terms.join(" + "));
    }
    Ok(0)
}

/// Runs an experiment, writing reports to `out` (stdout when absent or `-`). In sweep
/// mode the summary goes to `<out>.summary.json`, or stderr when writing to stdout.
fn execute(cfg: ExperimentConfig, out: Option<PathBuf>, single: bool) -> Result<i32> {
    let format = cfg.format;
    let experiment = Experiment::new(cfg)?;
    let to_file = out.as_ref().filter(|p| p.as_os_str() != "-");
    let writer: Box<dyn Write + Send> = match to_file {
        Some(path) => Box::new(BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?)),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    let mut sink = ReportSink::new(format, writer);
    let summary = experiment.run_with_env_threads(&mut |r| sink.push(r))?;
    sink.finish()?;
    if !single {
        write_summary(&summary, to_file)?;
    }
    Ok(exit_code(&summary))
}

fn write_summary(summary: &Summary, out: Option<&PathBuf>) -> Result<()> {
    let json = serde_json::to_string_pretty(summary)?;
    match out {
        Some(path) => {
            let mut name = path.clone().into_os_string();
            name.push(".summary.json");
            std::fs::write(&name, json + "\n")?;
        }
        None => eprintln!("{json}"),
    }
    Ok(())
}
