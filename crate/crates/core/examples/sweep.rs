//! Config-driven random sweep with a JSONL sink and summary.

use fvr::experiment::{Experiment, ExperimentConfig, OutputFormat, ReportSink};

const CONFIG: &str = "
ring = zpr:p=5,r=2
theorem = T1_8
mode = random:4,8,12,16:500
seed = 7
";

fn main() -> fvr::Result<()> {
    let config = ExperimentConfig::parse(CONFIG)?;
    let experiment = Experiment::new(config)?;
    let mut sink = ReportSink::new(OutputFormat::Jsonl, Box::new(std::io::sink()));
    let summary = experiment.run(&mut |r| sink.push(r))?;
    sink.finish()?;
    println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
    Ok(())
}
