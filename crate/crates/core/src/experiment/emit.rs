use std::io::Write;

use crate::checks::{CheckReport, ComparisonRecord, ReportRecord};
use crate::error::Result;

use super::{OutputFormat, Summary};

/// JSON Lines: one [`ReportRecord`] per line.
pub fn write_jsonl<W: Write>(reports: &[CheckReport], mut w: W) -> Result<()> {
    for r in reports {
        serde_json::to_writer(&mut w, &r.to_record())?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

/// Flat CSV. Columns are the union over all reports in first-seen order; comparisons
/// expand to `<name>_ok/_lhs/_rhs` (secondaries prefixed `sec_`, diagnostics `diag_`),
/// quantities to `q_<name>` and sets to `set_<name>`. An empty report list writes an
/// empty file.
pub fn write_csv<W: Write>(reports: &[CheckReport], w: W) -> Result<()> {
    let rows: Vec<Vec<(String, String)>> = reports.iter().map(|r| flatten(&r.to_record())).collect();
    let mut header: Vec<String> = Vec::new();
    for row in &rows {
        for (k, _) in row {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let mut out = csv::Writer::from_writer(w);
    if !rows.is_empty() {
        out.write_record(&header)?;
    }
    for row in &rows {
        let cells = header.iter().map(|h| row.iter().find(|(k, _)| k == h).map_or("", |(_, v)| v.as_str()));
        out.write_record(cells)?;
    }
    out.flush()?;
    Ok(())
}

fn flatten(rec: &ReportRecord) -> Vec<(String, String)> {
    let opt = |v: Option<String>| v.unwrap_or_default();
    let mut row = vec![
        ("theorem".to_string(), rec.theorem.to_string()),
        ("ring".into(), rec.ring.clone()),
        ("verdict".into(), rec.verdict.to_string()),
        ("relation".into(), rec.relation.as_str().to_string()),
        ("lhs".into(), rec.lhs.clone()),
        ("rhs".into(), rec.rhs.clone()),
        ("ratio".into(), opt(rec.ratio.map(|x| x.to_string()))),
        ("ratio_exact".into(), opt(rec.ratio_exact.clone())),
        ("seed".into(), opt(rec.seed.map(|x| x.to_string()))),
    ];
    let mut push_cmp = |prefix: &str, c: &ComparisonRecord| {
        row.push((format!("{prefix}{}_ok", c.name), c.ok.to_string()));
        row.push((format!("{prefix}{}_lhs", c.name), c.lhs.clone()));
        row.push((format!("{prefix}{}_rhs", c.name), c.rhs.clone()));
    };
    rec.hypotheses.iter().for_each(|c| push_cmp("", c));
    rec.secondary.iter().for_each(|c| push_cmp("sec_", c));
    rec.diagnostics.iter().for_each(|c| push_cmp("diag_", c));
    row.extend(rec.quantities.iter().map(|(k, v)| (format!("q_{k}"), v.clone())));
    row.extend(rec.sets.iter().map(|(k, v)| (format!("set_{k}"), v.clone())));
    row
}

/// Streams reports to a writer. JSONL is written as it arrives; CSV is buffered because
/// its header depends on every row.
pub struct ReportSink {
    format: OutputFormat,
    writer: Box<dyn Write + Send>,
    buffered: Vec<CheckReport>,
}

impl ReportSink {
    pub fn new(format: OutputFormat, writer: Box<dyn Write + Send>) -> Self {
        ReportSink { format, writer, buffered: Vec::new() }
    }

    pub fn push(&mut self, report: &CheckReport) -> Result<()> {
        match self.format {
            OutputFormat::Jsonl => {
                serde_json::to_writer(&mut self.writer, &report.to_record())?;
                self.writer.write_all(b"\n")?;
            }
            OutputFormat::Csv => self.buffered.push(report.clone()),
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        match self.format {
            OutputFormat::Jsonl => self.writer.flush()?,
            OutputFormat::Csv => write_csv(&self.buffered, &mut self.writer)?,
        }
        Ok(())
    }
}

/// `1` if any report failed, else `0`. Errors map to `2` at the call site.
pub fn exit_code(summary: &Summary) -> i32 {
    i32::from(summary.count(crate::checks::Verdict::Fail) > 0)
}
