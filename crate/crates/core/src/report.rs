//! Text and JSON forms of run reports.
//!
//! Record files are tab-separated (shown here with spaces), one heuristic
//! invocation per line:
//!
//! ```text
//! # iter  method  start  value
//! 1  double_sweep_lower  17  9
//! 1  tree_upper  0  12
//! # summary
//! # lower  9
//! ...
//! ```
//!
//! Lines starting with `#` are comments to a reader; the trailing summary
//! block is informational. Distribution tables use
//! `method<TAB>k<TAB>count<TAB>cumulative_fraction`.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::bounds::Method;
use crate::engine::{summarize_samples, BoundsState, DistributionSummary, RunReport};
use crate::error::{Error, Result};
use crate::graph_store::VertexId;

pub const RECORD_HEADER: &str = "# iter\tmethod\tstart\tvalue";
pub const DISTRIBUTION_HEADER: &str = "# method\tk\tcount\tcumulative_fraction";

/// One line of a record file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordRow {
    pub iteration: usize,
    pub method: Method,
    pub start: u64,
    pub value: u64,
}

pub fn write_records_tsv<I: VertexId, W: Write>(report: &RunReport<I>, mut out: W) -> Result<()> {
    writeln!(out, "{RECORD_HEADER}")?;
    for r in &report.records {
        writeln!(out, "{}\t{}\t{}\t{}", r.iteration, r.method, r.start, r.value)?;
    }
    writeln!(out, "# summary")?;
    for line in summary_fields(report) {
        writeln!(out, "# {}", line.join("\t"))?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_report_json<I: VertexId, W: Write>(report: &RunReport<I>, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, report)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

/// Reads a record file in either the tab-separated or the JSON form.
pub fn read_records<R: BufRead>(mut source: R) -> Result<Vec<RecordRow>> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    if text.trim_start().starts_with('{') {
        let report: RunReport<u64> = serde_json::from_str(&text)?;
        return Ok(report
            .records
            .into_iter()
            .map(|r| RecordRow {
                iteration: r.iteration,
                method: r.method,
                start: r.start,
                value: r.value,
            })
            .collect());
    }

    let mut rows = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |message: String| Error::RecordFormat {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        let [iteration, method, start, value] = fields[..] else {
            return Err(fail(format!("expected 4 tab-separated fields, found {}", fields.len())));
        };
        let number = |field: &str, name: &str| -> Result<u64> {
            field
                .parse()
                .map_err(|_| fail(format!("{name} {field:?} is not a nonnegative integer")))
        };
        rows.push(RecordRow {
            iteration: number(iteration, "iteration")? as usize,
            method: method.parse().map_err(fail)?,
            start: number(start, "start vertex")?,
            value: number(value, "value")?,
        });
    }
    Ok(rows)
}

/// Rebuilds the bound statistics from record rows.
pub fn state_from_rows(rows: &[RecordRow]) -> BoundsState {
    let mut state = BoundsState::new();
    let iterations = rows.iter().map(|r| r.iteration).max().unwrap_or(0);
    for r in rows {
        state.observe(r.iteration, r.method, r.value);
    }
    for _ in 0..iterations {
        state.finish_iteration();
    }
    state
}

pub fn distributions_from_rows(rows: &[RecordRow]) -> Result<Vec<DistributionSummary>> {
    summarize_samples(rows.iter().map(|r| (r.method, r.value)))
}

pub fn write_distributions_tsv<W: Write>(summaries: &[DistributionSummary], mut out: W) -> Result<()> {
    writeln!(out, "{DISTRIBUTION_HEADER}")?;
    for d in summaries {
        for p in &d.points {
            writeln!(out, "{}\t{}\t{}\t{:.6}", d.method, p.k, p.count, p.fraction)?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn write_distributions_json<W: Write>(summaries: &[DistributionSummary], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, summaries)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

/// Summary as key/value rows: best bounds, gap, iteration count, stopping
/// reason, witnesses, then one row of first-hit and frequency per method.
pub fn summary_fields<I: VertexId>(report: &RunReport<I>) -> Vec<Vec<String>> {
    let opt = |v: Option<u64>| v.map_or_else(|| "none".to_string(), |v| v.to_string());
    let mut rows = vec![
        vec!["lower".into(), opt(report.best_lower())],
        vec!["upper".into(), opt(report.best_upper())],
        vec!["gap".into(), opt(report.gap())],
        vec!["iterations".into(), report.state.iterations().to_string()],
        vec!["stop".into(), report.stop_reason.to_string()],
    ];
    if let Some(lower) = report.best_lower() {
        let witness = report
            .records
            .iter()
            .filter(|r| r.method.is_lower() && r.value == lower && r.witness.len() >= 2)
            .min_by_key(|r| r.iteration);
        if let Some(r) = witness {
            let ends = &r.witness[r.witness.len() - 2..];
            rows.push(vec![
                "lower_witness".into(),
                ends[0].to_string(),
                ends[1].to_string(),
            ]);
        }
    }
    rows.extend(state_rows(&report.state));
    rows
}

pub fn state_rows(state: &BoundsState) -> Vec<Vec<String>> {
    state
        .methods()
        .map(|(method, s)| {
            vec![
                "method".into(),
                method.tag().into(),
                "best".into(),
                s.best.to_string(),
                "first_hit".into(),
                s.first_hit.to_string(),
                "hits".into(),
                s.hits.to_string(),
                "samples".into(),
                s.samples.to_string(),
                "frequency".into(),
                format!("{:.6}", s.frequency()),
            ]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{run_auto_with, EngineOptions, StoppingCriterion};
    use crate::graph_store::CsrGraph;

    fn cycle_report() -> RunReport<u32> {
        let edges: Vec<(u32, u32)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        let g = CsrGraph::from_edges(10, &edges).unwrap();
        run_auto_with(
            &g,
            StoppingCriterion::GapThreshold(0),
            3,
            &EngineOptions {
                max_iterations: Some(6),
                workers: 1,
            },
        )
        .unwrap()
    }

    #[test]
    fn tsv_records_round_trip_through_reader() {
        let report = cycle_report();
        let mut buf = Vec::new();
        write_records_tsv(&report, &mut buf).unwrap();
        let rows = read_records(buf.as_slice()).unwrap();
        assert_eq!(rows.len(), report.records.len());
        assert_eq!(state_from_rows(&rows), report.state);
        assert_eq!(distributions_from_rows(&rows).unwrap(), report.distributions);
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("# lower\t5\n"), "{text}");
        assert!(text.contains("# upper\t9\n"), "{text}");
    }

    #[test]
    fn json_records_are_readable() {
        let report = cycle_report();
        let mut buf = Vec::new();
        write_report_json(&report, &mut buf).unwrap();
        let rows = read_records(buf.as_slice()).unwrap();
        assert_eq!(state_from_rows(&rows), report.state);
        let back: RunReport<u32> = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back.records, report.records);
    }

    #[test]
    fn malformed_records_report_line() {
        let text = "# iter\tmethod\tstart\tvalue\n1\ttree_upper\t0\t3\n2\tbogus\t0\t3\n";
        match read_records(text.as_bytes()) {
            Err(Error::RecordFormat { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            read_records("1\ttree_upper\t0\n".as_bytes()),
            Err(Error::RecordFormat { line: 1, .. })
        ));
    }

    #[test]
    fn distribution_table_format() {
        let d = summarize_samples([(Method::TreeUpper, 1), (Method::TreeUpper, 2)]).unwrap();
        let mut buf = Vec::new();
        write_distributions_tsv(&d, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            format!(
                "{DISTRIBUTION_HEADER}\ntree_upper\t0\t0\t0.000000\ntree_upper\t1\t1\t0.500000\n\
                 tree_upper\t2\t2\t1.000000\ntree_upper\t3\t2\t1.000000\n"
            )
        );
    }
}
