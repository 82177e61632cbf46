use serde::Serialize;
use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use sim_stats::HistogramBin;
use trust_sim::{ExplorationRecord, CSV_HEADER};

use crate::analysis::{AggregateRow, CandidateSummary};
use crate::error::AppError;

/// 17 significant digits: enough to round-trip any f64 exactly.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_records(path: &Path, records: &[ExplorationRecord]) -> Result<(), AppError> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{CSV_HEADER}")?;
    for rec in records {
        writeln!(w, "{}", rec.to_csv_row())?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a records file back, validating the exact header line, the
/// row schema, and that distance fields are present exactly on
/// reachable rows.
pub fn read_records(path: &Path) -> Result<Vec<ExplorationRecord>, AppError> {
    let mut reader = BufReader::new(File::open(path)?);
    let mut header = String::new();
    reader.read_line(&mut header)?;
    if header.trim_end_matches(['\r', '\n']) != CSV_HEADER {
        return Err(AppError::Schema(format!(
            "expected header {CSV_HEADER:?}, found {:?}",
            header.trim_end_matches(['\r', '\n'])
        )));
    }
    let mut csv_reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(reader);
    let mut records = Vec::new();
    for row in csv_reader.deserialize::<ExplorationRecord>() {
        let rec = row.map_err(|e| AppError::Schema(e.to_string()))?;
        let distances = [
            rec.d_g_baseline,
            rec.d_g_candidate,
            rec.d_e_baseline,
            rec.d_e_candidate,
        ];
        if distances.iter().any(|d| d.is_some() != rec.reachable) {
            return Err(AppError::Schema(format!(
                "agent {} row marked reachable={} but distance fields disagree",
                rec.agent, rec.reachable
            )));
        }
        records.push(rec);
    }
    Ok(records)
}

pub fn write_summary(
    path: &Path,
    summary: &BTreeMap<String, CandidateSummary>,
) -> Result<(), AppError> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, summary).map_err(io::Error::other)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

pub fn write_aggregates(path: &Path, rows: &[AggregateRow]) -> Result<(), AppError> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "pl_or_nb,axis_value,candidate,metric,mean,stddev")?;
    for row in rows {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            row.axis,
            row.axis_value,
            row.candidate.as_tag(),
            row.metric,
            row.mean.map(fmt_f64).unwrap_or_default(),
            row.stddev.map(fmt_f64).unwrap_or_default(),
        )?;
    }
    w.flush()?;
    Ok(())
}

/// Writes one CSV per histogram into `dir` and returns the file names.
pub fn write_histograms(
    dir: &Path,
    histograms: &[(String, Vec<HistogramBin>)],
) -> Result<Vec<String>, AppError> {
    let mut names = Vec::new();
    for (name, bins) in histograms {
        let mut w = BufWriter::new(File::create(dir.join(name))?);
        writeln!(w, "bin_low,bin_high,count")?;
        for (low, high, count) in bins {
            writeln!(w, "{},{},{count}", fmt_f64(*low), fmt_f64(*high))?;
        }
        w.flush()?;
        names.push(name.clone());
    }
    Ok(names)
}

/// Echo of the resolved command line that produced a run.
#[derive(Debug, Serialize)]
pub struct GridEcho {
    pub agents: u32,
    pub pl: Vec<u32>,
    pub nb: Vec<u32>,
    pub runs: u32,
    pub explorations: u32,
    pub candidates: Vec<String>,
    pub rebootstrap: bool,
}

#[derive(Debug, Serialize)]
pub struct CellCount {
    pub run: u32,
    pub pl: u32,
    pub nb: u32,
    pub candidate: String,
    pub records: usize,
}

/// Provenance of one run: what was asked, what was produced, where.
#[derive(Debug, Serialize)]
pub struct Manifest {
    pub library_version: String,
    pub master_seed: u64,
    pub started_unix: u64,
    pub finished_unix: u64,
    pub grid: GridEcho,
    pub cells: Vec<CellCount>,
    pub files: Vec<String>,
}

pub fn write_manifest(path: &Path, manifest: &Manifest) -> Result<(), AppError> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, manifest).map_err(io::Error::other)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}
