//! Experiment runner comparing graphically constructed trust-discount
//! operators against the classical baseline over simulated agent
//! networks, with deterministic seeded output.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod output;

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use trust_sim::{run_experiment, ExplorationRecord};

use crate::cli::{build_grid, Cli};
use crate::error::AppError;
use crate::output::{CellCount, GridEcho, Manifest};

fn unix_now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Writes the analysis artifacts (summary, aggregates, histograms)
/// derived from `records` into `dir`, returning the file names.
fn write_analysis(dir: &Path, records: &[ExplorationRecord]) -> Result<Vec<String>, AppError> {
    let mut files = Vec::new();
    output::write_summary(&dir.join("summary.json"), &analysis::build_summary(records))?;
    files.push("summary.json".to_owned());
    output::write_aggregates(
        &dir.join("aggregates.csv"),
        &analysis::build_aggregates(records),
    )?;
    files.push("aggregates.csv".to_owned());
    files.extend(output::write_histograms(
        dir,
        &analysis::build_histograms(records),
    )?);
    Ok(files)
}

fn run(cli: &Cli) -> Result<(), AppError> {
    let started = unix_now();
    let grid = build_grid(cli);
    fs::create_dir_all(&cli.out)?;
    let progress = |done: usize, total: usize| {
        if done.is_multiple_of(200) || done == total {
            eprintln!("explorations: {done}/{total}");
        }
    };
    let records = match cli.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build()
            .expect("worker pool")
            .install(|| run_experiment(&grid, progress)),
        None => run_experiment(&grid, progress),
    }?;

    output::write_records(&cli.out.join("records.csv"), &records)?;
    let mut files = vec!["records.csv".to_owned()];
    files.extend(write_analysis(&cli.out, &records)?);
    files.push("manifest.json".to_owned());

    let mut counts: BTreeMap<(u32, u32, u32, &str), usize> = BTreeMap::new();
    for rec in &records {
        *counts
            .entry((
                rec.run_id,
                rec.pl_percent,
                rec.n_bootstrap,
                rec.candidate.as_tag(),
            ))
            .or_default() += 1;
    }
    let cells = grid
        .iter()
        .map(|cfg| CellCount {
            run: cfg.run_id,
            pl: cfg.pl_percent,
            nb: cfg.n_bootstrap,
            candidate: cfg.candidate.as_tag().to_owned(),
            records: counts
                .get(&(
                    cfg.run_id,
                    cfg.pl_percent,
                    cfg.n_bootstrap,
                    cfg.candidate.as_tag(),
                ))
                .copied()
                .unwrap_or(0),
        })
        .collect();
    let manifest = Manifest {
        library_version: subjective_logic::VERSION.to_owned(),
        master_seed: cli.seed,
        started_unix: started,
        finished_unix: unix_now(),
        grid: GridEcho {
            agents: cli.agents,
            pl: cli.pl.clone(),
            nb: cli.nb.clone(),
            runs: cli.runs,
            explorations: cli.explorations,
            candidates: cli
                .candidates
                .iter()
                .map(|c| c.as_tag().to_owned())
                .collect(),
            rebootstrap: cli.rebootstrap,
        },
        cells,
        files,
    };
    output::write_manifest(&cli.out.join("manifest.json"), &manifest)
}

fn summarize(records_path: &Path, out_dir: &Path) -> Result<(), AppError> {
    let records = output::read_records(records_path)?;
    fs::create_dir_all(out_dir)?;
    write_analysis(out_dir, &records)?;
    Ok(())
}

/// Entry point behind the binary: either re-analyzes a records file or
/// runs the configured experiment grid.
pub fn execute(cli: &Cli) -> Result<(), AppError> {
    match &cli.summarize {
        Some(records_path) => summarize(records_path, &cli.out),
        None => run(cli),
    }
}
