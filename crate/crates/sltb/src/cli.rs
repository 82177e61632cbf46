use clap::Parser;
use std::path::PathBuf;

use subjective_logic::graphical::DiscountVariant;
use trust_sim::SimConfig;

fn parse_variant(s: &str) -> Result<DiscountVariant, String> {
    s.parse()
}

/// Runs seeded discount-operator comparison experiments over a grid of
/// network densities and bootstrap lengths, or re-analyzes a persisted
/// records file.
#[derive(Debug, Parser)]
#[command(name = "sltb", version)]
pub struct Cli {
    /// Agents per network.
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
    pub agents: u32,

    /// Connection probabilities in percent, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        default_values_t = vec![5, 10, 15, 20, 25],
        value_parser = clap::value_parser!(u32).range(0..=100)
    )]
    pub pl: Vec<u32>,

    /// Bootstrap exchanges per neighbor, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        default_values_t = vec![2, 5, 8, 11, 14, 17, 20, 23, 26, 29],
        value_parser = clap::value_parser!(u32).range(1..)
    )]
    pub nb: Vec<u32>,

    /// Independent network draws per grid cell.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub runs: u32,

    /// Explorations per network.
    #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u32).range(1..))]
    pub explorations: u32,

    /// Candidate discount operators to evaluate, comma separated
    /// (subset of naive,g1,g2,g3).
    #[arg(
        long,
        value_delimiter = ',',
        default_values_t = DiscountVariant::ALL,
        value_parser = parse_variant
    )]
    pub candidates: Vec<DiscountVariant>,

    /// Master seed; every random stream derives from it.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Worker threads (defaults to all cores).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,

    /// Output directory (overridden by the SLTB_OUT environment variable).
    #[arg(long, default_value = "out")]
    pub out: PathBuf,

    /// Recompute the summary outputs from an existing records CSV
    /// instead of simulating.
    #[arg(long, value_name = "FILE")]
    pub summarize: Option<PathBuf>,

    /// Redraw the bootstrap evidence before every exploration instead
    /// of sharing one bootstrap per network.
    #[arg(long)]
    pub rebootstrap: bool,
}

/// Expands the command line into the experiment grid: the cross
/// product of runs, connection probabilities, bootstrap lengths, and
/// candidates, in that nesting order. Duplicate list entries are used
/// once.
pub fn build_grid(cli: &Cli) -> Vec<SimConfig> {
    fn dedup<T: Copy + PartialEq>(values: &[T]) -> Vec<T> {
        let mut seen = Vec::new();
        for &v in values {
            if !seen.contains(&v) {
                seen.push(v);
            }
        }
        seen
    }
    let pl = dedup(&cli.pl);
    let nb = dedup(&cli.nb);
    let candidates = dedup(&cli.candidates);
    let mut grid = Vec::new();
    for run_id in 0..cli.runs {
        for &pl_percent in &pl {
            for &n_bootstrap in &nb {
                for &candidate in &candidates {
                    grid.push(SimConfig {
                        n_agents: cli.agents,
                        pl_percent,
                        n_bootstrap,
                        n_explorations: cli.explorations,
                        candidate,
                        master_seed: cli.seed,
                        run_id,
                        rebootstrap_each_exploration: cli.rebootstrap,
                    });
                }
            }
        }
    }
    grid
}
