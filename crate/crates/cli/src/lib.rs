//! Batch driver for the voawb checks: configuration, suites and reports.

pub mod config;
pub mod report;
pub mod suites;

use rayon::prelude::*;

pub use config::{ConfigError, Format, Level, RunConfig};
pub use report::{Record, Report, Status, Summary};

/// Runs the selected suites, up to `jobs` at a time. Records come back in
/// suite-table order regardless of scheduling.
pub fn run(cfg: &RunConfig) -> Report {
    let mut defs: Vec<(usize, &suites::SuiteDef)> = cfg
        .suites
        .iter()
        .filter_map(|s| suites::SUITES.iter().position(|d| d.name == s).map(|i| (i, &suites::SUITES[i])))
        .collect();
    defs.sort_by_key(|(i, _)| *i);
    let work = || defs.par_iter().map(|(_, d)| suites::run_suite(d, cfg)).collect::<Vec<_>>();
    let per_suite = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs.max(1)).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    };
    Report::new(cfg.echo(), per_suite.into_iter().flatten().collect())
}
