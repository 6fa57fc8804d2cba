use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use voawb_cli::suites::SUITES;
use voawb_cli::{run, ConfigError, RunConfig};

#[derive(Parser)]
#[command(name = "voawb", version, about = "Exact checks for the sl2 vertex algebroid and its envelope")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run check suites and write a report.
    Run(RunArgs),
    /// List the available suites.
    ListSuites,
}

#[derive(Args)]
struct RunArgs {
    /// Flat `key = value` config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    algebra: Option<String>,
    /// `formal` or a rational `p/q`.
    #[arg(long)]
    level: Option<String>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    max_weight: Option<u32>,
    /// Series order for the kz and triple suites.
    #[arg(long)]
    order: Option<usize>,
    /// Suite name; repeatable, or comma separated. `all` selects every suite.
    #[arg(long = "suite")]
    suites: Vec<String>,
    /// json, csv or text.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Record wall-clock milliseconds (reports are then no longer byte-stable).
    #[arg(long)]
    timings: bool,
}

fn configure(a: &RunArgs) -> Result<RunConfig, ConfigError> {
    let mut cfg = RunConfig::default();
    if let Some(p) = &a.config {
        let text = std::fs::read_to_string(p).map_err(|e| ConfigError::Io(format!("{}: {e}", p.display())))?;
        cfg.apply_text(&text)?;
    }
    let mut set = |k: &str, v: Option<String>| v.map_or(Ok(()), |v| cfg.set(k, &v));
    set("algebra", a.algebra.clone())?;
    set("level", a.level.clone())?;
    set("max-degree", a.max_degree.map(|x| x.to_string()))?;
    set("max-weight", a.max_weight.map(|x| x.to_string()))?;
    set("order", a.order.map(|x| x.to_string()))?;
    set("format", a.format.clone())?;
    set("out", a.out.as_ref().map(|p| p.display().to_string()))?;
    set("seed", a.seed.map(|x| x.to_string()))?;
    set("jobs", a.jobs.map(|x| x.to_string()))?;
    for s in &a.suites {
        if s == "all" {
            for d in SUITES {
                cfg.add_suite(d.name)?;
            }
        } else {
            cfg.set("suite", s)?;
        }
    }
    if a.timings {
        cfg.timings = true;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::ListSuites => {
            for d in SUITES {
                let g = if d.generic { " (formal level)" } else { "" };
                println!("{:<20} {}{g}", d.name, d.about);
            }
            ExitCode::SUCCESS
        }
        Cmd::Run(args) => {
            let cfg = match configure(&args) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let report = run(&cfg);
            let text = report.emit(cfg.format);
            match &cfg.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, text) {
                        eprintln!("error: cannot write {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(report.exit_code() as u8)
        }
    }
}
