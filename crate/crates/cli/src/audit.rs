use std::fs;

use hilbcat::laws::{render_json, render_text, resolve_suites, run_suite, AuditReport, InstanceGenerator};
use rayon::prelude::*;

use crate::{AuditArgs, Failure};

/// Validated audit settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub suites: Vec<&'static str>,
    pub settings: InstanceGenerator,
    pub samples: usize,
    pub jobs: usize,
}

impl Config {
    pub fn from_args(args: &AuditArgs) -> Result<Config, Failure> {
        if args.max_dim == 0 {
            return Err(Failure::Usage("--max-dim must be at least 1".into()));
        }
        if args.entry_height == 0 {
            return Err(Failure::Usage("--entry-height must be at least 1".into()));
        }
        let jobs = match args.jobs {
            Some(0) => return Err(Failure::Usage("--jobs must be at least 1".into())),
            Some(n) => n,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Ok(Config {
            suites: resolve_suites(&args.suites)?,
            settings: InstanceGenerator {
                seed: args.seed,
                max_dim: args.max_dim,
                entry_height: args.entry_height,
            },
            samples: args.samples,
            jobs,
        })
    }
}

pub fn run(args: &AuditArgs) -> Result<(), Failure> {
    let config = Config::from_args(args)?;
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let reports: Vec<AuditReport> = pool.install(|| {
        config
            .suites
            .par_iter()
            .map(|suite| run_suite(suite, args.ring, &config.settings, config.samples))
            .collect::<hilbcat::Result<_>>()
    })?;
    let text = render_text(&reports);
    print!("{text}");
    if let Some(dir) = &args.out {
        fs::write(dir.join("audit.txt"), &text)?;
        fs::write(dir.join("audit.json"), render_json(&reports))?;
    }
    if reports.iter().all(AuditReport::is_ok) {
        Ok(())
    } else {
        Err(Failure::Properties)
    }
}
