//! `gw`: tables of virtual and real structure constants, verification
//! suites and cache management.

mod cache;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use gw_core::correlator::CorrelatorEngine;
use gw_core::gauss_manin::{eliminate_to_flat, matrix_to_json, operator_to_json, truncated_system};
use gw_core::mirror::{real_structure_constant, window};
use gw_core::verify::{self, Suite};
use gw_core::{format_rational, Error};
use serde_json::json;

use cache::CachedTable;
use output::{Format, Record};

#[derive(Parser)]
#[command(name = "gw", version, about = "Exact structure constants of degree-k hypersurfaces in CP^{N-1}")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Directory holding vsc_N{N}_k{k}.json table caches.
    #[arg(long, global = true, env = "GW_CACHE_DIR", default_value = "cache")]
    cache_dir: PathBuf,

    /// Compute everything in memory; never read or write the cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest degree any command will compute.
    #[arg(long, global = true, default_value_t = 8)]
    max_degree: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Virtual structure constants L~^{N,k,d}_m for d = 1..=dmax.
    Vsc {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        dmax: u32,
    },
    /// Real structure constants L^{N,k,d}_n. Without --n, every n in the window.
    Real {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
        #[arg(long = "n", value_delimiter = ',', allow_negative_numbers = true)]
        points: Vec<i64>,
    },
    /// Run a named verification suite; exit 1 on the first failed check.
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
    },
    /// Flat derivative operator and t-connection matrix, as JSON.
    Flat {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        dmax: u32,
    },
    /// A single v or w correlator, optionally with its reduction tree.
    Correlator {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
        /// Exponents of the e^a insertions, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        exps: Vec<i64>,
        #[arg(long, value_enum, default_value_t = FamilyArg::V)]
        family: FamilyArg,
        /// Print the reduction tree to this depth.
        #[arg(long)]
        explain: Option<usize>,
    },
    /// Inspect or empty the cache directory.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    V,
    W,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    List,
    Clear,
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(Suite::ALL.map(Suite::id))
}

enum Failure {
    Usage(String),
    Core(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Core(e) => match e {
                Error::UnsupportedRegime { .. }
                | Error::OutOfRange { .. }
                | Error::InvalidRational { .. }
                | Error::UnknownCombination(_) => 2,
                Error::Io { .. } | Error::CacheParse { .. } | Error::CacheVersion { .. } | Error::CacheMismatch { .. } => 3,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Verification(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let dir = (!cli.no_cache).then_some(cli.cache_dir.as_path());
    let cap = |d: u32| {
        if d > cli.max_degree {
            Err(Failure::Usage(format!("degree {d} exceeds the cap {} (raise it with --max-degree)", cli.max_degree)))
        } else {
            Ok(())
        }
    };
    match &cli.command {
        Command::Vsc { n, k, dmax } => {
            cap(*dmax)?;
            let cached = CachedTable::open(dir, *n, *k)?;
            let mut records = Vec::new();
            for d in 1..=*dmax {
                for (m, v) in cached.table.row(d).iter().enumerate() {
                    records.push(Record::new(*n, *k, d, m as i64, v.clone()));
                }
            }
            cached.persist()?;
            Ok(output::constants(cli.format, *n, *k, &records))
        }
        Command::Real { n, k, d, points } => {
            if *d == 0 {
                return Err(Failure::Usage("--d must be at least 1".into()));
            }
            cap(*d)?;
            let cached = CachedTable::open(dir, *n, *k)?;
            let (lo, hi) = window(*n, *k, *d);
            let mut points = if points.is_empty() { (lo..=hi).collect() } else { points.clone() };
            points.sort_unstable();
            points.dedup();
            let engine = CorrelatorEngine::flat_family_to(&cached.table, *d)?;
            let mut records = Vec::new();
            for p in points {
                records.push(Record::new(*n, *k, *d, p, real_structure_constant(&engine, *d, p)?));
            }
            cached.persist()?;
            Ok(output::real(cli.format, *n, *k, *d, (lo, hi), &records))
        }
        Command::Verify { suite } => {
            let suite = Suite::from_str(suite)?;
            let report = verify::run(suite)?;
            let text = output::report(cli.format, &report);
            match report.first_failure() {
                None => Ok(text),
                Some(c) => {
                    eprintln!("{suite}: first failing check {}\n  got  {}\n  want {}", c.name, c.lhs, c.rhs);
                    Err(Failure::Verification(text))
                }
            }
        }
        Command::Flat { n, k, dmax } => {
            cap(*dmax)?;
            let cached = CachedTable::open(dir, *n, *k)?;
            let flat = eliminate_to_flat(&truncated_system(&cached.table, *dmax)?)?;
            cached.persist()?;
            let doc = json!({
                "N": n,
                "k": k,
                "truncation": dmax,
                "flat_derivative": operator_to_json(&flat.flat_derivative),
                "t_connection": matrix_to_json(&flat.t_connection),
            });
            Ok(serde_json::to_string_pretty(&doc).expect("json serialisation") + "\n")
        }
        Command::Correlator { n, k, d, exps, family, explain } => {
            cap(*d)?;
            let cached = CachedTable::open(dir, *n, *k)?;
            let engine = match family {
                FamilyArg::V => CorrelatorEngine::virtual_family(&cached.table),
                FamilyArg::W => CorrelatorEngine::flat_family_to(&cached.table, (*d).max(1))?,
            };
            let text = match explain {
                Some(depth) => engine.explain(exps, *d as i64, *depth)? + "\n",
                None => format_rational(&engine.correlator(exps, *d as i64)?) + "\n",
            };
            cached.persist()?;
            Ok(text)
        }
        Command::Cache { action } => {
            let text = match action {
                CacheAction::List => cache::list(&cli.cache_dir)?
                    .into_iter()
                    .map(|(name, degrees)| {
                        let ds: Vec<String> = degrees.iter().map(u32::to_string).collect();
                        format!("{name}  d = {}\n", ds.join(","))
                    })
                    .collect(),
                CacheAction::Clear => format!("removed {} file(s)\n", cache::clear(&cli.cache_dir)?),
            };
            Ok(text)
        }
    }
}
