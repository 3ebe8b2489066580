//! `tkk`: verification suites, bracket and map evaluation, and module windows.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use tkk_core::expr::{apply_map, eval_bracket, Algebra, MapName};
use tkk_core::lab::verma::gram_rank_stabilized;
use tkk_core::lab::{validate_triple, WeightData};
use tkk_core::GaussRational;
use tkk_verify::{reproduce, run_suite, Suite};

const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "tkk", version, about = "Exact checks for the baby TKK algebra and its conformal realization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write its report.
    Verify {
        /// Suite name; `tkk suites` lists them.
        suite: String,
        /// Coordinate bound of the exhaustive window.
        #[arg(long, allow_hyphen_values = true)]
        bound: Option<i64>,
        /// Degree cap N of module windows.
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<i64>,
        /// Loop band W of module windows.
        #[arg(long, allow_hyphen_values = true)]
        band: Option<i64>,
        /// Number of random samples.
        #[arg(long)]
        samples: Option<u64>,
        /// Seed of the sampling stream.
        #[arg(long)]
        seed: Option<u64>,
        /// Report file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the canonical bracket of two elements.
    Bracket { algebra: String, lhs: String, rhs: String },
    /// Apply phi, phi-inv, ig, ig-inv or sigma to an element.
    Map { name: String, element: String },
    /// Gram ranks of a highest-weight module window over increasing bands.
    Module {
        /// λ as a comma-separated list.
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<u64>,
        /// μ as a comma-separated list.
        #[arg(long, value_delimiter = ',')]
        mu: Vec<u64>,
        /// Evaluation points c as a comma-separated list of scalars.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        c: Vec<String>,
        #[arg(long, default_value_t = 2)]
        degree: i64,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        bands: Vec<i64>,
    },
    /// Re-evaluate a counterexample record: suite, check name and its inputs.
    Reproduce { suite: String, check: String, inputs: Vec<String> },
    /// List the suites with their default parameters.
    Suites,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify { suite, bound, degree, band, samples, seed, out } => {
            let suite: Suite = match suite.parse() {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            let mut params = suite.defaults();
            params.bound = bound.unwrap_or(params.bound);
            params.degree = degree.unwrap_or(params.degree);
            params.band = band.unwrap_or(params.band);
            params.samples = samples.unwrap_or(params.samples);
            params.seed = seed.unwrap_or(params.seed);
            let start = Instant::now();
            let report = match run_suite(suite, params) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            let written = match &out {
                Some(path) => File::create(path).and_then(|f| {
                    let mut w = BufWriter::new(f);
                    report.write_to(&mut w)?;
                    w.flush()
                }),
                None => report.write_to(&mut io::stdout().lock()),
            };
            if let Err(e) = written {
                return usage(format!("writing the report: {e}"));
            }
            let status = report.status();
            eprintln!(
                "{suite}: {:?}, {}/{} passed, wall time {:.2}s",
                status,
                report.passed(),
                report.attempted(),
                start.elapsed().as_secs_f64()
            );
            ExitCode::from(status.exit_code() as u8)
        }
        Command::Bracket { algebra, lhs, rhs } => {
            let result = algebra.parse::<Algebra>().and_then(|alg| eval_bracket(alg, &lhs, &rhs));
            match result {
                Ok(e) => {
                    println!("{e}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Command::Map { name, element } => match name.parse::<MapName>().and_then(|m| apply_map(m, &element)) {
            Ok(e) => {
                println!("{e}");
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
        Command::Module { lambda, mu, c, degree, bands } => module(lambda, mu, c, degree, bands),
        Command::Reproduce { suite, check, inputs } => {
            let suite: Suite = match suite.parse() {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            match reproduce(suite, &check, &inputs) {
                Ok(Ok(())) => {
                    println!("passes");
                    ExitCode::SUCCESS
                }
                Ok(Err(detail)) => {
                    println!("fails: {detail}");
                    ExitCode::from(1)
                }
                Err(e) => usage(e),
            }
        }
        Command::Suites => {
            for s in Suite::ALL {
                let p = s.defaults();
                println!(
                    "{:<18} bound={} degree={} band={} samples={} seed={}",
                    s.name(),
                    p.bound,
                    p.degree,
                    p.band,
                    p.samples,
                    p.seed
                );
            }
            ExitCode::SUCCESS
        }
    }
}

#[derive(Serialize)]
struct DegreeLine<'a> {
    record: &'a str,
    degree: i64,
    bands: Vec<i64>,
    verma: Vec<usize>,
    rank: Vec<usize>,
    monotone: bool,
    stabilized: bool,
}

fn module(lambda: Vec<u64>, mu: Vec<u64>, c: Vec<String>, degree: i64, bands: Vec<i64>) -> ExitCode {
    let c: Result<Vec<GaussRational>, _> = c.iter().map(|s| s.parse::<GaussRational>()).collect();
    let c = match c {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let w = WeightData::new(lambda, mu, c);
    let check = validate_triple(&w, w.level());
    if !check.valid {
        return usage(format!("invalid triple {w}: {}", check.diagnostics.join("; ")));
    }
    if degree < 0 || bands.iter().any(|&b| b < 0) || bands.is_empty() {
        return usage("degree and bands must be nonnegative, with at least one band");
    }
    let summaries = gram_rank_stabilized(&w, degree, &bands);
    let mut out = io::stdout().lock();
    let header = serde_json::json!({"record": "module", "triple": w.to_string(), "level": w.level()});
    let _ = writeln!(out, "{header}");
    let mut settled = true;
    for s in &summaries {
        settled &= s.stabilized && s.monotone;
        let line = DegreeLine {
            record: "degree",
            degree: s.degree,
            bands: s.entries.iter().map(|e| e.band).collect(),
            verma: s.entries.iter().map(|e| e.verma_dim).collect(),
            rank: s.entries.iter().map(|e| e.gram_rank).collect(),
            monotone: s.monotone,
            stabilized: s.stabilized,
        };
        let _ = serde_json::to_writer(&mut out, &line);
        let _ = writeln!(out);
    }
    if settled {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
