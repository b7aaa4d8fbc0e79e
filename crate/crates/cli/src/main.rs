//! Command-line front end: every verification as a reproducible command
//! with deterministic seeding, human-readable text output, and an optional
//! JSON report.
//!
//! Exit codes: 0 = all verifications passed, 1 = a mathematical verdict was
//! negative, 2 = degenerate input or sampling exhausted.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use osculant_cli::report::Report;
use osculant_cli::runners::{
    run_polarity_rnc, run_search_cubics, run_segre_parity, run_segre_section, run_splitting,
    run_togliatti, run_veronese, PolarityRncOptions, SegreParityOptions, SegreSectionOptions,
    SplittingOptions, SystemSpec, TogliattiModel, TogliattiOptions, TogliattiVariety,
    VeroneseOptions,
};
use osculant_cli::scenario::Scenario;

#[derive(Parser)]
#[command(name = "osculant", version, about = "Exact certification of osculating-space geometry: Veronese projections, Segre sections, Laplace equations and their common points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Seed for the deterministic generator
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Minimum number of sampled general points
    #[arg(long, default_value_t = 3)]
    samples: usize,
    /// Write the JSON report to this path
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Projection,
    SegreSection,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarietyArg {
    Togliatti,
    VeroneseFull,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    Togliatti,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Certify the common point of the 2-osculating hyperplanes of the
    /// Togliatti surface and cross-check the triple-line hyperplane formula
    Togliatti {
        #[command(flatten)]
        common: CommonArgs,
        /// Which model of the surface to verify
        #[arg(long, value_enum, default_value_t = ModelArg::Projection)]
        model: ModelArg,
        /// Negative control: run on the unprojected Veronese instead
        #[arg(long, value_enum, default_value_t = VarietyArg::Togliatti)]
        variety: VarietyArg,
    },
    /// Project v_{2n+1}(P^2) from 2n+1 general Veronese points and certify
    /// the common point of the 2n-tangent hyperplanes
    Veronese {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Override the projection center size (hypothesis-violation control)
        #[arg(long)]
        center_size: Option<usize>,
        /// Run symbolic certification (on by default; disable with
        /// --certify=false for sampled-only ranks)
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        certify: bool,
        /// Accept parameters beyond the desk-scale caps
        #[arg(long)]
        force: bool,
    },
    /// Certify, as polynomial identities, the common point of the 2n-tangent
    /// hyperplanes of a general hyperplane section of Seg(1, N), N odd
    SegreSection {
        #[command(flatten)]
        common: CommonArgs,
        /// Number N of projective-line factors (odd, >= 3)
        #[arg(long = "n-factors", default_value_t = 3)]
        n_factors: usize,
        /// Accept parameters beyond the desk-scale caps
        #[arg(long)]
        force: bool,
    },
    /// Check that products of d general binary forms lie in the span of the
    /// d-th powers exactly when d is odd
    PolarityRnc {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        /// Number of random tuples to test
        #[arg(long, default_value_t = 100)]
        tuples: usize,
    },
    /// Exhaustive search over the 210 monomial cubic 4-subsets for systems
    /// satisfying the line-divisibility property
    SearchCubics {
        /// Write the JSON report to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Splitting type of the kernel bundle of a cubic system on general lines
    Splitting {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value_t = SystemArg::Togliatti)]
        system: SystemArg,
        /// Number of random lines to sample
        #[arg(long, default_value_t = 5)]
        seeds: usize,
    },
    /// Verify the symmetry/antisymmetry, involution and pairing parity of
    /// the tensor powers m^(⊗n)
    SegreParity {
        /// Largest tensor power to check (<= 6)
        #[arg(long = "n-max", default_value_t = 6)]
        n_max: usize,
        /// Write the JSON report to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Execute a scenario file (JSON with the Scenario schema)
    Run {
        /// Path to the scenario file
        scenario: PathBuf,
        /// Write the JSON report to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn emit(report: &Report, json: &Option<PathBuf>) -> Result<i32> {
    println!("command: {}", report.command);
    println!("seed:    {}", report.seed);
    println!(
        "results: {}",
        serde_json::to_string_pretty(&report.results).unwrap()
    );
    println!(
        "verdict: {} (exit {})",
        serde_json::to_string(&report.verdict).unwrap().trim_matches('"'),
        report.exit_code()
    );
    if let Some(path) = json {
        fs::write(path, serde_json::to_string_pretty(report).unwrap())
            .with_context(|| format!("writing report to {}", path.display()))?;
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = (|| -> Result<i32> {
        match cli.command {
            Command::Togliatti { common, model, variety } => {
                let report = run_togliatti(&TogliattiOptions {
                    seed: common.seed,
                    samples: common.samples,
                    model: match model {
                        ModelArg::Projection => TogliattiModel::Projection,
                        ModelArg::SegreSection => TogliattiModel::SegreSection,
                    },
                    variety: match variety {
                        VarietyArg::Togliatti => TogliattiVariety::Togliatti,
                        VarietyArg::VeroneseFull => TogliattiVariety::VeroneseFull,
                    },
                    hyperplane: None,
                });
                emit(&report, &common.json)
            }
            Command::Veronese { common, n, center_size, certify, force } => {
                let report = run_veronese(&VeroneseOptions {
                    n,
                    seed: common.seed,
                    samples: common.samples,
                    center_size,
                    certify,
                    force,
                    forms: None,
                });
                emit(&report, &common.json)
            }
            Command::SegreSection { common, n_factors, force } => {
                let report = run_segre_section(&SegreSectionOptions {
                    n_factors,
                    seed: common.seed,
                    force,
                    hyperplane: None,
                });
                emit(&report, &common.json)
            }
            Command::PolarityRnc { common, degree, tuples } => {
                let report = run_polarity_rnc(&PolarityRncOptions {
                    degree,
                    tuples,
                    seed: common.seed,
                });
                emit(&report, &common.json)
            }
            Command::SearchCubics { json } => emit(&run_search_cubics(), &json),
            Command::Splitting { common, system, seeds } => {
                let report = run_splitting(&SplittingOptions {
                    system: match system {
                        SystemArg::Togliatti => SystemSpec::Togliatti,
                        SystemArg::Random => SystemSpec::Random,
                    },
                    seeds,
                    seed: common.seed,
                });
                emit(&report, &common.json)
            }
            Command::SegreParity { n_max, json } => {
                emit(&run_segre_parity(&SegreParityOptions { n_max }), &json)
            }
            Command::Run { scenario, json } => {
                let text = fs::read_to_string(&scenario)
                    .with_context(|| format!("reading {}", scenario.display()))?;
                let report = Scenario::from_json(&text)?.execute()?;
                emit(&report, &json)
            }
        }
    })();
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
