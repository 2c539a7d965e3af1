use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use kerdocklab::codebook::{
    build_bch_c13, build_kerdock, build_rm1, build_trace_dual, extend_complement, gold_exponent_ok, kernel, puncture,
    shorten, BchCode,
};
use kerdocklab::components::{LinearView, MinDistanceGraph};
use kerdocklab::design::design_strength;
use kerdocklab::harness::{verify_all, Effort};
use kerdocklab::scheme::{restriction_scheme_check, SchemeMode};
use kerdocklab::storage::{read_code, write_code};
use kerdocklab::{Code, Error, Result};

#[derive(Parser)]
#[command(name = "kerdocklab", version, about = "Build and analyze Kerdock, Reed-Muller and BCH-related binary codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write it to a code file.
    Build {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        m: u32,
        /// Exponent of the second trace term (gold-dual only).
        #[arg(long)]
        e: Option<u32>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Weight distribution, distance set or kernel of a stored code.
    Analyze {
        #[arg(value_enum)]
        what: AnalyzeArg,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Design strength of the codewords of one weight.
    Design {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        max_t: usize,
    },
    /// Check whether the distance relations on the code form an association scheme.
    Scheme {
        #[arg(long = "in")]
        input: PathBuf,
        /// Check random pairs only (required above 4096 words).
        #[arg(long, requires = "seed")]
        sampled: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// i-components of the minimum-distance graph.
    Components(ComponentsArgs),
    /// Run the claim registry and print the report.
    VerifyAll {
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        #[arg(long)]
        full: bool,
        /// Also write the report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Puncture, shorten or complement-extend a stored code.
    Derive {
        #[arg(value_enum)]
        op: DeriveArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, required_if_eq_any = [("op", "puncture"), ("op", "shorten")])]
        coordinate: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
#[group(id = "target", required = true, args = ["coordinate", "all"])]
struct ComponentsArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    coordinate: Option<usize>,
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = MethodArg::Graph)]
    method: MethodArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Rm1,
    Kerdock,
    Bch13,
    Bch13Dual,
    GoldDual,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnalyzeArg {
    Weights,
    Distances,
    Kernel,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Graph,
    Span,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeriveArg {
    Puncture,
    Shorten,
    Extend,
}

fn print<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

fn summary(code: &Code, out: &Path) -> serde_json::Value {
    json!({ "family": code.family(), "n": code.n(), "words": code.len(), "out": out })
}

fn build(family: FamilyArg, m: u32, e: Option<u32>, out: &Path) -> Result<()> {
    let code = match family {
        FamilyArg::Rm1 => build_rm1(m)?,
        FamilyArg::Kerdock => build_kerdock(m)?,
        FamilyArg::Bch13Dual => build_trace_dual(m, 3)?,
        FamilyArg::GoldDual => {
            let e = e.ok_or_else(|| Error::InvalidArgument("gold-dual needs --e".into()))?;
            if !gold_exponent_ok(m, e) {
                return Err(Error::NotGold { m, e });
            }
            build_trace_dual(m, e)?
        }
        FamilyArg::Bch13 => match build_bch_c13(m)? {
            BchCode::Enumerated { code, .. } => code,
            BchCode::Described(parity) => {
                eprintln!(
                    "note: C(1,3) at m = {m} has dimension {} and is too large to enumerate; writing its parity-check description as JSON",
                    parity.dimension()
                );
                let text = serde_json::to_string_pretty(&parity).expect("parity check serializes");
                std::fs::write(out, &text)?;
                print(&json!({ "family": "bch13", "m": m, "n": parity.n(), "dimension": parity.dimension(), "parity_check": parity, "out": out }));
                return Ok(());
            }
        },
    };
    write_code(&code, out)?;
    print(&summary(&code, out));
    Ok(())
}

fn components(args: &ComponentsArgs) -> Result<()> {
    let code = read_code(&args.input)?;
    let coords: Vec<usize> = match args.coordinate {
        Some(i) => vec![i],
        None => (0..code.n()).collect(),
    };
    let reports = match args.method {
        MethodArg::Graph => {
            let graph = MinDistanceGraph::new(&code)?;
            coords.iter().map(|&i| graph.components(i)).collect::<Result<Vec<_>>>()?
        }
        MethodArg::Span => {
            let view = LinearView::new(&code)?;
            coords.iter().map(|&i| view.components(i)).collect::<Result<Vec<_>>>()?
        }
    };
    if args.all {
        print(&reports);
    } else {
        print(&reports[0]);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build { family, m, e, out } => build(family, m, e, &out)?,
        Command::Analyze { what, input } => {
            let code = read_code(&input)?;
            match what {
                AnalyzeArg::Weights => print(&code.weight_distribution()),
                AnalyzeArg::Distances => print(&code.distance_set()?),
                AnalyzeArg::Kernel => {
                    let ker = kernel(&code)?;
                    let words: Vec<String> = ker.codewords().map(|w| w.to_string()).collect();
                    print(&json!({
                        "size": ker.len(),
                        "dimension": ker.len().trailing_zeros(),
                        "words": words,
                    }));
                }
            }
        }
        Command::Design { input, weight, max_t } => {
            let code = read_code(&input)?;
            let blocks = code.words_of_weight(weight);
            if blocks.is_empty() {
                return Err(Error::InvalidArgument(format!("no codewords of weight {weight}")));
            }
            print(&design_strength(&blocks, max_t)?);
        }
        Command::Scheme { input, sampled, seed, trials } => {
            let code = read_code(&input)?;
            let mode = if sampled {
                SchemeMode::Sampled {
                    seed: seed.ok_or(Error::MissingSeed)?,
                    trials,
                }
            } else {
                SchemeMode::Full
            };
            print(&restriction_scheme_check(&code, mode)?);
        }
        Command::Components(args) => components(&args)?,
        Command::VerifyAll { quick: _, full, json } => {
            let report = verify_all(if full { Effort::Full } else { Effort::Quick });
            let text = report.to_json();
            if let Some(path) = json {
                std::fs::write(path, &text)?;
            }
            println!("{text}");
            for claim in report.failures() {
                eprintln!("FAIL {}", claim.id);
            }
            if !report.all_passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Derive { op, input, coordinate, out } => {
            let code = read_code(&input)?;
            let derived = match op {
                DeriveArg::Puncture => puncture(&code, coordinate.expect("required by clap"))?,
                DeriveArg::Shorten => shorten(&code, coordinate.expect("required by clap"))?,
                DeriveArg::Extend => {
                    let ext = extend_complement(&code)?;
                    if !ext.precondition_holds {
                        eprintln!("note: distances {:?} occur both as i and n - i", ext.overlap);
                    }
                    ext.code
                }
            };
            write_code(&derived, &out)?;
            print(&summary(&derived, &out));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("KERDOCKLAB_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            }
            _ => eprintln!("warning: ignoring KERDOCKLAB_THREADS={threads}"),
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
