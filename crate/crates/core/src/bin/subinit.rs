//! Command-line front end. Exit codes: 0 success, 1 user error,
//! 2 internal invariant violation.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use subinit::bounds::BoundsContext;
use subinit::census::{census_with, CensusOptions};
use subinit::config::point_configuration_of_ideal;
use subinit::fixtures::{
    corank_weight, hypersimplex_config, plucker_ideal, toric_ideal, tree_weight, MatroidBases, Tree,
};
use subinit::io::{
    format_ideal_text, generator_strings, read_config_file, read_ideal_file, to_json, CensusJson, ConfigJson,
    GroebnerJson, MatroidJson, SandwichJson, SubdivisionJson, TreeJson,
};
use subinit::subdivision::regular_subdivision;
use subinit::{Error, MonomialOrder, Result, WeightVector};

#[derive(Parser)]
#[command(name = "subinit", version, about = "Initial ideals bounded by regular subdivisions")]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IdealWeight {
    ideal: PathBuf,
    /// Comma-separated weight vector, entries integers or p/q.
    #[arg(long, allow_hyphen_values = true)]
    w: String,
}

#[derive(Subcommand)]
enum Command {
    /// The point configuration A(I) as JSON.
    Config { ideal: PathBuf },
    /// Generators of in_w I.
    Initial(IdealWeight),
    /// Reduced Gröbner basis as JSON (grevlex, lex, or the w-order).
    Groebner {
        ideal: PathBuf,
        #[arg(long, default_value = "grevlex")]
        order: String,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
    },
    /// The regular subdivision induced by w, as JSON.
    Subdivide {
        /// Point-configuration JSON file.
        config: Option<PathBuf>,
        /// Use A(I) of this ideal file instead.
        #[arg(long, conflicts_with = "config")]
        ideal: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// I_w, in_w I and I^w with exactness flags.
    Bounds(IdealWeight),
    /// Whether I_w = in_w I, with the full report.
    Omega(IdealWeight),
    /// Whether I^w = in_w I, with the full report.
    OmegaStar(IdealWeight),
    /// Samples weights and classifies secondary cones.
    Census {
        ideal: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 10000)]
        range: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Add a pass of weights from a small range to reach cone boundaries.
        #[arg(long)]
        nongeneric: bool,
        #[arg(long)]
        nongeneric_samples: Option<usize>,
        #[arg(long, default_value_t = 2)]
        nongeneric_range: i64,
    },
    /// Generators for the standard example families.
    #[command(subcommand)]
    Fixture(Fixture),
}

#[derive(Subcommand)]
enum Fixture {
    /// Plücker ideal I_{2,n} as an ideal file.
    Plucker {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Hypersimplex Δ(k,n) as a point-configuration file.
    Hypersimplex {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Toric ideal of an integer point configuration.
    Toric { config: PathBuf },
    /// Tree weight over the pairs of [n], from a tree file or a random tree.
    TreeWeight {
        #[arg(long, conflicts_with = "n")]
        tree: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the tree along with the weight as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Corank weight of a matroid: uniform, rank 2 from parallel classes
    /// ("1,2;3;4"), or a bases file.
    Corank {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        uniform: Option<usize>,
        #[arg(long)]
        classes: Option<String>,
        #[arg(long)]
        bases: Option<PathBuf>,
    },
}

fn weight(ideal_nvars: usize, csv: &str) -> Result<WeightVector> {
    let w = WeightVector::parse_csv(csv)?;
    w.check_len(ideal_nvars)?;
    Ok(w)
}

fn sandwich_json(args: &IdealWeight) -> Result<(SandwichJson, bool, bool)> {
    let ideal = read_ideal_file(&args.ideal)?;
    let w = weight(ideal.nvars(), &args.w)?;
    let report = BoundsContext::new(&ideal)?.sandwich(&w)?;
    Ok((SandwichJson::new(&report, ideal.ring()), report.lower_exact, report.upper_exact))
}

fn member_json(member: bool, report: SandwichJson) -> Result<String> {
    to_json(&serde_json::json!({ "member": member, "report": report }))
}

fn run(command: Command) -> Result<String> {
    match command {
        Command::Config { ideal } => {
            let ideal = read_ideal_file(ideal)?;
            to_json(&ConfigJson::from_config(&point_configuration_of_ideal(&ideal)?))
        }
        Command::Initial(args) => {
            let ideal = read_ideal_file(&args.ideal)?;
            let w = weight(ideal.nvars(), &args.w)?;
            Ok(generator_strings(&ideal.initial_ideal(&w)?).join("\n") + "\n")
        }
        Command::Groebner { ideal, order, w } => {
            let ideal = read_ideal_file(ideal)?;
            let order = match (order.as_str(), w) {
                (_, Some(w)) => MonomialOrder::weighted(weight(ideal.nvars(), &w)?, MonomialOrder::grevlex()),
                ("grevlex", None) => MonomialOrder::grevlex(),
                ("lex", None) => MonomialOrder::lex(),
                (other, None) => return Err(Error::Unsupported(format!("order {other:?}"))),
            };
            to_json(&GroebnerJson::new(&ideal.groebner(&order), ideal.ring()))
        }
        Command::Subdivide { config, ideal, w } => {
            let config = match (config, ideal) {
                (Some(c), None) => read_config_file(c)?,
                (None, Some(i)) => point_configuration_of_ideal(&read_ideal_file(i)?)?,
                _ => return Err(Error::Precondition("give a configuration file or --ideal".into())),
            };
            let w = weight(config.len(), &w)?;
            to_json(&SubdivisionJson::new(&regular_subdivision(&config, &w)?, config.labels())?)
        }
        Command::Bounds(args) => to_json(&sandwich_json(&args)?.0),
        Command::Omega(args) => {
            let (report, lower, _) = sandwich_json(&args)?;
            member_json(lower, report)
        }
        Command::OmegaStar(args) => {
            let (report, _, upper) = sandwich_json(&args)?;
            member_json(upper, report)
        }
        Command::Census {
            ideal,
            samples,
            range,
            seed,
            nongeneric,
            nongeneric_samples,
            nongeneric_range,
        } => {
            let ideal = read_ideal_file(ideal)?;
            let ctx = BoundsContext::new(&ideal)?;
            let mut opts = CensusOptions::new(samples, range, seed, nongeneric);
            opts.nongeneric_samples = nongeneric_samples.unwrap_or(samples);
            opts.nongeneric_range = nongeneric_range;
            let result = census_with(&ctx, &opts)?;
            eprintln!(
                "{} classes, {} triangulations, {} of them with exact lower bound",
                result.classes.len(),
                result.triangulation_classes(),
                result.omega_triangulations()
            );
            to_json(&CensusJson::new(&result, ideal.ring().labels()))
        }
        Command::Fixture(f) => fixture(f),
    }
}

fn fixture(f: Fixture) -> Result<String> {
    match f {
        Fixture::Plucker { k, n } => Ok(format_ideal_text(&plucker_ideal(k, n)?)),
        Fixture::Hypersimplex { k, n } => to_json(&ConfigJson::from_config(&hypersimplex_config(k, n)?)),
        Fixture::Toric { config } => Ok(format_ideal_text(&toric_ideal(&read_config_file(config)?)?)),
        Fixture::TreeWeight { tree, n, seed, json } => {
            let tree = match (tree, n) {
                (Some(path), None) => {
                    serde_json::from_str::<TreeJson>(&std::fs::read_to_string(path)?)?.to_tree()?
                }
                (None, Some(n)) if n >= 3 => Tree::random(n, &mut ChaCha8Rng::seed_from_u64(seed)),
                _ => return Err(Error::Precondition("give --tree FILE or --n N with N >= 3".into())),
            };
            let w = tree_weight(&tree, tree.leaves())?;
            if json {
                to_json(&serde_json::json!({ "tree": TreeJson::from_tree(&tree), "w": w.to_string() }))
            } else {
                Ok(format!("{w}\n"))
            }
        }
        Fixture::Corank { n, uniform, classes, bases } => {
            let m = match (n, uniform, classes, bases) {
                (Some(n), Some(k), None, None) => MatroidBases::uniform(k, n)?,
                (Some(n), None, Some(c), None) => MatroidBases::rank2_from_parallel_classes(n, &parse_classes(&c)?)?,
                (None, None, None, Some(path)) => {
                    serde_json::from_str::<MatroidJson>(&std::fs::read_to_string(path)?)?.to_matroid()?
                }
                _ => {
                    return Err(Error::Precondition(
                        "give --n with --uniform K or --classes, or --bases FILE".into(),
                    ))
                }
            };
            Ok(format!("{}\n", corank_weight(&m)))
        }
    }
}

fn parse_classes(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split(';')
        .map(|class| {
            class
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Precondition(format!("bad element {x:?} in classes")))
                })
                .collect()
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = run(cli.command).and_then(|text| match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            let mut out = std::io::stdout().lock();
            let written = out.write_all(text.as_bytes()).and_then(|()| out.flush());
            match written {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::from(e)),
                _ => Ok(()),
            }
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
