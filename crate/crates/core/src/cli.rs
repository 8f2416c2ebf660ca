//! Command-line front end.
//!
//! Verbs: `solve` (optimal solutions of a problem), `nash` / `pareto` /
//! `pareto-nash` / `nash-pareto-intersect` (joint strategies of a game with
//! their payoff vectors), `map` (the five transformations, emitting JSON),
//! `verify` (seeded law-verification batches), and `check-semiring` (axiom
//! and monotonicity checks on a carrier).
//!
//! Result rows print one per line as `<assignment> : <preference>` with the
//! assignment in compact form; every listing is in canonical order and
//! reruns are byte-identical. Exit codes: 0 on success, 1 on domain errors
//! (the message starts with the error's name), 2 on parse or usage errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::game::GraphicalGame;
use crate::harness::{verify_all, Family, GeneratorConfig};
use crate::json::{
    game_from_json, game_to_json, scsp_from_json, scsp_to_json, GameReadError, ParseError,
    ScspReadError,
};
use crate::mappings::{
    complement_maps, default_maps, game_to_scsp, global_map, harden, identity_maps, local_map,
    merge,
};
use crate::scsp::Scsp;
use crate::semiring::{parse_rational, PrefValue, Rational, Semiring};

#[derive(Parser)]
#[command(
    name = "softgames",
    about = "Soft constraint problems, graphical games, and the mappings between them",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the optimal solutions of a problem, one `assignment : preference` per line
    Solve {
        /// Problem file (JSON), or `-` for stdin
        input: String,
    },
    /// Print the pure Nash equilibria of a game with their payoff vectors
    Nash {
        /// Game file (JSON), or `-` for stdin
        input: String,
    },
    /// Print the Pareto efficient joint strategies of a game
    Pareto {
        /// Game file (JSON), or `-` for stdin
        input: String,
    },
    /// Print the Nash equilibria that no other equilibrium Pareto-dominates
    ParetoNash {
        /// Game file (JSON), or `-` for stdin
        input: String,
    },
    /// Print the Nash equilibria that are also Pareto efficient overall
    NashParetoIntersect {
        /// Game file (JSON), or `-` for stdin
        input: String,
    },
    /// Transform a problem or game and write the result as JSON
    Map {
        /// Which transformation to apply
        name: MapName,
        /// Input file(s) (JSON), or `-` for stdin; `merge` takes two
        inputs: Vec<String>,
        /// Per-player payoff map for `inverse`: `identity` or `complement`
        #[arg(long = "f", value_enum)]
        f: Option<MapKind>,
        /// Complement ceiling for `inverse` (defaults to the greatest finite payoff)
        #[arg(long, value_parser = parse_cli_rational)]
        ceiling: Option<Rational>,
        /// Write the result here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate seeded instances and verify the mapping laws on them
    Verify {
        /// Instance family to generate
        #[arg(long, value_parser = parse_cli_family)]
        family: Family,
        /// Base seed; instance `i` uses seed + i
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of instances
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Check the c-semiring axioms and strict monotonicity of a carrier
    CheckSemiring {
        /// `classical`, `fuzzy`, `weighted`, `payoff`, or `product:<kind>,<kind>,...`
        #[arg(value_parser = parse_cli_semiring)]
        kind: Semiring,
        /// Emit the verdicts as JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    /// Problem → game; each variable is paid by its own constraints
    Local,
    /// Problem → game; every player is paid the full combined preference
    Global,
    /// Game → problem over a product carrier, via order-preserving maps
    Inverse,
    /// Game → classical problem whose solutions are the equilibria
    Harden,
    /// Concatenate two problems over the same variables
    Merge,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    Identity,
    Complement,
}

fn parse_cli_rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("`{text}` is not a rational (use `3`, `0.4`, or `2/5`)"))
}

fn parse_cli_family(text: &str) -> Result<Family, String> {
    Family::parse(text).ok_or_else(|| {
        format!("`{text}` is not a family (classical, fuzzy, weighted, game-fuzzy, game-weighted)")
    })
}

fn parse_cli_semiring(text: &str) -> Result<Semiring, String> {
    Semiring::parse_kind(text).ok_or_else(|| {
        format!("`{text}` is not a carrier (classical, fuzzy, weighted, payoff, or product:<kind>,...)")
    })
}

/// Anything a command can fail with, tagged with its exit code.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Domain(String),
    #[error("UsageError: {0}")]
    Usage(String),
    #[error("IoError: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => ExitCode::from(2),
            CliError::Domain(_) | CliError::Io(_) => ExitCode::from(1),
        }
    }
}

impl From<ScspReadError> for CliError {
    fn from(e: ScspReadError) -> Self {
        match e {
            ScspReadError::Parse(p) => CliError::Parse(p),
            ScspReadError::Build(b) => CliError::Domain(b.to_string()),
        }
    }
}

impl From<GameReadError> for CliError {
    fn from(e: GameReadError) -> Self {
        match e {
            GameReadError::Parse(p) => CliError::Parse(p),
            GameReadError::Build(b) => CliError::Domain(b.to_string()),
        }
    }
}

macro_rules! domain_errors {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::Domain(e.to_string())
            }
        }
    )*};
}
domain_errors!(
    crate::scsp::ScspError,
    crate::game::GameError,
    crate::mappings::MappingError,
    crate::harness::HarnessError,
    crate::semiring::SemiringError
);

/// Parses the process arguments, runs the command, and reports the exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn read_scsp(path: &str) -> Result<Scsp, CliError> {
    Ok(scsp_from_json(&read_input(path)?)?)
}

fn read_game(path: &str) -> Result<GraphicalGame, CliError> {
    Ok(game_from_json(&read_input(path)?)?)
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn print_strategies(g: &GraphicalGame, rows: &[crate::scsp::JointAssignment]) {
    for s in rows {
        let vector = PrefValue::tuple(g.payoff_vector(s).expect("rows are complete profiles"));
        println!("{} : {}", s.compact(), vector);
    }
}

fn execute(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Solve { input } => {
            let p = read_scsp(&input)?;
            for (s, pref) in p.enumerate_optimal() {
                println!("{} : {}", s.compact(), pref);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nash { input } => {
            let g = read_game(&input)?;
            print_strategies(&g, &g.enumerate_nash());
            Ok(ExitCode::SUCCESS)
        }
        Command::Pareto { input } => {
            let g = read_game(&input)?;
            print_strategies(&g, &g.enumerate_pareto());
            Ok(ExitCode::SUCCESS)
        }
        Command::ParetoNash { input } => {
            let g = read_game(&input)?;
            print_strategies(&g, &g.enumerate_pareto_nash());
            Ok(ExitCode::SUCCESS)
        }
        Command::NashParetoIntersect { input } => {
            let g = read_game(&input)?;
            print_strategies(&g, &g.enumerate_nash_and_global_pareto());
            Ok(ExitCode::SUCCESS)
        }
        Command::Map { name, inputs, f, ceiling, output } => {
            if name != MapName::Inverse && (f.is_some() || ceiling.is_some()) {
                return Err(CliError::Usage(
                    "--f and --ceiling apply only to `map inverse`".into(),
                ));
            }
            let expected = if name == MapName::Merge { 2 } else { 1 };
            if inputs.len() != expected {
                return Err(CliError::Usage(format!(
                    "`map {}` takes exactly {expected} input file(s), got {}",
                    match name {
                        MapName::Local => "local",
                        MapName::Global => "global",
                        MapName::Inverse => "inverse",
                        MapName::Harden => "harden",
                        MapName::Merge => "merge",
                    },
                    inputs.len()
                )));
            }
            let rendered = match name {
                MapName::Local => game_to_json(&local_map(&read_scsp(&inputs[0])?)?),
                MapName::Global => game_to_json(&global_map(&read_scsp(&inputs[0])?)?),
                MapName::Harden => scsp_to_json(&harden(&read_game(&inputs[0])?)),
                MapName::Merge => {
                    scsp_to_json(&merge(&read_scsp(&inputs[0])?, &read_scsp(&inputs[1])?)?)
                }
                MapName::Inverse => {
                    let g = read_game(&inputs[0])?;
                    let maps = match f {
                        Some(MapKind::Identity) => {
                            if ceiling.is_some() {
                                return Err(CliError::Usage(
                                    "--ceiling requires --f complement".into(),
                                ));
                            }
                            identity_maps(&g)?
                        }
                        Some(MapKind::Complement) => complement_maps(&g, ceiling)?,
                        None => match ceiling {
                            Some(c) => complement_maps(&g, Some(c))?,
                            None => default_maps(&g)?,
                        },
                    };
                    scsp_to_json(&game_to_scsp(&g, &maps)?)
                }
            };
            emit(&rendered, output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { family, seed, count, json } => {
            let cfg = GeneratorConfig::new(family, seed, 3, 2, Rational::new(1.into(), 2.into()))?;
            let report = verify_all(&cfg, count)?;
            print!("{}", if json { report.to_json() + "\n" } else { report.to_text() });
            Ok(if report.is_success() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::CheckSemiring { kind, json } => {
            let sample = kind.canonical_sample();
            let violations = kind.check_axioms(&sample)?;
            let monotonicity = if kind.is_linearly_ordered() {
                Some(kind.is_strictly_monotonic(&sample)?)
            } else {
                None
            };
            if json {
                let verdict = serde_json::json!({
                    "semiring": kind.describe(),
                    "sample": sample.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "strictly_monotonic": monotonicity.as_ref().map(|m| m.strictly_monotonic),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&verdict).expect("verdicts are plain data")
                );
            } else {
                println!("semiring: {}", kind.describe());
                let rendered: Vec<String> = sample.iter().map(|v| v.to_string()).collect();
                println!("sample: {}", rendered.join(", "));
                println!("violations: {}", violations.len());
                for v in &violations {
                    println!("violation: {v}");
                }
                match &monotonicity {
                    None => println!("strictly-monotonic: n/a (order is partial)"),
                    Some(m) => {
                        println!("strictly-monotonic: {}", m.strictly_monotonic);
                        if let Some([a, b, c]) = &m.counterexample {
                            println!(
                                "counterexample: {a} < {b} but {c} x {a} is not below {c} x {b}"
                            );
                        }
                    }
                }
            }
            Ok(if violations.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
