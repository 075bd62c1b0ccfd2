//! Batch command-line front end.
//!
//! Exit codes: 0 on success, 2 for unreadable or malformed input, 3 when an
//! internal invariant or a self-check fails.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::{Error, ParseError};
use crate::ip::{make_prover, psd_statistical_test, run_protocol, ProtocolKind, ProtocolParams, StrategyKind};
use crate::oracle::{bits_to_string, extract_via_bit_oracle, BitOracle, DEFAULT_VOTES};
use crate::perm_core::{aut_generators_via_gi, canonical_isomorphism, search, ColoredGraph, StabilizerChain};
use crate::psd_nl::{lex_first_shortest_path, ConfigGraph};
use crate::rng::derive_seed;
use crate::selfcheck;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "psdproof",
    version,
    about = "Pseudo-deterministic proofs for graph isomorphism and NL search"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the lexicographically first isomorphism G1 -> G2, or BOTTOM.
    CanonIso { g1: PathBuf, g2: PathBuf },
    /// Print generators and order of Aut(G).
    Aut { g: PathBuf },
    /// Run one protocol instance and print its outcome.
    ProveIso {
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long, default_value = "group")]
        protocol: ProtocolKind,
        #[arg(long, default_value = "honest")]
        strategy: StrategyKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = crate::ip::DEFAULT_REPETITIONS)]
        m: usize,
        /// Write the JSON transcript here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run many protocol instances per strategy and print a JSON report.
    PsdTest {
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long, default_value = "group")]
        protocol: ProtocolKind,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "honest,lex_liar,subgroup_liar,coin_flipper"
        )]
        strategies: Vec<StrategyKind>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = crate::ip::DEFAULT_REPETITIONS)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the lexicographically first shortest accepting path, or BOTTOM.
    Lexpath { d: PathBuf },
    /// Recover the canonical isomorphism bit by bit through the protocol oracle.
    ExtractBits {
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = crate::ip::DEFAULT_REPETITIONS)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_VOTES)]
        votes: usize,
    },
    /// Compare every algorithm with its brute-force oracle on small inputs.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Input(p.to_string()),
            Error::Io(io) => Failure::Input(io.to_string()),
            other => Failure::Invariant(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs the command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(config: RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(config.command, out) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Invariant(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INVARIANT
        }
    }
}

/// Parses `args` (program name first) and runs. Usage errors exit with 2.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            code
        }
    }
}

fn io_fail(e: std::io::Error) -> Failure {
    Failure::Input(e.to_string())
}

fn read_input<T>(
    path: &Path,
    parse: fn(&str) -> std::result::Result<T, ParseError>,
) -> std::result::Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::Input(format!("{}:{e}", path.display())))
}

fn read_graph(path: &Path) -> std::result::Result<ColoredGraph, Failure> {
    read_input(path, ColoredGraph::parse)
}

fn params(protocol: ProtocolKind, m: usize) -> std::result::Result<ProtocolParams, Failure> {
    ProtocolParams::new(protocol, m).map_err(|e| Failure::Input(e.to_string()))
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::CanonIso { g1, g2 } => {
            let (g1, g2) = (read_graph(&g1)?, read_graph(&g2)?);
            match canonical_isomorphism(&g1, &g2)? {
                Some(p) => writeln!(out, "{p}"),
                None => writeln!(out, "BOTTOM"),
            }
            .map_err(io_fail)?;
        }
        Command::Aut { g } => {
            let g = read_graph(&g)?;
            let gens = aut_generators_via_gi(&g, search::find_isomorphism)?;
            let chain = StabilizerChain::schreier_sims(&gens);
            writeln!(out, "generators {}", gens.len()).map_err(io_fail)?;
            for p in gens.generators() {
                writeln!(out, "{p}").map_err(io_fail)?;
            }
            writeln!(out, "order {}", chain.order()).map_err(io_fail)?;
        }
        Command::ProveIso {
            g1,
            g2,
            protocol,
            strategy,
            seed,
            m,
            out: transcript_path,
        } => {
            let (g1, g2) = (read_graph(&g1)?, read_graph(&g2)?);
            let params = params(protocol, m)?;
            let mut prover = make_prover(strategy, derive_seed(seed, "prover", 0));
            let transcript = run_protocol(&g1, &g2, prover.as_mut(), &params, derive_seed(seed, "verifier", 0));
            if let Some(path) = transcript_path {
                std::fs::write(&path, transcript.to_json() + "\n").map_err(io_fail)?;
            }
            writeln!(out, "{}", transcript.outcome).map_err(io_fail)?;
        }
        Command::PsdTest {
            g1,
            g2,
            protocol,
            trials,
            strategies,
            seed,
            m,
            out: report_path,
        } => {
            let (g1, g2) = (read_graph(&g1)?, read_graph(&g2)?);
            let params = params(protocol, m)?;
            if trials == 0 {
                return Err(Failure::Input("--trials must be at least 1".into()));
            }
            let report = psd_statistical_test(&params, &g1, &g2, &strategies, trials, seed);
            let json = report.to_json() + "\n";
            match report_path {
                Some(path) => std::fs::write(&path, &json).map_err(io_fail)?,
                None => out.write_all(json.as_bytes()).map_err(io_fail)?,
            }
            if !report.pseudo_deterministic() {
                return Err(Failure::Invariant(format!(
                    "{} distinct outputs observed",
                    report.distinct_outputs.len()
                )));
            }
        }
        Command::Lexpath { d } => {
            let g = read_input(&d, ConfigGraph::parse)?;
            match lex_first_shortest_path(&g) {
                Some(path) => writeln!(out, "{path}"),
                None => writeln!(out, "BOTTOM"),
            }
            .map_err(io_fail)?;
        }
        Command::ExtractBits { g1, g2, seed, m, votes } => {
            let (g1, g2) = (read_graph(&g1)?, read_graph(&g2)?);
            let params = params(ProtocolKind::Group, m)?;
            if votes == 0 {
                return Err(Failure::Input("--votes must be at least 1".into()));
            }
            let oracle = BitOracle::new(&g1, &g2, params, seed).with_votes(votes);
            match extract_via_bit_oracle(&g1, &g2, &oracle)? {
                Some(p) => {
                    let bits = oracle.encoding().encode(&p);
                    writeln!(out, "bits {}", bits_to_string(&bits)).map_err(io_fail)?;
                    writeln!(out, "{p}").map_err(io_fail)?;
                }
                None => writeln!(out, "BOTTOM").map_err(io_fail)?,
            }
            writeln!(out, "queries {}", oracle.query_count()).map_err(io_fail)?;
        }
        Command::Selfcheck { seed } => {
            let mut ok = true;
            for suite in selfcheck::run_all(seed) {
                writeln!(out, "{suite}").map_err(io_fail)?;
                ok &= suite.passed();
            }
            if !ok {
                return Ok(EXIT_INVARIANT);
            }
        }
    }
    Ok(EXIT_OK)
}
