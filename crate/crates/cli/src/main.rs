//! `polycert`: generate instances, prove and verify statements, and run the
//! completeness and soundness suites.
//!
//! Exit codes: 0 accept, 1 reject, 2 usage or parameter error.

mod experiment;
mod instance;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};

use polycert::ff::{Modulus, DEFAULT_MODULUS};
use polycert::protocols::{run, verify_transcript, Honest, Params, ProtocolError, Statement};
use polycert::transcript::{Mode, Payload, Transcript, TranscriptError};

use instance::{GenSpec, InstanceFile, Kind};

#[derive(Parser)]
#[command(name = "polycert", version, about = "Interactive certificates for polynomial matrices")]
struct Cli {
    /// Prime modulus of the ground field.
    #[arg(long, global = true, env = "POLYCERT_MODULUS", default_value_t = DEFAULT_MODULUS)]
    modulus: u64,
    /// Seed for instance generation, the Prover and interactive challenges.
    #[arg(long, global = true, env = "POLYCERT_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a seeded instance file.
    Gen(GenArgs),
    /// Run the honest Prover in Fiat-Shamir mode and write the transcript.
    Prove(ProveArgs),
    /// Re-check a transcript file with no Prover present.
    Verify(VerifyArgs),
    /// Run Prover and Verifier in-process and report communication.
    Run(RunArgs),
    /// Completeness and soundness suites.
    Experiment(experiment::ExperimentArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 4)]
    m: usize,
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Planted rank, for `planted-rank` and `planted-membership`.
    #[arg(long)]
    r: Option<usize>,
    /// Protocol to record in the file; required for `true-instance`.
    #[arg(long)]
    protocol: Option<String>,
    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Strictness {
    /// Refuse `--sigma` below the protocol's lower bound (the default).
    #[arg(long, conflicts_with = "permissive")]
    strict: bool,
    /// Allow any `--sigma`.
    #[arg(long)]
    permissive: bool,
}

#[derive(Args)]
struct Session {
    /// Protocol id; defaults to the one named in the instance file.
    #[arg(long)]
    protocol: Option<String>,
    #[arg(long)]
    instance: PathBuf,
    /// Size of the challenge set S; defaults to the protocol's lower bound.
    #[arg(long)]
    sigma: Option<u64>,
    #[command(flatten)]
    strictness: Strictness,
    /// Where to write the transcript.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProveArgs {
    #[command(flatten)]
    session: Session,
}

#[derive(Args)]
struct VerifyArgs {
    transcript: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Interactive,
    FiatShamir,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    session: Session,
    #[arg(long, value_enum, default_value = "interactive")]
    mode: ModeArg,
}

/// A run that ended with a verdict, or a usage problem.
enum Fail {
    Reject(String),
    Usage(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Fail {
    fn from(e: E) -> Fail {
        Fail::Usage(e.into())
    }
}

fn modulus(cli: &Cli) -> Result<Modulus, Fail> {
    Modulus::new(cli.modulus).map_err(|e| Fail::Usage(e.into()))
}

fn gen(cli: &Cli, args: &GenArgs) -> Result<(), Fail> {
    let spec = GenSpec {
        kind: args.kind,
        protocol: args.protocol.clone(),
        p: modulus(cli)?,
        m: args.m,
        n: args.n,
        d: args.d,
        r: args.r,
        seed: cli.seed,
    };
    let file = instance::generate(&spec)?;
    match &args.out {
        Some(path) => file.save(path)?,
        None => print!("{}", file.to_json()),
    }
    Ok(())
}

/// The asymptotic communication of each protocol, evaluated with unit
/// constants.
fn table_comm(st: &Statement) -> Option<(&'static str, u64)> {
    let inputs = st.public_inputs();
    let (m, n, d) = inputs
        .iter()
        .find_map(|(_, v)| match v {
            Payload::PolyMatrix(a) => Some((a.rows() as u64, a.cols() as u64, a.working_degree())),
            _ => None,
        })
        .unwrap_or((0, 0, 1));
    let r = inputs
        .iter()
        .find_map(|(_, v)| match v {
            Payload::RankClaim(r) => Some(*r),
            _ => None,
        })
        .unwrap_or(m.min(n));
    Some(match st.id() {
        "singularity" | "nonsingularity" | "rank_ub" | "rank" | "determinant" => ("n", n),
        "rank_lb" => ("r", r),
        "system_solve" | "matmul" => ("0", 0),
        "frrsm" => ("md", m * d),
        "rsm" | "rs_subset" | "rs_equality" | "row_basis" | "hermite" | "spopov" => ("md + n", m * d + n),
        "saturated" if m <= n => ("nd", n * d),
        "saturated" => ("md", m * d),
        "sat_basis" | "unimod_completable" => ("nd", n * d),
        "kernel_basis" => ("md", m * d),
        _ => return None,
    })
}

fn session_params(cli: &Cli, s: &Session, st: &Statement, mode: Mode) -> Result<Params, Fail> {
    let p = modulus(cli)?;
    let sigma = s.sigma.unwrap_or_else(|| st.strict_bound().clamp(1, p.value() as u128) as u64);
    Ok(Params::new(p, sigma, mode, s.strictness.strict || !s.strictness.permissive)?)
}

fn load_statement(cli: &Cli, s: &Session) -> Result<Statement, Fail> {
    let file = InstanceFile::load(&s.instance)?;
    if file.modulus()?.value() != cli.modulus {
        return Err(Fail::Usage(anyhow::anyhow!(
            "instance is over F_{} but --modulus is {}",
            file.modulus,
            cli.modulus
        )));
    }
    Ok(file.statement(s.protocol.as_deref())?)
}

fn execute(cli: &Cli, s: &Session, mode: Mode) -> Result<(), Fail> {
    let st = load_statement(cli, s)?;
    let prm = session_params(cli, s, &st, mode)?;
    let mut prover = Honest::new(prm.modulus, prm.sample, cli.seed);
    let out = match run(&st, prm, &mut prover) {
        Ok(out) => out,
        Err(ProtocolError::ProverGaveUp(why)) => return Err(Fail::Reject(format!("prover gave up: {why}"))),
        Err(e) => return Err(e.into()),
    };
    if let Some(path) = &s.out {
        out.transcript.save(path)?;
    }
    let (pc, vc) = out.transcript.communication();
    println!("protocol {} over F_{} with #S = {}", st.id(), prm.modulus, prm.sigma());
    println!("communication: {pc} field elements from the Prover, {vc} from the Verifier");
    if let Some((shape, value)) = table_comm(&st) {
        println!("expected communication O({shape}) = {value} with unit constants");
    }
    let b = st.soundness_bound(prm.sigma());
    println!("soundness error at most {}/{}", b.numerator, b.denominator);
    report(out.verdict.accepted, &format!("{:?}", out.verdict.reason))
}

fn report(accepted: bool, reason: &str) -> Result<(), Fail> {
    if accepted {
        println!("verdict: accept");
        Ok(())
    } else {
        Err(Fail::Reject(reason.to_string()))
    }
}

fn verify(args: &VerifyArgs) -> Result<(), Fail> {
    let t = match Transcript::load(&args.transcript) {
        Ok(t) => t,
        Err(TranscriptError::Io(e)) => return Err(Fail::Usage(e.into())),
        Err(e) => return Err(Fail::Reject(e.to_string())),
    };
    let v = verify_transcript(&t)?;
    println!("protocol {} over F_{} with #S = {}", t.protocol_id, t.modulus, t.sigma);
    if t.verdict.as_ref() != Some(&v) {
        return Err(Fail::Reject(format!("recorded verdict {:?} does not match the replay", t.verdict)));
    }
    report(v.accepted, &format!("{:?}", v.reason))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Gen(a) => gen(&cli, a),
        Cmd::Prove(a) => execute(&cli, &a.session, Mode::FiatShamir),
        Cmd::Verify(a) => verify(a),
        Cmd::Run(a) => {
            let mode = match a.mode {
                ModeArg::Interactive => Mode::Interactive { seed: cli.seed },
                ModeArg::FiatShamir => Mode::FiatShamir,
            };
            execute(&cli, &a.session, mode)
        }
        Cmd::Experiment(a) => match modulus(&cli) {
            Ok(p) => experiment::run_suite(a, p, cli.seed),
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Reject(why)) => {
            println!("verdict: reject ({why})");
            ExitCode::from(1)
        }
        Err(Fail::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
