//! The `experiment` subcommand: completeness and soundness suites with JSON
//! reports.

use std::path::PathBuf;
use std::thread;

use anyhow::{anyhow, Context};
use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use polycert::adversary::fixtures::{self, Fixture};
use polycert::adversary::{run_soundness_experiment, SoundnessReport};
use polycert::ff::Modulus;
use polycert::instances::{true_instance, Dims};
use polycert::protocols::{run, Honest, Params, PROTOCOL_IDS};
use polycert::transcript::Mode;

use crate::Fail;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Completeness,
    Soundness,
    /// Both of the above.
    Acceptance,
}

#[derive(Args)]
pub struct ExperimentArgs {
    /// Restrict to one protocol.
    #[arg(value_name = "PROTOCOL")]
    positional: Option<String>,
    #[arg(long, conflicts_with = "positional")]
    protocol: Option<String>,
    /// Suite to run; with only a protocol, its soundness fixtures run.
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    /// Sizes of S for the soundness runs.
    #[arg(long, value_delimiter = ',', default_values_t = [32u64, 64])]
    sigma: Vec<u64>,
    /// Trials per report; 100 for completeness and 2000 for soundness by default.
    #[arg(long)]
    trials: Option<u64>,
    /// Report file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CompletenessReport {
    pub protocol_id: String,
    pub trials: u64,
    pub accepts: u64,
    /// Rejections and runs where the honest Prover gave up.
    pub failures: Vec<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub completeness: Vec<CompletenessReport>,
    pub soundness: Vec<SoundnessReport>,
}

fn completeness(id: &str, p: Modulus, trials: u64, seed: u64) -> CompletenessReport {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for i in 0..trials {
        let outcome = true_instance(id, p, Dims { m: 8, n: 8, d: 4 }, &mut rng)
            .map_err(|e| e.to_string())
            .and_then(|st| {
                let sigma = st.strict_bound().clamp(1, p.value() as u128) as u64;
                let prm = Params::new(p, sigma, Mode::Interactive { seed: rng.gen() }, true).map_err(|e| e.to_string())?;
                run(&st, prm, &mut Honest::new(p, prm.sample, i)).map_err(|e| e.to_string())
            });
        match outcome {
            Ok(o) if o.verdict.accepted => {}
            Ok(o) => failures.push(format!("trial {i}: {:?}", o.verdict.reason)),
            Err(e) => failures.push(format!("trial {i}: {e}")),
        }
    }
    CompletenessReport {
        protocol_id: id.into(),
        trials,
        accepts: trials - failures.len() as u64,
        pass: failures.is_empty(),
        failures,
    }
}

pub fn run_suite(args: &ExperimentArgs, p: Modulus, seed: u64) -> Result<(), Fail> {
    let protocol = args.positional.as_ref().or(args.protocol.as_ref());
    if let Some(id) = protocol {
        if !PROTOCOL_IDS.contains(&id.as_str()) {
            return Err(Fail::Usage(anyhow!("unknown protocol {id:?}")));
        }
    }
    let suite = match (args.suite, protocol) {
        (Some(s), _) => s,
        (None, Some(_)) => Suite::Soundness,
        (None, None) => return Err(Fail::Usage(anyhow!("give a protocol or --suite"))),
    };
    let mut report = Report::default();
    if matches!(suite, Suite::Completeness | Suite::Acceptance) {
        let trials = args.trials.unwrap_or(100);
        let ids: Vec<&str> = match protocol {
            Some(id) => vec![id.as_str()],
            None => PROTOCOL_IDS.to_vec(),
        };
        report.completeness = thread::scope(|s| {
            let hs: Vec<_> = ids
                .iter()
                .enumerate()
                .map(|(k, id)| s.spawn(move || completeness(id, p, trials, seed.wrapping_add(k as u64))))
                .collect();
            hs.into_iter().map(|h| h.join().expect("worker")).collect()
        });
    }
    if matches!(suite, Suite::Soundness | Suite::Acceptance) {
        let trials = args.trials.unwrap_or(2000);
        if trials < 100 {
            return Err(Fail::Usage(anyhow!("soundness experiments need at least 100 trials")));
        }
        let all: Vec<Fixture> = fixtures::core_fixtures(p).into_iter().chain(fixtures::composite_fixtures(p)).collect();
        let chosen: Vec<&Fixture> = all.iter().filter(|f| protocol.is_none_or(|id| f.statement.id() == id)).collect();
        if chosen.is_empty() {
            return Err(Fail::Usage(anyhow!("no soundness fixture for {:?}", protocol)));
        }
        let jobs: Vec<(&Fixture, u64)> = chosen.iter().flat_map(|f| args.sigma.iter().map(move |&s| (*f, s))).collect();
        let results: Vec<_> = thread::scope(|s| {
            let hs: Vec<_> = jobs
                .iter()
                .enumerate()
                .map(|(k, &(f, sigma))| {
                    s.spawn(move || {
                        run_soundness_experiment(&f.statement, f.name, p, sigma, trials, seed.wrapping_add(k as u64))
                    })
                })
                .collect();
            hs.into_iter().map(|h| h.join().expect("worker")).collect()
        });
        for r in results {
            report.soundness.push(r.context("soundness experiment")?);
        }
    }

    let mut failed = 0;
    for c in &report.completeness {
        println!(
            "completeness {:<20} {}/{} accepted {}",
            c.protocol_id,
            c.accepts,
            c.trials,
            if c.pass { "pass" } else { "FAIL" }
        );
        failed += !c.pass as usize;
    }
    for r in &report.soundness {
        println!(
            "soundness {:<20} #S={:<4} rate {:.4} bound {}/{} threshold {:.4} {}  [{}]",
            r.protocol_id,
            r.bound.denominator,
            r.rate,
            r.bound.numerator,
            r.bound.denominator,
            r.threshold,
            if r.pass { "pass" } else { "FAIL" },
            r.instance
        );
        failed += !r.pass as usize;
    }
    if let Some(path) = &args.out {
        let mut text = serde_json::to_string_pretty(&report).context("serializing report")?;
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    if failed > 0 {
        return Err(Fail::Reject(format!("{failed} reports failed")));
    }
    println!("verdict: all reports pass");
    Ok(())
}
