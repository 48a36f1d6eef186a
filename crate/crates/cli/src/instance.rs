//! Instance files: public inputs plus, for planted kinds, the witness used
//! to build them.

use std::path::Path;

use anyhow::{bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use polycert::ff::Modulus;
use polycert::instances::{planted_membership, planted_normal_form, planted_rank_factors, true_instance, Dims};
use polycert::polymat::PolyMat;
use polycert::protocols::Statement;
use polycert::transcript::{InputJson, Payload};

pub const FORMAT: &str = "polycert-instance/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// A uniformly random `m x n` matrix `A`.
    Random,
    /// `A = X Y` with inner dimension `r`, plus the claim `rho = rank A`.
    PlantedRank,
    /// `A` of rank at most `r` (default `min(m, n)`) and `v = lambda A`.
    PlantedMembership,
    /// `A = U B` with unimodular `U`, and `H` the Hermite form of `A`.
    PlantedNormalForm,
    /// A random true instance of `--protocol`.
    TrueInstance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsJson {
    pub m: usize,
    pub n: usize,
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub format: String,
    pub kind: Kind,
    pub protocol: Option<String>,
    pub modulus: String,
    pub dims: DimsJson,
    pub seed: u64,
    pub inputs: Vec<InputJson>,
    #[serde(default)]
    pub witness: Vec<InputJson>,
}

fn named(v: Vec<(&str, Payload)>) -> Vec<InputJson> {
    v.into_iter().map(|(k, p)| InputJson { name: k.into(), payload: (&p).into() }).collect()
}

pub struct GenSpec {
    pub kind: Kind,
    pub protocol: Option<String>,
    pub p: Modulus,
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub r: Option<usize>,
    pub seed: u64,
}

pub fn generate(spec: &GenSpec) -> Result<InstanceFile> {
    let (p, m, n, d) = (spec.p, spec.m, spec.n, spec.d);
    if m == 0 || n == 0 {
        bail!("dimensions must be positive");
    }
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed);
    let mat = |a: PolyMat| Payload::PolyMatrix(a);
    let (inputs, witness) = match spec.kind {
        Kind::Random => (named(vec![("A", mat(PolyMat::random(p, m, n, d, &mut rng)))]), vec![]),
        Kind::PlantedRank => {
            let r = spec.r.context("--r is required for planted-rank")?;
            if r > m.min(n) {
                bail!("rank {r} exceeds min(m, n) = {}", m.min(n));
            }
            let (x, y) = planted_rank_factors(p, m, n, r, d, &mut rng);
            let a = x.mul(&y)?;
            (
                named(vec![("A", mat(a)), ("rho", Payload::RankClaim(r as u64))]),
                named(vec![("X", mat(x)), ("Y", mat(y))]),
            )
        }
        Kind::PlantedMembership => {
            let r = spec.r.unwrap_or(m.min(n));
            if r > m.min(n) {
                bail!("rank {r} exceeds min(m, n) = {}", m.min(n));
            }
            let (a, v, lambda) = planted_membership(p, m, n, r, d, &mut rng);
            (
                named(vec![("A", mat(a)), ("v", Payload::PolyVector(v))]),
                named(vec![("lambda", Payload::PolyVector(lambda))]),
            )
        }
        Kind::PlantedNormalForm => {
            let (a, h, u) = planted_normal_form(p, m, n, d, &mut rng);
            (named(vec![("A", mat(a)), ("H", mat(h))]), named(vec![("U", mat(u))]))
        }
        Kind::TrueInstance => {
            let id = spec.protocol.as_deref().context("--protocol is required for true-instance")?;
            let st = true_instance(id, p, Dims { m, n, d }, &mut rng)?;
            let inputs = st.public_inputs().iter().map(|(k, v)| InputJson { name: k.clone(), payload: v.into() }).collect();
            (inputs, vec![])
        }
    };
    Ok(InstanceFile {
        format: FORMAT.into(),
        kind: spec.kind,
        protocol: spec.protocol.clone(),
        modulus: p.value().to_string(),
        dims: DimsJson { m, n, d },
        seed: spec.seed,
        inputs,
        witness,
    })
}

impl InstanceFile {
    pub fn load(path: &Path) -> Result<InstanceFile> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let f: InstanceFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        if f.format != FORMAT {
            bail!("unknown instance format {:?}", f.format);
        }
        Ok(f)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).with_context(|| format!("writing {}", path.display()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn modulus(&self) -> Result<Modulus> {
        let p: u64 = self.modulus.parse().context("modulus is not an integer")?;
        Ok(Modulus::new(p)?)
    }

    fn decode(list: &[InputJson], p: Modulus) -> Result<Vec<(String, Payload)>> {
        list.iter()
            .map(|i| i.payload.to_payload(p).map(|v| (i.name.clone(), v)).map_err(anyhow::Error::msg))
            .collect()
    }

    pub fn inputs(&self) -> Result<Vec<(String, Payload)>> {
        Self::decode(&self.inputs, self.modulus()?)
    }

    /// The statement for `protocol`, or for the protocol recorded in the file.
    pub fn statement(&self, protocol: Option<&str>) -> Result<Statement> {
        let id = protocol
            .or(self.protocol.as_deref())
            .context("no protocol given and the instance file does not name one")?;
        Ok(Statement::from_public(id, &self.inputs()?)?)
    }
}
