//! JSON instance documents (schema 1).
//!
//! ```json
//! {"schema": 1, "p": 5, "a": 1, "n": 2, "d": 3, "m": 2,
//!  "coefficients": [["2"], ["1"], ["0"], ["0"], ["0"], ["0"], ["0"], ["0"], ["0"], ["1"]]}
//! ```
//!
//! `a` defaults to 1 and `m` to 2. `modulus` (ascending, monic) is optional. Residues may
//! be decimal strings or plain numbers; documents are always emitted with strings.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::instance::ProblemInstance;

pub const SCHEMA_VERSION: u32 = 1;

/// A residue mod p written as a decimal string or a JSON number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue(pub u64);

impl<'de> Deserialize<'de> for Residue {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(x) => Ok(Residue(x)),
            Raw::Str(s) => s
                .trim()
                .parse()
                .map(Residue)
                .map_err(|_| serde::de::Error::custom(format!("residue {s:?} is not a nonnegative integer"))),
        }
    }
}

impl Serialize for Residue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

fn default_a() -> usize {
    1
}

fn default_m() -> u32 {
    2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceConfig {
    #[serde(default = "default_schema")]
    pub schema: u32,
    pub p: u64,
    #[serde(default = "default_a")]
    pub a: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<Residue>>,
    pub n: usize,
    pub d: usize,
    #[serde(default = "default_m")]
    pub m: u32,
    pub coefficients: Vec<Vec<Residue>>,
}

impl InstanceConfig {
    pub fn to_instance(&self) -> Result<ProblemInstance> {
        if self.schema != SCHEMA_VERSION {
            return Err(Error::Validation(format!("unsupported schema {} (expected {SCHEMA_VERSION})", self.schema)));
        }
        let modulus = self.modulus.as_ref().map(|m| m.iter().map(|r| r.0).collect());
        let coeffs: Vec<Vec<u64>> = self.coefficients.iter().map(|c| c.iter().map(|r| r.0).collect()).collect();
        if let Some((k, c)) = coeffs.iter().enumerate().find(|(_, c)| c.len() != self.a) {
            return Err(Error::Validation(format!(
                "coefficient {k} has {} residues, expected a = {}",
                c.len(),
                self.a
            )));
        }
        ProblemInstance::new(self.p, self.a, self.n, self.d, modulus, &coeffs, self.m)
    }

    pub fn from_instance(instance: &ProblemInstance) -> Self {
        let residues = |v: &[u64]| v.iter().map(|&x| Residue(x)).collect::<Vec<_>>();
        Self {
            schema: SCHEMA_VERSION,
            p: instance.p(),
            a: instance.a(),
            modulus: instance.explicit_modulus().then(|| residues(instance.field().modulus())),
            n: instance.n(),
            d: instance.d(),
            m: instance.precision(),
            coefficients: instance.coefficients().iter().map(|c| residues(c.coeffs())).collect(),
        }
    }
}

pub fn parse_config(document: &str) -> Result<ProblemInstance> {
    let cfg: InstanceConfig =
        serde_json::from_str(document).map_err(|e| Error::Validation(format!("malformed config: {e}")))?;
    cfg.to_instance()
}

pub fn emit_config(instance: &ProblemInstance) -> String {
    serde_json::to_string_pretty(&InstanceConfig::from_instance(instance)).expect("config serializes")
}
