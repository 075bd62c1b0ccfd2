use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm_core::{ColoredGraph, GeneratorSet, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Party {
    Prover,
    Verifier,
}

/// What a graph non-isomorphism claim asserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimLabel {
    /// No automorphism fixing `0..point` sends `point` to `target`.
    Orbit { point: usize, target: usize },
    /// No isomorphism agreeing with the claimed one on `0..stage` sends
    /// `stage` to `candidate`.
    Stage { stage: usize, candidate: usize },
    /// A bare two-graph claim.
    Pair,
}

/// The claim "`a` and `b` are not isomorphic", defended by the shuffle game.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GniClaim {
    pub label: ClaimLabel,
    pub a: ColoredGraph,
    pub b: ColoredGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Payload {
    Permutation(Permutation),
    GeneratorSet(GeneratorSet),
    ClaimList(Vec<GniClaim>),
    /// Challenge graphs, claim-major: all rounds of claim 0, then claim 1, ...
    Graphs(Vec<ColoredGraph>),
    /// One answer per challenge graph; `true` names graph `b`.
    Bits(Vec<bool>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Message {
    pub sender: Party,
    pub round: usize,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputPair {
    pub g1: ColoredGraph,
    pub g2: ColoredGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifierOutcome {
    Output(Permutation),
    Bottom,
}

impl VerifierOutcome {
    pub fn output(&self) -> Option<&Permutation> {
        match self {
            VerifierOutcome::Output(p) => Some(p),
            VerifierOutcome::Bottom => None,
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, VerifierOutcome::Bottom)
    }
}

impl fmt::Display for VerifierOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifierOutcome::Output(p) => write!(f, "{p}"),
            VerifierOutcome::Bottom => f.write_str("BOTTOM"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProtocolKind {
    /// Prover supplies `Aut(G1)` and any isomorphism; verifier checks the
    /// group and canonicalizes.
    Group,
    /// Prover supplies the canonical isomorphism and defends minimality of
    /// every coordinate.
    Comb,
}

impl FromStr for ProtocolKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "group" => Ok(ProtocolKind::Group),
            "comb" => Ok(ProtocolKind::Comb),
            other => Err(Error::ContractViolation(format!(
                "unknown protocol `{other}` (expected group or comb)"
            ))),
        }
    }
}

impl fmt::Display for ProtocolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            ProtocolKind::Group => "group",
            ProtocolKind::Comb => "comb",
        })
    }
}

pub const DEFAULT_REPETITIONS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtocolParams {
    pub protocol: ProtocolKind,
    /// Shuffle-game rounds per non-isomorphism claim.
    pub m: usize,
}

impl ProtocolParams {
    pub fn new(protocol: ProtocolKind, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ContractViolation("repetition count m must be at least 1".into()));
        }
        Ok(ProtocolParams { protocol, m })
    }

    pub fn group() -> Self {
        ProtocolParams {
            protocol: ProtocolKind::Group,
            m: DEFAULT_REPETITIONS,
        }
    }

    pub fn comb() -> Self {
        ProtocolParams {
            protocol: ProtocolKind::Comb,
            m: DEFAULT_REPETITIONS,
        }
    }
}

/// Full record of one protocol run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub input: InputPair,
    pub seed: u64,
    pub params: ProtocolParams,
    pub strategy: String,
    pub messages: Vec<Message>,
    pub outcome: VerifierOutcome,
}

impl Transcript {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("transcript serializes")
    }
}
