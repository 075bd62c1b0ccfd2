use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::message::{GniClaim, InputPair, Message, Payload};
use crate::error::{Error, Result};
use crate::perm_core::search::{are_isomorphic, find_isomorphism};
use crate::perm_core::{aut_generators_via_gi, GeneratorSet, Permutation};
use crate::rng::StreamRng;

/// What the verifier is waiting for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Request {
    /// Generators of `Aut(G1)`.
    AutGenerators,
    /// An isomorphism `G1 → G2`.
    Isomorphism,
    /// One bit per challenge graph in the latest `Graphs` message.
    Answers,
}

/// A prover. It sees the input pair and the messages exchanged so far,
/// nothing else; the verifier's coin flips never leave the verifier.
///
/// ```compile_fail
/// // The verifier's private choices have no public path.
/// let _ = psdproof::ip::protocol::PrivateCoins::default();
/// ```
pub trait ProverStrategy {
    fn kind(&self) -> StrategyKind;

    fn metadata(&self) -> StrategyMetadata;

    fn next_message(&mut self, input: &InputPair, request: Request, view: &[Message]) -> Payload;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyKind {
    /// Plays the protocol truthfully with a backtracking GI solver.
    Honest,
    /// Sends a valid but non-canonical isomorphism and defends it.
    LexLiar,
    /// Claims the trivial subgroup of `Aut(G1)` together with a
    /// non-canonical isomorphism, so that canonicalizing over the claimed
    /// group would give the wrong answer.
    SubgroupLiar,
    /// Honest opening, uniformly random answers in every shuffle round.
    CoinFlipper,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 4] = [
        StrategyKind::Honest,
        StrategyKind::LexLiar,
        StrategyKind::SubgroupLiar,
        StrategyKind::CoinFlipper,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StrategyKind::Honest => "honest",
            StrategyKind::LexLiar => "lex_liar",
            StrategyKind::SubgroupLiar => "subgroup_liar",
            StrategyKind::CoinFlipper => "coin_flipper",
        }
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrategyKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::ContractViolation(format!("unknown strategy `{s}`")))
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyMetadata {
    /// Set once the strategy found no lie available on this input and fell
    /// back to honest play.
    pub degraded: bool,
    pub note: Option<String>,
}

pub fn make_prover(kind: StrategyKind, seed: u64) -> Box<dyn ProverStrategy> {
    Box::new(Adversary {
        kind,
        rng: <StreamRng as rand::SeedableRng>::seed_from_u64(seed),
        plan: None,
        meta: StrategyMetadata::default(),
    })
}

/// Opening messages worked out once per input.
struct Plan {
    generators: GeneratorSet,
    isomorphism: Permutation,
}

struct Adversary {
    kind: StrategyKind,
    rng: StreamRng,
    plan: Option<Plan>,
    meta: StrategyMetadata,
}

impl Adversary {
    fn plan(&mut self, input: &InputPair) -> &Plan {
        if self.plan.is_none() {
            let plan = self.make_plan(input);
            self.plan = Some(plan);
        }
        self.plan.as_ref().unwrap()
    }

    fn make_plan(&mut self, input: &InputPair) -> Plan {
        let n = input.g1.vertex_count();
        let honest_gens =
            aut_generators_via_gi(&input.g1, find_isomorphism).unwrap_or_else(|_| GeneratorSet::trivial(n));
        let Some(phi) = find_isomorphism(&input.g1, &input.g2) else {
            if matches!(self.kind, StrategyKind::LexLiar | StrategyKind::SubgroupLiar) {
                self.degrade("inputs are not isomorphic; nothing to lie about");
            }
            return Plan {
                generators: honest_gens,
                isomorphism: Permutation::identity(n),
            };
        };

        // phi ∘ g for non-identity automorphisms g: valid isomorphisms that
        // differ from phi, which the search returns lexicographically first.
        let alternatives: Vec<Permutation> = honest_gens
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| phi.compose_unchecked(g))
            .filter(|alt| alt != &phi)
            .collect();

        match self.kind {
            StrategyKind::Honest | StrategyKind::CoinFlipper => Plan {
                generators: honest_gens,
                isomorphism: phi,
            },
            StrategyKind::LexLiar => match alternatives.iter().min() {
                Some(lie) => Plan {
                    generators: honest_gens.clone(),
                    isomorphism: lie.clone(),
                },
                None => {
                    self.degrade("unique isomorphism; no non-canonical choice exists");
                    Plan {
                        generators: honest_gens,
                        isomorphism: phi,
                    }
                }
            },
            StrategyKind::SubgroupLiar => match alternatives.iter().max() {
                Some(lie) => Plan {
                    generators: GeneratorSet::trivial(n),
                    isomorphism: lie.clone(),
                },
                None => {
                    self.degrade("trivial automorphism group; no proper subgroup to claim");
                    Plan {
                        generators: honest_gens,
                        isomorphism: phi,
                    }
                }
            },
        }
    }

    fn degrade(&mut self, why: &str) {
        self.meta.degraded = true;
        self.meta.note = Some(why.to_string());
    }

    fn answers(&mut self, view: &[Message]) -> Payload {
        let claims = view.iter().rev().find_map(|m| match &m.payload {
            Payload::ClaimList(c) => Some(c),
            _ => None,
        });
        let challenges = view.iter().rev().find_map(|m| match &m.payload {
            Payload::Graphs(g) => Some(g),
            _ => None,
        });
        let (Some(claims), Some(challenges)) = (claims, challenges) else {
            return Payload::Bits(Vec::new());
        };
        if claims.is_empty() || challenges.len() % claims.len() != 0 {
            return Payload::Bits(Vec::new());
        }
        let rounds = challenges.len() / claims.len();

        if self.kind == StrategyKind::CoinFlipper {
            return Payload::Bits((0..challenges.len()).map(|_| self.rng.gen_bool(0.5)).collect());
        }

        let mut bits = Vec::with_capacity(challenges.len());
        for (claim, batch) in claims.iter().zip(challenges.chunks(rounds)) {
            // On an isomorphic claim every challenge matches `a`, which is
            // exactly the honest fallback, so honest play can skip the test.
            let distinguishable = self.kind == StrategyKind::Honest || !are_isomorphic(&claim.a, &claim.b);
            for challenge in batch {
                bits.push(self.answer_one(claim, challenge, distinguishable));
            }
        }
        Payload::Bits(bits)
    }

    fn answer_one(&mut self, claim: &GniClaim, challenge: &crate::ColoredGraph, distinguishable: bool) -> bool {
        if distinguishable {
            return !are_isomorphic(challenge, &claim.a);
        }
        // Both graphs look alike: the honest prover has no information and
        // says `a`; a cheater guesses.
        match self.kind {
            StrategyKind::Honest => false,
            _ => self.rng.gen_bool(0.5),
        }
    }
}

impl ProverStrategy for Adversary {
    fn kind(&self) -> StrategyKind {
        self.kind
    }

    fn metadata(&self) -> StrategyMetadata {
        self.meta.clone()
    }

    fn next_message(&mut self, input: &InputPair, request: Request, view: &[Message]) -> Payload {
        match request {
            Request::AutGenerators => Payload::GeneratorSet(self.plan(input).generators.clone()),
            Request::Isomorphism => Payload::Permutation(self.plan(input).isomorphism.clone()),
            Request::Answers => self.answers(view),
        }
    }
}
