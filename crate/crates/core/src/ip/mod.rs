//! Prover/verifier simulations of the pseudo-deterministic graph
//! isomorphism protocols.
//!
//! A run either outputs the lexicographically first isomorphism `G1 → G2`
//! or rejects (`Bottom`). Honest provers make it output; no prover can make
//! it output anything else except by winning every round of a shuffle game
//! on some isomorphic pair, which happens with probability `2^-m` per
//! claim.

pub mod message;
pub mod protocol;
pub mod prover;
pub mod stats;

pub use message::{
    ClaimLabel, GniClaim, InputPair, Message, Party, Payload, ProtocolKind, ProtocolParams, Transcript,
    VerifierOutcome, DEFAULT_REPETITIONS,
};
pub use protocol::{gni_subprotocol, run_protocol, run_psd_gi_comb, run_psd_gi_group, verify_aut_group};
pub use prover::{make_prover, ProverStrategy, Request, StrategyKind, StrategyMetadata};
pub use stats::{psd_statistical_test, PsdReport, StrategyReport};
