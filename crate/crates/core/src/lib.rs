//! Pseudo-deterministic interactive proofs at desk scale.
//!
//! * [`perm_core`]: permutation groups, Schreier-Sims, and the canonical
//!   (lexicographically first) isomorphism between two colored graphs.
//! * [`ip`]: in-process prover/verifier simulations of two constant-round
//!   protocols whose verifier outputs that canonical isomorphism or rejects,
//!   with honest and cheating provers and a statistical harness.
//! * [`psd_nl`]: lexicographically first shortest accepting path in an
//!   explicit configuration graph.
//! * [`oracle`]: recovering the canonical answer one bit at a time through
//!   a yes/no oracle backed by the protocol.
//! * [`cli`]: the batch front end behind the `psdproof` binary.

pub mod cli;
pub mod error;
pub mod ip;
pub mod oracle;
pub mod perm_core;
pub mod psd_nl;
pub mod rng;
pub mod sample;
pub mod selfcheck;

pub use error::{Error, ParseError, Result};
pub use perm_core::{ColoredGraph, GeneratorSet, Permutation, StabilizerChain};
