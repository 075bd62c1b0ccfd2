//! Permutation groups and canonical isomorphisms between colored graphs.
//!
//! The set of isomorphisms `G1 → G2` is a coset `phi · Aut(G1)`. Given any
//! `phi` and any generating set of `Aut(G1)`, [`find_first_isomorphism`]
//! returns the coset element with the lexicographically smallest image
//! vector, using a [`StabilizerChain`] whose base points are taken in
//! increasing order.

mod aut;
pub mod brute;
mod canonical;
mod chain;
mod graph;
mod permutation;
pub mod search;

pub use aut::{aut_generators_via_gi, marked_pair};
pub use canonical::find_first_isomorphism;
pub use chain::{GeneratorSet, Level, StabilizerChain};
pub use graph::{is_isomorphism, ColoredGraph};
pub use permutation::Permutation;

pub(crate) use graph::{parse_number, tokens};

use crate::error::Result;

/// Canonical isomorphism `g1 → g2` computed the way an honest party with a
/// graph-isomorphism solver would: find any isomorphism, recover `Aut(g1)`
/// through the solver, then canonicalize.
pub fn canonical_isomorphism(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<Option<Permutation>> {
    let Some(phi) = search::find_isomorphism(g1, g2) else {
        return Ok(None);
    };
    let gens = aut_generators_via_gi(g1, search::find_isomorphism)?;
    let chain = StabilizerChain::schreier_sims(&gens);
    find_first_isomorphism(&phi, &chain, g1, g2).map(Some)
}
