//! Recovering the canonical isomorphism through a yes/no oracle.
//!
//! "Is bit `i` of the canonical answer 1?" is a decision question whose
//! answer a pseudo-deterministic protocol settles: run it, read bit `i`.
//! Asking it for every bit position and concatenating gives back the full
//! answer. Queries are only issued once a protocol run has accepted the
//! pair, so every question asked is about an isomorphic pair.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::ip::{make_prover, run_protocol, ProtocolParams, StrategyKind};
use crate::perm_core::{is_isomorphism, ColoredGraph, Permutation};
use crate::rng::derive_seed;

/// Fixed-width binary encoding of a permutation of degree `n`: `n` fields
/// of `ceil(log2 n)` bits, most significant bit first, in index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolutionEncoding {
    n: usize,
}

impl SolutionEncoding {
    pub fn new(n: usize) -> Self {
        SolutionEncoding { n }
    }

    pub fn field_width(&self) -> usize {
        if self.n <= 1 {
            0
        } else {
            (usize::BITS - (self.n - 1).leading_zeros()) as usize
        }
    }

    pub fn width(&self) -> usize {
        self.n * self.field_width()
    }

    pub fn encode(&self, p: &Permutation) -> Vec<bool> {
        assert_eq!(p.degree(), self.n, "permutation degree does not match encoding");
        let w = self.field_width();
        p.images()
            .iter()
            .flat_map(|&x| (0..w).rev().map(move |b| x >> b & 1 == 1))
            .collect()
    }

    pub fn decode(&self, bits: &[bool]) -> Result<Permutation> {
        if bits.len() != self.width() {
            return Err(Error::Inconsistency(format!(
                "expected {} bits, got {}",
                self.width(),
                bits.len()
            )));
        }
        let w = self.field_width();
        let images = if w == 0 {
            vec![0; self.n]
        } else {
            bits.chunks(w)
                .map(|field| field.iter().fold(0usize, |acc, &b| acc << 1 | usize::from(b)))
                .collect()
        };
        Permutation::new(images).map_err(|e| Error::Inconsistency(e.to_string()))
    }
}

pub fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Majority-vote runs per bit query.
pub const DEFAULT_VOTES: usize = 5;

/// Answers "is bit `i` of the canonical isomorphism 1?" for one input pair
/// by running an honest protocol `votes` times and taking the majority.
pub struct BitOracle {
    g1: ColoredGraph,
    g2: ColoredGraph,
    params: ProtocolParams,
    seed: u64,
    votes: usize,
    queries: AtomicUsize,
}

impl BitOracle {
    pub fn new(g1: &ColoredGraph, g2: &ColoredGraph, params: ProtocolParams, seed: u64) -> Self {
        BitOracle {
            g1: g1.clone(),
            g2: g2.clone(),
            params,
            seed,
            votes: DEFAULT_VOTES,
            queries: AtomicUsize::new(0),
        }
    }

    pub fn with_votes(mut self, votes: usize) -> Self {
        assert!(votes >= 1);
        self.votes = votes;
        self
    }

    pub fn encoding(&self) -> SolutionEncoding {
        SolutionEncoding::new(self.g1.vertex_count())
    }

    /// Number of bit queries answered so far.
    pub fn query_count(&self) -> usize {
        self.queries.load(Ordering::Relaxed)
    }

    fn run(&self, label: &str, index: u64) -> Option<Permutation> {
        let prover_seed = derive_seed(self.seed, &format!("{label}/prover"), index);
        let verifier_seed = derive_seed(self.seed, &format!("{label}/verifier"), index);
        let mut prover = make_prover(StrategyKind::Honest, prover_seed);
        run_protocol(&self.g1, &self.g2, prover.as_mut(), &self.params, verifier_seed)
            .outcome
            .output()
            .cloned()
    }

    /// One protocol run deciding whether the pair is in the promise at all.
    /// Does not count as a bit query.
    pub fn membership(&self) -> Option<Permutation> {
        self.run("membership", 0)
    }

    pub fn query(&self, bit: usize) -> Result<bool> {
        let encoding = self.encoding();
        if bit >= encoding.width() {
            return Err(Error::ContractViolation(format!(
                "bit {bit} out of range for width {}",
                encoding.width()
            )));
        }
        self.queries.fetch_add(1, Ordering::Relaxed);
        let (mut ones, mut zeros) = (0usize, 0usize);
        for vote in 0..self.votes {
            let index = (bit * self.votes + vote) as u64;
            if let Some(p) = self.run("bit", index) {
                if encoding.encode(&p)[bit] {
                    ones += 1;
                } else {
                    zeros += 1;
                }
            }
        }
        if ones == 0 && zeros == 0 {
            return Err(Error::Inconsistency(format!(
                "every run rejected while answering bit {bit}"
            )));
        }
        Ok(ones > zeros)
    }
}

/// Reassembles the canonical isomorphism from bit queries. Returns `None`
/// without querying when the membership run rejects.
pub fn extract_via_bit_oracle(g1: &ColoredGraph, g2: &ColoredGraph, oracle: &BitOracle) -> Result<Option<Permutation>> {
    if oracle.membership().is_none() {
        return Ok(None);
    }
    let encoding = oracle.encoding();
    let bits = (0..encoding.width())
        .map(|i| oracle.query(i))
        .collect::<Result<Vec<_>>>()?;
    let p = encoding.decode(&bits)?;
    if !is_isomorphism(g1, g2, &p)? {
        return Err(Error::Inconsistency(format!(
            "decoded {p} from bits {} is not an isomorphism",
            bits_to_string(&bits)
        )));
    }
    Ok(Some(p))
}
