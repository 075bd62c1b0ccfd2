use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::message::ProtocolParams;
use super::protocol::run_protocol;
use super::prover::{make_prover, StrategyKind};
use crate::perm_core::{ColoredGraph, Permutation};
use crate::rng::derive_seed;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StrategyReport {
    pub strategy: StrategyKind,
    pub trials: usize,
    pub bottom: usize,
    /// Non-bottom outputs with their counts, in permutation order.
    pub outputs: Vec<(Permutation, usize)>,
    /// Number of trials in which the strategy had no lie available.
    pub degraded: usize,
}

impl StrategyReport {
    pub fn output_rate(&self) -> f64 {
        (self.trials - self.bottom) as f64 / self.trials as f64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PsdReport {
    pub params: ProtocolParams,
    pub seed: u64,
    /// Every distinct non-bottom output seen across all strategies.
    pub distinct_outputs: Vec<Permutation>,
    pub strategies: Vec<StrategyReport>,
    /// Fraction of honest runs that produced an output, if honest was run.
    pub honest_success_rate: Option<f64>,
}

impl PsdReport {
    /// At most one distinct answer was ever produced.
    pub fn pseudo_deterministic(&self) -> bool {
        self.distinct_outputs.len() <= 1
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the protocol `trials` times per strategy, each run with its own
/// verifier and prover seeds derived from `seed`, and tallies outcomes.
pub fn psd_statistical_test(
    params: &ProtocolParams,
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    strategies: &[StrategyKind],
    trials: usize,
    seed: u64,
) -> PsdReport {
    assert!(trials >= 1, "at least one trial per strategy");
    let mut distinct = BTreeSet::new();
    let mut reports = Vec::with_capacity(strategies.len());

    for &strategy in strategies {
        let mut outputs: BTreeMap<Permutation, usize> = BTreeMap::new();
        let mut bottom = 0;
        let mut degraded = 0;
        for trial in 0..trials as u64 {
            let verifier_seed = derive_seed(seed, &format!("verifier/{strategy}"), trial);
            let prover_seed = derive_seed(seed, &format!("prover/{strategy}"), trial);
            let mut prover = make_prover(strategy, prover_seed);
            let transcript = run_protocol(g1, g2, prover.as_mut(), params, verifier_seed);
            if prover.metadata().degraded {
                degraded += 1;
            }
            match transcript.outcome.output() {
                Some(p) => {
                    distinct.insert(p.clone());
                    *outputs.entry(p.clone()).or_default() += 1;
                }
                None => bottom += 1,
            }
        }
        reports.push(StrategyReport {
            strategy,
            trials,
            bottom,
            outputs: outputs.into_iter().collect(),
            degraded,
        });
    }

    let honest_success_rate = reports
        .iter()
        .find(|r| r.strategy == StrategyKind::Honest)
        .map(StrategyReport::output_rate);
    PsdReport {
        params: *params,
        seed,
        distinct_outputs: distinct.into_iter().collect(),
        strategies: reports,
        honest_success_rate,
    }
}
