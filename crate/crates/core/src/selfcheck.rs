//! Agreement checks between the fast algorithms and their brute-force
//! oracles on small inputs. Backs the `selfcheck` subcommand.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::Rng;

use crate::ip::{make_prover, run_protocol, ProtocolParams, StrategyKind};
use crate::perm_core::brute::{all_isomorphisms, brute_force_oracles, for_each_permutation};
use crate::perm_core::{
    aut_generators_via_gi, canonical_isomorphism, find_first_isomorphism, search, ColoredGraph, GeneratorSet,
    Permutation, StabilizerChain,
};
use crate::psd_nl::{brute_force_lex_first, lex_first_shortest_path, DEFAULT_ENUMERATION_LIMIT};
use crate::rng::stream;
use crate::sample::{
    all_graphs, isomorphism_class_representatives, random_config_graph, random_graph, random_permutation,
};

/// Largest vertex count covered by the self-check.
pub const MAX_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            mismatches: 0,
            first_mismatch: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.mismatches += 1;
            if self.first_mismatch.is_none() {
                self.first_mismatch = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} cases={} mismatches={}",
            self.name, self.cases, self.mismatches
        )?;
        if let Some(m) = &self.first_mismatch {
            write!(f, " first: {m}")?;
        }
        Ok(())
    }
}

pub fn run_all(seed: u64) -> Vec<SuiteResult> {
    vec![
        schreier_sims(seed),
        automorphisms(seed),
        canonical(seed),
        lex_path(seed),
        protocols(seed),
    ]
}

/// Closure of a generator set by breadth-first multiplication.
pub fn closure(gens: &GeneratorSet) -> BTreeSet<Permutation> {
    let id = Permutation::identity(gens.degree());
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens.generators() {
            let q = &p * g;
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

fn colored_samples(seed: u64, label: &str, count: usize) -> Vec<ColoredGraph> {
    let mut rng = stream(seed, label, 0);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=MAX_N);
            random_graph(&mut rng, n, 0.5, 3)
        })
        .collect()
}

pub fn schreier_sims(seed: u64) -> SuiteResult {
    let mut suite = SuiteResult::new("schreier_sims");
    let mut rng = stream(seed, "selfcheck/schreier", 0);
    for _ in 0..300 {
        let n = rng.gen_range(1..=MAX_N);
        let k = rng.gen_range(0..=3);
        let gens = GeneratorSet::new(n, (0..k).map(|_| random_permutation(&mut rng, n)).collect()).unwrap();
        let chain = StabilizerChain::schreier_sims(&gens);
        let group = closure(&gens);
        suite.check(chain.order() == group.len() as u128, || {
            format!(
                "order {} vs closure {} for {:?}",
                chain.order(),
                group.len(),
                gens.generators()
            )
        });
        let mut membership_ok = true;
        for_each_permutation(n, |images| {
            let p = Permutation::new(images.to_vec()).unwrap();
            membership_ok &= chain.contains(&p) == group.contains(&p);
            membership_ok
        });
        suite.check(membership_ok, || {
            format!("membership differs for {:?}", gens.generators())
        });
    }
    suite
}

pub fn automorphisms(seed: u64) -> SuiteResult {
    let mut suite = SuiteResult::new("automorphisms");
    let graphs = (1..=MAX_N)
        .flat_map(all_graphs)
        .chain(colored_samples(seed, "selfcheck/aut", 200));
    for g in graphs {
        let brute = all_isomorphisms(&g, &g).unwrap();
        let outcome =
            aut_generators_via_gi(&g, search::find_isomorphism).map(|gens| StabilizerChain::schreier_sims(&gens));
        let ok = match &outcome {
            Ok(chain) => chain.order() == brute.len() as u128 && brute.iter().all(|a| chain.contains(a)),
            Err(_) => false,
        };
        suite.check(ok, || format!("graph {}", g.to_text().replace('\n', "; ")));
    }
    suite
}

pub fn canonical(seed: u64) -> SuiteResult {
    let mut suite = SuiteResult::new("canonical_isomorphism");
    let mut rng = stream(seed, "selfcheck/canonical", 0);
    let mut pairs = Vec::new();
    for n in 0..=4 {
        for g in all_graphs(n) {
            for_each_permutation(n, |images| {
                let sigma = Permutation::new(images.to_vec()).unwrap();
                pairs.push((g.clone(), g.apply(&sigma).unwrap()));
                true
            });
        }
    }
    for g in all_graphs(MAX_N).chain(colored_samples(seed, "selfcheck/canonical-colored", 200)) {
        let sigma = random_permutation(&mut rng, g.vertex_count());
        pairs.push((g.clone(), g.apply(&sigma).unwrap()));
        let other = random_graph(&mut rng, g.vertex_count(), 0.5, 1);
        pairs.push((g, other));
    }

    for (g1, g2) in pairs {
        let brute = brute_force_oracles(&g1, &g2).unwrap();
        let fast = canonical_isomorphism(&g1, &g2);
        suite.check(matches!(&fast, Ok(p) if *p == brute.lex_first), || {
            format!("canonical {:?} vs {:?}", fast, brute.lex_first)
        });
        // Canonicalizing from the last isomorphism with the full group must
        // also land on the first one.
        if let Some(last) = brute.isomorphisms.last() {
            let gens = GeneratorSet::new(g1.vertex_count(), brute.automorphisms.clone()).unwrap();
            let chain = StabilizerChain::schreier_sims(&gens);
            let found = find_first_isomorphism(last, &chain, &g1, &g2);
            suite.check(matches!(&found, Ok(p) if Some(p) == brute.lex_first.as_ref()), || {
                format!("find_first from {last} gave {found:?}")
            });
        }
    }
    suite
}

pub fn lex_path(seed: u64) -> SuiteResult {
    let mut suite = SuiteResult::new("lex_first_path");
    let mut rng = stream(seed, "selfcheck/lexpath", 0);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=MAX_N + 1);
        let g = random_config_graph(&mut rng, n, 0.4, 0.25);
        let fast = lex_first_shortest_path(&g);
        let brute = brute_force_lex_first(&g, DEFAULT_ENUMERATION_LIMIT);
        suite.check(matches!(&brute, Ok(b) if *b == fast), || {
            format!("{} : fast {fast:?} brute {brute:?}", g.to_text().replace('\n', "; "))
        });
    }
    suite
}

/// Both protocols with an honest prover output the brute-force answer on
/// one relabeled representative of every isomorphism class.
pub fn protocols(seed: u64) -> SuiteResult {
    let mut suite = SuiteResult::new("protocols");
    let mut rng = stream(seed, "selfcheck/protocols", 0);
    let mut trial = 0u64;
    for n in 1..=MAX_N {
        for g1 in isomorphism_class_representatives(n) {
            let sigma = random_permutation(&mut rng, n);
            let g2 = g1.apply(&sigma).unwrap();
            let expected = brute_force_oracles(&g1, &g2).unwrap().lex_first;
            for params in [ProtocolParams::group(), ProtocolParams::comb()] {
                let mut prover = make_prover(StrategyKind::Honest, trial);
                let t = run_protocol(&g1, &g2, prover.as_mut(), &params, trial ^ seed);
                trial += 1;
                suite.check(t.outcome.output() == expected.as_ref(), || {
                    format!(
                        "{:?} on {}: {}",
                        params.protocol,
                        g1.to_text().replace('\n', "; "),
                        t.outcome
                    )
                });
            }
        }
    }
    suite
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_s3_generators() {
        let gens = GeneratorSet::new(
            3,
            vec![
                Permutation::new(vec![1, 0, 2]).unwrap(),
                Permutation::new(vec![1, 2, 0]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(closure(&gens).len(), 6);
        assert_eq!(closure(&GeneratorSet::trivial(4)).len(), 1);
    }

    #[test]
    fn schreier_sims_suite_passes() {
        let r = schreier_sims(7);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn failing_suite_reports_first_mismatch() {
        let mut s = SuiteResult::new("demo");
        s.check(true, || unreachable!());
        s.check(false, || "bad".into());
        s.check(false, || "worse".into());
        assert_eq!(s.to_string(), "FAIL demo cases=3 mismatches=2 first: bad");
    }
}
