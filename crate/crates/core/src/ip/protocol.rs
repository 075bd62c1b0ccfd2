//! Verifier side of the protocols.
//!
//! Every run is a short exchange of [`Message`]s. The verifier keeps its
//! coin flips in local state; provers only ever see the message log.
//! All non-isomorphism claims of a run are defended in one batch: a single
//! `ClaimList`, a single `Graphs` message carrying `m` challenges per claim,
//! and a single `Bits` answer.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use super::message::{
    ClaimLabel, GniClaim, InputPair, Message, Party, Payload, ProtocolKind, ProtocolParams, Transcript, VerifierOutcome,
};
use super::prover::{ProverStrategy, Request};
use crate::perm_core::{
    find_first_isomorphism, is_isomorphism, marked_pair, ColoredGraph, GeneratorSet, Permutation, StabilizerChain,
};
use crate::rng::StreamRng;

/// The verifier's secret choice per challenge (`true` = graph `b`).
#[derive(Default)]
pub(crate) struct PrivateCoins {
    choices: Vec<bool>,
}

struct Session<'a> {
    input: InputPair,
    prover: &'a mut dyn ProverStrategy,
    messages: Vec<Message>,
}

impl<'a> Session<'a> {
    fn new(input: InputPair, prover: &'a mut dyn ProverStrategy) -> Self {
        Session {
            input,
            prover,
            messages: Vec::new(),
        }
    }

    fn ask(&mut self, request: Request) -> Payload {
        let payload = self.prover.next_message(&self.input, request, &self.messages);
        self.push(Party::Prover, payload.clone());
        payload
    }

    fn send(&mut self, payload: Payload) {
        self.push(Party::Verifier, payload);
    }

    fn push(&mut self, sender: Party, payload: Payload) {
        let round = self.messages.len();
        self.messages.push(Message { sender, round, payload });
    }

    /// Runs the shuffle game for every claim at once. Accepts iff every
    /// answer matches the verifier's secret choice.
    fn defend(&mut self, claims: Vec<GniClaim>, m: usize, rng: &mut StreamRng) -> bool {
        if claims.is_empty() {
            return true;
        }
        let mut coins = PrivateCoins::default();
        let mut challenges = Vec::with_capacity(claims.len() * m);
        for claim in &claims {
            for _ in 0..m {
                let pick_b = rng.gen_bool(0.5);
                let chosen = if pick_b { &claim.b } else { &claim.a };
                challenges.push(shuffle(chosen, rng));
                coins.choices.push(pick_b);
            }
        }
        self.send(Payload::ClaimList(claims));
        self.send(Payload::Graphs(challenges));
        match self.ask(Request::Answers) {
            Payload::Bits(bits) => bits == coins.choices,
            _ => false,
        }
    }

    fn finish(self, seed: u64, params: ProtocolParams, outcome: VerifierOutcome) -> Transcript {
        Transcript {
            input: self.input,
            seed,
            params,
            strategy: self.prover.kind().to_string(),
            messages: self.messages,
            outcome,
        }
    }
}

/// Relabels `g` by a uniformly random bijection, colors travelling with
/// their vertices. For isomorphic `a`, `b` the result has the same
/// distribution whichever one was chosen.
fn shuffle(g: &ColoredGraph, rng: &mut StreamRng) -> ColoredGraph {
    let mut images: Vec<usize> = (0..g.vertex_count()).collect();
    images.shuffle(rng);
    g.apply_unchecked(&Permutation::from_images_unchecked(images))
}

/// Non-isomorphism claims that pin down `Aut(g)` given a claimed subgroup.
///
/// For every point `k` and every same-colored `j > k` outside the claimed
/// orbit of `k` under the stabilizer of `0..k`, the verifier needs "no
/// automorphism fixing `0..k` sends `k` to `j`". Points that are not base
/// points of the claimed chain are included: their claimed orbit is `{k}`.
fn aut_claims(g: &ColoredGraph, chain: &StabilizerChain) -> Vec<GniClaim> {
    let n = g.vertex_count();
    let mut claims = Vec::new();
    for point in 0..n {
        let orbit = chain.orbit_under_prefix_stabilizer(point);
        for target in point + 1..n {
            if g.color(target) != g.color(point) || orbit.binary_search(&target).is_ok() {
                continue;
            }
            let (a, b) = marked_pair(g, point, target);
            claims.push(GniClaim {
                label: ClaimLabel::Orbit { point, target },
                a,
                b,
            });
        }
    }
    claims
}

/// Claims that each coordinate of `phi` is the smallest value reachable
/// given the earlier coordinates. Candidates `r < phi(k)` are listed in
/// increasing order; those already used, differently colored, or with
/// adjacency to the pinned prefix that disagrees are skipped locally.
fn stage_claims(g1: &ColoredGraph, g2: &ColoredGraph, phi: &Permutation) -> Vec<GniClaim> {
    let n = g1.vertex_count();
    let palette = g1.max_color().max(g2.max_color()) + 1;
    let mut claims = Vec::new();
    let mut used = vec![false; n];
    for stage in 0..n {
        let prefix1: Vec<usize> = (0..stage).collect();
        let prefix2: Vec<usize> = prefix1.iter().map(|&v| phi.apply(v)).collect();
        for (candidate, &taken) in used.iter().enumerate().take(phi.apply(stage)) {
            if taken || g2.color(candidate) != g1.color(stage) {
                continue;
            }
            if (0..stage).any(|t| g1.has_edge(t, stage) != g2.has_edge(phi.apply(t), candidate)) {
                continue;
            }
            claims.push(GniClaim {
                label: ClaimLabel::Stage { stage, candidate },
                a: g1.individualized(&prefix1, Some(stage), palette),
                b: g2.individualized(&prefix2, Some(candidate), palette),
            });
        }
        used[phi.apply(stage)] = true;
    }
    claims
}

fn check_group(g: &ColoredGraph, claimed: &GeneratorSet) -> Option<StabilizerChain> {
    if claimed.degree() != g.vertex_count() {
        return None;
    }
    let all_automorphisms = claimed
        .generators()
        .iter()
        .all(|h| is_isomorphism(g, g, h).unwrap_or(false));
    all_automorphisms.then(|| StabilizerChain::schreier_sims(claimed))
}

fn verify_aut_in_session(
    session: &mut Session<'_>,
    g: &ColoredGraph,
    claimed: &GeneratorSet,
    m: usize,
    rng: &mut StreamRng,
) -> Option<StabilizerChain> {
    let chain = check_group(g, claimed)?;
    let claims = aut_claims(g, &chain);
    session.defend(claims, m, rng).then_some(chain)
}

/// Interactive check that `claimed` generates all of `Aut(g)`.
///
/// A generator that is not an automorphism is rejected on the spot. The
/// claimed group is then accepted only if the prover wins the shuffle game
/// on every pair that the claimed group says is non-isomorphic; if the
/// claim is a proper subgroup, one of those pairs is in fact isomorphic and
/// survives each round with probability exactly 1/2.
pub fn verify_aut_group(
    g: &ColoredGraph,
    claimed: &GeneratorSet,
    prover: &mut dyn ProverStrategy,
    params: &ProtocolParams,
    rng: &mut StreamRng,
) -> bool {
    let input = InputPair {
        g1: g.clone(),
        g2: g.clone(),
    };
    let mut session = Session::new(input, prover);
    verify_aut_in_session(&mut session, g, claimed, params.m, rng).is_some()
}

/// `m` rounds of the two-graph shuffle game on `(a, b)`.
pub fn gni_subprotocol(
    a: &ColoredGraph,
    b: &ColoredGraph,
    prover: &mut dyn ProverStrategy,
    rng: &mut StreamRng,
    m: usize,
) -> bool {
    if a.vertex_count() != b.vertex_count() {
        return true;
    }
    let input = InputPair {
        g1: a.clone(),
        g2: b.clone(),
    };
    let claim = GniClaim {
        label: ClaimLabel::Pair,
        a: a.clone(),
        b: b.clone(),
    };
    Session::new(input, prover).defend(vec![claim], m, rng)
}

fn receive_isomorphism(session: &mut Session<'_>) -> Option<Permutation> {
    let Payload::Permutation(phi) = session.ask(Request::Isomorphism) else {
        return None;
    };
    let input = &session.input;
    is_isomorphism(&input.g1, &input.g2, &phi)
        .unwrap_or(false)
        .then_some(phi)
}

/// Group-theoretic protocol: the prover sends generators of `Aut(G1)` and
/// any isomorphism; the verifier checks both and outputs the canonical
/// representative of the isomorphism coset.
pub fn run_psd_gi_group(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    prover: &mut dyn ProverStrategy,
    params: &ProtocolParams,
    seed: u64,
) -> Transcript {
    let params = ProtocolParams {
        protocol: ProtocolKind::Group,
        ..*params
    };
    let mut rng = StreamRng::seed_from_u64(seed);
    let mut session = Session::new(
        InputPair {
            g1: g1.clone(),
            g2: g2.clone(),
        },
        prover,
    );
    let outcome = group_outcome(&mut session, g1, g2, params.m, &mut rng);
    session.finish(seed, params, outcome)
}

fn group_outcome(
    session: &mut Session<'_>,
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    m: usize,
    rng: &mut StreamRng,
) -> VerifierOutcome {
    let claimed = match session.ask(Request::AutGenerators) {
        Payload::GeneratorSet(gens) => gens,
        _ => return VerifierOutcome::Bottom,
    };
    let Some(phi) = receive_isomorphism(session) else {
        return VerifierOutcome::Bottom;
    };
    let Some(chain) = verify_aut_in_session(session, g1, &claimed, m, rng) else {
        return VerifierOutcome::Bottom;
    };
    match find_first_isomorphism(&phi, &chain, g1, g2) {
        Ok(canonical) => VerifierOutcome::Output(canonical),
        Err(_) => VerifierOutcome::Bottom,
    }
}

/// Combinatorial protocol: the prover sends the canonical isomorphism
/// itself and, for every coordinate in parallel, defends that no smaller
/// value is reachable given the coordinates before it.
pub fn run_psd_gi_comb(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    prover: &mut dyn ProverStrategy,
    params: &ProtocolParams,
    seed: u64,
) -> Transcript {
    let params = ProtocolParams {
        protocol: ProtocolKind::Comb,
        ..*params
    };
    let mut rng = StreamRng::seed_from_u64(seed);
    let mut session = Session::new(
        InputPair {
            g1: g1.clone(),
            g2: g2.clone(),
        },
        prover,
    );
    let outcome = match receive_isomorphism(&mut session) {
        Some(phi) => {
            let claims = stage_claims(g1, g2, &phi);
            if session.defend(claims, params.m, &mut rng) {
                VerifierOutcome::Output(phi)
            } else {
                VerifierOutcome::Bottom
            }
        }
        None => VerifierOutcome::Bottom,
    };
    session.finish(seed, params, outcome)
}

/// Dispatches on `params.protocol`.
pub fn run_protocol(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    prover: &mut dyn ProverStrategy,
    params: &ProtocolParams,
    seed: u64,
) -> Transcript {
    match params.protocol {
        ProtocolKind::Group => run_psd_gi_group(g1, g2, prover, params, seed),
        ProtocolKind::Comb => run_psd_gi_comb(g1, g2, prover, params, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ip::prover::{make_prover, StrategyKind};

    fn c4() -> ColoredGraph {
        ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn c4r() -> ColoredGraph {
        ColoredGraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap()
    }

    fn p4() -> ColoredGraph {
        ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn c4_aut_claims_are_the_two_non_orbit_pairs() {
        let gens = GeneratorSet::new(4, vec![p(&[1, 2, 3, 0]), p(&[0, 3, 2, 1])]).unwrap();
        let chain = StabilizerChain::schreier_sims(&gens);
        let labels: Vec<ClaimLabel> = aut_claims(&c4(), &chain).into_iter().map(|c| c.label).collect();
        assert_eq!(
            labels,
            vec![
                ClaimLabel::Orbit { point: 1, target: 2 },
                ClaimLabel::Orbit { point: 2, target: 3 },
            ]
        );
    }

    #[test]
    fn trivial_claim_on_c4_includes_isomorphic_pair() {
        let chain = StabilizerChain::schreier_sims(&GeneratorSet::trivial(4));
        let claims = aut_claims(&c4(), &chain);
        assert_eq!(claims.len(), 6);
        assert_eq!(claims[0].label, ClaimLabel::Orbit { point: 0, target: 1 });
        assert!(crate::perm_core::search::are_isomorphic(&claims[0].a, &claims[0].b));
    }

    #[test]
    fn non_automorphism_generator_rejected_without_rounds() {
        let mut prover = make_prover(StrategyKind::Honest, 0);
        let claimed = GeneratorSet::new(4, vec![p(&[1, 0, 2, 3])]).unwrap();
        let mut rng = StreamRng::seed_from_u64(0);
        let mut session = Session::new(InputPair { g1: c4(), g2: c4() }, prover.as_mut());
        assert!(verify_aut_in_session(&mut session, &c4(), &claimed, 20, &mut rng).is_none());
        assert!(session.messages.is_empty());
    }

    #[test]
    fn stage_claims_for_canonical_c4_isomorphism() {
        // For the canonical map every smaller candidate is used or fails the
        // adjacency filter, so nothing needs defending.
        let claims = stage_claims(&c4(), &c4r(), &p(&[0, 2, 1, 3]));
        assert!(claims.is_empty());
        let lie = stage_claims(&c4(), &c4r(), &p(&[0, 3, 1, 2]));
        assert_eq!(
            lie.iter().map(|c| c.label).collect::<Vec<_>>(),
            vec![ClaimLabel::Stage { stage: 1, candidate: 2 }]
        );
        assert!(crate::perm_core::search::are_isomorphic(&lie[0].a, &lie[0].b));
    }

    #[test]
    fn honest_group_protocol_outputs_canonical() {
        let mut prover = make_prover(StrategyKind::Honest, 0);
        let t = run_psd_gi_group(&c4(), &c4r(), prover.as_mut(), &ProtocolParams::group(), 5);
        assert_eq!(t.outcome, VerifierOutcome::Output(p(&[0, 2, 1, 3])));
    }

    #[test]
    fn lex_liar_cannot_move_group_output() {
        let mut prover = make_prover(StrategyKind::LexLiar, 0);
        let t = run_psd_gi_group(&c4(), &c4r(), prover.as_mut(), &ProtocolParams::group(), 5);
        assert_eq!(t.outcome, VerifierOutcome::Output(p(&[0, 2, 1, 3])));
    }

    #[test]
    fn non_isomorphic_inputs_give_bottom() {
        for kind in StrategyKind::ALL {
            for params in [ProtocolParams::group(), ProtocolParams::comb()] {
                let mut prover = make_prover(kind, 0);
                let t = run_protocol(&c4(), &p4(), prover.as_mut(), &params, 1);
                assert_eq!(t.outcome, VerifierOutcome::Bottom);
            }
        }
    }

    #[test]
    fn single_vertex_comb() {
        let g = ColoredGraph::new(1, &[]).unwrap();
        let mut prover = make_prover(StrategyKind::Honest, 0);
        let t = run_psd_gi_comb(&g, &g, prover.as_mut(), &ProtocolParams::comb(), 0);
        assert_eq!(t.outcome, VerifierOutcome::Output(Permutation::identity(1)));
        assert_eq!(t.messages.len(), 1);
    }

    #[test]
    fn rounds_strictly_increase() {
        let mut prover = make_prover(StrategyKind::Honest, 0);
        let t = run_psd_gi_group(&c4(), &c4r(), prover.as_mut(), &ProtocolParams::group(), 9);
        assert!(t.messages.windows(2).all(|w| w[0].round < w[1].round));
        assert_eq!(t.messages.len(), 5);
    }
}
