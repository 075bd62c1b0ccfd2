use super::graph::is_isomorphism_unchecked;
use super::{is_isomorphism, ColoredGraph, Permutation, StabilizerChain};
use crate::error::{Error, Result};

/// Canonical representative of the isomorphism coset `phi · Aut(g1)`.
///
/// Walks the chain level by level, replacing the current isomorphism `f`
/// by the `f ∘ u` (`u` in the level transversal) that sends the base point
/// to the smallest possible vertex. Because base points are taken in
/// increasing order, the result is the isomorphism with the
/// lexicographically smallest image vector. It does not depend on which
/// isomorphism `phi` is supplied, nor on the generating set the chain was
/// built from.
///
/// `chain` must describe `Aut(g1)`. Only the cheap half of that contract is
/// checked here: every level generator must be an automorphism of `g1`.
pub fn find_first_isomorphism(
    phi: &Permutation,
    chain: &StabilizerChain,
    g1: &ColoredGraph,
    g2: &ColoredGraph,
) -> Result<Permutation> {
    if !is_isomorphism(g1, g2, phi)? {
        return Err(Error::ContractViolation(
            "starting permutation is not an isomorphism".into(),
        ));
    }
    if chain.degree() != g1.vertex_count() {
        return Err(Error::DegreeMismatch {
            expected: g1.vertex_count(),
            found: chain.degree(),
        });
    }
    for level in chain.levels() {
        if let Some(bad) = level
            .generators()
            .iter()
            .find(|h| !is_isomorphism_unchecked(g1, g1, h.images()))
        {
            return Err(Error::ContractViolation(format!(
                "chain generator {bad} is not an automorphism of the first graph"
            )));
        }
    }

    let mut current = phi.clone();
    for level in chain.levels() {
        let best = level
            .representatives()
            .min_by_key(|u| current.apply(u.apply(level.base_point())))
            .expect("transversal contains the identity");
        current = current.compose_unchecked(best);
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm_core::GeneratorSet;

    fn c4() -> ColoredGraph {
        ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn c4_relabeled() -> ColoredGraph {
        ColoredGraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap()
    }

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn c4_aut_chain() -> StabilizerChain {
        let gens = GeneratorSet::new(4, vec![p(&[1, 2, 3, 0]), p(&[0, 3, 2, 1])]).unwrap();
        StabilizerChain::schreier_sims(&gens)
    }

    #[test]
    fn self_isomorphism_canonicalizes_to_identity() {
        let chain = c4_aut_chain();
        for phi in [p(&[1, 2, 3, 0]), p(&[2, 1, 0, 3]), p(&[3, 2, 1, 0])] {
            let out = find_first_isomorphism(&phi, &chain, &c4(), &c4()).unwrap();
            assert!(out.is_identity());
        }
    }

    #[test]
    fn relabeled_cycle_gives_0213() {
        // Every isomorphism is (0 2 1 3) composed with an automorphism.
        let chain = c4_aut_chain();
        let base = p(&[0, 2, 1, 3]);
        for a in [p(&[1, 2, 3, 0]), p(&[3, 2, 1, 0]), p(&[2, 3, 0, 1])] {
            let phi = base.compose(&a).unwrap();
            let out = find_first_isomorphism(&phi, &chain, &c4(), &c4_relabeled()).unwrap();
            assert_eq!(out, base);
        }
    }

    #[test]
    fn rejects_non_isomorphism() {
        let err =
            find_first_isomorphism(&Permutation::identity(4), &c4_aut_chain(), &c4(), &c4_relabeled()).unwrap_err();
        assert!(matches!(err, Error::ContractViolation(_)));
    }

    #[test]
    fn rejects_chain_with_foreign_generators() {
        let gens = GeneratorSet::new(4, vec![p(&[1, 0, 2, 3])]).unwrap();
        let chain = StabilizerChain::schreier_sims(&gens);
        let err = find_first_isomorphism(&Permutation::identity(4), &chain, &c4(), &c4()).unwrap_err();
        assert!(matches!(err, Error::ContractViolation(_)));
    }

    #[test]
    fn degenerate_graphs() {
        for n in 0..=1 {
            let g = ColoredGraph::new(n, &[]).unwrap();
            let chain = StabilizerChain::schreier_sims(&GeneratorSet::trivial(n));
            let out = find_first_isomorphism(&Permutation::identity(n), &chain, &g, &g).unwrap();
            assert_eq!(out, Permutation::identity(n));
        }
    }
}
