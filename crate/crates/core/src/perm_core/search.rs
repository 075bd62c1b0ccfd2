//! Backtracking isomorphism search. This is the prover's graph-isomorphism
//! power: exponential in the worst case, fast at the sizes used here.

use super::{ColoredGraph, Permutation};

/// The lexicographically first isomorphism `g1 → g2`, if any.
///
/// Vertices of `g1` are assigned in order `0, 1, ..`, each trying targets in
/// increasing order, pruned by color, degree and adjacency to the vertices
/// already assigned.
pub fn find_isomorphism(g1: &ColoredGraph, g2: &ColoredGraph) -> Option<Permutation> {
    let n = g1.vertex_count();
    if g2.vertex_count() != n || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let sig1: Vec<(usize, usize)> = (0..n).map(|v| (g1.color(v), g1.degree(v))).collect();
    let sig2: Vec<(usize, usize)> = (0..n).map(|v| (g2.color(v), g2.degree(v))).collect();
    let mut sorted = Vec::with_capacity(2 * n);
    sorted.extend_from_slice(&sig1);
    sorted.extend_from_slice(&sig2);
    let (s1, s2) = sorted.split_at_mut(n);
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }

    let mut search = Search {
        g1,
        g2,
        sig1,
        sig2,
        images: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        Some(Permutation::from_images_unchecked(search.images))
    } else {
        None
    }
}

pub fn are_isomorphic(g1: &ColoredGraph, g2: &ColoredGraph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

struct Search<'a> {
    g1: &'a ColoredGraph,
    g2: &'a ColoredGraph,
    sig1: Vec<(usize, usize)>,
    sig2: Vec<(usize, usize)>,
    images: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, v: usize) -> bool {
        let n = self.images.len();
        if v == n {
            return true;
        }
        for target in 0..n {
            if self.used[target] || self.sig2[target] != self.sig1[v] {
                continue;
            }
            let consistent = (0..v).all(|u| self.g1.has_edge(u, v) == self.g2.has_edge(self.images[u], target));
            if !consistent {
                continue;
            }
            self.images[v] = target;
            self.used[target] = true;
            if self.extend(v + 1) {
                return true;
            }
            self.used[target] = false;
        }
        self.images[v] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm_core::brute::lex_first_isomorphism;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matches_brute_force_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(0..=7);
            let g1 = crate::sample::random_graph(&mut rng, n, 0.4, 2);
            let g2 = if rng.gen_bool(0.5) {
                g1.apply(&crate::sample::random_permutation(&mut rng, n)).unwrap()
            } else {
                crate::sample::random_graph(&mut rng, n, 0.4, 2)
            };
            assert_eq!(find_isomorphism(&g1, &g2), lex_first_isomorphism(&g1, &g2).unwrap());
        }
    }
}
