use super::graph::is_isomorphism_unchecked;
use super::{ColoredGraph, GeneratorSet, Permutation, StabilizerChain};
use crate::error::{Error, Result};

/// Two copies of `g` with `0..point` individualized, one marking `point` and
/// one marking `target`. They are isomorphic iff some automorphism fixes
/// `0..point` pointwise and sends `point` to `target`.
pub fn marked_pair(g: &ColoredGraph, point: usize, target: usize) -> (ColoredGraph, ColoredGraph) {
    let prefix: Vec<usize> = (0..point).collect();
    let palette = g.max_color() + 1;
    (
        g.individualized(&prefix, Some(point), palette),
        g.individualized(&prefix, Some(target), palette),
    )
}

/// Generators of `Aut(g)` recovered from an isomorphism oracle.
///
/// Points are individualized one at a time in increasing order. At point
/// `k` the oracle is asked, for each same-colored `j > k` not already known
/// to be in the orbit, whether the copy marking `k` maps onto the copy
/// marking `j`; each isomorphism returned is an automorphism fixing
/// `0..k` and is kept as a generator. The assembled group is then checked
/// against the orbits that were discovered.
pub fn aut_generators_via_gi<F>(g: &ColoredGraph, mut gi_solver: F) -> Result<GeneratorSet>
where
    F: FnMut(&ColoredGraph, &ColoredGraph) -> Option<Permutation>,
{
    let n = g.vertex_count();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut discovered: Vec<Vec<usize>> = Vec::with_capacity(n);

    for point in 0..n {
        let mut level_gens: Vec<Permutation> = Vec::new();
        let mut orbit = vec![point];
        for target in point + 1..n {
            if g.color(target) != g.color(point) || orbit.contains(&target) {
                continue;
            }
            let (marked_point, marked_target) = marked_pair(g, point, target);
            let Some(sigma) = gi_solver(&marked_point, &marked_target) else {
                continue;
            };
            if sigma.degree() != n || !is_isomorphism_unchecked(&marked_point, &marked_target, sigma.images()) {
                return Err(Error::OracleIntegrity(format!(
                    "answer for (mark {point}, mark {target}) is not an isomorphism: {sigma:?}"
                )));
            }
            level_gens.push(sigma);
            orbit = orbit_of(point, &level_gens);
        }
        orbit.sort_unstable();
        discovered.push(orbit);
        gens.extend(level_gens);
    }

    let set = GeneratorSet::new(n, gens)?;
    let chain = StabilizerChain::schreier_sims(&set);
    for (point, orbit) in discovered.iter().enumerate() {
        let implied = chain.orbit_under_prefix_stabilizer(point);
        if &implied != orbit {
            return Err(Error::OracleIntegrity(format!(
                "orbit of {point} is {implied:?} in the assembled group but the oracle reported {orbit:?}"
            )));
        }
    }
    Ok(set)
}

fn orbit_of(point: usize, gens: &[Permutation]) -> Vec<usize> {
    let mut orbit = vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let beta = orbit[head];
        head += 1;
        for g in gens {
            let gamma = g.apply(beta);
            if !orbit.contains(&gamma) {
                orbit.push(gamma);
            }
        }
    }
    orbit
}
