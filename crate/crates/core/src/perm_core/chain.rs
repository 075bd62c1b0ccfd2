use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{Error, Result};

/// Generators of a permutation group of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    n: usize,
    gens: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(n: usize, gens: Vec<Permutation>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.degree() != n) {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: bad.degree(),
            });
        }
        Ok(GeneratorSet { n, gens })
    }

    pub fn trivial(n: usize) -> Self {
        GeneratorSet { n, gens: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// One level of a stabilizer chain: the group `H_i` fixing every earlier
/// base point, the orbit of `base_point` under it, and a transversal with
/// one representative per orbit point.
#[derive(Clone, Debug)]
pub struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
    inverse_transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(n: usize, base_point: usize) -> Self {
        let mut level = Level {
            base_point,
            generators: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; n],
            inverse_transversal: vec![None; n],
        };
        level.rebuild_orbit(n);
        level
    }

    fn rebuild_orbit(&mut self, n: usize) {
        let id = Permutation::identity(n);
        self.transversal = vec![None; n];
        self.inverse_transversal = vec![None; n];
        self.transversal[self.base_point] = Some(id.clone());
        self.inverse_transversal[self.base_point] = Some(id);
        self.orbit = vec![self.base_point];
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head];
            head += 1;
            for g in &self.generators {
                let gamma = g.apply(beta);
                if self.transversal[gamma].is_none() {
                    let u = g.compose_unchecked(self.transversal[beta].as_ref().unwrap());
                    self.inverse_transversal[gamma] = Some(u.inverse());
                    self.transversal[gamma] = Some(u);
                    self.orbit.push(gamma);
                }
            }
        }
    }

    pub fn base_point(&self) -> usize {
        self.base_point
    }

    /// Generators of the level group `H_i`.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Orbit of the base point, in discovery order (base point first).
    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    pub fn contains_point(&self, point: usize) -> bool {
        self.transversal[point].is_some()
    }

    /// The transversal element carrying the base point to `point`.
    pub fn representative(&self, point: usize) -> Option<&Permutation> {
        self.transversal[point].as_ref()
    }

    /// Transversal elements in orbit order; the first one is the identity.
    pub fn representatives(&self) -> impl Iterator<Item = &Permutation> {
        self.orbit.iter().map(move |&p| self.transversal[p].as_ref().unwrap())
    }
}

/// Stabilizer chain whose base is chosen by increasing point order: each
/// base point is the smallest point moved by the stabilizer of the earlier
/// ones. Two generating sets of the same group produce the same base and
/// the same orbits.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Deterministic Schreier-Sims over the point sequence `0, 1, .., n-1`.
    /// Levels whose orbit is a single point are dropped at the end.
    pub fn schreier_sims(gens: &GeneratorSet) -> StabilizerChain {
        let n = gens.degree();
        let mut levels: Vec<Level> = (0..n).map(|k| Level::new(n, k)).collect();

        for g in gens.generators() {
            if let Some(first) = g.first_moved_point() {
                for level in &mut levels[..=first] {
                    level.generators.push(g.clone());
                }
            }
        }
        for level in &mut levels {
            level.rebuild_orbit(n);
        }

        while let Some((residue, from, depth)) = unsifted_schreier_generator(&levels) {
            for level in &mut levels[from..=depth] {
                level.generators.push(residue.clone());
                level.rebuild_orbit(n);
            }
        }

        levels.retain(|l| l.orbit.len() > 1);
        StabilizerChain { n, levels }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Product of the orbit lengths. Saturates at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    /// Factors `g` through the transversals. Returns the residue together
    /// with the index of the level where sifting stopped (`levels().len()`
    /// when it went through every level).
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let beta = h.apply(level.base_point);
            match &level.inverse_transversal[beta] {
                Some(u_inv) => h = u_inv.compose_unchecked(&h),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.n && self.sift(g).0.is_identity()
    }

    /// Orbit of `point` under the pointwise stabilizer of `0..point`.
    pub fn orbit_under_prefix_stabilizer(&self, point: usize) -> Vec<usize> {
        match self.levels.iter().find(|l| l.base_point == point) {
            Some(level) => {
                let mut orbit = level.orbit.clone();
                orbit.sort_unstable();
                orbit
            }
            None => vec![point],
        }
    }

    /// Union of the level generators, deduplicated.
    pub fn strong_generators(&self) -> GeneratorSet {
        let mut gens: Vec<Permutation> = self.levels.iter().flat_map(|l| l.generators.iter().cloned()).collect();
        gens.sort();
        gens.dedup();
        GeneratorSet { n: self.n, gens }
    }
}

/// Finds a Schreier generator of some level that does not sift through the
/// levels below it. Returns the residue, the first level it must join and
/// the level where sifting failed.
fn unsifted_schreier_generator(levels: &[Level]) -> Option<(Permutation, usize, usize)> {
    for (k, level) in levels.iter().enumerate().rev() {
        for &beta in &level.orbit {
            let u_beta = level.transversal[beta].as_ref().unwrap();
            for x in &level.generators {
                let image = x.apply(beta);
                let u_inv = level.inverse_transversal[image].as_ref().unwrap();
                let schreier = u_inv.compose_unchecked(&x.compose_unchecked(u_beta));
                if schreier.is_identity() {
                    continue;
                }
                if let Some((residue, depth)) = strip(levels, schreier, k + 1) {
                    return Some((residue, k + 1, depth));
                }
            }
        }
    }
    None
}

/// Sifts through the full-length working levels starting at `from`.
fn strip(levels: &[Level], mut h: Permutation, from: usize) -> Option<(Permutation, usize)> {
    for (offset, level) in levels[from..].iter().enumerate() {
        let beta = h.apply(level.base_point);
        match &level.inverse_transversal[beta] {
            Some(u_inv) => h = u_inv.compose_unchecked(&h),
            None => return Some((h, from + offset)),
        }
    }
    debug_assert!(h.is_identity());
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_group_has_empty_base() {
        let chain = StabilizerChain::schreier_sims(&GeneratorSet::trivial(4));
        assert_eq!(chain.order(), 1);
        assert!(chain.base().is_empty());
        assert!(chain.contains(&Permutation::identity(4)));
        assert!(!chain.contains(&p(&[1, 0, 2, 3])));
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let gens = GeneratorSet::new(3, vec![p(&[1, 0, 2]), p(&[1, 2, 0])]).unwrap();
        let chain = StabilizerChain::schreier_sims(&gens);
        assert_eq!(chain.order(), 6);
        assert_eq!(chain.base(), vec![0, 1]);
    }

    #[test]
    fn transversals_are_normalized() {
        let gens = GeneratorSet::new(5, vec![p(&[1, 2, 3, 4, 0]), p(&[0, 4, 3, 2, 1])]).unwrap();
        let chain = StabilizerChain::schreier_sims(&gens);
        assert_eq!(chain.order(), 10);
        for level in chain.levels() {
            assert!(level.representative(level.base_point()).unwrap().is_identity());
            for (&pt, rep) in level.orbit().iter().zip(level.representatives()) {
                assert_eq!(rep.apply(level.base_point()), pt);
            }
        }
    }

    #[test]
    fn level_generators_fix_earlier_base_points() {
        let gens = GeneratorSet::new(6, vec![p(&[1, 2, 3, 4, 5, 0]), p(&[1, 0, 2, 3, 4, 5])]).unwrap();
        let chain = StabilizerChain::schreier_sims(&gens);
        assert_eq!(chain.order(), 720);
        let base = chain.base();
        for (i, level) in chain.levels().iter().enumerate() {
            for g in level.generators() {
                for &b in &base[..i] {
                    assert_eq!(g.apply(b), b);
                }
            }
        }
    }

    #[test]
    fn base_skips_fixed_points() {
        // (1 3) only
        let gens = GeneratorSet::new(4, vec![p(&[0, 3, 2, 1])]).unwrap();
        let chain = StabilizerChain::schreier_sims(&gens);
        assert_eq!(chain.base(), vec![1]);
        assert_eq!(chain.orbit_under_prefix_stabilizer(1), vec![1, 3]);
        assert_eq!(chain.orbit_under_prefix_stabilizer(0), vec![0]);
        assert_eq!(chain.orbit_under_prefix_stabilizer(3), vec![3]);
    }

    #[test]
    fn sift_reports_failure_level() {
        let gens = GeneratorSet::new(4, vec![p(&[1, 0, 2, 3])]).unwrap();
        let chain = StabilizerChain::schreier_sims(&gens);
        let (residue, level) = chain.sift(&p(&[0, 1, 3, 2]));
        assert_eq!(level, 1);
        assert!(!residue.is_identity());
    }

    #[test]
    fn degree_checked() {
        assert!(GeneratorSet::new(3, vec![p(&[1, 0])]).is_err());
    }
}
