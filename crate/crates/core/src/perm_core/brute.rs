//! Exhaustive enumeration over all `n!` bijections. Test oracle only.

use super::graph::is_isomorphism_unchecked;
use super::{ColoredGraph, Permutation};
use crate::error::{Error, Result};

/// Largest vertex count the factorial enumeration accepts.
pub const MAX_BRUTE_FORCE_VERTICES: usize = 10;

#[derive(Clone, Debug)]
pub struct BruteForce {
    /// Every isomorphism `g1 → g2`, in increasing lexicographic order.
    pub isomorphisms: Vec<Permutation>,
    /// All of `Aut(g1)`, in increasing lexicographic order.
    pub automorphisms: Vec<Permutation>,
    pub lex_first: Option<Permutation>,
}

pub fn brute_force_oracles(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<BruteForce> {
    let isomorphisms = all_isomorphisms(g1, g2)?;
    let automorphisms = all_isomorphisms(g1, g1)?;
    let lex_first = isomorphisms.first().cloned();
    Ok(BruteForce {
        isomorphisms,
        automorphisms,
        lex_first,
    })
}

pub fn all_isomorphisms(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<Vec<Permutation>> {
    let n = g1.vertex_count();
    check_size(n)?;
    if g2.vertex_count() != n {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for_each_permutation(n, |images| {
        if is_isomorphism_unchecked(g1, g2, images) {
            out.push(Permutation::from_images_unchecked(images.to_vec()));
        }
        true
    });
    Ok(out)
}

/// The image-lexicographic minimum isomorphism, or `None`.
pub fn lex_first_isomorphism(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<Option<Permutation>> {
    let n = g1.vertex_count();
    check_size(n)?;
    if g2.vertex_count() != n {
        return Ok(None);
    }
    let mut found = None;
    for_each_permutation(n, |images| {
        if is_isomorphism_unchecked(g1, g2, images) {
            found = Some(Permutation::from_images_unchecked(images.to_vec()));
            return false;
        }
        true
    });
    Ok(found)
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::TooLarge {
            size: n,
            limit: MAX_BRUTE_FORCE_VERTICES,
        });
    }
    Ok(())
}

/// Visits every permutation of `0..n` in lexicographic order until `visit`
/// returns `false`.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut a: Vec<usize> = (0..n).collect();
    loop {
        if !visit(&a) {
            return;
        }
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| a[i - 1] < a[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| a[j] > a[i - 1]).unwrap();
        a.swap(i - 1, j);
        a[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> ColoredGraph {
        ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn enumerates_every_permutation_once() {
        let mut seen = Vec::new();
        for_each_permutation(4, |p| {
            seen.push(p.to_vec());
            true
        });
        assert_eq!(seen.len(), 24);
        let mut sorted = seen.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, seen);
        let mut zero = 0;
        for_each_permutation(0, |_| {
            zero += 1;
            true
        });
        assert_eq!(zero, 1);
    }

    #[test]
    fn c4_has_eight_self_isomorphisms() {
        let bf = brute_force_oracles(&c4(), &c4()).unwrap();
        assert_eq!(bf.isomorphisms.len(), 8);
        assert_eq!(bf.automorphisms.len(), 8);
        assert!(bf.lex_first.unwrap().is_identity());
    }

    #[test]
    fn c4_and_path_are_not_isomorphic() {
        let p4 = ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let bf = brute_force_oracles(&c4(), &p4).unwrap();
        assert!(bf.isomorphisms.is_empty());
        assert_eq!(bf.lex_first, None);
        assert_eq!(lex_first_isomorphism(&c4(), &p4).unwrap(), None);
    }

    #[test]
    fn lex_first_for_relabeled_cycle() {
        let c4r = ColoredGraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let first = lex_first_isomorphism(&c4(), &c4r).unwrap().unwrap();
        assert_eq!(first.images(), &[0, 2, 1, 3]);
    }

    #[test]
    fn refuses_large_inputs() {
        let g = ColoredGraph::new(11, &[]).unwrap();
        assert!(matches!(
            brute_force_oracles(&g, &g),
            Err(Error::TooLarge { size: 11, limit: 10 })
        ));
    }
}
