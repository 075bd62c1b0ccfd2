//! Schreier-Sims on the symmetries of a square: order, base, orbits and
//! membership by sifting.

use psdproof::{GeneratorSet, Permutation, StabilizerChain};

pub fn main() -> psdproof::Result<()> {
    let rotation = Permutation::new(vec![1, 2, 3, 0])?;
    let reflection = Permutation::new(vec![0, 3, 2, 1])?;
    let gens = GeneratorSet::new(4, vec![rotation, reflection])?;
    let chain = StabilizerChain::schreier_sims(&gens);

    println!("order {}", chain.order());
    println!("base {:?}", chain.base());
    for level in chain.levels() {
        println!("  point {} orbit {:?}", level.base_point(), level.orbit());
    }
    assert_eq!(chain.order(), 8);

    // A transposition of adjacent corners tears the square apart.
    let swap = Permutation::new(vec![1, 0, 2, 3])?;
    let (residue, depth) = chain.sift(&swap);
    println!("sift {swap:?}: residue {residue:?} at level {depth}");
    assert!(!chain.contains(&swap));
    Ok(())
}
