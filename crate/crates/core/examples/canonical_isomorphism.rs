//! The lexicographically first isomorphism between two relabelings of a
//! 4-cycle, and `None` for a non-isomorphic pair.

use psdproof::perm_core::canonical_isomorphism;
use psdproof::ColoredGraph;

pub fn main() -> psdproof::Result<()> {
    let c4 = ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let c4r = ColoredGraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)])?;
    let p4 = ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3)])?;

    let phi = canonical_isomorphism(&c4, &c4r)?.expect("relabelings are isomorphic");
    println!("C4 -> C4': {phi}");
    assert_eq!(phi.images(), &[0, 2, 1, 3]);

    assert!(canonical_isomorphism(&c4, &p4)?.is_none());
    println!("C4 -> P4: none");
    Ok(())
}
