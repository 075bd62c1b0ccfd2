//! The lexicographically first shortest accepting path depends on the
//! order of choices, not on node labels.

use psdproof::psd_nl::{brute_force_lex_first, lex_first_shortest_path, ConfigGraph, DEFAULT_ENUMERATION_LIMIT};

pub fn main() -> psdproof::Result<()> {
    for order in [vec![1, 2], vec![2, 1]] {
        let g = ConfigGraph::new(vec![order.clone(), vec![3], vec![3], vec![]], 0, &[3])?;
        let path = lex_first_shortest_path(&g).expect("3 is reachable");
        assert_eq!(
            Some(&path),
            brute_force_lex_first(&g, DEFAULT_ENUMERATION_LIMIT)?.as_ref()
        );
        println!("choices {order:?} at node 0 -> path {path}");
    }

    let unreachable = ConfigGraph::new(vec![vec![1], vec![0], vec![]], 0, &[2])?;
    println!("unreachable accept -> {:?}", lex_first_shortest_path(&unreachable));
    Ok(())
}
