//! Expanding a small nondeterministic machine into its configuration graph
//! and reading off the canonical accepting computation.

use psdproof::psd_nl::{build_config_graph, lex_first_shortest_path, Move, TableMachine, DEFAULT_CONFIG_LIMIT};

pub fn main() -> psdproof::Result<()> {
    // State 0 scans; on a `1` it may guess "this is the one" and move to
    // state 1, which then skips to the end.
    let input = "0110";
    let machine = TableMachine::new(2, input)
        .transition(0, Some('0'), &[(0, Move::Right)])
        .transition(0, Some('1'), &[(0, Move::Right), (1, Move::Right)])
        .transition(1, Some('0'), &[(1, Move::Right)])
        .transition(1, Some('1'), &[(1, Move::Right)])
        .accept(1);

    let space = build_config_graph(&machine, DEFAULT_CONFIG_LIMIT)?;
    println!("{} reachable configurations on input {input:?}", space.configs.len());
    let path = lex_first_shortest_path(&space.graph).expect("input contains a 1");
    for &node in &path.nodes {
        let c = space.configs[node];
        println!("  state {} at position {}", c.state, c.position);
    }
    Ok(())
}
