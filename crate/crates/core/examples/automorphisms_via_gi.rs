//! Generators of an automorphism group recovered purely through an
//! isomorphism oracle, by pinning vertices with unique colors.

use psdproof::perm_core::{aut_generators_via_gi, search};
use psdproof::{ColoredGraph, StabilizerChain};

pub fn main() -> psdproof::Result<()> {
    let graphs = [
        ("C4", ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?),
        (
            "K4",
            ColoredGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?,
        ),
        (
            "colored diamond",
            ColoredGraph::with_colors(4, &[(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)], vec![0, 1, 1, 0])?,
        ),
        (
            "rigid",
            ColoredGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (3, 5)])?,
        ),
    ];
    for (name, g) in &graphs {
        let mut calls = 0;
        let gens = aut_generators_via_gi(g, |a, b| {
            calls += 1;
            search::find_isomorphism(a, b)
        })?;
        let order = StabilizerChain::schreier_sims(&gens).order();
        println!(
            "{name}: |Aut| = {order}, {} generators, {calls} oracle calls",
            gens.len()
        );
    }
    Ok(())
}
