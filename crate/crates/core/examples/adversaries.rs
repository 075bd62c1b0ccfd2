//! Cheating provers against both protocols: each strategy either gets the
//! canonical answer out of the verifier or gets rejected.

use psdproof::ip::{make_prover, run_protocol, ProtocolParams, StrategyKind};
use psdproof::ColoredGraph;

pub fn main() -> psdproof::Result<()> {
    let g1 = ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let g2 = ColoredGraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)])?;

    for params in [ProtocolParams::group(), ProtocolParams::comb()] {
        println!("{} protocol", params.protocol);
        for kind in StrategyKind::ALL {
            let mut prover = make_prover(kind, 7);
            let t = run_protocol(&g1, &g2, prover.as_mut(), &params, 99);
            let meta = prover.metadata();
            let note = meta.note.map(|n| format!(" ({n})")).unwrap_or_default();
            println!("  {kind:<14} -> {}{note}", t.outcome);
        }
    }
    Ok(())
}
