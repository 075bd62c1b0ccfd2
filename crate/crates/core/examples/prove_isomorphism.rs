//! One run of each protocol with an honest prover, and the transcript.

use psdproof::ip::{make_prover, run_protocol, ProtocolParams, StrategyKind};
use psdproof::ColoredGraph;

pub fn main() -> psdproof::Result<()> {
    let g1 = ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let g2 = ColoredGraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)])?;

    for params in [ProtocolParams::group(), ProtocolParams::comb()] {
        let mut prover = make_prover(StrategyKind::Honest, 1);
        let t = run_protocol(&g1, &g2, prover.as_mut(), &params, 42);
        println!(
            "{}: {} messages, output {}",
            params.protocol,
            t.messages.len(),
            t.outcome
        );
    }

    let mut prover = make_prover(StrategyKind::Honest, 1);
    let t = run_protocol(&g1, &g2, prover.as_mut(), &ProtocolParams::group(), 42);
    let json = t.to_json();
    println!("transcript is {} bytes of JSON; opening lines:", json.len());
    for line in json.lines().take(8) {
        println!("  {line}");
    }
    Ok(())
}
