//! Many runs per strategy with independent seeds: the verifier's outputs
//! collapse to a single permutation.

use psdproof::ip::{psd_statistical_test, ProtocolParams, StrategyKind};
use psdproof::ColoredGraph;

pub fn main() -> psdproof::Result<()> {
    let g1 = ColoredGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?;
    let g2 = ColoredGraph::new(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])?;

    let report = psd_statistical_test(&ProtocolParams::group(), &g1, &g2, &StrategyKind::ALL, 100, 11);
    for s in &report.strategies {
        println!(
            "{:<14} outputs {:>3}/{} degraded {}",
            s.strategy.as_str(),
            s.trials - s.bottom,
            s.trials,
            s.degraded
        );
    }
    println!("distinct outputs: {:?}", report.distinct_outputs);
    assert!(report.pseudo_deterministic());
    Ok(())
}
