//! The shuffle game on an isomorphic pair is a fair coin for any prover,
//! and a sure win for the honest prover on a non-isomorphic pair.

use psdproof::ip::{gni_subprotocol, make_prover, StrategyKind};
use psdproof::rng::stream;
use psdproof::ColoredGraph;

pub fn main() -> psdproof::Result<()> {
    let c4 = ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let c4r = ColoredGraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)])?;
    let p4 = ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3)])?;
    let trials = 2000;

    for kind in StrategyKind::ALL {
        let mut prover = make_prover(kind, 5);
        let mut rng = stream(5, "calibration", kind as u64);
        let wins = (0..trials)
            .filter(|_| gni_subprotocol(&c4, &c4r, prover.as_mut(), &mut rng, 1))
            .count();
        println!("{kind:<14} isomorphic pair, m=1: {:.3}", wins as f64 / trials as f64);
    }

    let mut honest = make_prover(StrategyKind::Honest, 5);
    let mut rng = stream(5, "calibration", 99);
    let wins = (0..100)
        .filter(|_| gni_subprotocol(&c4, &p4, honest.as_mut(), &mut rng, 20))
        .count();
    println!("honest         non-isomorphic pair, m=20: {wins}/100");
    Ok(())
}
