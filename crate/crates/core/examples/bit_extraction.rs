//! Recovering the canonical isomorphism one bit at a time through a yes/no
//! oracle that runs the protocol.

use psdproof::ip::ProtocolParams;
use psdproof::oracle::{bits_to_string, extract_via_bit_oracle, BitOracle};
use psdproof::ColoredGraph;

pub fn main() -> psdproof::Result<()> {
    let c4 = ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let c4r = ColoredGraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)])?;
    let p4 = ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3)])?;

    let oracle = BitOracle::new(&c4, &c4r, ProtocolParams::group(), 3);
    let phi = extract_via_bit_oracle(&c4, &c4r, &oracle)?.expect("isomorphic");
    let bits = oracle.encoding().encode(&phi);
    println!(
        "bits {} -> {phi} after {} queries",
        bits_to_string(&bits),
        oracle.query_count()
    );

    let oracle = BitOracle::new(&c4, &p4, ProtocolParams::group(), 3);
    let result = extract_via_bit_oracle(&c4, &p4, &oracle)?;
    println!("C4 vs P4 -> {result:?} after {} queries", oracle.query_count());
    Ok(())
}
