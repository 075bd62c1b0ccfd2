//! Random and exhaustive instance generators shared by tests, examples and
//! the self-check.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::perm_core::{ColoredGraph, Permutation};
use crate::psd_nl::ConfigGraph;

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffle of 0..n")
}

/// G(n, p) with colors drawn uniformly from `0..palette` (`palette <= 1` is uncolored).
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, edge_prob: f64, palette: usize) -> ColoredGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let colors = (0..n)
        .map(|_| if palette > 1 { rng.gen_range(0..palette) } else { 0 })
        .collect();
    ColoredGraph::with_colors(n, &edges, colors).expect("valid by construction")
}

/// `(g1, g2, sigma)` with `g2 = sigma(g1)`.
pub fn random_isomorphic_pair<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    edge_prob: f64,
    palette: usize,
) -> (ColoredGraph, ColoredGraph, Permutation) {
    let g1 = random_graph(rng, n, edge_prob, palette);
    let sigma = random_permutation(rng, n);
    let g2 = g1.apply(&sigma).expect("same degree");
    (g1, g2, sigma)
}

/// Every uncolored graph on `n` labeled vertices, one per edge subset.
pub fn all_graphs(n: usize) -> impl Iterator<Item = ColoredGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many edge subsets to enumerate");
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        ColoredGraph::new(n, &edges).expect("valid by construction")
    })
}

/// One representative per isomorphism class of uncolored graphs on `n`
/// vertices (the first labeled graph of each class in edge-mask order).
pub fn isomorphism_class_representatives(n: usize) -> Vec<ColoredGraph> {
    use std::collections::HashSet;
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    let mut reps = Vec::new();
    let perms: Vec<Permutation> = {
        let mut out = Vec::new();
        crate::perm_core::brute::for_each_permutation(n, |p| {
            out.push(Permutation::new(p.to_vec()).unwrap());
            true
        });
        out
    };
    for g in all_graphs(n) {
        if seen.contains(g.edges()) {
            continue;
        }
        for p in &perms {
            seen.insert(g.apply(p).unwrap().edges().to_vec());
        }
        reps.push(g);
    }
    reps
}

/// Directed graph on `n >= 1` nodes: each ordered pair `(v, w)` is an edge
/// with probability `edge_prob`, successor lists are shuffled, the start is
/// uniform and each node accepts with probability `accept_prob`.
pub fn random_config_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, edge_prob: f64, accept_prob: f64) -> ConfigGraph {
    assert!(n >= 1);
    let successors = (0..n)
        .map(|_| {
            let mut succ: Vec<usize> = (0..n).filter(|_| rng.gen_bool(edge_prob)).collect();
            succ.shuffle(rng);
            succ
        })
        .collect();
    let start = rng.gen_range(0..n);
    let accepting: Vec<usize> = (0..n).filter(|_| rng.gen_bool(accept_prob)).collect();
    ConfigGraph::new(successors, start, &accepting).expect("valid by construction")
}
