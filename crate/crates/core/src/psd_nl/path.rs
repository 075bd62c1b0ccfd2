use std::collections::VecDeque;

use super::graph::{ConfigGraph, Path};
use crate::error::{Error, Result};

/// Minimal number of edges from every node to the accepting set (`None`
/// when no accepting node is reachable), by breadth-first search over
/// reversed edges.
///
/// This stands in for the nondeterministic log-space certification of
/// shortest lengths; only the answers matter here, not the space used.
pub fn distances_to_accept(g: &ConfigGraph) -> Vec<Option<usize>> {
    let n = g.node_count();
    let mut predecessors = vec![Vec::new(); n];
    for v in 0..n {
        for &w in g.successors(v) {
            predecessors[w].push(v);
        }
    }
    let mut dist = vec![None; n];
    let mut queue = VecDeque::new();
    for a in g.accepting_nodes() {
        dist[a] = Some(0);
        queue.push_back(a);
    }
    while let Some(w) = queue.pop_front() {
        let d = dist[w].unwrap();
        for &v in &predecessors[w] {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn shortest_accepting_length(g: &ConfigGraph, v: usize) -> Option<usize> {
    distances_to_accept(g)[v]
}

/// The lexicographically first (in choice order) among the shortest
/// accepting paths from the start node.
///
/// With `t` the remaining distance, each step takes the first successor
/// whose own distance is `t - 1`. The result depends only on the graph and
/// its successor orders.
pub fn lex_first_shortest_path(g: &ConfigGraph) -> Option<Path> {
    let dist = distances_to_accept(g);
    let mut current = g.start();
    let mut remaining = dist[current]?;
    let mut nodes = vec![current];
    while remaining > 0 {
        current = *g
            .successors(current)
            .iter()
            .find(|&&w| dist[w] == Some(remaining - 1))
            .expect("a node at distance t has a successor at distance t - 1");
        nodes.push(current);
        remaining -= 1;
    }
    Some(Path { nodes })
}

/// Default cap on the number of partial paths the exhaustive search may visit.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 5_000_000;

/// Exhaustive oracle: enumerates every simple path from the start node,
/// length by length, and returns the minimum choice-index sequence among
/// the accepting paths of the first length that has any.
pub fn brute_force_lex_first(g: &ConfigGraph, limit: usize) -> Result<Option<Path>> {
    let n = g.node_count();
    let mut visited = 0usize;
    for length in 0..n {
        let mut found: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut nodes = vec![g.start()];
        let mut choices = Vec::new();
        let mut on_path = vec![false; n];
        on_path[g.start()] = true;
        enumerate(
            g,
            length,
            &mut nodes,
            &mut choices,
            &mut on_path,
            &mut found,
            &mut visited,
            limit,
        )?;
        if let Some((_, best)) = found.into_iter().min() {
            return Ok(Some(Path { nodes: best }));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    g: &ConfigGraph,
    length: usize,
    nodes: &mut Vec<usize>,
    choices: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<(Vec<usize>, Vec<usize>)>,
    visited: &mut usize,
    limit: usize,
) -> Result<()> {
    *visited += 1;
    if *visited > limit {
        return Err(Error::TooLarge { size: *visited, limit });
    }
    let last = *nodes.last().unwrap();
    if choices.len() == length {
        if g.is_accepting(last) {
            found.push((choices.clone(), nodes.clone()));
        }
        return Ok(());
    }
    for (i, &w) in g.successors(last).iter().enumerate() {
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        nodes.push(w);
        choices.push(i);
        enumerate(g, length, nodes, choices, on_path, found, visited, limit)?;
        choices.pop();
        nodes.pop();
        on_path[w] = false;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond(order: Vec<usize>) -> ConfigGraph {
        ConfigGraph::new(vec![order, vec![3], vec![3], vec![]], 0, &[3]).unwrap()
    }

    #[test]
    fn diamond_distances() {
        let g = diamond(vec![1, 2]);
        assert_eq!(shortest_accepting_length(&g, 0), Some(2));
        assert_eq!(shortest_accepting_length(&g, 3), Some(0));
    }

    #[test]
    fn diamond_choice_order_decides() {
        assert_eq!(
            lex_first_shortest_path(&diamond(vec![1, 2])).unwrap().nodes,
            vec![0, 1, 3]
        );
        assert_eq!(
            lex_first_shortest_path(&diamond(vec![2, 1])).unwrap().nodes,
            vec![0, 2, 3]
        );
        assert_eq!(
            brute_force_lex_first(&diamond(vec![1, 2]), 100).unwrap().unwrap().nodes,
            vec![0, 1, 3]
        );
        assert_eq!(
            brute_force_lex_first(&diamond(vec![2, 1]), 100).unwrap().unwrap().nodes,
            vec![0, 2, 3]
        );
    }

    #[test]
    fn accepting_start() {
        let g = ConfigGraph::new(vec![vec![1], vec![]], 0, &[0, 1]).unwrap();
        assert_eq!(lex_first_shortest_path(&g).unwrap().nodes, vec![0]);
        assert_eq!(brute_force_lex_first(&g, 10).unwrap().unwrap().nodes, vec![0]);
    }

    #[test]
    fn unreachable_accept() {
        let g = ConfigGraph::new(vec![vec![0], vec![]], 0, &[1]).unwrap();
        assert_eq!(shortest_accepting_length(&g, 0), None);
        assert_eq!(lex_first_shortest_path(&g), None);
        assert_eq!(brute_force_lex_first(&g, 10).unwrap(), None);
    }

    #[test]
    fn single_path() {
        let g = ConfigGraph::new(vec![vec![1], vec![2], vec![]], 0, &[2]).unwrap();
        assert_eq!(brute_force_lex_first(&g, 10).unwrap().unwrap().nodes, vec![0, 1, 2]);
    }

    #[test]
    fn cycles_are_not_taken() {
        // 0 -> 0 (self loop) first, then 0 -> 1 -> 2
        let g = ConfigGraph::new(vec![vec![0, 1], vec![0, 2], vec![]], 0, &[2]).unwrap();
        assert_eq!(lex_first_shortest_path(&g).unwrap().nodes, vec![0, 1, 2]);
    }

    #[test]
    fn enumeration_limit() {
        let g = ConfigGraph::new(vec![vec![1], vec![2], vec![]], 0, &[2]).unwrap();
        assert!(matches!(brute_force_lex_first(&g, 2), Err(Error::TooLarge { .. })));
    }
}
