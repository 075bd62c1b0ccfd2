use proptest::prelude::*;

use psdproof::psd_nl::{
    brute_force_lex_first, build_config_graph, distances_to_accept, lex_first_shortest_path, shortest_accepting_length,
    ChoiceMachine, Config, ConfigGraph, Move, TableMachine, DEFAULT_CONFIG_LIMIT, DEFAULT_ENUMERATION_LIMIT,
};
use psdproof::Error;

fn diamond(order: [usize; 2]) -> ConfigGraph {
    ConfigGraph::new(vec![order.to_vec(), vec![3], vec![3], vec![]], 0, &[3]).unwrap()
}

#[test]
fn diamond_examples() {
    let g = diamond([1, 2]);
    assert_eq!(shortest_accepting_length(&g, 0), Some(2));
    assert_eq!(shortest_accepting_length(&g, 3), Some(0));
    assert_eq!(lex_first_shortest_path(&g).unwrap().nodes, vec![0, 1, 3]);
    assert_eq!(
        brute_force_lex_first(&g, DEFAULT_ENUMERATION_LIMIT)
            .unwrap()
            .unwrap()
            .nodes,
        vec![0, 1, 3]
    );
    assert_eq!(lex_first_shortest_path(&diamond([2, 1])).unwrap().nodes, vec![0, 2, 3]);
}

#[test]
fn trivial_cases() {
    let accepting_start = ConfigGraph::new(vec![vec![1], vec![]], 0, &[0, 1]).unwrap();
    assert_eq!(lex_first_shortest_path(&accepting_start).unwrap().nodes, vec![0]);

    let line = ConfigGraph::new(vec![vec![1], vec![2], vec![]], 0, &[2]).unwrap();
    assert_eq!(lex_first_shortest_path(&line).unwrap().nodes, vec![0, 1, 2]);
    assert_eq!(brute_force_lex_first(&line, 100).unwrap().unwrap().nodes, vec![0, 1, 2]);

    let cut = ConfigGraph::new(vec![vec![1], vec![0], vec![]], 0, &[2]).unwrap();
    assert_eq!(shortest_accepting_length(&cut, 0), None);
    assert!(lex_first_shortest_path(&cut).is_none());
    assert!(brute_force_lex_first(&cut, 100).unwrap().is_none());
}

#[test]
fn enumeration_limit_is_a_size_error() {
    let n = 12;
    let complete: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect();
    let g = ConfigGraph::new(complete, 0, &[n - 1]).unwrap();
    assert!(matches!(brute_force_lex_first(&g, 5), Err(Error::TooLarge { .. })));
}

#[test]
fn deterministic_machine_has_out_degree_at_most_one() {
    let m = TableMachine::new(2, "0101")
        .transition(0, Some('0'), &[(1, Move::Right)])
        .transition(1, Some('1'), &[(0, Move::Right)])
        .accept(0);
    let space = build_config_graph(&m, DEFAULT_CONFIG_LIMIT).unwrap();
    assert!((0..space.graph.node_count()).all(|v| space.graph.successors(v).len() <= 1));
    assert_eq!(lex_first_shortest_path(&space.graph).unwrap().len(), 4);
}

#[test]
fn two_choice_machine_is_bounded_by_positions() {
    let m = TableMachine::new(3, "abc")
        .transition(0, Some('a'), &[(1, Move::Right), (2, Move::Stay)])
        .transition(1, Some('b'), &[(0, Move::Right), (2, Move::Right)])
        .transition(2, Some('a'), &[(2, Move::Right), (1, Move::Stay)])
        .transition(2, Some('c'), &[(0, Move::Right), (1, Move::Right)]);
    let space = build_config_graph(&m, DEFAULT_CONFIG_LIMIT).unwrap();
    assert!(space.graph.node_count() <= m.state_count() * (m.input_len() + 1));
}

#[test]
fn contains_one_nfa() {
    let m = TableMachine::new(2, "01")
        .transition(0, Some('0'), &[(0, Move::Right)])
        .transition(0, Some('1'), &[(0, Move::Right), (1, Move::Right)])
        .accept(1);
    let space = build_config_graph(&m, DEFAULT_CONFIG_LIMIT).unwrap();
    let path = lex_first_shortest_path(&space.graph).unwrap();
    assert_eq!(path.len(), 2);
    let last = space.configs[*path.nodes.last().unwrap()];
    assert_eq!(last, Config { state: 1, position: 2 });
}

struct Counter(usize);

impl ChoiceMachine for Counter {
    fn start(&self) -> Config {
        Config { state: 0, position: 0 }
    }

    fn choices(&self, c: Config) -> Vec<Config> {
        vec![Config {
            state: c.state + 1,
            position: 0,
        }]
    }

    fn accepts(&self, c: Config) -> bool {
        c.state == self.0
    }
}

#[test]
fn config_limit_is_a_size_error() {
    assert!(matches!(
        build_config_graph(&Counter(5), 100),
        Err(Error::TooLarge { .. })
    ));
}

#[test]
fn digraph_text_round_trip() {
    let g = diamond([2, 1]);
    assert_eq!(ConfigGraph::parse(&g.to_text()).unwrap(), g);
    let err = ConfigGraph::parse("2\n0: 1 5\n1:\nstart 0\naccept 1\n").unwrap_err();
    assert_eq!((err.line, err.column), (2, 6));
    assert!(ConfigGraph::parse("2\n0: 1 1\n1:\nstart 0\naccept 1\n").is_err());
}

#[test]
fn duplicate_successors_are_rejected() {
    assert!(ConfigGraph::new(vec![vec![1, 1], vec![]], 0, &[1]).is_err());
}

fn digraph(max_n: usize) -> impl Strategy<Value = ConfigGraph> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(
                prop::collection::vec(any::<bool>(), n).prop_flat_map(move |mask| {
                    let succ: Vec<usize> = (0..n).filter(|&w| mask[w]).collect();
                    Just(succ).prop_shuffle()
                }),
                n,
            ),
            0..n,
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(|(succ, start, acc)| {
                let accepting: Vec<usize> = (0..acc.len()).filter(|&v| acc[v]).collect();
                ConfigGraph::new(succ, start, &accepting).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn fast_equals_brute_force(g in digraph(9)) {
        prop_assert_eq!(lex_first_shortest_path(&g), brute_force_lex_first(&g, DEFAULT_ENUMERATION_LIMIT).unwrap());
    }

    #[test]
    fn path_length_is_the_distance(g in digraph(12)) {
        let dist = distances_to_accept(&g);
        match lex_first_shortest_path(&g) {
            Some(path) => {
                prop_assert!(path.is_valid_in(&g));
                prop_assert_eq!(Some(path.len()), dist[g.start()]);
                prop_assert_eq!(path.nodes[0], g.start());
                prop_assert!(g.is_accepting(*path.nodes.last().unwrap()));
            }
            None => prop_assert_eq!(dist[g.start()], None),
        }
    }

    /// Renaming nodes while keeping each successor list's order gives the
    /// renamed path.
    #[test]
    fn relabeling_nodes_relabels_the_path(
        g in digraph(10),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let n = g.node_count();
        let mut rename: Vec<usize> = (0..n).collect();
        rename.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let mut succ = vec![Vec::new(); n];
        for v in 0..n {
            succ[rename[v]] = g.successors(v).iter().map(|&w| rename[w]).collect();
        }
        let accepting: Vec<usize> = g.accepting_nodes().map(|v| rename[v]).collect();
        let h = ConfigGraph::new(succ, rename[g.start()], &accepting).unwrap();
        let expected = lex_first_shortest_path(&g).map(|p| p.nodes.iter().map(|&v| rename[v]).collect::<Vec<_>>());
        prop_assert_eq!(lex_first_shortest_path(&h).map(|p| p.nodes), expected);
    }
}
