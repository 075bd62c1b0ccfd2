use std::collections::HashMap;

use super::graph::ConfigGraph;
use crate::error::{Error, Result};

/// A machine configuration: control state and input head position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Config {
    pub state: usize,
    pub position: usize,
}

/// A nondeterministic machine over a finite configuration space.
pub trait ChoiceMachine {
    fn start(&self) -> Config;

    /// Successor configurations in choice-index order.
    fn choices(&self, config: Config) -> Vec<Config>;

    fn accepts(&self, config: Config) -> bool;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Stay,
    Right,
}

type Transitions = HashMap<(usize, Option<char>), Vec<(usize, Move)>>;

/// One-way machine given by a transition table over the symbols of a fixed
/// input. Accepts in an accepting state with the head past the last symbol.
#[derive(Clone, Debug)]
pub struct TableMachine {
    states: usize,
    input: Vec<char>,
    table: Transitions,
    accepting: Vec<bool>,
}

impl TableMachine {
    pub fn new(states: usize, input: &str) -> Self {
        TableMachine {
            states,
            input: input.chars().collect(),
            table: HashMap::new(),
            accepting: vec![false; states],
        }
    }

    /// Choices available in `state` reading `symbol` (`None` past the end).
    /// Calling again for the same key appends further choices.
    pub fn transition(mut self, state: usize, symbol: Option<char>, choices: &[(usize, Move)]) -> Self {
        assert!(state < self.states && choices.iter().all(|&(s, _)| s < self.states));
        self.table
            .entry((state, symbol))
            .or_default()
            .extend_from_slice(choices);
        self
    }

    pub fn accept(mut self, state: usize) -> Self {
        self.accepting[state] = true;
        self
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn input_len(&self) -> usize {
        self.input.len()
    }
}

impl ChoiceMachine for TableMachine {
    fn start(&self) -> Config {
        Config { state: 0, position: 0 }
    }

    fn choices(&self, c: Config) -> Vec<Config> {
        let symbol = self.input.get(c.position).copied();
        self.table
            .get(&(c.state, symbol))
            .map(|moves| {
                moves
                    .iter()
                    .filter_map(|&(state, mv)| {
                        let position = match mv {
                            Move::Stay => c.position,
                            Move::Right if c.position < self.input.len() => c.position + 1,
                            Move::Right => return None,
                        };
                        Some(Config { state, position })
                    })
                    .collect()
            })
            .unwrap_or_default()
    }

    fn accepts(&self, c: Config) -> bool {
        self.accepting[c.state] && c.position == self.input.len()
    }
}

pub const DEFAULT_CONFIG_LIMIT: usize = 1_000_000;

/// The reachable part of a machine's configuration graph, with the
/// configuration behind each node id.
#[derive(Clone, Debug)]
pub struct ConfigSpace {
    pub graph: ConfigGraph,
    pub configs: Vec<Config>,
}

/// Expands reachable configurations breadth-first from the start. Node ids
/// follow discovery order; successor order follows choice order, keeping
/// the first occurrence when two choices lead to the same configuration.
pub fn build_config_graph<M: ChoiceMachine + ?Sized>(machine: &M, limit: usize) -> Result<ConfigSpace> {
    let start = machine.start();
    let mut ids: HashMap<Config, usize> = HashMap::from([(start, 0)]);
    let mut configs = vec![start];
    let mut successors: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < configs.len() {
        let c = configs[head];
        head += 1;
        let mut succ = Vec::new();
        for next in machine.choices(c) {
            let id = match ids.get(&next) {
                Some(&id) => id,
                None => {
                    if configs.len() >= limit {
                        return Err(Error::TooLarge {
                            size: configs.len() + 1,
                            limit,
                        });
                    }
                    let id = configs.len();
                    ids.insert(next, id);
                    configs.push(next);
                    id
                }
            };
            if !succ.contains(&id) {
                succ.push(id);
            }
        }
        successors.push(succ);
    }
    let accepting: Vec<usize> = (0..configs.len()).filter(|&i| machine.accepts(configs[i])).collect();
    let graph = ConfigGraph::new(successors, 0, &accepting)?;
    Ok(ConfigSpace { graph, configs })
}
