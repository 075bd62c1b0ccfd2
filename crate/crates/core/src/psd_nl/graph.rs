use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::perm_core::{parse_number, tokens};

/// Explicit configuration graph of a nondeterministic machine.
///
/// The order of each successor list is the order of the nondeterministic
/// choices and is part of the value: the same edges listed in a different
/// order make a different input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigGraph {
    successors: Vec<Vec<usize>>,
    start: usize,
    accepting: Vec<bool>,
}

impl ConfigGraph {
    pub fn new(successors: Vec<Vec<usize>>, start: usize, accepting: &[usize]) -> Result<Self> {
        let n = successors.len();
        if start >= n {
            return Err(Error::InvalidGraph(format!(
                "start node {start} out of range for {n} nodes"
            )));
        }
        for (v, succ) in successors.iter().enumerate() {
            let mut seen = vec![false; n];
            for &w in succ {
                if w >= n {
                    return Err(Error::InvalidGraph(format!("edge {v} -> {w} out of range")));
                }
                if seen[w] {
                    return Err(Error::InvalidGraph(format!("duplicate successor {w} of node {v}")));
                }
                seen[w] = true;
            }
        }
        let mut flags = vec![false; n];
        for &a in accepting {
            if a >= n {
                return Err(Error::InvalidGraph(format!("accepting node {a} out of range")));
            }
            flags[a] = true;
        }
        Ok(ConfigGraph {
            successors,
            start,
            accepting: flags,
        })
    }

    pub fn node_count(&self) -> usize {
        self.successors.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.successors[v]
    }

    pub fn is_accepting(&self, v: usize) -> bool {
        self.accepting[v]
    }

    pub fn accepting_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.node_count()).filter(move |&v| self.accepting[v])
    }

    /// Parses the digraph text format:
    ///
    /// ```text
    /// 4
    /// 0: 1 2
    /// 1: 3
    /// 2: 3
    /// 3:
    /// start 0
    /// accept 3
    /// ```
    pub fn parse(text: &str) -> std::result::Result<ConfigGraph, ParseError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

        let (hline, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, 1, "empty digraph file"))?;
        let htoks = tokens(header);
        if htoks.len() != 1 {
            return Err(ParseError::new(hline, 1, "expected node count `n`"));
        }
        let n = parse_number(hline, htoks[0])?;

        let mut successors: Vec<Option<Vec<usize>>> = vec![None; n];
        for _ in 0..n {
            let (line, body) = lines
                .next()
                .ok_or_else(|| ParseError::new(hline, 1, format!("expected {n} node lines")))?;
            let Some(colon) = body.find(':') else {
                return Err(ParseError::new(line, 1, "expected `v: s1 s2 ...`"));
            };
            let vtoks = tokens(&body[..colon]);
            if vtoks.len() != 1 {
                return Err(ParseError::new(line, 1, "expected a single node id before `:`"));
            }
            let v = parse_number(line, vtoks[0])?;
            if v >= n {
                return Err(ParseError::new(line, vtoks[0].0, format!("node {v} out of range")));
            }
            if successors[v].is_some() {
                return Err(ParseError::new(line, vtoks[0].0, format!("node {v} listed twice")));
            }
            let mut succ = Vec::new();
            for (col, tok) in tokens(&body[colon + 1..]) {
                let col = col + colon + 1;
                let w = parse_number(line, (col, tok))?;
                if w >= n {
                    return Err(ParseError::new(line, col, format!("node {w} out of range")));
                }
                if succ.contains(&w) {
                    return Err(ParseError::new(line, col, format!("duplicate successor {w}")));
                }
                succ.push(w);
            }
            successors[v] = Some(succ);
        }

        let (sline, sbody) = lines
            .next()
            .ok_or_else(|| ParseError::new(hline, 1, "missing `start v` line"))?;
        let stoks = tokens(sbody);
        if stoks.len() != 2 || stoks[0].1 != "start" {
            return Err(ParseError::new(sline, 1, "expected `start v`"));
        }
        let start = parse_number(sline, stoks[1])?;
        if start >= n {
            return Err(ParseError::new(sline, stoks[1].0, format!("node {start} out of range")));
        }

        let (aline, abody) = lines
            .next()
            .ok_or_else(|| ParseError::new(sline, 1, "missing `accept ...` line"))?;
        let atoks = tokens(abody);
        if atoks.first().map(|t| t.1) != Some("accept") {
            return Err(ParseError::new(aline, 1, "expected `accept v1 v2 ...`"));
        }
        let mut accepting = Vec::new();
        for &tok in &atoks[1..] {
            let a = parse_number(aline, tok)?;
            if a >= n {
                return Err(ParseError::new(aline, tok.0, format!("node {a} out of range")));
            }
            accepting.push(a);
        }
        if let Some((line, _)) = lines.next() {
            return Err(ParseError::new(line, 1, "unexpected trailing content"));
        }

        let successors = successors.into_iter().map(Option::unwrap).collect();
        ConfigGraph::new(successors, start, &accepting).map_err(|e| ParseError::new(hline, 1, e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.node_count());
        for (v, succ) in self.successors.iter().enumerate() {
            out.push_str(&format!("{v}:"));
            for w in succ {
                out.push_str(&format!(" {w}"));
            }
            out.push('\n');
        }
        out.push_str(&format!("start {}\naccept", self.start));
        for a in self.accepting_nodes() {
            out.push_str(&format!(" {a}"));
        }
        out.push('\n');
        out
    }
}

/// Node sequence from the start node to an accepting node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    pub nodes: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.nodes.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Position of each step in its node's successor list, or `None` if a
    /// step is not an edge of `g`.
    pub fn choice_indices(&self, g: &ConfigGraph) -> Option<Vec<usize>> {
        self.nodes
            .windows(2)
            .map(|w| g.successors(w[0]).iter().position(|&s| s == w[1]))
            .collect()
    }

    /// Starts at the start node, follows edges, ends accepting.
    pub fn is_valid_in(&self, g: &ConfigGraph) -> bool {
        self.nodes.first() == Some(&g.start())
            && self.nodes.last().is_some_and(|&v| g.is_accepting(v))
            && self.choice_indices(g).is_some()
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.nodes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let text = "4\n0: 1 2\n1: 3\n2: 3\n3:\nstart 0\naccept 3\n";
        let g = ConfigGraph::parse(text).unwrap();
        assert_eq!(g.successors(0), &[1, 2]);
        assert!(g.is_accepting(3));
        assert_eq!(g.to_text(), text);
    }

    #[test]
    fn node_lines_may_come_in_any_order() {
        let g = ConfigGraph::parse("2\n1: 0\n0:\nstart 1\naccept 0\n").unwrap();
        assert_eq!(g.successors(1), &[0]);
    }

    #[test]
    fn diagnostics() {
        let err = ConfigGraph::parse("2\n0: 1 1\n1:\nstart 0\naccept 1\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 6));
        let err = ConfigGraph::parse("2\n0: 7\n1:\nstart 0\naccept 1\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 4));
        let err = ConfigGraph::parse("2\n0:\n1:\nbegin 0\naccept 1\n").unwrap_err();
        assert_eq!(err.line, 4);
        let err = ConfigGraph::parse("2\n0:\n0:\nstart 0\naccept 1\n").unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn rejects_duplicate_successors() {
        assert!(ConfigGraph::new(vec![vec![1, 1], vec![]], 0, &[1]).is_err());
        assert!(ConfigGraph::new(vec![vec![]], 1, &[]).is_err());
    }
}
