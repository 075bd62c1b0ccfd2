use std::fmt;

use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{Error, ParseError, Result};

/// Undirected simple graph with a color on every vertex.
///
/// Isomorphisms between colored graphs must preserve colors. All-zero
/// colors is the uncolored case.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct ColoredGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    colors: Vec<usize>,
    adj: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
    colors: Vec<usize>,
}

impl TryFrom<GraphRepr> for ColoredGraph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        ColoredGraph::with_colors(r.n, &r.edges, r.colors)
    }
}

impl From<ColoredGraph> for GraphRepr {
    fn from(g: ColoredGraph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges,
            colors: g.colors,
        }
    }
}

impl ColoredGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_colors(n, edges, vec![0; n])
    }

    pub fn with_colors(n: usize, edges: &[(usize, usize)], colors: Vec<usize>) -> Result<Self> {
        if colors.len() != n {
            return Err(Error::InvalidGraph(format!(
                "expected {n} colors, got {}",
                colors.len()
            )));
        }
        let mut adj = vec![false; n * n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !adj[u * n + v] {
                adj[u * n + v] = true;
                adj[v * n + u] = true;
                normalized.push((u.min(v), u.max(v)));
            }
        }
        normalized.sort_unstable();
        Ok(ColoredGraph {
            n,
            edges: normalized,
            colors,
            adj,
        })
    }

    pub(crate) fn from_adjacency(n: usize, adj: Vec<bool>, colors: Vec<usize>) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adj[u * n + v] {
                    edges.push((u, v));
                }
            }
        }
        ColoredGraph { n, edges, colors, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n].iter().filter(|&&b| b).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn max_color(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Relabels vertex `v` as `p(v)`, carrying edges and colors along.
    pub fn apply(&self, p: &Permutation) -> Result<ColoredGraph> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: p.degree(),
            });
        }
        Ok(self.apply_unchecked(p))
    }

    pub(crate) fn apply_unchecked(&self, p: &Permutation) -> ColoredGraph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for &(u, v) in &self.edges {
            let (a, b) = (p.apply(u), p.apply(v));
            adj[a * n + b] = true;
            adj[b * n + a] = true;
        }
        let mut colors = vec![0; n];
        for v in 0..n {
            colors[p.apply(v)] = self.colors[v];
        }
        ColoredGraph::from_adjacency(n, adj, colors)
    }

    /// Recolors the graph so that `order[t]` carries individualization tag `t`
    /// and `marked` carries one extra tag, keeping the original color in the
    /// low digits. `palette` must exceed every original color of every graph
    /// that will be compared against the result.
    pub fn individualized(&self, order: &[usize], marked: Option<usize>, palette: usize) -> ColoredGraph {
        let mut colors = self.colors.clone();
        for (tag, &v) in order.iter().enumerate() {
            colors[v] = self.colors[v] + palette * (tag + 1);
        }
        if let Some(v) = marked {
            colors[v] = self.colors[v] + palette * (self.n + 1);
        }
        ColoredGraph {
            n: self.n,
            edges: self.edges.clone(),
            colors,
            adj: self.adj.clone(),
        }
    }

    /// Parses the shared graph text format: `n m`, then `m` lines `u v`,
    /// then an optional `colors c0 .. c(n-1)` line. Blank lines and `#`
    /// comments are ignored.
    pub fn parse(text: &str) -> std::result::Result<ColoredGraph, ParseError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

        let (hline, header) = lines.next().ok_or_else(|| ParseError::new(1, 1, "empty graph file"))?;
        let header_toks = tokens(header);
        if header_toks.len() != 2 {
            return Err(ParseError::new(hline, 1, "expected header `n m`"));
        }
        let n = parse_number(hline, header_toks[0])?;
        let m = parse_number(hline, header_toks[1])?;

        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, body) = lines
                .next()
                .ok_or_else(|| ParseError::new(hline, 1, format!("expected {m} edge lines")))?;
            let toks = tokens(body);
            if toks.len() != 2 {
                let col = toks.get(2).map_or(body.len() + 1, |t| t.0);
                return Err(ParseError::new(line, col, "expected edge `u v`"));
            }
            let u = parse_number(line, toks[0])?;
            let v = parse_number(line, toks[1])?;
            for &(val, tok) in &[(u, toks[0]), (v, toks[1])] {
                if val >= n {
                    return Err(ParseError::new(
                        line,
                        tok.0,
                        format!("vertex {val} out of range for {n} vertices"),
                    ));
                }
            }
            if u == v {
                return Err(ParseError::new(line, toks[0].0, "self-loops are not allowed"));
            }
            edges.push((u, v));
        }

        let mut colors = vec![0; n];
        if let Some((line, body)) = lines.next() {
            let toks = tokens(body);
            if toks.first().map(|t| t.1) != Some("colors") {
                return Err(ParseError::new(line, 1, "expected `colors` line or end of input"));
            }
            if toks.len() != n + 1 {
                return Err(ParseError::new(
                    line,
                    1,
                    format!("expected {n} colors, found {}", toks.len() - 1),
                ));
            }
            for (slot, &tok) in colors.iter_mut().zip(&toks[1..]) {
                *slot = parse_number(line, tok)?;
            }
        }
        if let Some((line, _)) = lines.next() {
            return Err(ParseError::new(line, 1, "unexpected trailing content"));
        }

        ColoredGraph::with_colors(n, &edges, colors).map_err(|e| ParseError::new(hline, 1, e.to_string()))
    }

    /// Inverse of [`ColoredGraph::parse`]; the `colors` line is omitted when all colors are 0.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        if self.colors.iter().any(|&c| c != 0) {
            out.push_str("colors");
            for c in &self.colors {
                out.push_str(&format!(" {c}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Whitespace tokens with their 1-based starting column.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub(crate) fn parse_number(line: usize, (col, tok): (usize, &str)) -> std::result::Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::new(line, col, format!("expected a nonnegative integer, found `{tok}`")))
}

/// True iff `p` maps `g1` onto `g2`: edges both ways and colors preserved.
pub fn is_isomorphism(g1: &ColoredGraph, g2: &ColoredGraph, p: &Permutation) -> Result<bool> {
    if g1.n != g2.n {
        return Err(Error::DegreeMismatch {
            expected: g1.n,
            found: g2.n,
        });
    }
    if p.degree() != g1.n {
        return Err(Error::DegreeMismatch {
            expected: g1.n,
            found: p.degree(),
        });
    }
    Ok(is_isomorphism_unchecked(g1, g2, p.images()))
}

#[inline]
pub(crate) fn is_isomorphism_unchecked(g1: &ColoredGraph, g2: &ColoredGraph, images: &[usize]) -> bool {
    let n = g1.n;
    if g1.edges.len() != g2.edges.len() {
        return false;
    }
    if (0..n).any(|v| g1.colors[v] != g2.colors[images[v]]) {
        return false;
    }
    // Equal edge counts and an injective map: edges into edges suffices.
    g1.edges.iter().all(|&(u, v)| g2.adj[images[u] * n + images[v]])
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredGraph(n={}, edges={:?}", self.n, self.edges)?;
        if self.colors.iter().any(|&c| c != 0) {
            write!(f, ", colors={:?}", self.colors)?;
        }
        f.write_str(")")
    }
}
