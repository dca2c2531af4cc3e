//! Arbitrary simple graphs with string labels.
//!
//! Used as the input of the hardness reduction and for chordless-path
//! searches outside the split setting. Text format:
//!
//! ```text
//! V: a b c
//! E: a-b b-c
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    /// Sorted `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from vertex labels and label pairs.
    pub fn new<L, E, S>(labels: L, edges: E) -> Result<Self>
    where
        L: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = BTreeMap::new();
        for (n, l) in labels.iter().enumerate() {
            if l.is_empty() || l.contains(['-', '#', ':']) || l.contains(char::is_whitespace) {
                return Err(Error::InvalidGraph(format!("invalid vertex label `{l}`")));
            }
            if index.insert(l.clone(), n).is_some() {
                return Err(Error::InvalidGraph(format!("vertex `{l}` listed twice")));
            }
        }
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownElement(s.to_string()));
        let pairs = edges
            .into_iter()
            .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(labels, index, pairs)
    }

    /// Graph on vertices `0..n` labelled by their index.
    pub fn with_vertices<E>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = (usize, usize)>,
    {
        let labels: Vec<String> = (0..n).map(|v| v.to_string()).collect();
        let index = labels.iter().cloned().zip(0..).collect();
        let pairs: Vec<_> = edges.into_iter().collect();
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::UnknownElement(format!("{a}-{b}")));
        }
        Self::assemble(labels, index, pairs)
    }

    fn assemble(labels: Vec<String>, index: BTreeMap<String, usize>, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut adj = vec![BTreeSet::new(); labels.len()];
        let mut edges = BTreeSet::new();
        for (a, b) in pairs {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at `{}`", labels[a])));
            }
            if !edges.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!(
                    "edge {}-{} listed twice",
                    labels[a], labels[b]
                )));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(SimpleGraph {
            labels,
            index,
            edges: edges.into_iter().collect(),
            adj,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Adjacency rows as bitmasks; requires at most 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.order() <= 64);
        self.adj
            .iter()
            .map(|row| row.iter().fold(0u64, |m, &w| m | 1 << w))
            .collect()
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: String = self.labels.iter().map(|l| format!(" {l}")).collect();
        writeln!(f, "V:{vs}")?;
        let es: String = self
            .edges
            .iter()
            .map(|&(a, b)| format!(" {}-{}", self.labels[a], self.labels[b]))
            .collect();
        writeln!(f, "E:{es}")
    }
}

impl FromStr for SimpleGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut vertices: Option<Vec<String>> = None;
        let mut edges: Option<Vec<(String, String)>> = None;
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (tag, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, format!("expected `V:` or `E:`, got `{line}`")))?;
            match tag.trim() {
                "V" if vertices.is_none() => {
                    vertices = Some(rest.split_whitespace().map(str::to_string).collect());
                }
                "E" if edges.is_none() => {
                    let parsed = rest
                        .split_whitespace()
                        .map(|t| {
                            t.split_once('-')
                                .map(|(a, b)| (a.to_string(), b.to_string()))
                                .ok_or_else(|| Error::parse(line_no, format!("invalid edge `{t}`, expected `a-b`")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    edges = Some(parsed);
                }
                "V" | "E" => return Err(Error::parse(line_no, format!("more than one {} line", tag.trim()))),
                other => return Err(Error::parse(line_no, format!("unknown line tag `{other}`"))),
            }
        }
        let vertices = vertices.ok_or_else(|| Error::parse(0, "missing V line"))?;
        SimpleGraph::new(vertices, edges.unwrap_or_default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let g: SimpleGraph = "V: a b c\nE: a-b b-c\n".parse().unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert_eq!(g.degree(1), 2);
        assert!(g.adjacent(0, 1) && !g.adjacent(0, 2));
        assert_eq!(g.to_string().parse::<SimpleGraph>().unwrap(), g);
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(matches!("V: a\nE: a-a\n".parse::<SimpleGraph>(), Err(Error::InvalidGraph(_))));
        assert!(matches!("V: a b\nE: a-b b-a\n".parse::<SimpleGraph>(), Err(Error::InvalidGraph(_))));
        assert!(matches!("V: a a\n".parse::<SimpleGraph>(), Err(Error::InvalidGraph(_))));
        assert_eq!("V: a\nE: a-z\n".parse::<SimpleGraph>().unwrap_err(), Error::UnknownElement("z".into()));
        assert!(matches!("E: a-b\n".parse::<SimpleGraph>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn indexed_constructor() {
        let g = SimpleGraph::with_vertices(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.adjacency_masks(), vec![0b010, 0b101, 0b010]);
        assert!(SimpleGraph::with_vertices(2, [(0, 2)]).is_err());
    }
}
