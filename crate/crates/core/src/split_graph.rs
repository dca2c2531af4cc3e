//! Split graphs with a given partition into a clique `K` and an independent
//! set `I`.
//!
//! Only the K–I edges are stored; every pair inside `K` is an implied edge and
//! may not be listed. Text format:
//!
//! ```text
//! # comment
//! K: 1 2 3
//! I: 4 5 6
//! E: 1-4 1-5 2-5 2-6 3-6
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex::{Indexer, VertexId, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Clique,
    Independent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Node {
    side: Side,
    cross: BTreeSet<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSplitGraph", into = "RawSplitGraph")]
pub struct SplitGraph {
    clique: Vec<VertexId>,
    independent: Vec<VertexId>,
    /// Sorted `(k, i)` pairs.
    cross: Vec<(VertexId, VertexId)>,
    nodes: BTreeMap<VertexId, Node>,
}

#[derive(Serialize, Deserialize)]
struct RawSplitGraph {
    clique: Vec<VertexId>,
    independent: Vec<VertexId>,
    cross_edges: Vec<(VertexId, VertexId)>,
}

impl TryFrom<RawSplitGraph> for SplitGraph {
    type Error = Error;

    fn try_from(raw: RawSplitGraph) -> Result<Self> {
        SplitGraph::new(raw.clique, raw.independent, raw.cross_edges)
    }
}

impl From<SplitGraph> for RawSplitGraph {
    fn from(g: SplitGraph) -> Self {
        RawSplitGraph {
            clique: g.clique,
            independent: g.independent,
            cross_edges: g.cross,
        }
    }
}

impl SplitGraph {
    /// Validates a raw partition and edge list. Edges may be given in either
    /// orientation but must join `K` to `I`.
    pub fn new<K, I, E, V>(clique: K, independent: I, edges: E) -> Result<Self>
    where
        K: IntoIterator<Item = V>,
        I: IntoIterator<Item = V>,
        E: IntoIterator<Item = (V, V)>,
        V: Into<VertexId>,
    {
        let mut nodes: BTreeMap<VertexId, Node> = BTreeMap::new();
        let mut add = |v: VertexId, side: Side| -> Result<()> {
            match nodes.get(&v) {
                Some(n) if n.side == side => Err(Error::DuplicateVertex(v)),
                Some(_) => Err(Error::OverlappingPartition(v)),
                None => {
                    nodes.insert(
                        v,
                        Node {
                            side,
                            cross: BTreeSet::new(),
                        },
                    );
                    Ok(())
                }
            }
        };
        for v in clique {
            add(v.into(), Side::Clique)?;
        }
        for v in independent {
            add(v.into(), Side::Independent)?;
        }

        let mut cross = BTreeSet::new();
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            let side_a = nodes.get(&a).ok_or(Error::UnknownVertex(a))?.side;
            let side_b = nodes.get(&b).ok_or(Error::UnknownVertex(b))?.side;
            let pair = match (side_a, side_b) {
                (Side::Clique, Side::Independent) => (a, b),
                (Side::Independent, Side::Clique) => (b, a),
                _ => return Err(Error::IllegalEdge(a, b)),
            };
            if !cross.insert(pair) {
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        for &(k, i) in &cross {
            nodes.get_mut(&k).unwrap().cross.insert(i);
            nodes.get_mut(&i).unwrap().cross.insert(k);
        }

        let side_members = |side| {
            nodes
                .iter()
                .filter(|(_, n)| n.side == side)
                .map(|(v, _)| *v)
                .collect::<Vec<_>>()
        };
        Ok(SplitGraph {
            clique: side_members(Side::Clique),
            independent: side_members(Side::Independent),
            cross: cross.into_iter().collect(),
            nodes,
        })
    }

    /// Vertices of `K` in increasing id order.
    pub fn clique(&self) -> &[VertexId] {
        &self.clique
    }

    /// Vertices of `I` in increasing id order.
    pub fn independent(&self) -> &[VertexId] {
        &self.independent
    }

    /// K–I edges as sorted `(k, i)` pairs.
    pub fn cross_edges(&self) -> &[(VertexId, VertexId)] {
        &self.cross
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.nodes.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn clique_set(&self) -> VertexSet {
        self.clique.iter().copied().collect()
    }

    pub fn independent_set(&self) -> VertexSet {
        self.independent.iter().copied().collect()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.nodes.contains_key(&v)
    }

    pub fn side(&self, v: VertexId) -> Option<Side> {
        self.nodes.get(&v).map(|n| n.side)
    }

    pub fn in_clique(&self, v: VertexId) -> bool {
        self.side(v) == Some(Side::Clique)
    }

    pub fn in_independent(&self, v: VertexId) -> bool {
        self.side(v) == Some(Side::Independent)
    }

    /// Endpoints of the K–I edges at `v`.
    pub fn cross_neighbors(&self, v: VertexId) -> Result<&BTreeSet<VertexId>> {
        self.nodes
            .get(&v)
            .map(|n| &n.cross)
            .ok_or(Error::UnknownVertex(v))
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        if u == v {
            return false;
        }
        match (self.nodes.get(&u), self.nodes.get(&v)) {
            (Some(a), Some(_)) if a.side == Side::Clique && self.in_clique(v) => true,
            (Some(a), Some(_)) => a.cross.contains(&v),
            _ => false,
        }
    }

    pub fn check_subset(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|v| !self.contains(*v)) {
            Some(v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// `N(s)`: vertices outside `s` adjacent to some member of `s`.
    pub fn neighbors(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_subset(s)?;
        let mut out = BTreeSet::new();
        let mut touches_clique = false;
        for v in s {
            let node = &self.nodes[&v];
            touches_clique |= node.side == Side::Clique;
            out.extend(node.cross.iter().copied().filter(|w| !s.contains(*w)));
        }
        if touches_clique {
            out.extend(self.clique.iter().copied().filter(|k| !s.contains(*k)));
        }
        Ok(out.into())
    }

    /// `N(v)` for a single vertex.
    pub fn neighbors_of(&self, v: VertexId) -> Result<VertexSet> {
        self.neighbors(&VertexSet::singleton(v))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        let node = self.nodes.get(&v).ok_or(Error::UnknownVertex(v))?;
        Ok(match node.side {
            Side::Clique => self.clique.len() - 1 + node.cross.len(),
            Side::Independent => node.cross.len(),
        })
    }

    /// True iff `N(v)` is empty. A clique vertex is isolated only when it is
    /// alone in `K` without cross edges.
    pub fn is_isolated(&self, v: VertexId) -> Result<bool> {
        Ok(self.degree(v)? == 0)
    }

    /// Whether `s` induces a clique. Uses the split structure: at most one
    /// member of `I`, whose cross neighbors must cover the rest.
    pub fn induces_clique(&self, s: &VertexSet) -> bool {
        let mut indep = s.iter().filter(|v| self.in_independent(*v));
        match (indep.next(), indep.next()) {
            (None, _) => true,
            (Some(i), None) => {
                let cross = &self.nodes[&i].cross;
                s.iter().all(|v| v == i || cross.contains(&v))
            }
            (Some(_), Some(_)) => false,
        }
    }

    /// All edges `u < v`, including the implied clique edges.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut edges: Vec<_> = self
            .cross
            .iter()
            .map(|&(k, i)| (k.min(i), k.max(i)))
            .collect();
        for (n, &a) in self.clique.iter().enumerate() {
            for &b in &self.clique[n + 1..] {
                edges.push((a, b));
            }
        }
        edges.sort();
        edges
    }

    /// First vertex of `I` (by id) adjacent to every vertex of a nonempty `K`.
    pub fn full_independent_vertex(&self) -> Option<VertexId> {
        if self.clique.is_empty() {
            return None;
        }
        self.independent
            .iter()
            .copied()
            .find(|i| self.nodes[i].cross.len() == self.clique.len())
    }

    pub fn is_normalized(&self) -> bool {
        self.full_independent_vertex().is_none()
    }

    /// Moves every `i` with `N(i) = K` into `K`, smallest id first, until none
    /// is left. Ids are preserved.
    pub fn normalize(&self) -> SplitGraph {
        let mut g = self.clone();
        while let Some(i) = g.full_independent_vertex() {
            let clique: Vec<_> = g.clique.iter().copied().chain([i]).collect();
            let independent: Vec<_> = g.independent.iter().copied().filter(|&v| v != i).collect();
            let cross: Vec<_> = g.cross.iter().copied().filter(|&(_, b)| b != i).collect();
            g = SplitGraph::new(clique, independent, cross).expect("moving a full vertex keeps a split partition");
        }
        g
    }

    /// Adjacency rows as bitmasks over `ix`, clique edges included.
    pub(crate) fn adjacency_masks(&self, ix: &Indexer) -> Vec<u64> {
        let clique_mask = self
            .clique
            .iter()
            .fold(0u64, |m, &k| m | ix.bit(k).expect("indexed"));
        ix.ids()
            .iter()
            .map(|&v| {
                let node = &self.nodes[&v];
                let own = ix.bit(v).expect("indexed");
                let cross = node
                    .cross
                    .iter()
                    .fold(0u64, |m, &w| m | ix.bit(w).expect("indexed"));
                match node.side {
                    Side::Clique => (clique_mask & !own) | cross,
                    Side::Independent => cross,
                }
            })
            .collect()
    }
}

impl fmt::Display for SplitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |vs: &[VertexId]| {
            vs.iter()
                .map(|v| format!(" {v}"))
                .collect::<String>()
        };
        writeln!(f, "K:{}", join(&self.clique))?;
        writeln!(f, "I:{}", join(&self.independent))?;
        let edges: String = self.cross.iter().map(|(k, i)| format!(" {k}-{i}")).collect();
        writeln!(f, "E:{edges}")
    }
}

impl FromStr for SplitGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut clique = None;
        let mut independent = None;
        let mut edges = None;
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (tag, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, format!("expected `K:`, `I:` or `E:`, got `{line}`")))?;
            let slot = match tag.trim() {
                "K" => &mut clique,
                "I" => &mut independent,
                "E" => {
                    if edges.is_some() {
                        return Err(Error::parse(line_no, "more than one E line"));
                    }
                    edges = Some(parse_edges(rest, line_no)?);
                    continue;
                }
                other => return Err(Error::parse(line_no, format!("unknown line tag `{other}`"))),
            };
            if slot.is_some() {
                return Err(Error::parse(line_no, format!("more than one {} line", tag.trim())));
            }
            *slot = Some(parse_ids(rest, line_no)?);
        }
        let clique = clique.ok_or_else(|| Error::parse(0, "missing K line"))?;
        let independent = independent.ok_or_else(|| Error::parse(0, "missing I line"))?;
        SplitGraph::new(clique, independent, edges.unwrap_or_default())
    }
}

fn parse_ids(rest: &str, line: usize) -> Result<Vec<VertexId>> {
    rest.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(line, format!("invalid vertex id `{t}`")))
        })
        .collect()
}

fn parse_edges(rest: &str, line: usize) -> Result<Vec<(VertexId, VertexId)>> {
    rest.split_whitespace()
        .map(|t| {
            let bad = || Error::parse(line, format!("invalid edge `{t}`, expected `a-b`"));
            let (a, b) = t.split_once('-').ok_or_else(bad)?;
            Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> SplitGraph {
        SplitGraph::new([1u32, 2, 3], [4, 5, 6], [(1, 4), (1, 5), (2, 5), (2, 6), (3, 6)]).unwrap()
    }

    fn set<const N: usize>(ids: [u32; N]) -> VertexSet {
        VertexSet::from(ids)
    }

    #[test]
    fn validate_examples() {
        let g = example();
        assert_eq!(g.order(), 6);
        assert_eq!(g.cross_edges().len(), 5);

        let single = SplitGraph::new(Vec::<u32>::new(), [1], Vec::<(u32, u32)>::new()).unwrap();
        assert_eq!(single.independent(), &[VertexId(1)]);

        let err = SplitGraph::new([1u32], [2, 3], [(2, 3)]).unwrap_err();
        assert_eq!(err, Error::IllegalEdge(VertexId(2), VertexId(3)));
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            SplitGraph::new([1u32, 2], [2], Vec::<(u32, u32)>::new()).unwrap_err(),
            Error::OverlappingPartition(VertexId(2))
        );
        assert_eq!(
            SplitGraph::new([1u32], [2], [(1, 9)]).unwrap_err(),
            Error::UnknownVertex(VertexId(9))
        );
        assert_eq!(
            SplitGraph::new([1u32, 2], [3], [(1, 2)]).unwrap_err(),
            Error::IllegalEdge(VertexId(1), VertexId(2))
        );
        assert_eq!(
            SplitGraph::new([1u32], [2], [(1, 2), (2, 1)]).unwrap_err(),
            Error::DuplicateEdge(VertexId(2), VertexId(1))
        );
        assert_eq!(
            SplitGraph::new([1u32, 1], [2], Vec::<(u32, u32)>::new()).unwrap_err(),
            Error::DuplicateVertex(VertexId(1))
        );
    }

    #[test]
    fn neighbors_examples() {
        let g = example();
        assert_eq!(g.neighbors(&set([3, 6])).unwrap(), set([1, 2]));
        assert_eq!(g.neighbors_of(VertexId(3)).unwrap(), set([1, 2, 6]));
        assert_eq!(g.neighbors_of(VertexId(6)).unwrap(), set([2, 3]));
        assert_eq!(g.neighbors(&VertexSet::new()).unwrap(), VertexSet::new());
        assert_eq!(g.neighbors(&g.vertex_set()).unwrap(), VertexSet::new());
        assert_eq!(
            g.neighbors(&set([7])).unwrap_err(),
            Error::UnknownVertex(VertexId(7))
        );
    }

    #[test]
    fn isolated_examples() {
        let g = example();
        assert!(!g.is_isolated(VertexId(4)).unwrap());

        let lone = SplitGraph::new([1u32], [2], Vec::<(u32, u32)>::new()).unwrap();
        assert!(lone.is_isolated(VertexId(1)).unwrap());

        let pair = SplitGraph::new([1u32, 2], Vec::<u32>::new(), Vec::<(u32, u32)>::new()).unwrap();
        assert!(!pair.is_isolated(VertexId(1)).unwrap());
        assert!(lone.is_isolated(VertexId(5)).is_err());
    }

    #[test]
    fn normalize_examples() {
        let g = SplitGraph::new([1u32], [2, 3], [(1, 2)]).unwrap();
        let n = g.normalize();
        assert_eq!(n.clique(), &[VertexId(1), VertexId(2)]);
        assert_eq!(n.independent(), &[VertexId(3)]);
        assert!(n.cross_edges().is_empty());
        assert_eq!(n.edges(), g.edges());

        assert_eq!(example().normalize(), example());

        let no_clique = SplitGraph::new(Vec::<u32>::new(), [1, 2], Vec::<(u32, u32)>::new()).unwrap();
        assert_eq!(no_clique.normalize(), no_clique);
    }

    #[test]
    fn induced_clique_checks() {
        let g = example();
        assert!(g.induces_clique(&set([1, 2, 3])));
        assert!(g.induces_clique(&set([1, 2, 5])));
        assert!(!g.induces_clique(&set([1, 2, 4])));
        assert!(!g.induces_clique(&set([4, 5])));
        assert!(g.induces_clique(&VertexSet::new()));
    }

    #[test]
    fn text_round_trip() {
        let g = example();
        let text = g.to_string();
        assert_eq!(text, "K: 1 2 3\nI: 4 5 6\nE: 1-4 1-5 2-5 2-6 3-6\n");
        assert_eq!(text.parse::<SplitGraph>().unwrap(), g);

        let reversed: SplitGraph = "# c\nI: 4 5 6\nK: 1 2 3\nE: 4-1 5-1 5-2 6-2 6-3\n".parse().unwrap();
        assert_eq!(reversed, g);

        let no_edges: SplitGraph = "K:\nI: 1\n".parse().unwrap();
        assert_eq!(no_edges.order(), 1);
    }

    #[test]
    fn text_errors() {
        assert!(matches!("K: 1\n".parse::<SplitGraph>(), Err(Error::Parse { .. })));
        assert!(matches!("K: 1\nK: 2\nI:\n".parse::<SplitGraph>(), Err(Error::Parse { line: 2, .. })));
        assert!(matches!("K: 1\nI: 2\nE: 1_2\n".parse::<SplitGraph>(), Err(Error::Parse { line: 3, .. })));
        assert!(matches!("K: 1\nI: 2\nE: 1-2\nE: 1-2\n".parse::<SplitGraph>(), Err(Error::Parse { line: 4, .. })));
        assert_eq!(
            "K: 1 2\nI: 3\nE: 1-2\n".parse::<SplitGraph>().unwrap_err(),
            Error::IllegalEdge(VertexId(1), VertexId(2))
        );
    }

    #[test]
    fn json_round_trip() {
        let g = example();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<SplitGraph>(&json).unwrap(), g);
        assert!(serde_json::from_str::<SplitGraph>(r#"{"clique":[1],"independent":[1],"cross_edges":[]}"#).is_err());
    }
}
