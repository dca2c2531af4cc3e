//! Paths, rooted circuits, free sets and traces of split-graph shelling
//! antimatroids, plus recovery of the graph from its feasible family.

mod reconstruct;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::feasibility::fos;
use crate::split_graph::SplitGraph;
use crate::vertex::{VertexId, VertexSet};

pub use reconstruct::{reconstruct_graph, recognize, Recognition, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PathClass {
    P1,
    P2,
    P3,
}

/// The vertices a path is generated from: `i` for `P1`, `k` for `P2`, and
/// the pair `(i, k)` for `P3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PathAnchor {
    Vertex(VertexId),
    Pair { i: VertexId, k: VertexId },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntimatroidPath {
    pub members: VertexSet,
    pub class: PathClass,
    pub anchor: PathAnchor,
}

impl fmt::Display for AntimatroidPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {}", self.class, self.members)?;
        match self.anchor {
            PathAnchor::Vertex(v) => write!(f, "  [{v}]"),
            PathAnchor::Pair { i, k } => write!(f, "  [i={i}, k={k}]"),
        }
    }
}

/// All paths of the shelling antimatroid of a normalized split graph,
/// grouped by class and sorted by (size, lexicographic) within each class.
/// A set produced by several classes keeps the first one.
pub fn path_poset(g: &SplitGraph) -> Result<Vec<AntimatroidPath>> {
    if let Some(i) = g.full_independent_vertex() {
        return Err(Error::NormalizationRequired(i));
    }
    let mut found: BTreeMap<VertexSet, (PathClass, PathAnchor)> = BTreeMap::new();
    let mut offer = |members: VertexSet, class, anchor| {
        found.entry(members).or_insert((class, anchor));
    };
    for &i in g.independent() {
        offer(VertexSet::singleton(i), PathClass::P1, PathAnchor::Vertex(i));
    }
    for &k in g.clique() {
        let members = g.cross_neighbors(k)?.iter().copied().chain([k]).collect();
        offer(members, PathClass::P2, PathAnchor::Vertex(k));
    }
    for &i in g.independent() {
        let forced = fos(g, i)?;
        for &k in g.cross_neighbors(i)? {
            let tail: VertexSet = g.cross_neighbors(k)?.iter().copied().filter(|&j| j != i).collect();
            let members = forced.union(&tail).with(k);
            offer(members, PathClass::P3, PathAnchor::Pair { i, k });
        }
    }
    let mut paths: Vec<AntimatroidPath> = found
        .into_iter()
        .map(|(members, (class, anchor))| AntimatroidPath { members, class, anchor })
        .collect();
    paths.sort_by(|a, b| (a.class, &a.members).cmp(&(b.class, &b.members)));
    Ok(paths)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CircuitClass {
    C1,
    C2,
    C3,
}

impl CircuitClass {
    /// Circuits from chordless paths on three vertices are the critical ones.
    pub fn is_critical(self) -> bool {
        matches!(self, CircuitClass::C1 | CircuitClass::C2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedCircuit {
    pub support: VertexSet,
    pub root: VertexId,
    pub class: CircuitClass,
    pub critical: bool,
}

impl RootedCircuit {
    /// `support ∪ {root}`.
    pub fn ground(&self) -> VertexSet {
        self.support.with(self.root)
    }
}

impl fmt::Display for RootedCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}  [{:?}", self.root, self.support.to_tokens(), self.class)?;
        if self.critical {
            f.write_str(", critical")?;
        }
        f.write_str("]")
    }
}

/// All rooted circuits, sorted by root and then support. A pair reachable
/// from several classes keeps the lowest class.
pub fn rooted_circuits(g: &SplitGraph) -> Result<Vec<RootedCircuit>> {
    let mut found: BTreeMap<(VertexId, VertexSet), CircuitClass> = BTreeMap::new();
    let mut offer = |root: VertexId, a: VertexId, b: VertexId, class: CircuitClass| {
        let support = VertexSet::from_iter([a, b]);
        found
            .entry((root, support))
            .and_modify(|c| *c = (*c).min(class))
            .or_insert(class);
    };
    for &k in g.clique() {
        let nk = g.cross_neighbors(k)?;
        for &i in nk {
            let ni = g.cross_neighbors(i)?;
            for &j in nk.range(i..).skip(1) {
                offer(k, i, j, CircuitClass::C1);
            }
            for &l in g.clique() {
                if l != k && !ni.contains(&l) {
                    offer(k, i, l, CircuitClass::C2);
                }
            }
            for &j in g.independent() {
                if nk.contains(&j) {
                    continue;
                }
                let nj = g.cross_neighbors(j)?;
                if nj.iter().any(|m| !ni.contains(m)) {
                    offer(k, i, j, CircuitClass::C3);
                }
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|((root, support), class)| RootedCircuit {
            support,
            root,
            class,
            critical: class.is_critical(),
        })
        .collect())
}

/// With `L = x ∩ K` and `J = x ∩ I`, `x` is free iff no edge joins `L` and
/// `J`, or some `h ∈ J` has `L ⊆ N(h)` and `N(J ∖ {h}) ⊆ N(h) ∖ L`.
pub fn is_free(g: &SplitGraph, x: &VertexSet) -> Result<bool> {
    g.check_subset(x)?;
    let l: VertexSet = x.iter().filter(|v| g.in_clique(*v)).collect();
    let j: Vec<VertexId> = x.iter().filter(|v| g.in_independent(*v)).collect();
    let mut linked = false;
    for &v in &j {
        if g.cross_neighbors(v)?.iter().any(|k| l.contains(*k)) {
            linked = true;
            break;
        }
    }
    if !linked {
        return Ok(true);
    }
    for &h in &j {
        let nh: VertexSet = g.cross_neighbors(h)?.iter().copied().collect();
        if !l.is_subset(&nh) {
            continue;
        }
        let allowed = nh.difference(&l);
        let mut ok = true;
        for &other in j.iter().filter(|&&o| o != h) {
            if g.cross_neighbors(other)?.iter().any(|k| !allowed.contains(*k)) {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `tr(fam, x) = {F ∩ x : F ∈ fam}`, over ground `x`.
pub fn trace(fam: &SetFamily, x: &VertexSet) -> Result<SetFamily> {
    if let Some(v) = x.iter().find(|v| !fam.ground().contains(*v)) {
        return Err(Error::UnknownVertex(v));
    }
    SetFamily::new(x.clone(), fam.iter().map(|f| f.intersection(x)))
}
